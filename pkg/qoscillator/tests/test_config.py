# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""Check the configuration module and file."""
import os
from unittest.mock import patch

import pytest
from toml import loads

from qoscillator import config
from qoscillator.data import load as load_data


def _reset_config():
    """
    Forcibly reload the configuration module to restore defaults.
    .. caution::
      `importlib.reload` creates new sets of objects, but will not remove
      previous references to those objects."""
    import importlib

    importlib.reload(config)


def test_reset_config():
    execution = config.execution
    setattr(execution, 'command', 'TESTING')
    assert config.execution.command == 'TESTING'
    _reset_config()
    assert config.execution.command is None
    # Even though the config module was reset,
    # previous references to config classes
    # have not been touched.
    assert execution.command == 'TESTING'


def test_config_file(tmp_path):
    """Settings survive a round trip through the TOML file."""
    settings = loads(load_data.readable('tests/config.toml').read_text())
    for sectionname, configs in settings.items():
        if sectionname != 'environment':
            section = getattr(config, sectionname)
            section.load(configs, init=False)
    config.loggers.init()
    assert config.execution.order == 4
    assert config.verification.termination_words == 10
    assert config.nipype.get_plugin() == {
        'plugin': 'MultiProc',
        'plugin_args': {'maxtasksperchild': 1, 'raise_insufficient': False, 'n_procs': 2},
    }

    config_file = tmp_path / 'config.toml'
    config.to_filename(config_file)
    written = loads(config_file.read_text())
    assert written['execution']['command'] == 'verify-all'
    assert written['execution']['work_dir'] == '/tmp/qoscillator-work'
    assert written['seeds']['master'] == 20240
    assert 'sympy_version' in written['environment']

    _reset_config()
    config.load(config_file)
    assert config.execution.command == 'verify-all'
    assert config.verification.confluence_words == 40
    assert config.seeds.master == 20240
    assert str(config.execution.work_dir) == '/tmp/qoscillator-work'
    assert config.execution.log_dir == config.execution.run_dir() / 'log'
    assert config.nipype.stop_on_first_crash is False
    _reset_config()


def test_config_flat():
    config.execution.order = 3
    flat = config.get(flat=True)
    assert flat['execution.order'] == 3
    assert flat['verification.random_cases'] == 1000
    assert 'execution.output' not in flat
    _reset_config()


@pytest.mark.parametrize('order', [0, -2])
def test_invalid_order(order):
    with pytest.raises(ValueError):
        config.execution.load({'order': order})
    _reset_config()


@pytest.mark.parametrize('master_seed', [1, 100])
def test_prng_seed(master_seed):
    """Ensure seeds are properly tracked"""
    seeds = config.seeds
    with patch.dict(os.environ, {}):
        seeds.load({'_random_seed': master_seed}, init=True)
        assert getattr(seeds, 'master') == master_seed
        numpy_seed = seeds.numpy
        assert 1 <= numpy_seed <= 65536

    _reset_config()
    for seed in ('_random_seed', 'master', 'numpy'):
        assert getattr(config.seeds, seed) is None

    # the derived seed only depends on the master seed
    config.seeds.load({'_random_seed': master_seed}, init=True)
    assert config.seeds.numpy == numpy_seed
    _reset_config()


@pytest.mark.parametrize(
    'value,expected', [('3', 3), ('12', 12), ('not-a-number', config.DEFAULT_ORDER)]
)
def test_default_order(value, expected):
    with patch.dict(os.environ, {'QOSCILLATOR_ORDER': value}):
        _reset_config()
        assert config.execution.order == expected
    _reset_config()
