"""Task lists of the commands and their Nipype workflow."""
import pytest

from qoscillator import config
from qoscillator.data import load as load_data
from qoscillator.reports.core import FAIL, PASS, Check
from qoscillator.workflows import checks
from qoscillator.workflows.base import (
    COMMANDS,
    Task,
    init_qoscillator_wf,
    init_tasks,
    run_task,
    run_workflow,
    workflow_inputs,
)


def _reset_config():
    import importlib

    importlib.reload(config)


@pytest.fixture(autouse=True)
def settings(tmp_path):
    config.seeds.load({'master': 20240}, init=True)
    config.execution.order = 3
    config.execution.work_dir = tmp_path
    yield
    _reset_config()


def _passing(name, value=0):
    return Check(name, tables={'value': value})


def _raising(name):
    raise ArithmeticError('no inverse')


@pytest.mark.parametrize('command', COMMANDS[:-1])
def test_commands(command):
    tasks = init_tasks(command)
    names = [task.name for task in tasks]
    assert tasks
    assert len(set(names)) == len(names)
    assert all(callable(getattr(checks, task.check)) for task in tasks)
    orders = {task.kwargs['order'] for task in tasks if 'order' in task.kwargs}
    assert orders <= {3}


def test_verify_all():
    expected = [t.name for c in COMMANDS[:-1] for t in init_tasks(c)]
    assert [task.name for task in init_tasks('verify-all')] == expected


def test_verify_hopf_covers_rescaling():
    tasks = {task.name: task for task in init_tasks('verify-hopf')}
    assert tasks['deformation-parameter covariance'].check == 'hopf_covariance'


def test_randomized_tasks_use_the_configured_sizes():
    config.verification.confluence_words = 7
    tasks = {task.name: task for task in init_tasks('verify-hopf')}
    confluence = tasks['PBW engine confluence'].kwargs
    assert confluence['words'] == 7
    assert confluence['length'] == config.verification.confluence_length
    assert confluence['seed'] == config.seeds.numpy


def test_classify_file():
    config.execution.algebra_file = load_data.cached('tests', 'one_dim.toml')
    tasks = init_tasks('classify')
    assert [task.name for task in tasks] == ['classification of the input algebra']
    assert workflow_inputs()['algebra'].endswith('one_dim.toml')


def test_unknown_command():
    with pytest.raises(ValueError):
        init_tasks('verify-everything')


def test_inputs():
    assert workflow_inputs() == {'order': 3, 'algebra': 'h4', 'seed': 20240}


def test_run_task():
    check = run_task(Task('renamed', _passing, {'value': 2}))
    assert check.name == 'renamed'
    assert check.status == PASS
    assert check.tables == {'value': 2}
    assert check.elapsed >= 0


def test_run_task_by_name():
    check = run_task(Task('Poisson structure', 'poisson_structure'))
    assert check.status == PASS


def test_run_task_failure(caplog):
    check = run_task(Task('singular', _raising))
    assert check.status == FAIL
    assert check.error == 'ArithmeticError: no inverse'
    assert 'no inverse' in caplog.text


def test_workflow_nodes():
    workflow = init_qoscillator_wf(init_tasks('verify-sklyanin'))
    assert workflow.name.startswith('qoscillator_')
    assert workflow.base_dir == str(config.execution.run_dir())
    assert workflow.list_node_names() == [
        'check_000_poisson_structure',
        'check_001_sklyanin_bracket',
        'check_002_quantization_consistency',
    ]


def test_workflow_needs_named_checks():
    with pytest.raises(TypeError):
        init_qoscillator_wf([Task('inline', _passing)])


def test_run_workflow():
    tasks = [
        Task('Sklyanin bracket', 'sklyanin_bracket'),
        Task('missing algebra', 'classify_file', {'algebra_file': 'missing.toml'}),
        Task('Poisson structure', 'poisson_structure'),
    ]
    results = run_workflow(init_qoscillator_wf(tasks), config.nipype.get_plugin())
    assert [check.name for check in results] == [task.name for task in tasks]
    assert [check.status for check in results] == [PASS, FAIL, PASS]
    assert results[1].error


@pytest.mark.parametrize(('nprocs', 'plugin'), [(1, 'Linear'), (4, 'MultiProc')])
def test_plugin(nprocs, plugin):
    config.execution.nprocs = nprocs
    settings = config.nipype.get_plugin()
    assert settings['plugin'] == plugin
    if plugin == 'MultiProc':
        assert settings['plugin_args']['n_procs'] == nprocs
        assert settings['plugin_args']['raise_insufficient'] is False
