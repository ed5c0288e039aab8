"""The verification tasks on small orders."""
import pytest

from qoscillator.data import load as load_data
from qoscillator.reports.core import PASS
from qoscillator.workflows import checks

ORDER = 3


@pytest.mark.parametrize(
    'func,kwargs',
    [
        (checks.engine_confluence, {'order': ORDER, 'words': 20, 'length': 4, 'seed': 7}),
        (checks.engine_termination, {'order': ORDER, 'words': 5, 'length': 6, 'seed': 7}),
        (checks.engine_associativity, {'order': ORDER, 'cases': 5, 'seed': 7}),
        (checks.engine_series, {'order': ORDER}),
        (checks.hopf_homomorphism, {'order': ORDER}),
        (checks.hopf_primitive_control, {'order': ORDER}),
        (checks.hopf_casimir, {'order': ORDER}),
        (checks.hopf_covariance, {'order': 2}),
        (checks.hopf_first_order, {'order': ORDER}),
        (checks.rmatrix_controls, {'order': ORDER}),
        (checks.frt_relations, {}),
        (checks.frt_commuting_control, {}),
        (checks.frt_classical_coordinates, {}),
        (checks.frt_confluence, {'words': 20, 'length': 4, 'seed': 7}),
        (checks.poisson_structure, {}),
        (checks.quantization, {}),
        (checks.boson_realization, {'order': ORDER}),
        (checks.boson_casimir, {'order': ORDER}),
        (checks.weyl_engine, {'order': ORDER, 'words': 20, 'length': 5, 'seed': 7}),
        (checks.cojacobi_variety, {}),
    ],
)
def test_checks_pass(func, kwargs):
    check = func('check', **kwargs)
    assert check.status == PASS, check.residuals
    assert check.name == 'check'


def test_antipode_tables():
    check = checks.hopf_antipode('antipode', 2)
    assert check.status == PASS
    assert check.tables['counit'] == {'N': '0', 'A+': '0', 'A-': '0', 'M': '0'}
    assert check.tables['antipode']['A+'] == '-A+'
    assert check.tables['antipode squared minus identity']['M'] == '0'


@pytest.mark.parametrize('order', [1, ORDER])
def test_covariance(order):
    check = checks.hopf_covariance('covariance', order)
    assert check.status == PASS, check.residuals
    assert check.residuals == {}


def test_sklyanin_sign_is_recorded():
    check = checks.sklyanin_bracket('sklyanin')
    assert check.status == PASS
    assert check.tables == {'status': 'SIGN_MISMATCH', 'sign': -1, 'nonzero_entries': 0}


def test_casimir_table():
    check = checks.boson_casimir('casimir', 2)
    assert check.tables['casimir'] == checks.casimir_value(2).format()


def test_classify_file():
    check = checks.classify_file('file', str(load_data.cached('tests', 'one_dim.toml')))
    assert check.status == PASS
    assert check.tables['dimension'] == 1
    assert check.tables['coboundary']
