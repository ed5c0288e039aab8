"""Hopf axioms, derived counit and antipode, and the quantum Casimir."""
import pytest

from qoscillator.algebra.exact import gen
from qoscillator.quantum.hopf import (
    LIE_ORDER,
    HopfData,
    NoSolutionError,
    antipode_antihom,
    antipode_squared,
    casimir,
    casimir_centrality,
    check_coassoc,
    check_hom,
    classical_limits,
    counit_relations,
    derive_antipode_counit,
    jordanian_hopf,
)
from qoscillator.quantum.pbw import jordanian_coproduct, oscillator_algebra, tensor

z = gen('z')


@pytest.fixture(scope='module')
def hopf():
    return derive_antipode_counit(jordanian_hopf(4))


def _nonzero(residuals):
    return {key: value.format() for key, value in residuals.items() if value}


def test_homomorphism(hopf):
    residuals = check_hom(hopf)
    assert len(residuals) == 6
    assert _nonzero(residuals) == {}


def test_coassociativity(hopf):
    residuals = check_coassoc(hopf)
    assert set(residuals) == set(LIE_ORDER)
    assert _nonzero(residuals) == {}
    assert residuals['A-'].arity == 3


def test_homomorphism_fails_with_primitive_lowering(deformed):
    coproduct = jordanian_coproduct(deformed)
    one, AM = deformed.one, deformed.gen('A-')
    coproduct['A-'] = tensor(one, AM) + tensor(AM, one)
    residuals = check_hom(HopfData(deformed, coproduct))
    assert residuals[('N', 'A+')] == 0
    assert residuals[('A+', 'A-')] != 0


def test_counit(hopf):
    assert hopf.counit == {name: 0 for name in LIE_ORDER}


def test_antipode(hopf):
    algebra = hopf.algebra
    S = hopf.antipode
    N, AP, AM, M = (algebra.gen(name) for name in LIE_ORDER)
    inverse = algebra.exp_a_plus(-1)
    assert S['A+'] == -AP
    assert S['M'] == -M
    assert S['N'] == -(N * inverse)
    assert S['A-'] == -(AM * inverse) + (N * inverse * M).scale(z)


def test_antipode_squared(hopf):
    residuals = antipode_squared(hopf)
    assert residuals['A+'] == 0
    assert residuals['M'] == 0
    assert residuals['N'] == 1 - hopf.algebra.exp_a_plus()


def test_antipode_relations(hopf):
    assert _nonzero(antipode_antihom(hopf)) == {}
    assert all(not value for value in counit_relations(hopf).values())


def test_no_solution(deformed):
    coproduct = jordanian_coproduct(deformed)
    N = deformed.gen('N')
    coproduct['N'] = tensor(N, N)
    with pytest.raises(NoSolutionError):
        derive_antipode_counit(HopfData(deformed, coproduct))


@pytest.mark.parametrize(
    'algebra',
    [
        oscillator_algebra(4),
        oscillator_algebra(4, deformed=False),
        oscillator_algebra(3, scale='lam'),
    ],
)
def test_casimir_centrality(algebra):
    residuals = casimir_centrality(casimir(algebra))
    assert _nonzero(residuals) == {}


def test_classical_casimir(classical):
    N, AP, AM, M = (classical.gen(name) for name in LIE_ORDER)
    assert casimir(classical) == N * M * 2 - AP * AM - AM * AP


def test_non_central_control(deformed):
    N, AM, M = (deformed.gen(name) for name in ('N', 'A-', 'M'))
    k = deformed.difference_quotient(-1)
    assert casimir_centrality(N * M * 2 - k * AM - AM * k)['A+'] != 0


def test_classical_limits(hopf):
    residuals = classical_limits(hopf)
    assert ('casimir',) in residuals
    assert _nonzero(residuals) == {}
