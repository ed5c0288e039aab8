"""Quantum coordinates: normal ordering, RTT relations and the group coproduct."""
import pytest

from qoscillator.algebra.exact import gen
from qoscillator.quantum.coordinates import (
    QCoordAlgebra,
    group_coproduct,
    qcoord_normal_form,
    qgroup_coproduct_check,
    quantum_matrix,
    rtt_residual,
    z_part,
)

z = gen('z')


@pytest.fixture(scope='module')
def algebra():
    return QCoordAlgebra()


@pytest.mark.parametrize(
    ('word', 'expected'),
    [
        (['a+', 'a-'], '-z a- + a- a+'),
        (['e', 'e^-1'], '1'),
        (['e^-1', 'e'], '1'),
        (['e', 'a+'], '-z e + z e^2 + a+ e'),
        (['e', 'a-'], 'a- e'),
        (['a-', 'm'], '-z a-^2 + m a-'),
        (['e^-1', 'e^-1', 'm'], '-2*z a- e^-2 + m e^-2'),
        ([], '1'),
    ],
)
def test_normal_form(algebra, word, expected):
    assert qcoord_normal_form(word, algebra).format() == expected


def test_conjugation(algebra):
    e, E, AP, M, AM = (algebra.gen(name) for name in ('e', 'e^-1', 'a+', 'm', 'a-'))
    assert e * AP * E == AP + (e - 1).scale(z)
    assert E * AP * e == AP - (e - 1).scale(z)
    assert e * M * E == M + AM.scale(z)


def test_confluence(algebra, rng):
    for _ in range(100):
        word = [int(i) for i in rng.integers(0, 5, size=int(rng.integers(1, 7)))]
        left = algebra.normal_form(word, strategy='leftmost')
        assert algebra.normal_form(word, strategy='rightmost') == left
        assert algebra.normal_form(word, strategy='random', rng=rng) == left


def test_quantum_matrix(algebra):
    T = quantum_matrix(algebra)
    assert T[0, 1].format() == 'a- e'
    assert T[0, 2].format() == 'a- a+ + m'
    assert T[2, 2] == 1
    assert T[1, 0] == 0


def test_rtt(algebra):
    residual = rtt_residual(algebra)
    assert residual.shape == (9, 9)
    assert not any(residual.ravel())


def test_rtt_commuting_control():
    residual = rtt_residual(QCoordAlgebra(commuting=True))
    nonzero = [x for x in residual.ravel() if x]
    assert nonzero
    assert all(not z_part(x, 0) for x in nonzero)


def test_group_coproduct(algebra):
    table = group_coproduct(algebra)
    assert table['e'].format() == 'e (x) e'
    residuals = qgroup_coproduct_check(algebra)
    assert ('relation', 'a+', 'a-') in residuals
    assert ('coassociativity', 'm') in residuals
    assert {key: value.format() for key, value in residuals.items() if value} == {}


def test_classical_coordinates():
    classical = QCoordAlgebra(deformation=0)
    AP, AM, e = (classical.gen(name) for name in ('a+', 'a-', 'e'))
    assert AP * AM == AM * AP
    assert e * AP == AP * e
    assert not any(qgroup_coproduct_check(classical).values())
