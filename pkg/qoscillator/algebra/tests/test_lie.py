"""Lie algebras, wedges, adjoint actions and automorphisms."""
import pytest
from sympy import QQ

from qoscillator.algebra.exact import FRACTIONS, gen
from qoscillator.algebra.lie import (
    JacobiViolation,
    LieAlgebraFileError,
    NotAutomorphismError,
    Wedge,
    adjoint_action,
    check_and_apply_automorphism,
    load_lie_algebra,
    make_automorphism,
    make_lie_algebra,
    parse_lie_algebra,
    skew_part,
)
from qoscillator.data import load as load_data

N, AP, AM, M = range(4)
z, a1, a5 = gen('z'), gen('a1'), gen('a5')


def _wedge(*terms):
    return Wedge.from_dict(2, {(i, j): c for i, j, c in terms})


def test_h4_brackets(h4_algebra):
    assert h4_algebra.basis == ('N', 'A+', 'A-', 'M')
    assert h4_algebra.bracket(N, AP) == ((AP, 1),)
    assert h4_algebra.bracket(N, AM) == ((AM, -1),)
    assert h4_algebra.bracket(AM, AP) == ((M, 1),)
    assert all(h4_algebra.bracket(M, j) == () for j in range(4))


@pytest.mark.parametrize('dimension', [1, 2, 5])
def test_abelian_accepted(dimension):
    algebra = make_lie_algebra([f'X{i}' for i in range(dimension)])
    assert algebra.dimension == dimension


def test_jacobi_violation():
    with pytest.raises(JacobiViolation) as excinfo:
        make_lie_algebra(
            ['X1', 'X2', 'X3'],
            {('X1', 'X2'): {'X3': 1}, ('X1', 'X3'): {'X1': 1}},
        )
    assert excinfo.value.triple == (0, 1, 2)


def test_broken_jacobi_file():
    with pytest.raises(JacobiViolation):
        load_lie_algebra(load_data.cached('tests', 'broken_jacobi.toml'))


@pytest.mark.parametrize(
    'brackets',
    [
        {('X', 'X'): {'Y': 1}},
        {('X', 'Y'): {'Y': 1}, ('Y', 'X'): {'Y': 1}},
        {('X', 'Z'): {'Y': 1}},
    ],
)
def test_invalid_constants(brackets):
    with pytest.raises((ValueError, KeyError)):
        make_lie_algebra(['X', 'Y'], brackets)


def test_parse_errors_report_position():
    text = 'basis = ["X", "Y"]\n\n[[bracket]]\nleft = "X"\nright = "W"\nresult = { Y = 1 }\n'
    with pytest.raises(LieAlgebraFileError) as excinfo:
        parse_lie_algebra(text)
    assert (excinfo.value.lineno, excinfo.value.colno) == (3, 1)

    with pytest.raises(LieAlgebraFileError) as excinfo:
        parse_lie_algebra('basis = ["X"]\nbasis = ["Y"]\n')
    assert excinfo.value.lineno >= 1

    with pytest.raises(LieAlgebraFileError):
        parse_lie_algebra('name = "nothing"\n')


def test_parse_rational_coefficients():
    algebra = parse_lie_algebra(
        'basis = ["X", "Y"]\n[[bracket]]\nleft = "X"\nright = "Y"\nresult = { Y = "-3/2" }\n'
    )
    assert algebra.bracket(1, 0) == ((1, QQ(3, 2)),)


def test_adjoint_action(h4_algebra):
    n_wedge_ap = _wedge((N, AP, 1)).to_tensor()
    # M is central
    assert adjoint_action(h4_algebra, M, n_wedge_ap) == {}
    assert adjoint_action(h4_algebra, N, {(N, AP): 1}) == {(N, AP): 1}
    expected = (_wedge((AM, AP, 1)) + _wedge((N, M, 1))).to_tensor()
    assert adjoint_action(h4_algebra, AM, n_wedge_ap) == expected


def test_adjoint_action_out_of_range(h4_algebra):
    with pytest.raises(IndexError):
        adjoint_action(h4_algebra, 4, {})
    with pytest.raises(IndexError):
        adjoint_action(h4_algebra, 0, {(0, 7): 1})


def test_adjoint_action_is_a_derivation(h4_algebra, rng):
    for _ in range(20):
        t1 = {(int(rng.integers(4)),): QQ(int(rng.integers(-3, 4)))}
        t2 = {(int(rng.integers(4)), int(rng.integers(4))): QQ(int(rng.integers(-3, 4)))}
        x = int(rng.integers(4))
        product = {
            k1 + k2: v1 * v2 for k1, v1 in t1.items() for k2, v2 in t2.items() if v1 * v2
        }
        slotwise = {}
        for k1, v1 in adjoint_action(h4_algebra, x, t1).items():
            for k2, v2 in t2.items():
                slotwise[k1 + k2] = slotwise.get(k1 + k2, 0) + v1 * v2
        for k1, v1 in t1.items():
            for k2, v2 in adjoint_action(h4_algebra, x, t2).items():
                slotwise[k1 + k2] = slotwise.get(k1 + k2, 0) + v1 * v2
        slotwise = {k: v for k, v in slotwise.items() if v}
        assert adjoint_action(h4_algebra, x, product) == slotwise


def test_wedge_convention():
    wedge = _wedge((AP, N, 2))
    assert wedge.terms == (((N, AP), -2),)
    assert wedge.to_tensor() == {(N, AP): -2, (AP, N): 2}
    assert wedge.coefficient(AP, N) == 2
    assert Wedge.from_tensor(wedge.to_tensor(), 2) == wedge
    with pytest.raises(ValueError):
        Wedge.from_tensor({(0, 1): 1}, 2)


def test_wedge_format(h4_algebra):
    wedge = _wedge((N, AP, z)) - _wedge((AP, AM, a1 + a5))
    assert wedge.format(h4_algebra) == 'z N^A+ - (a1 + a5) A+^A-'
    assert Wedge(2).format(h4_algebra) == '0'


@pytest.mark.parametrize(
    'tensor,expected',
    [
        # standard r-matrix and its skew-symmetric part
        ({(N, M): -z, (M, N): -z, (AM, AP): 2 * z}, _wedge((AM, AP, z))),
        ({(N, AP): 1, (AP, N): 1}, Wedge(2)),
        (_wedge((N, AP, 3)).to_tensor(), _wedge((N, AP, 3))),
    ],
)
def test_skew_part(tensor, expected):
    assert skew_part(tensor) == expected
    assert skew_part(skew_part(tensor).to_tensor()) == skew_part(tensor)


def test_identity_automorphism(h4_algebra):
    images = (_wedge((N, AP, a1)), Wedge(2), _wedge((N, M, a1)), Wedge(2))
    identity = make_automorphism(h4_algebra, {})
    assert check_and_apply_automorphism(h4_algebra, identity, images) == images


def test_swap_automorphism(h4_algebra):
    swap = {'N': {'N': -1}, 'A+': {'A-': 1}, 'A-': {'A+': 1}, 'M': {'M': -1}}
    automorphism = make_automorphism(h4_algebra, swap)
    # the swap is an involution
    assert automorphism.inverse == automorphism.matrix
    r = _wedge((N, AP, z))
    assert check_and_apply_automorphism(h4_algebra, automorphism, r) == _wedge((N, AM, -z))


def test_central_shift(h4_algebra):
    shift = make_automorphism(
        h4_algebra, {'N': {'N': 1, 'M': FRACTIONS(a5) / FRACTIONS(a1)}}, assumptions=(a1,)
    )
    r = _wedge((N, AP, a1))
    assert check_and_apply_automorphism(h4_algebra, shift, r) == _wedge((N, AP, a1), (M, AP, a5))


def test_not_automorphism(h4_algebra):
    with pytest.raises(NotAutomorphismError) as excinfo:
        make_automorphism(h4_algebra, {'A+': {'A+': 2}})
    assert excinfo.value.pair == (AP, AM)
    with pytest.raises(NotAutomorphismError):
        make_automorphism(h4_algebra, {'M': {'M': 0}})
