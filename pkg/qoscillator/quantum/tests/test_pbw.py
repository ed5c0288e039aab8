"""Normal ordering, products and tensor arithmetic in U(h4) and U_z(h4)."""
from math import factorial

import pytest
from sympy import QQ

from qoscillator.algebra.exact import ValuationError, gen
from qoscillator.algebra.lie import Wedge
from qoscillator.bialgebras.cocycles import delta_from_r, first_order_cocommutator
from qoscillator.quantum.pbw import (
    GENERATORS,
    RewritingFuelExhausted,
    classical_limit,
    coproduct_apply,
    exp_series,
    invert,
    jordanian_coproduct,
    normal_form,
    oscillator_algebra,
    primitive_coproduct,
    tensor,
)

z, lam = gen('z'), gen('lam')


def _random_word(rng, length):
    return [GENERATORS[int(i)] for i in rng.integers(0, 4, size=length)]


def _random_element(rng, algebra, terms=2):
    value = algebra.zero
    for _ in range(terms):
        monomial = tuple(int(e) for e in rng.integers(0, 3, size=4))
        value = value + algebra.monomial(monomial, int(rng.integers(-3, 4)))
    return value


def test_classical_normal_form(classical):
    value = normal_form(['A+', 'A-'], classical)
    assert value == classical.monomial((0, 1, 1, 0)) - classical.gen('M')
    assert value.format() == 'A- A+ - M'


def test_deformed_normal_form(deformed):
    expected = deformed.monomial((0, 0, 1, 1)) + deformed.a_plus_function(
        {k: z ** (k - 1) * QQ(1, factorial(k)) for k in range(1, deformed.series.order + 2)}
    )
    assert normal_form(['N', 'A+'], deformed) == expected


@pytest.mark.parametrize('algebra', ['classical', 'deformed'])
def test_empty_word(request, algebra):
    algebra = request.getfixturevalue(algebra)
    assert normal_form([], algebra) == algebra.one
    assert normal_form([], algebra) == 1


def test_commutators(classical, deformed):
    AP, AM, M = (classical.gen(n) for n in ('A+', 'A-', 'M'))
    assert AM * AP - AP * AM == M
    N, AM = deformed.gen('N'), deformed.gen('A-')
    assert N * AM - AM * N == -AM
    one = deformed.one
    assert N * one == N
    assert one * N == N


@pytest.mark.parametrize('deformation', [True, False])
def test_defining_relations(deformation):
    algebra = oscillator_algebra(4, deformed=deformation)
    for (x, y), expected in algebra.defining_relations().items():
        X, Y = algebra.gen(x), algebra.gen(y)
        assert X * Y - Y * X == expected


def test_commutator_with_exponential(deformed):
    N, E = deformed.gen('N'), deformed.exp_a_plus()
    assert N * E - E * N == E * E - E


def test_exp_series(deformed):
    AP = deformed.gen('A+')
    assert exp_series(AP * z) == deformed.exp_a_plus()
    assert exp_series(AP * z) * exp_series(AP * -z) == 1
    assert exp_series(deformed.zero) == 1
    with pytest.raises(ValuationError):
        exp_series(AP)


def test_invert(deformed):
    assert invert(deformed.exp_a_plus()) == deformed.exp_a_plus(-1)
    with pytest.raises(ValuationError):
        invert(deformed.gen('A+'))


def test_rewriting_strategies_agree(deformed, classical, rng):
    for _ in range(60):
        word = _random_word(rng, int(rng.integers(1, 6)))
        left = normal_form(word, deformed, strategy='leftmost')
        assert normal_form(word, deformed, strategy='rightmost') == left
        assert normal_form(word, deformed, strategy='random', rng=rng) == left
        # the closed-form product agrees with rewriting
        product = deformed.one
        for letter in word:
            product = product * deformed.gen(letter)
        assert product == left
        assert classical_limit(left) == normal_form(word, classical)


def test_rewriting_fuel(deformed, rng):
    for _ in range(20):
        normal_form(_random_word(rng, 8), deformed, fuel=200000)
    with pytest.raises(RewritingFuelExhausted):
        normal_form(['N', 'A+', 'A-'], deformed, fuel=1)
    with pytest.raises(ValueError):
        normal_form(['N'], deformed, strategy='sideways')


def test_associativity(deformed, rng):
    for _ in range(15):
        a, b, c = (_random_element(rng, deformed) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_tensor_slots(deformed):
    one, AP, N = deformed.one, deformed.gen('A+'), deformed.gen('N')
    value = tensor(AP, N)
    assert value.flip() == tensor(N, AP)
    assert value.embed((0, 2), 3) == tensor(AP, one, N)
    assert value.embed((1, 2), 3) == tensor(one, AP, N)
    assert tensor(AP, N) * tensor(N, one) == tensor(AP * N, N)
    assert value.multiply_out() == AP * N


def test_coproduct_apply(deformed):
    one = deformed.one
    N, AP, M = (deformed.gen(n) for n in ('N', 'A+', 'M'))
    table = jordanian_coproduct(deformed)
    h = deformed.exp_a_plus()
    assert coproduct_apply(M, table) == tensor(one, M) + tensor(M, one)
    assert coproduct_apply(one, table) == tensor(one, one)
    expected = tensor(one, N * AP) + tensor(AP, N) + tensor(N, h * AP) + tensor(N * AP, h)
    assert coproduct_apply(N * AP, table) == expected


def test_coproduct_classical_limit(deformed, classical):
    table = jordanian_coproduct(deformed)
    primitive = primitive_coproduct(classical)
    for name in GENERATORS:
        assert classical_limit(table[name]) == primitive[name]


def test_first_order_cocommutator(deformed, h4_algebra):
    family = first_order_cocommutator(jordanian_coproduct(deformed), h4_algebra)
    expected = delta_from_r(h4_algebra, Wedge.from_dict(2, {(0, 1): z}))
    assert family.images == expected.images


def test_deformation_covariance():
    algebra = oscillator_algebra(3, scale='lam')
    assert algebra.q == lam * z
    N, AP = algebra.gen('N'), algebra.gen('A+')
    relation = algebra.defining_relations()[('N', 'A+')]
    assert N * AP - AP * N == relation
    assert relation.coefficient((0, 0, 2, 0)) == lam * z * QQ(1, 2)


def test_format(deformed):
    value = deformed.gen('N') * deformed.gen('A-')
    assert value.format() == '-A- + A- N'
    assert deformed.zero.format() == '0'
    assert tensor(deformed.gen('A+'), deformed.one).format() == 'A+ (x) 1'


@pytest.mark.parametrize('order', [1, 3, 6])
def test_classical_engine(order):
    algebra = oscillator_algebra(order, deformed=False)
    assert algebra.q == 0
    N, AP, AM, M = (algebra.gen(name) for name in ('N', 'A+', 'A-', 'M'))
    assert N * AP - AP * N == AP
    assert N * AM - AM * N == -AM
    assert AM * AP - AP * AM == M
    assert normal_form(['A+', 'A+', 'A-'], algebra) == AP * AP * AM
