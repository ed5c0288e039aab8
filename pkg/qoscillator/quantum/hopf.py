# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
Hopf-algebra axioms of the Jordanian deformation ``U_z(h4)``.

Every check returns its residuals as elements of the engine (or of one of
its tensor powers), keyed by generator or generator pair. A residual that
vanishes to the truncation order is the zero element; anything else is
data for the report, not an exception.

The counit and the antipode are not tabulated by hand:
:func:`derive_antipode_counit` solves them from the axioms
``(eps (x) id) Delta = id`` and ``m (S (x) id) Delta = eps 1``, generator by
generator, and then verifies all of them.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Mapping

from ..algebra.exact import ValuationError
from .pbw import (
    GENERATORS,
    Element,
    OscillatorAlgebra,
    TensorElement,
    algebra_map,
    classical_limit,
    coproduct_apply,
    invert,
    jordanian_coproduct,
    oscillator_algebra,
    primitive_coproduct,
)

LOGGER = logging.getLogger("qoscillator.checks")

LIE_ORDER = ("N", "A+", "A-", "M")
"""Generators in the order of the Lie algebra basis."""


class NoSolutionError(ArithmeticError):
    """The counit or antipode axioms have no solution for the given coproduct."""


@dataclass
class HopfData:
    """A deformed enveloping algebra with its coproduct and, once derived, counit and antipode."""

    algebra: OscillatorAlgebra
    coproduct: Mapping
    counit: Mapping | None = None
    antipode: Mapping | None = None
    _coproducts: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def pairs(self) -> list:
        return [(x, y) for i, x in enumerate(LIE_ORDER) for y in LIE_ORDER[i + 1 :]]

    def delta(self, x: Element) -> TensorElement:
        return coproduct_apply(x, self.coproduct)

    def delta_monomial(self, monomial) -> TensorElement:
        if monomial not in self._coproducts:
            self._coproducts[monomial] = self.delta(self.algebra.monomial(monomial))
        return self._coproducts[monomial]

    def epsilon(self, monomial):
        """Counit of a basis monomial (``None`` while a letter is still unknown)."""
        series = self.algebra.series
        value = series.one
        for letter, exponent in zip(self.algebra.letters, monomial):
            if not exponent:
                continue
            known = (self.counit or {}).get(letter)
            if known is None:
                return None
            value = series.mul(value, known**exponent)
        return value

    def apply_counit(self, x: Element):
        series = self.algebra.series
        total = series.zero
        for monomial, coeff in x.terms.items():
            total += series.mul(coeff, self.epsilon(monomial))
        return total

    def apply_antipode(self, x: Element) -> Element:
        return algebra_map(x, self.antipode, self.algebra.one, reverse=True)


def jordanian_hopf(order: int, scale: str | None = None) -> HopfData:
    """The Jordanian coproduct on ``U_z(h4)`` truncated at ``order``."""
    algebra = oscillator_algebra(order, scale=scale)
    return HopfData(algebra, jordanian_coproduct(algebra))


def commutator(x: Element, y: Element) -> Element:
    return x * y - y * x


def check_hom(data: HopfData) -> dict:
    """``Delta([X, Y]) - [Delta(X), Delta(Y)]`` for every pair of generators."""
    relations = data.algebra.defining_relations()
    residuals = {}
    for x, y in data.pairs:
        bracket = commutator(data.coproduct[x], data.coproduct[y])
        residuals[(x, y)] = data.delta(relations[(x, y)]) - bracket
    return residuals


def check_coassoc(data: HopfData) -> dict:
    """``(Delta (x) id) Delta(X) - (id (x) Delta) Delta(X)`` per generator."""
    residuals = {}
    for name in LIE_ORDER:
        value = data.coproduct[name]
        left = value.map_slot(0, data.delta_monomial)
        right = value.map_slot(1, data.delta_monomial)
        residuals[name] = left - right
    return residuals


def _split(value: TensorElement, slot: int, monomial) -> tuple:
    """Separate the terms of ``value`` with ``monomial`` in ``slot`` from the rest."""
    factor = value.factor
    own, rest = {}, {}
    for key, coeff in value.terms.items():
        if key[slot] == monomial:
            own[key[1 - slot]] = coeff
        else:
            rest[key] = coeff
    return factor.element(own), value.algebra.element(rest)


def _letters(monomial) -> set:
    return {GENERATORS[i] for i, e in enumerate(monomial) if e}


def _solve_counit(data: HopfData, name: str):
    """``eps(X)`` from the unit component of ``(eps (x) id) Delta(X) = X``."""
    series = data.algebra.series
    monomial = data.algebra.from_word((data.algebra.letter(name),))
    total = series.zero
    pivot = series.zero
    for (left, right), coeff in data.coproduct[name].terms.items():
        if right != data.algebra.unit:
            continue
        if left == monomial:
            pivot += coeff
            continue
        value = data.epsilon(left)
        if value is None:
            return None
        total += series.mul(coeff, value)
    if not pivot or not pivot.is_ground:
        raise NoSolutionError(f"Counit of {name} is not determined by its coproduct")
    return series(-total * (1 / pivot.LC))


def _solve_antipode(data: HopfData, name: str):
    """``S(X) = (eps(X) - sum S(l) r) h_X^-1`` from ``Delta(X) = X (x) h_X + sum l (x) r``."""
    algebra = data.algebra
    monomial = algebra.from_word((algebra.letter(name),))
    h, rest = _split(data.coproduct[name], 0, monomial)
    known = set(data.antipode)
    if any(not _letters(left) <= known for left, _ in rest.terms):
        return None
    value = algebra.scalar_element(data.counit[name])
    for (left, right), coeff in rest.terms.items():
        image = data.apply_antipode(algebra.monomial(left, coeff))
        value = value - image * algebra.monomial(right)
    try:
        return value * invert(h)
    except ValuationError as exc:
        raise NoSolutionError(f"Right factor of {name} in its coproduct is singular") from exc


def _fixed_point(data: HopfData, solve, table: dict, what: str):
    pending = list(LIE_ORDER)
    while pending:
        progress = False
        for name in list(pending):
            value = solve(data, name)
            if value is None:
                continue
            table[name] = value
            pending.remove(name)
            progress = True
        if not progress:
            raise NoSolutionError(f"No progress solving the {what} of {', '.join(pending)}")


def counit_residuals(data: HopfData) -> dict:
    """``(eps (x) id) Delta(X) - X`` and ``(id (x) eps) Delta(X) - X`` per generator."""
    residuals = {}
    for name in LIE_ORDER:
        value = data.coproduct[name]
        X = data.algebra.gen(name)
        residuals[(name, "left")] = value.map_slot(0, data.epsilon) - X
        residuals[(name, "right")] = value.map_slot(1, data.epsilon) - X
    return residuals


def antipode_residuals(data: HopfData) -> dict:
    """Both antipode axioms, ``m (S (x) id) Delta(X) - eps(X)`` and its mirror, per generator."""
    algebra = data.algebra
    residuals = {}
    for name in LIE_ORDER:
        target = algebra.scalar_element(data.counit[name])
        left = right = algebra.zero
        for (a, b), coeff in data.coproduct[name].terms.items():
            first, second = algebra.monomial(a, coeff), algebra.monomial(b)
            left = left + data.apply_antipode(first) * second
            right = right + first * data.apply_antipode(second)
        residuals[(name, "left")] = left - target
        residuals[(name, "right")] = right - target
    return residuals


def derive_antipode_counit(data: HopfData) -> HopfData:
    """Solve the counit and the antipode from the axioms and verify them.

    The counit is derived first; each ``S(X)`` then needs only the antipode
    of the left factors accompanying ``X`` in ``Delta(X)``. Raises
    :class:`NoSolutionError` when the recursion stalls, a right factor is
    not invertible or a solved axiom leaves a residual.
    """
    counit, antipode = {}, {}
    derived = replace(data, counit=counit, antipode=antipode, _coproducts={})
    _fixed_point(derived, _solve_counit, counit, "counit")
    _fixed_point(derived, _solve_antipode, antipode, "antipode")

    for residuals in (counit_residuals(derived), antipode_residuals(derived)):
        failed = [key for key, value in residuals.items() if value]
        if failed:
            raise NoSolutionError(f"Derived tables leave residuals at {failed}")
    LOGGER.log(15, "Antipode: %s", {k: v.format() for k, v in antipode.items()})
    return derived


def antipode_squared(data: HopfData) -> dict:
    """``S^2(X) - X`` per generator (reported, the deformation is not involutive)."""
    return {
        name: data.apply_antipode(data.antipode[name]) - data.algebra.gen(name)
        for name in LIE_ORDER
    }


def antipode_antihom(data: HopfData) -> dict:
    """``S([X, Y]) - [S(Y), S(X)]`` on every defining relation."""
    S = data.antipode
    relations = data.algebra.defining_relations()
    return {
        (x, y): data.apply_antipode(relations[(x, y)]) - commutator(S[y], S[x])
        for x, y in data.pairs
    }


def counit_relations(data: HopfData) -> dict:
    """``eps`` of both sides of every defining relation (a commutator has counit zero)."""
    relations = data.algebra.defining_relations()
    return {pair: data.apply_counit(relations[pair]) for pair in data.pairs}


def casimir(algebra: OscillatorAlgebra) -> Element:
    """The quantum Casimir ``2 N M + k A- + A- k`` with ``k = (exp(-q A+) - 1)/q``.

    Its classical limit is ``2 N M - A+ A- - A- A+``.
    """
    k = algebra.difference_quotient(-1)
    N, AM, M = (algebra.gen(name) for name in ("N", "A-", "M"))
    return N * M * 2 + k * AM + AM * k


def casimir_centrality(C: Element, algebra: OscillatorAlgebra | None = None) -> dict:
    """``[C, X]`` for every generator."""
    algebra = algebra or C.algebra
    return {name: commutator(C, algebra.gen(name)) for name in LIE_ORDER}


def classical_limits(data: HopfData) -> dict:
    """Differences between the ``z^0`` parts of the deformed data and the classical ones."""
    classical = data.algebra.classical()
    deformed_relations = data.algebra.defining_relations()
    relations = classical.defining_relations()
    primitive = primitive_coproduct(classical)
    residuals = {}
    for pair, value in deformed_relations.items():
        residuals[("relation",) + pair] = classical_limit(value) - relations[pair]
    for name in LIE_ORDER:
        residuals[("coproduct", name)] = classical_limit(data.coproduct[name]) - primitive[name]
    residuals[("casimir",)] = classical_limit(casimir(data.algebra)) - casimir(classical)
    return residuals
