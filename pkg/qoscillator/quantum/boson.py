# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
Boson realization of ``U_z(h4)`` in the Weyl algebra ``[a-, a+] = 1``::

    A+ = a+
    M  = delta
    A- = delta exp(z a+) a- + delta beta (z/2) exp(z a+)
    N  = ((exp(z a+) - 1)/z) a- + beta (exp(z a+) + 1)/2

Under it the quantum Casimir becomes the scalar ``delta (2 beta - 1)``.
``beta`` and ``delta`` stay symbolic.

"""
from __future__ import annotations

import logging
from math import comb, factorial

from sympy import QQ

from ..algebra.exact import PARAMETERS, SeriesRing, gen
from .hopf import casimir, commutator
from .pbw import Element, MonomialAlgebra, algebra_map, oscillator_algebra

LOGGER = logging.getLogger("qoscillator.checks")


class WeylAlgebra(MonomialAlgebra):
    """Normal-ordered monomials ``a+^i a-^j`` with series coefficients."""

    letters = ("a+", "a-")

    def __init__(self, order: int):
        super().__init__(SeriesRing(PARAMETERS, order), (0, 0))
        one = self.series.one
        self.rules = {(1, 0): (((0, 1), one), ((), one))}

    def __repr__(self):
        return f"Weyl mod z^{self.series.order + 1}"

    def to_word(self, monomial) -> tuple:
        i, j = monomial
        return (0,) * i + (1,) * j

    def from_word(self, word) -> tuple:
        if list(word) != sorted(word):
            raise ValueError(f"Word {word} is not normal ordered")
        return (word.count(0), word.count(1))

    def _product(self, left, right) -> dict:
        # a-^j a+^i' = sum_k C(j, k) C(i', k) k! a+^(i'-k) a-^(j-k)
        i, j = left
        i2, j2 = right
        return {
            (i + i2 - k, j + j2 - k): self.series(comb(j, k) * comb(i2, k) * factorial(k))
            for k in range(min(j, i2) + 1)
        }

    def a_plus_function(self, coefficients) -> Element:
        return self.element({(k, 0): c for k, c in coefficients.items()})


def weyl_normal_form(word, algebra: WeylAlgebra, **kwargs) -> Element:
    """Normal order a word in ``a+`` and ``a-`` by rewriting."""
    return algebra.normal_form(word, **kwargs)


def realization(algebra: WeylAlgebra, deformed: bool = True, beta=None, delta=None) -> dict:
    """Images of the generators (keyed by name) in the Weyl algebra."""
    series = algebra.series
    beta = gen("beta") if beta is None else series(beta)
    delta = gen("delta") if delta is None else series(delta)
    z = series.z if deformed else series.zero
    powers = series.exp_coefficients(z)
    E = algebra.a_plus_function(dict(enumerate(powers)))
    if deformed:
        # (exp(z a+) - 1)/z keeps z^order a+^(order + 1)
        G = algebra.a_plus_function(
            {k: powers[k - 1] * QQ(1, k) for k in range(1, len(powers) + 1)}
        )
    else:
        G = algebra.gen("a+")
    AP, AM = algebra.gen("a+"), algebra.gen("a-")
    return {
        "A+": AP,
        "M": algebra.scalar_element(delta),
        "A-": (E * AM).scale(delta) + E.scale(delta * beta * z * QQ(1, 2)),
        "N": G * AM + (E + 1).scale(beta * QQ(1, 2)),
    }


def realization_check(order: int, deformed: bool = True, **constants) -> dict:
    """``[img X, img Y] - img([X, Y])`` for every defining relation."""
    weyl = WeylAlgebra(order)
    images = realization(weyl, deformed=deformed, **constants)
    relations = oscillator_algebra(order, deformed=deformed).defining_relations()
    return {
        (x, y): commutator(images[x], images[y]) - algebra_map(value, images, weyl.one)
        for (x, y), value in relations.items()
    }


def casimir_value(order: int, **constants) -> Element:
    """The quantum Casimir evaluated on the realization."""
    weyl = WeylAlgebra(order)
    images = realization(weyl, **constants)
    return algebra_map(casimir(oscillator_algebra(order)), images, weyl.one)


def expected_casimir(**constants):
    """``delta (2 beta - 1)``."""
    beta = constants.get("beta", gen("beta"))
    delta = constants.get("delta", gen("delta"))
    return PARAMETERS(delta) * (PARAMETERS(beta) * 2 - 1)
