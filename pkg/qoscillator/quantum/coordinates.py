# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
The quantum oscillator group: noncommutative coordinates of the 3x3 group element.

The coordinates ``m, a-, a+`` and the group-like pair ``e = exp(n)``,
``e^-1`` obey::

    [n, a+] = z (e - 1)    [n, a-] = 0      [a-, a+] = z a-
    [n, m]  = z a-         [a+, m] = z a- a+    [a-, m] = -z a-^2

``n`` only enters through conjugation by ``e``, which closes after one
step because every second nested commutator with ``n`` vanishes::

    e a+ = a+ e + z e^2 - z e      e m = m e + z a- e      e a- = a- e
    e^-1 a+ = a+ e^-1 - z + z e^-1     e^-1 m = m e^-1 - z a- e^-1

Monomials are ``m^a a-^b a+^c e^d`` with ``d`` any integer and exact
polynomial coefficients (``z`` is not truncated).

"""
from __future__ import annotations

import logging
from typing import Mapping

import numpy as np

from ..algebra.exact import PARAMETERS, SeriesRing, gen, to_poly
from .pbw import Element, MonomialAlgebra, TensorElement, algebra_map, tensor
from .rmatrix import kron, represented_r

LOGGER = logging.getLogger("qoscillator.checks")

COORDINATE_LETTERS = ("m", "a-", "a+", "e", "e^-1")

_Z_PARTS = SeriesRing(PARAMETERS, 1)


class QCoordAlgebra(MonomialAlgebra):
    """Exact rewriting engine for the quantum coordinates.

    ``commuting`` drops the relation ``[a-, a+] = z a-`` (a control that must
    break the RTT relations); ``deformation`` replaces ``z`` by a constant,
    ``0`` giving the commutative coordinate ring of the classical group.
    """

    letters = COORDINATE_LETTERS

    def __init__(self, commuting: bool = False, deformation=None):
        super().__init__(None, (0, 0, 0, 0))
        self.commuting = commuting
        self.deformation = gen("z") if deformation is None else to_poly(deformation)
        self.rules = self._rules()

    def __repr__(self):
        suffix = ", commuting a+-" if self.commuting else ""
        return f"QCoord(z={self.deformation}{suffix})"

    def _rules(self) -> dict:
        z, one = self.deformation, PARAMETERS.one
        m, am, ap, e, E = range(5)
        rules = {
            (am, m): (((m, am), one), ((am, am), -z)),
            (ap, m): (((m, ap), one), ((am, ap), z)),
            (ap, am): (((am, ap), one), ((am,), -z)),
            (e, m): (((m, e), one), ((am, e), z)),
            (e, am): (((am, e), one),),
            (e, ap): (((ap, e), one), ((e, e), z), ((e,), -z)),
            (E, m): (((m, E), one), ((am, E), -z)),
            (E, am): (((am, E), one),),
            (E, ap): (((ap, E), one), ((), -z), ((E,), z)),
            (e, E): (((), one),),
            (E, e): (((), one),),
        }
        if self.commuting:
            rules[(ap, am)] = (((am, ap), one),)
        return rules

    def to_word(self, monomial) -> tuple:
        a, b, c, d = monomial
        exponential = (3,) * d if d >= 0 else (4,) * -d
        return (0,) * a + (1,) * b + (2,) * c + exponential

    def from_word(self, word) -> tuple:
        if list(word) != sorted(word) or (3 in word and 4 in word):
            raise ValueError(f"Word {word} is not in normal order")
        return (
            word.count(0),
            word.count(1),
            word.count(2),
            word.count(3) - word.count(4),
        )

    def format_monomial(self, monomial) -> str:
        a, b, c, d = monomial
        parts = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(("m", "a-", "a+", "e"), (a, b, c, d))
            if e
        ]
        return " ".join(parts) or "1"

    def lift(self, p) -> Element:
        """Place a commutative polynomial in ``m, am, ap, e`` into normal order."""
        names = [str(s) for s in p.ring.symbols]
        out = {}
        for monom, coeff in p.items():
            exponents = dict(zip(names, monom))
            if exponents.get("n"):
                raise ValueError("The coordinate n only enters through e")
            key = tuple(exponents.get(x, 0) for x in ("m", "am", "ap", "e"))
            out[key] = PARAMETERS(coeff)
        return self.element(out)


def qcoord_normal_form(word, algebra: QCoordAlgebra | None = None, **kwargs) -> Element:
    """Normal order a word of coordinates (names or letter indices)."""
    algebra = algebra or QCoordAlgebra()
    return algebra.normal_form(word, **kwargs)


def z_part(x: Element, k: int) -> Element:
    """Coefficient of ``z**k`` in every term of ``x``."""
    return x.map_coefficients(lambda c: _Z_PARTS.coefficient(c, k))


def quantum_matrix(algebra: QCoordAlgebra) -> np.ndarray:
    """``T = [[1, a- e, m + a- a+], [0, e, a+], [0, 0, 1]]`` with coordinate entries."""
    one, zero = algebra.one, algebra.zero
    entries = [
        one,
        algebra.word("a-", "e"),
        algebra.gen("m") + algebra.word("a-", "a+"),
        zero,
        algebra.gen("e"),
        algebra.gen("a+"),
        zero,
        zero,
        one,
    ]
    return np.array(entries, dtype=object).reshape(3, 3)


def lift_matrix(matrix: np.ndarray, algebra: MonomialAlgebra) -> np.ndarray:
    """Turn a matrix of scalars into a matrix of algebra elements."""
    return np.array(
        [algebra.scalar_element(x) for x in matrix.ravel()], dtype=object
    ).reshape(matrix.shape)


def rtt_residual(algebra: QCoordAlgebra | None = None) -> np.ndarray:
    """The 9x9 matrix ``R T1 T2 - T2 T1 R`` with ``R = (D (x) D)(R)``."""
    algebra = algebra or QCoordAlgebra()
    T = quantum_matrix(algebra)
    identity = lift_matrix(np.eye(3, dtype=int).astype(object), algebra)
    R = lift_matrix(represented_r(), algebra)
    T1, T2 = kron(T, identity), kron(identity, T)
    return R @ T1 @ T2 - T2 @ T1 @ R


def group_coproduct(algebra: QCoordAlgebra) -> dict:
    """``Delta`` on the coordinates, keyed by letter name::

        Delta(e)  = e (x) e
        Delta(a+) = e (x) a+ + a+ (x) 1
        Delta(a-) = e^-1 (x) a- + a- (x) 1
        Delta(m)  = 1 (x) m + m (x) 1 - e^-1 a+ (x) a-

    """
    one = algebra.one
    m, am, ap, e, E = (algebra.gen(name) for name in COORDINATE_LETTERS)
    return {
        "e": tensor(e, e),
        "e^-1": tensor(E, E),
        "a+": tensor(e, ap) + tensor(ap, one),
        "a-": tensor(E, am) + tensor(am, one),
        "m": tensor(one, m) + tensor(m, one) - tensor(algebra.word("e^-1", "a+"), am),
    }


def group_counit(monomial) -> int:
    """``eps(e) = 1`` and ``eps(m) = eps(a+-) = 0`` on a basis monomial."""
    return int(not any(monomial[:3]))


def _apply(x: Element, table: Mapping, one) -> Element:
    return algebra_map(x, table, one)


def _relations(algebra: QCoordAlgebra) -> dict:
    """Each rewriting rule as ``(left word, right-hand side)``."""
    out = {}
    for (x, y), replacement in algebra.rules.items():
        value = algebra.zero
        for word, coeff in replacement:
            value = value + algebra.normal_form(word, coeff)
        out[(algebra.letters[x], algebra.letters[y])] = value
    return out


def qgroup_coproduct_check(algebra: QCoordAlgebra | None = None) -> dict:
    """Residuals of the coordinate Hopf structure, all exact.

    * ``relation``: ``Delta(x) Delta(y) - Delta(rhs)`` for each rewriting rule
      ``x y -> rhs``;
    * ``coassociativity``: ``(Delta (x) id) Delta - (id (x) Delta) Delta`` per letter;
    * ``counit``: both counit axioms per letter, and ``eps(x) eps(y) - eps(rhs)``
      per rule.
    """
    algebra = algebra or QCoordAlgebra()
    table = group_coproduct(algebra)
    pair = algebra.tensor(2)
    cache = {}

    def delta(monomial) -> TensorElement:
        if monomial not in cache:
            cache[monomial] = _apply(algebra.monomial(monomial), table, pair.one)
        return cache[monomial]

    def counit(x: Element):
        return sum((c * group_counit(k) for k, c in x.terms.items()), PARAMETERS.zero)

    residuals = {}
    for (x, y), rhs in _relations(algebra).items():
        product = table[x] * table[y]
        residuals[("relation", x, y)] = product - _apply(rhs, table, pair.one)
        left = counit(algebra.gen(x)) * counit(algebra.gen(y))
        residuals[("counit", x, y)] = algebra.scalar_element(left - counit(rhs))
    for name in COORDINATE_LETTERS:
        value = table[name]
        residuals[("coassociativity", name)] = value.map_slot(0, delta) - value.map_slot(1, delta)
        X = algebra.gen(name)
        residuals[("counit", name, "left")] = value.map_slot(0, group_counit) - X
        residuals[("counit", name, "right")] = value.map_slot(1, group_counit) - X
    return residuals


def quantization_consistency(brackets: Mapping, algebra: QCoordAlgebra | None = None) -> dict:
    """``[x, y]`` at order ``z^0`` and ``z^1`` against the Poisson bracket ``{x, y}``.

    ``brackets`` maps pairs of coordinate names (``m``, ``am``, ``ap``, ``e``)
    to commutative polynomials. Residuals are the ``z^0`` part of the
    commutator and its ``z^1`` coefficient minus the normal-ordered bracket.
    """
    algebra = algebra or QCoordAlgebra()
    letters = {"m": "m", "am": "a-", "ap": "a+", "e": "e"}
    residuals = {}
    for (x, y), value in brackets.items():
        X, Y = algebra.gen(letters[x]), algebra.gen(letters[y])
        bracket = X * Y - Y * X
        residuals[(x, y, 0)] = z_part(bracket, 0)
        residuals[(x, y, 1)] = z_part(bracket, 1) - algebra.lift(value)
    return residuals
