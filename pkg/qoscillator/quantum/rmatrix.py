# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
The universal R-matrix of the Jordanian deformation and its 3x3 representation.

The universal element::

    R = exp(-z A+ (x) N) exp(z N (x) A+)

lives in the two-fold tensor power of the truncated engine; the quantum
Yang-Baxter equation, the intertwining property and triangularity are
checked there. The same element is then pushed through the matrix
representation::

    D(N) = E22,  D(A+) = E23,  D(A-) = E12,  D(M) = E13

where ``D(A+)**2 = 0`` collapses every exponential, so the matrix
identities hold exactly with ``z`` symbolic. Matrices are numpy object
arrays of polynomials.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from math import factorial

import numpy as np
from sympy import QQ
from sympy.polys.rings import PolyRing, ring

from ..algebra.exact import PARAMETERS, SeriesRing, gen
from .pbw import (
    Element,
    OscillatorAlgebra,
    TensorElement,
    exp_series,
    oscillator_algebra,
    tensor,
)

LOGGER = logging.getLogger("qoscillator.checks")

COORDINATES = ring("n,e,am,ap,m", QQ)[0]
"""Commutative coordinates of the oscillator group (``e`` stands for ``exp(n)``)."""

MATRIX_UNITS = {"N": (2, 2), "A+": (2, 3), "A-": (1, 2), "M": (1, 3)}
"""1-based matrix unit representing each generator."""


class RepresentationError(ArithmeticError):
    """An identity that must hold exactly in the matrix representation does not."""

    def __init__(self, what, matrix):
        self.matrix = matrix
        entry = next(
            (f"entry {i + 1},{j + 1} = {v}" for (i, j), v in np.ndenumerate(matrix) if v), ""
        )
        super().__init__(f"{what} fails at {entry}")


@dataclass(frozen=True)
class UniversalR:
    """``R`` and its inverse, both truncated at the order of their engine."""

    value: TensorElement
    inverse: TensorElement

    @property
    def algebra(self) -> OscillatorAlgebra:
        return self.value.factor


def _generators(algebra: OscillatorAlgebra) -> tuple:
    return tuple(algebra.gen(name) for name in ("N", "A+", "A-", "M"))


def exponential_product(algebra: OscillatorAlgebra, first: int, second: int) -> TensorElement:
    """``exp(first q A+ (x) N) exp(second q N (x) A+)``."""
    N, AP, _, _ = _generators(algebra)
    q = algebra.q
    left = exp_series(tensor(AP, N).scale(q * first))
    right = exp_series(tensor(N, AP).scale(q * second))
    return left * right


def build_r(order: int | OscillatorAlgebra) -> UniversalR:
    """The universal R-matrix and its inverse ``exp(-z N (x) A+) exp(z A+ (x) N)``.

    The inverse is checked by multiplication in both orders.
    """
    algebra = oscillator_algebra(order) if isinstance(order, int) else order
    N, AP, _, _ = _generators(algebra)
    q = algebra.q
    value = exponential_product(algebra, -1, 1)
    inverse = exp_series(tensor(N, AP).scale(-q)) * exp_series(tensor(AP, N).scale(q))
    if value * inverse != 1 or inverse * value != 1:
        raise ArithmeticError("Series inverse of the universal R-matrix does not check out")
    return UniversalR(value, inverse)


def controls(algebra: OscillatorAlgebra) -> dict:
    """Variants of ``R``: the factor-swapped and the sign-flipped exponential products."""
    N, AP, _, _ = _generators(algebra)
    q = algebra.q
    return {
        "factor-swapped": exp_series(tensor(N, AP).scale(q))
        * exp_series(tensor(AP, N).scale(-q)),
        "sign-flipped": exponential_product(algebra, 1, 1),
    }


def yang_baxter_residual(value: TensorElement) -> TensorElement:
    """``R12 R13 R23 - R23 R13 R12`` for a two-fold tensor ``R``."""
    r12, r13, r23 = (value.embed(slots, 3) for slots in ((0, 1), (0, 2), (1, 2)))
    return r12 * r13 * r23 - r23 * r13 * r12


def qybe_residual(R: UniversalR) -> TensorElement:
    return yang_baxter_residual(R.value)


def intertwine_residual(R: UniversalR, coproduct) -> dict:
    """``sigma(Delta(X)) R - R Delta(X)`` per generator."""
    return {
        name: value.flip() * R.value - R.value * value for name, value in coproduct.items()
    }


def triangularity(R: UniversalR) -> TensorElement:
    """``R21 R - 1 (x) 1``."""
    return R.value.flip() * R.value - 1


def cocommutator_residual(R: UniversalR, coproduct) -> dict:
    """Order-z part of ``Delta - sigma Delta`` against ``[Delta_0(X), r]``.

    ``r`` is the order-z part of ``R`` and ``Delta_0`` the primitive coproduct.
    """
    algebra = R.algebra
    r = R.value.part(1)
    one = algebra.one
    residuals = {}
    for name, value in coproduct.items():
        X = algebra.gen(name)
        primitive = tensor(one, X) + tensor(X, one)
        skew = (value - value.flip()).part(1)
        residuals[name] = skew - (primitive * r - r * primitive).part(1)
    return residuals


# Matrix layer


def _matrix(entries, n: int, base: PolyRing = PARAMETERS) -> np.ndarray:
    return np.array([base(x) for x in entries], dtype=object).reshape(n, n)


def identity(n: int, base: PolyRing = PARAMETERS) -> np.ndarray:
    return _matrix([int(i == j) for i in range(n) for j in range(n)], n, base)


def zeros(n: int, base: PolyRing = PARAMETERS) -> np.ndarray:
    return _matrix([0] * (n * n), n, base)


def matrix_unit(i: int, j: int, n: int = 3, base: PolyRing = PARAMETERS) -> np.ndarray:
    """``E_ij`` with 1-based indices."""
    out = zeros(n, base)
    out[i - 1, j - 1] = base.one
    return out


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of object matrices (first factor outermost)."""
    n, m = a.shape[0], b.shape[0]
    return np.multiply.outer(a, b).transpose(0, 2, 1, 3).reshape(n * m, n * m)


def scale(matrix: np.ndarray, value) -> np.ndarray:
    return np.array([x * value for x in matrix.ravel()], dtype=object).reshape(matrix.shape)


def is_zero(matrix: np.ndarray) -> bool:
    return not any(matrix.ravel())


def exp_nilpotent(matrix: np.ndarray, base: PolyRing = PARAMETERS) -> np.ndarray:
    """Exact exponential of a nilpotent polynomial matrix."""
    n = matrix.shape[0]
    result = term = identity(n, base)
    for k in range(1, n + 1):
        term = term @ matrix
        if is_zero(term):
            break
        result = result + scale(term, QQ(1, factorial(k)))
    return result


def representation(base: PolyRing = PARAMETERS) -> dict:
    """The matrices ``D(X)`` keyed by generator name."""
    return {name: matrix_unit(i, j, 3, base) for name, (i, j) in MATRIX_UNITS.items()}


class MatrixRepresentation:
    """Push engine elements through ``D`` (and ``D (x) D ...`` on tensors)."""

    def __init__(self, algebra: OscillatorAlgebra, base: PolyRing = PARAMETERS):
        self.algebra = algebra
        self.base = base
        self.matrices = representation(base)
        self._monomials = {}

    def monomial(self, monomial) -> np.ndarray:
        if monomial not in self._monomials:
            factors = [
                self.matrices[letter]
                for letter, e in zip(self.algebra.letters, monomial)
                for _ in range(e)
            ]
            unit = identity(3, self.base)
            self._monomials[monomial] = reduce(lambda a, b: a @ b, factors, unit)
        return self._monomials[monomial]

    def __call__(self, x: Element) -> np.ndarray:
        if isinstance(x, TensorElement):
            size = 3**x.arity
            out = zeros(size, self.base)
            for key, coeff in x.terms.items():
                out = out + scale(reduce(kron, (self.monomial(m) for m in key)), coeff)
            return out
        out = zeros(3, self.base)
        for monomial, coeff in x.terms.items():
            out = out + scale(self.monomial(monomial), coeff)
        return out


def commutator_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def matrix_relation_residuals(algebra: OscillatorAlgebra) -> dict:
    """``[D(X), D(Y)] - D([X, Y])`` for every defining relation of ``algebra``."""
    D = MatrixRepresentation(algebra)
    return {
        pair: commutator_matrix(D.matrices[pair[0]], D.matrices[pair[1]]) - D(value)
        for pair, value in algebra.defining_relations().items()
    }


def represented_r(base: PolyRing = PARAMETERS) -> np.ndarray:
    """``I (x) I + z (D(N) (x) D(A+) - D(A+) (x) D(N))`` in closed form."""
    D = representation(base)
    z = gen("z", base)
    skew = kron(D["N"], D["A+"]) - kron(D["A+"], D["N"])
    return identity(9, base) + scale(skew, z)


def embeddings(matrix: np.ndarray) -> tuple:
    """``R12``, ``R13`` and ``R23`` of a 9x9 matrix acting on three copies of C^3."""
    base_identity = identity(3, matrix.flat[0].ring)
    r12 = kron(matrix, base_identity)
    r23 = kron(base_identity, matrix)
    r13 = r12.reshape((3,) * 6).transpose(0, 2, 1, 3, 5, 4).reshape(27, 27)
    return r12, r13, r23


def matrix_yang_baxter(matrix: np.ndarray) -> np.ndarray:
    r12, r13, r23 = embeddings(matrix)
    return r12 @ r13 @ r23 - r23 @ r13 @ r12


def truncate_matrix(matrix: np.ndarray, series: SeriesRing) -> np.ndarray:
    return np.array([series(x) for x in matrix.ravel()], dtype=object).reshape(matrix.shape)


def functoriality_residual(value: TensorElement) -> np.ndarray:
    """``(D (x) D (x) D)`` of the universal Yang-Baxter residual minus the matrix one."""
    algebra = value.factor
    D = MatrixRepresentation(algebra)
    universal = D(yang_baxter_residual(value))
    return universal - truncate_matrix(matrix_yang_baxter(D(value)), algebra.series)


def group_element(base: PolyRing = COORDINATES) -> np.ndarray:
    """``T = exp(am D(A-)) exp(ap D(A+)) (I + (e - 1) E22) exp(m D(M))``."""
    am, ap, e, m = (gen(name, base) for name in ("am", "ap", "e", "m"))
    D = representation(base)
    dilation = identity(3, base) + scale(matrix_unit(2, 2, 3, base), e - 1)
    factors = (
        exp_nilpotent(scale(D["A-"], am), base),
        exp_nilpotent(scale(D["A+"], ap), base),
        dilation,
        exp_nilpotent(scale(D["M"], m), base),
    )
    return reduce(lambda a, b: a @ b, factors)


def group_element_closed_form(base: PolyRing = COORDINATES) -> np.ndarray:
    """``[[1, am e, m + am ap], [0, e, ap], [0, 0, 1]]``."""
    am, ap, e, m = (gen(name, base) for name in ("am", "ap", "e", "m"))
    return _matrix([1, am * e, m + am * ap, 0, e, ap, 0, 0, 1], 3, base)


def check_representation(order: int) -> dict:
    """Exact identities of the matrix layer, raising :class:`RepresentationError` on a mismatch.

    Covers the classical and the deformed relations, ``(D (x) D)(R)`` against
    its closed form, the 27x27 Yang-Baxter equation and the group element.
    Returns the matrices that were compared, for the report.
    """
    results = {}
    for algebra in (oscillator_algebra(order, deformed=False), oscillator_algebra(order)):
        kind = "deformed" if algebra.deformed else "classical"
        for (x, y), residual in matrix_relation_residuals(algebra).items():
            if not is_zero(residual):
                raise RepresentationError(f"[D({x}), D({y})] in the {kind} algebra", residual)
        results[f"{kind} relations"] = True

    R = build_r(order)
    expected = represented_r()
    difference = MatrixRepresentation(R.algebra)(R.value) - expected
    if not is_zero(difference):
        raise RepresentationError("(D (x) D)(R)", difference)
    results["(D (x) D)(R)"] = expected

    residual = matrix_yang_baxter(expected)
    if not is_zero(residual):
        raise RepresentationError("Matrix Yang-Baxter equation", residual)
    results["matrix Yang-Baxter residual"] = residual

    T = group_element()
    if not is_zero(T - group_element_closed_form()):
        raise RepresentationError("Group element", T - group_element_closed_form())
    results["group element"] = T
    LOGGER.log(15, "Matrix layer verified at order %d", order)
    return results
