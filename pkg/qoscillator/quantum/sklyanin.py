# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
First-order check of the quantum group: the Sklyanin bracket.

The candidate Poisson brackets of the commutative coordinates are the
``z``-linear parts of the quantum commutators divided by ``z``; ``e`` is an
independent symbol standing for ``exp(n)`` with ``{e, x} = e {n, x}``. They
are extended to polynomials by the Leibniz rule and compared entrywise with
the r-matrix bracket ``[rho, T (x) T]`` of the classical group element, with
``rho = (D (x) D)(N ^ A+)``.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

import numpy as np
from sympy.polys.rings import PolyElement

from .rmatrix import COORDINATES, group_element, is_zero, kron, representation

LOGGER = logging.getLogger("qoscillator.checks")

COORDINATE_NAMES = ("n", "e", "am", "ap", "m")

MATCH, SIGN_MISMATCH, MISMATCH = "MATCH", "SIGN_MISMATCH", "MISMATCH"


def _gens() -> dict:
    return dict(zip(COORDINATE_NAMES, COORDINATES.gens))


def candidate_brackets() -> dict:
    """``{x, y}`` on pairs of coordinates, with ``{e, x} = e {n, x}``."""
    n, e, am, ap, m = COORDINATES.gens
    table = {
        ("n", "ap"): e - 1,
        ("n", "am"): COORDINATES.zero,
        ("am", "ap"): am,
        ("n", "m"): am,
        ("ap", "m"): am * ap,
        ("am", "m"): -(am**2),
        ("n", "e"): COORDINATES.zero,
    }
    for (x, y), value in list(table.items()):
        if x == "n" and y != "e":
            table[("e", y)] = e * value
    return table


class PoissonBracket:
    """A bracket on the coordinate ring given on generators, extended by Leibniz."""

    def __init__(self, table: Mapping):
        gens = _gens()
        self.matrix = {}
        for (x, y), value in table.items():
            self.matrix[(gens[x], gens[y])] = value
            self.matrix[(gens[y], gens[x])] = -value

    def generator_bracket(self, x: PolyElement, y: PolyElement) -> PolyElement:
        return self.matrix.get((x, y), COORDINATES.zero)

    def __call__(self, f: PolyElement, g: PolyElement) -> PolyElement:
        f, g = COORDINATES(f), COORDINATES(g)
        result = COORDINATES.zero
        for x in COORDINATES.gens:
            df = f.diff(x)
            if not df:
                continue
            for y in COORDINATES.gens:
                value = self.generator_bracket(x, y)
                if value:
                    result += df * g.diff(y) * value
        return result


def jacobi_residuals(bracket: PoissonBracket) -> dict:
    """``{x, {y, w}} + {y, {w, x}} + {w, {x, y}}`` on all triples of coordinates."""
    gens = _gens()
    out = {}
    for triple in combinations(COORDINATE_NAMES, 3):
        x, y, w = (gens[name] for name in triple)
        out[triple] = bracket(x, bracket(y, w)) + bracket(y, bracket(w, x)) + bracket(
            w, bracket(x, y)
        )
    return out


def antisymmetry_residuals(bracket: PoissonBracket) -> dict:
    gens = _gens()
    return {
        (x, y): bracket(gens[x], gens[y]) + bracket(gens[y], gens[x])
        for x in COORDINATE_NAMES
        for y in COORDINATE_NAMES
    }


def entry_brackets(bracket: PoissonBracket, T: np.ndarray) -> np.ndarray:
    """The 9x9 matrix ``{T (x), T}`` with entries ``{T_ij, T_kl}`` at ``((i, k), (j, l))``."""
    out = np.empty((3, 3, 3, 3), dtype=object)
    for i, j, k, l in np.ndindex(3, 3, 3, 3):
        out[i, k, j, l] = bracket(T[i, j], T[k, l])
    return out.reshape(9, 9)


def r_matrix_bracket(T: np.ndarray) -> np.ndarray:
    """``[rho, T (x) T]`` with ``rho = D(N) (x) D(A+) - D(A+) (x) D(N)``."""
    D = representation(COORDINATES)
    rho = kron(D["N"], D["A+"]) - kron(D["A+"], D["N"])
    TT = kron(T, T)
    return rho @ TT - TT @ rho


@dataclass(frozen=True)
class SklyaninResult:
    status: str
    sign: int
    residual: np.ndarray

    def to_dict(self) -> dict:
        nonzero = int(sum(bool(x) for x in self.residual.ravel()))
        return {"status": self.status, "sign": self.sign, "nonzero_entries": nonzero}


def sklyanin_check(bracket: PoissonBracket | None = None) -> SklyaninResult:
    """Compare ``{T (x), T}`` with ``[rho, T (x) T]`` up to a global sign.

    The sign that makes both sides agree is recorded; ``SIGN_MISMATCH`` means
    they agree only after flipping it.
    """
    bracket = bracket or PoissonBracket(candidate_brackets())
    T = group_element()
    left = entry_brackets(bracket, T)
    right = r_matrix_bracket(T)
    if is_zero(left - right):
        result = SklyaninResult(MATCH, 1, left - right)
    elif is_zero(left + right):
        result = SklyaninResult(SIGN_MISMATCH, -1, left + right)
    else:
        result = SklyaninResult(MISMATCH, 0, left - right)
    LOGGER.log(15, "Sklyanin bracket: %s (sign %d)", result.status, result.sign)
    return result


def quantization_brackets() -> dict:
    """The candidate brackets among ``m, am, ap, e`` (the pairs a commutator can test)."""
    return {pair: value for pair, value in candidate_brackets().items() if "n" not in pair}
