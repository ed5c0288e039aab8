# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
Lie algebras given by structure constants.

Tensors over a Lie algebra are plain dictionaries mapping tuples of basis
indices to coefficients (rationals, polynomials or rational functions).
Wedges are stored canonically in :class:`Wedge`, with the convention
``x^y = x(x)y - y(x)x`` (no factor one half).

Input files
-----------
A Lie algebra is described in TOML::

    name = "h4"
    basis = ["N", "A+", "A-", "M"]

    [[bracket]]
    left = "N"
    right = "A+"
    result = { "A+" = 1 }

Unlisted brackets are zero and antisymmetric partners are implied.
Coefficients are integers or rational strings such as ``"-3/2"``.

"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from functools import cache
from itertools import combinations, permutations
from pathlib import Path
from typing import Mapping, Sequence

import toml
from sympy import QQ
from sympy.combinatorics import Permutation
from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from .exact import FRACTIONS, PARAMETERS, accumulate, embed, format_terms, lower, to_rational

__all__ = [
    "Automorphism",
    "JacobiViolation",
    "LieAlgebra",
    "LieAlgebraFileError",
    "NotAutomorphismError",
    "Wedge",
    "adjoint_action",
    "check_and_apply_automorphism",
    "h4",
    "load_lie_algebra",
    "make_automorphism",
    "make_lie_algebra",
    "parse_lie_algebra",
    "skew_part",
]


class JacobiViolation(ValueError):
    """The structure constants fail the Jacobi identity on ``triple``."""

    def __init__(self, triple, residual=None):
        self.triple = tuple(triple)
        self.residual = residual
        super().__init__(f"Jacobi identity fails on basis triple {self.triple}: {residual}")


class NotAutomorphismError(ValueError):
    """A linear map does not preserve the bracket of the basis pair ``pair``."""

    def __init__(self, pair, message=None):
        self.pair = tuple(pair)
        super().__init__(message or f"Bracket of basis pair {self.pair} is not preserved")


class LieAlgebraFileError(ValueError):
    """A Lie algebra description could not be read."""

    def __init__(self, message, lineno=1, colno=1, source=None):
        self.lineno = lineno
        self.colno = colno
        self.source = source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{lineno}:{colno}: {message}")


@dataclass(frozen=True)
class LieAlgebra:
    """A finite-dimensional Lie algebra with rational structure constants.

    ``constants[i][j]`` is the sparse expansion ``((k, c_ij^k), ...)`` of
    ``[X_i, X_j]``. Instances are built (and validated) by :func:`make_lie_algebra`.
    """

    basis: tuple
    constants: tuple
    name: str = ""

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def index(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.dimension:
                raise IndexError(f"Basis index {name} out of range for {self}")
            return name
        try:
            return self.basis.index(name)
        except ValueError:
            raise KeyError(f"Unknown basis element {name!r} of {self}") from None

    def bracket(self, i: int, j: int) -> tuple:
        return self.constants[i][j]

    def bracket_vectors(self, u: Sequence, v: Sequence) -> list:
        """Bracket of two coordinate vectors."""
        out = [0] * self.dimension
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                for k, c in self.constants[i][j]:
                    out[k] = out[k] + ui * vj * c
        return out

    def __str__(self):
        return self.name or "<" + ",".join(self.basis) + ">"


def make_lie_algebra(
    basis: Sequence[str], brackets: Mapping | None = None, name: str = ""
) -> LieAlgebra:
    """Validate structure constants and build a :class:`LieAlgebra`.

    ``brackets`` maps pairs of basis names (or indices) to a mapping from basis
    names (or indices) to rational coefficients.

    >>> make_lie_algebra(["X", "Y"]).dimension
    2
    >>> make_lie_algebra(["X", "Y"], {("X", "Y"): {"Y": 1}}).bracket(1, 0) == ((1, -1),)
    True

    """
    basis = tuple(str(b) for b in basis)
    if len(set(basis)) != len(basis):
        raise ValueError(f"Repeated basis names in {basis}")
    n = len(basis)

    def _index(label):
        if isinstance(label, int):
            if not 0 <= label < n:
                raise IndexError(f"Basis index {label} out of range")
            return label
        if label not in basis:
            raise KeyError(f"Unknown basis element {label!r}")
        return basis.index(label)

    table = {}
    for (left, right), result in (brackets or {}).items():
        i, j = _index(left), _index(right)
        expansion = {}
        for label, coeff in result.items():
            c = to_rational(coeff)
            if c:
                expansion[_index(label)] = c
        if i == j:
            if expansion:
                raise ValueError(f"Bracket [{basis[i]}, {basis[i]}] must vanish")
            continue
        for key, value in (((i, j), expansion), ((j, i), {k: -c for k, c in expansion.items()})):
            if key in table and table[key] != value:
                raise ValueError(
                    f"Bracket [{basis[key[0]]}, {basis[key[1]]}] given twice inconsistently"
                )
            table[key] = value

    constants = tuple(
        tuple(tuple(sorted(table.get((i, j), {}).items())) for j in range(n)) for i in range(n)
    )
    algebra = LieAlgebra(basis, constants, name)

    for i, j, k in combinations(range(n), 3):
        residual = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, x in constants[a][b]:
                for p, y in constants[m][c]:
                    accumulate(residual, p, x * y)
        if residual:
            raise JacobiViolation(
                (i, j, k), " + ".join(f"{c}*{basis[p]}" for p, c in sorted(residual.items()))
            )
    return algebra


def adjoint_action(algebra: LieAlgebra, x: int, tensor: Mapping) -> dict:
    """Apply ``ad_x`` as a derivation over all slots of a tensor.

    >>> L = h4()
    >>> adjoint_action(L, L.index("N"), {(0, 1): 1}) == {(0, 1): 1}
    True

    """
    n = algebra.dimension
    if not 0 <= x < n:
        raise IndexError(f"Basis index {x} out of range for {algebra}")
    out = {}
    for key, coeff in tensor.items():
        if any(not 0 <= i < n for i in key):
            raise IndexError(f"Tensor index {key} out of range for {algebra}")
        for slot, i in enumerate(key):
            for k, c in algebra.constants[x][i]:
                accumulate(out, key[:slot] + (k,) + key[slot + 1 :], coeff * c)
    return out


@dataclass(frozen=True)
class Wedge:
    """Element of the exterior power of degree ``degree``.

    ``terms`` holds ``(indices, coefficient)`` pairs with strictly increasing
    indices, sorted, without zero coefficients.
    """

    degree: int
    terms: tuple = field(default=())

    @classmethod
    def from_dict(cls, degree: int, coefficients: Mapping) -> "Wedge":
        canonical = {}
        for key, coeff in coefficients.items():
            if len(key) != degree:
                raise ValueError(f"Index {key} does not have degree {degree}")
            if len(set(key)) < degree:
                continue
            order = sorted(range(degree), key=lambda s: key[s])
            sign = Permutation(order).signature()
            accumulate(canonical, tuple(sorted(key)), coeff * sign)
        return cls(degree, tuple(sorted(canonical.items())))

    @classmethod
    def from_tensor(cls, tensor: Mapping, degree: int) -> "Wedge":
        """Read a skew-symmetric tensor; raise :class:`ValueError` if it is not skew."""
        wedge = cls(
            degree,
            tuple(sorted((k, v) for k, v in tensor.items() if list(k) == sorted(set(k)) and v)),
        )
        if wedge.to_tensor() != {k: v for k, v in tensor.items() if v}:
            raise ValueError("Tensor is not skew-symmetric")
        return wedge

    def as_dict(self) -> dict:
        return dict(self.terms)

    def to_tensor(self) -> dict:
        out = {}
        for key, coeff in self.terms:
            for perm in permutations(range(self.degree)):
                sign = Permutation(list(perm)).signature()
                accumulate(out, tuple(key[p] for p in perm), coeff * sign)
        return out

    def coefficient(self, *indices):
        if len(set(indices)) < len(indices):
            return 0
        order = sorted(range(len(indices)), key=lambda s: indices[s])
        return self.as_dict().get(tuple(sorted(indices)), 0) * Permutation(order).signature()

    def map_coefficients(self, func) -> "Wedge":
        return Wedge.from_dict(self.degree, {k: func(v) for k, v in self.terms})

    def scale(self, factor) -> "Wedge":
        return self.map_coefficients(lambda v: v * factor)

    def _combine(self, other: "Wedge", sign: int) -> "Wedge":
        if self.degree != other.degree:
            raise ValueError("Cannot add wedges of different degree")
        out = self.as_dict()
        for key, coeff in other.terms:
            accumulate(out, key, coeff * sign)
        return Wedge(self.degree, tuple(sorted(out.items())))

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def __bool__(self):
        return bool(self.terms)

    def format(self, algebra: LieAlgebra | None = None) -> str:
        if not self.terms:
            return "0"
        names = algebra.basis if algebra is not None else None
        return format_terms(
            ("^".join(names[i] if names else f"X{i}" for i in key), coeff)
            for key, coeff in self.terms
        )


def skew_part(tensor: Mapping) -> Wedge:
    """Antisymmetrize a tensor: ``(t - sigma(t)) / 2`` in degree two.

    >>> skew_part({(0, 1): 1, (1, 0): 1})
    Wedge(degree=2, terms=())

    """
    if not tensor:
        return Wedge(2)
    degree = len(next(iter(tensor)))
    scale = QQ(1, len(list(permutations(range(degree)))))
    out = {}
    for key, coeff in tensor.items():
        for perm in permutations(range(degree)):
            permuted = tuple(key[p] for p in perm)
            if list(permuted) == sorted(set(permuted)):
                accumulate(out, permuted, coeff * Permutation(list(perm)).signature() * scale)
    return Wedge(degree, tuple(sorted(out.items())))


def _to_fraction(value):
    if isinstance(value, FracElement):
        return value
    if isinstance(value, PolyElement):
        return FRACTIONS(embed(value, PARAMETERS))
    return FRACTIONS(to_rational(value))


def _invert(matrix: list) -> list:
    n = len(matrix)
    rows = [
        list(row) + [FRACTIONS.one if i == j else FRACTIONS.zero for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c]), None)
        if pivot is None:
            raise ValueError("Linear map is not invertible")
        rows[c], rows[pivot] = rows[pivot], rows[c]
        inverse = 1 / rows[c][c]
        rows[c] = [x * inverse for x in rows[c]]
        for r in range(n):
            if r != c and rows[r][c]:
                factor = rows[r][c]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[c])]
    return [row[n:] for row in rows]


@dataclass(frozen=True)
class Automorphism:
    """Bracket-preserving invertible linear map.

    ``matrix[i][k]`` is the coefficient of ``X_k`` in the image of ``X_i``;
    entries live in :data:`~qoscillator.algebra.exact.FRACTIONS`. The
    polynomials in ``assumptions`` must not vanish (e.g. ``a1`` for a map
    dividing by ``a1``).
    """

    algebra: LieAlgebra
    matrix: tuple
    inverse: tuple
    assumptions: tuple = ()

    def apply(self, vector: Sequence) -> list:
        n = self.algebra.dimension
        return [
            sum((_to_fraction(vector[i]) * self.matrix[i][k] for i in range(n) if vector[i]),
                FRACTIONS.zero)
            for k in range(n)
        ]

    def apply_tensor(self, tensor: Mapping) -> dict:
        """Apply ``O`` in every slot of a tensor."""
        out = {}
        for key, coeff in tensor.items():
            partial = {(): _to_fraction(coeff)}
            for i in key:
                partial = {
                    prefix + (k,): value * self.matrix[i][k]
                    for prefix, value in partial.items()
                    for k in range(self.algebra.dimension)
                    if self.matrix[i][k]
                }
            for k, value in partial.items():
                accumulate(out, k, value)
        return {k: lower(v) for k, v in out.items()}

    def transform_wedge(self, wedge: Wedge) -> Wedge:
        """``(O(x)O) r`` for an r-matrix (or any wedge)."""
        return Wedge.from_tensor(self.apply_tensor(wedge.to_tensor()), wedge.degree)

    def transform_images(self, images: Sequence[Wedge]) -> tuple:
        """``(O(x)O) . delta . O^-1`` given the images ``delta(X_i)``."""
        moved = [self.apply_tensor(w.to_tensor()) for w in images]
        out = []
        for i in range(self.algebra.dimension):
            total = {}
            for k, tensor in enumerate(moved):
                factor = self.inverse[i][k]
                if not factor:
                    continue
                for key, value in tensor.items():
                    accumulate(total, key, _to_fraction(value) * factor)
            lowered = {k: lower(v) for k, v in total.items()}
            out.append(Wedge.from_tensor(lowered, images[i].degree))
        return tuple(out)


def make_automorphism(
    algebra: LieAlgebra, images: Mapping | Sequence, assumptions: Sequence = ()
) -> Automorphism:
    """Validate a candidate automorphism given by the images of the basis.

    ``images`` is either a square matrix or a mapping from basis names to
    mappings ``{basis name: coefficient}``; missing names map to themselves.

    >>> L = h4()
    >>> swap = {"N": {"N": -1}, "A+": {"A-": 1}, "A-": {"A+": 1}, "M": {"M": -1}}
    >>> make_automorphism(L, swap).matrix[1][2] == 1
    True

    """
    n = algebra.dimension
    if isinstance(images, Mapping):
        one, zero = FRACTIONS.one, FRACTIONS.zero
        matrix = [[one if i == k else zero for k in range(n)] for i in range(n)]
        for name, image in images.items():
            i = algebra.index(name)
            matrix[i] = [FRACTIONS.zero] * n
            for target, coeff in image.items():
                matrix[i][algebra.index(target)] = _to_fraction(coeff)
    else:
        matrix = [[_to_fraction(x) for x in row] for row in images]
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"Expected a {n}x{n} matrix")

    for i, j in combinations(range(n), 2):
        image_of_bracket = [FRACTIONS.zero] * n
        for k, c in algebra.constants[i][j]:
            image_of_bracket = [x + c * y for x, y in zip(image_of_bracket, matrix[k])]
        if algebra.bracket_vectors(matrix[i], matrix[j]) != image_of_bracket:
            raise NotAutomorphismError(
                (i, j), f"Bracket [{algebra.basis[i]}, {algebra.basis[j]}] is not preserved"
            )

    try:
        inverse = _invert(matrix)
    except ValueError as exc:
        raise NotAutomorphismError((), str(exc)) from exc
    return Automorphism(
        algebra,
        tuple(tuple(row) for row in matrix),
        tuple(tuple(row) for row in inverse),
        tuple(assumptions),
    )


def check_and_apply_automorphism(algebra: LieAlgebra, automorphism, target):
    """Transform an r-matrix (a :class:`Wedge`) or a cocommutator family.

    ``automorphism`` may be an :class:`Automorphism` or anything accepted by
    :func:`make_automorphism`; objects carrying ``images`` (cocommutator
    families) are transformed as ``(O(x)O) . delta . O^-1``.
    """
    if not isinstance(automorphism, Automorphism):
        automorphism = make_automorphism(algebra, automorphism)
    elif automorphism.algebra != algebra:
        raise ValueError("Automorphism belongs to a different Lie algebra")
    if isinstance(target, Wedge):
        return automorphism.transform_wedge(target)
    if hasattr(target, "images"):
        return replace(target, images=automorphism.transform_images(target.images))
    return automorphism.transform_images(target)


_BRACKET_HEADER = re.compile(r"^[ \t]*\[\[[ \t]*bracket[ \t]*\]\]", re.MULTILINE)


def _header_position(text: str, nth: int) -> tuple[int, int]:
    for count, match in enumerate(_BRACKET_HEADER.finditer(text)):
        if count == nth:
            start = match.start() + len(match.group(0)) - len(match.group(0).lstrip())
            lineno = text.count("\n", 0, start) + 1
            colno = start - (text.rfind("\n", 0, start) + 1) + 1
            return lineno, colno
    return 1, 1


def parse_lie_algebra(text: str, source: str | None = None) -> LieAlgebra:
    """Read a Lie algebra from TOML text (see the module documentation)."""
    try:
        document = toml.loads(text)
    except toml.TomlDecodeError as exc:
        raise LieAlgebraFileError(exc.msg, exc.lineno, exc.colno, source) from exc

    basis = document.get("basis")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise LieAlgebraFileError("'basis' must be a list of names", source=source)
    if len(set(basis)) != len(basis):
        raise LieAlgebraFileError("repeated basis names", source=source)

    brackets = {}
    for nth, entry in enumerate(document.get("bracket", [])):
        try:
            left, right, result = entry["left"], entry["right"], entry["result"]
            for label in (left, right, *result):
                if label not in basis:
                    raise ValueError(f"unknown basis element {label!r}")
            if left == right and any(to_rational(c) for c in result.values()):
                raise ValueError(f"bracket [{left}, {left}] must vanish")
            expansion = {label: to_rational(c) for label, c in result.items()}
            negated = {label: -c for label, c in expansion.items()}
            if brackets.get((left, right), expansion) != expansion or brackets.get(
                (right, left), negated
            ) != negated:
                raise ValueError(f"bracket [{left}, {right}] given twice inconsistently")
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            lineno, colno = _header_position(text, nth)
            message = f"missing key {exc}" if isinstance(exc, KeyError) else str(exc)
            raise LieAlgebraFileError(message, lineno, colno, source) from exc
        brackets[(left, right)] = expansion

    return make_lie_algebra(basis, brackets, str(document.get("name", "")))


def load_lie_algebra(path) -> LieAlgebra:
    """Read a Lie algebra description from a TOML file."""
    path = Path(path)
    return parse_lie_algebra(path.read_text(), source=str(path))


@cache
def h4() -> LieAlgebra:
    """The oscillator algebra, basis ``(N, A+, A-, M)``."""
    from ..data import load

    return parse_lie_algebra(load.readable("presets", "h4.toml").read_text(), "h4")
