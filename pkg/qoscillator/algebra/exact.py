# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
Exact arithmetic for every computation in the package.

* Rationals are elements of :data:`sympy.QQ`.
* Polynomials are sparse :class:`~sympy.polys.rings.PolyElement` objects.
  The classification parameters, the deformation parameter and the
  realization constants share one ring, :data:`PARAMETERS`.
* Power series in the deformation parameter are ordinary polynomials of a
  ring carrying ``z``, truncated by a :class:`SeriesRing`.
* Linear algebra: :func:`nullspace` over the rationals, :func:`solve_affine`
  over a polynomial ring (fraction-free, reporting the pivots it assumed
  nonzero), and :func:`reduce_by` for principal-ideal membership.

No floating point is used anywhere.

"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from sympy import QQ, Rational
from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement, PolyRing, ring

PARAMETER_NAMES = (
    "a1",
    "a2",
    "a3",
    "a4",
    "a5",
    "a6",
    "z",
    "beta",
    "delta",
    "alpha_p",
    "alpha_m",
    "beta_p",
    "beta_m",
    "vartheta",
    "xi",
    "lam",
)

PARAMETERS = ring(",".join(PARAMETER_NAMES), QQ)[0]
"""Polynomial ring over QQ shared by classification parameters and z."""

FRACTIONS = PARAMETERS.to_field()
"""Rational functions in :data:`PARAMETERS` (automorphisms such as N + (a5/a1) M)."""


class UnsolvableError(ValueError):
    """A linear system has no solution for generic parameter values."""


class NotMultipleError(ArithmeticError):
    """A polynomial does not lie in the principal ideal of another."""

    def __init__(self, dividend, divisor):
        self.dividend = dividend
        self.divisor = divisor
        super().__init__(f"{dividend} is not a multiple of {divisor}")


class ValuationError(ArithmeticError):
    """A series has no z-valuation large enough for the requested operation."""


def symbol_names(base) -> tuple[str, ...]:
    """Names of the generators of a polynomial ring or field."""
    return tuple(str(s) for s in base.symbols)


def gen(name: str, base=PARAMETERS):
    """Return the generator of ``base`` called ``name``.

    >>> gen("a1") == PARAMETERS.gens[0]
    True

    """
    try:
        return base.gens[symbol_names(base).index(name)]
    except ValueError:
        raise ValueError(f"No symbol {name!r} in {base}") from None


def to_rational(value):
    """Convert an int, string (``"3/4"``) or rational to a :data:`~sympy.QQ` element."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, (str, float)):
        return QQ.from_sympy(Rational(str(value)))
    return QQ.convert(value)


def embed(p: PolyElement, target: PolyRing) -> PolyElement:
    """Move ``p`` into ``target``, matching generators by name."""
    if p.ring == target:
        return p
    source = symbol_names(p.ring)
    names = symbol_names(target)
    terms = {}
    for monom, coeff in p.items():
        exps = [0] * target.ngens
        for name, e in zip(source, monom):
            if not e:
                continue
            if name not in names:
                raise ValueError(f"Symbol {name!r} does not exist in {target}")
            exps[names.index(name)] = e
        terms[tuple(exps)] = coeff
    return target.from_dict(terms)


def substitute(p: PolyElement, values: Mapping[str, object]) -> PolyElement:
    """Simultaneously replace named generators of ``p`` by constants or polynomials."""
    base = p.ring
    names = symbol_names(base)
    slots = {}
    for name, value in values.items():
        slots[names.index(name)] = (
            embed(value, base) if isinstance(value, PolyElement) else base(to_rational(value))
        )

    result = base.zero
    for monom, coeff in p.items():
        rest = list(monom)
        term = base.ground_new(coeff)
        for i, value in slots.items():
            if rest[i]:
                term *= value ** rest[i]
                rest[i] = 0
        if term:
            result += term * base.from_dict({tuple(rest): QQ(1)})
    return result


def to_poly(value, base: PolyRing = PARAMETERS) -> PolyElement:
    """Convert a rational, polynomial or polynomial-valued fraction into ``base``."""
    if isinstance(value, PolyElement):
        return embed(value, base)
    if isinstance(value, FracElement):
        quotient, remainder = value.numer.div(value.denom)
        if remainder:
            raise NotMultipleError(value.numer, value.denom)
        return embed(quotient, base)
    return base(to_rational(value))


def lower(value):
    """Return a polynomial when ``value`` is one, else leave the fraction alone."""
    if isinstance(value, FracElement):
        try:
            return to_poly(value, value.field.ring)
        except NotMultipleError:
            return value
    return value


def ring_of(values: Iterable, default: PolyRing = PARAMETERS) -> PolyRing:
    """Pick the polynomial ring of the first polynomial in ``values``."""
    for value in values:
        if isinstance(value, PolyElement):
            return value.ring
    return default


def accumulate(out: dict, key, value):
    """Add ``value`` at ``key`` of a sparse map, dropping the key when it cancels."""
    total = out.get(key, 0) + value
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def _format_coefficient(coeff) -> str:
    text = str(coeff)
    if text == "1":
        return ""
    if isinstance(coeff, FracElement) or (isinstance(coeff, PolyElement) and len(coeff) > 1):
        return f"({text}) "
    return text + " "


def format_terms(terms: Iterable) -> str:
    """Render ``(label, coefficient)`` pairs as a signed sum.

    >>> a1 = gen("a1")
    >>> format_terms([("N^A+", 2 * a1), ("A+^M", -a1 - 1), ("1", QQ(-1))])
    '2*a1 N^A+ - (a1 + 1) A+^M - 1'

    """
    text = ""
    for label, coeff in terms:
        negative = str(coeff).startswith("-")
        magnitude = -coeff if negative else coeff
        if label == "1":
            body = _format_coefficient(magnitude).strip() or "1"
        else:
            body = _format_coefficient(magnitude) + label
        if text:
            text += (" - " if negative else " + ") + body
        else:
            text = ("-" if negative else "") + body
    return text or "0"


@dataclass(frozen=True)
class SeriesRing:
    """Power series in ``variable`` with coefficients in the other symbols of ``base``.

    Elements are plain polynomials of ``base``; arithmetic through this object
    discards every term of ``variable``-degree above ``order``.
    """

    base: PolyRing
    order: int
    variable: str = "z"

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"Truncation order must be non-negative, got {self.order}")
        object.__setattr__(self, "_index", symbol_names(self.base).index(self.variable))

    @property
    def z(self) -> PolyElement:
        return self.base.gens[self._index]

    @property
    def zero(self) -> PolyElement:
        return self.base.zero

    @property
    def one(self) -> PolyElement:
        return self.base.one

    def __call__(self, value) -> PolyElement:
        if isinstance(value, PolyElement):
            return self.truncate(embed(value, self.base))
        return self.base(to_rational(value))

    def gen(self, name: str) -> PolyElement:
        return gen(name, self.base)

    def degree(self, monom) -> int:
        return monom[self._index]

    def truncate(self, p: PolyElement) -> PolyElement:
        i, n = self._index, self.order
        if all(m[i] <= n for m in p):
            return p
        return self.base.from_dict({m: c for m, c in p.items() if m[i] <= n})

    def valuation(self, p: PolyElement) -> int:
        """Lowest power of the variable in ``p`` (``order + 1`` for zero)."""
        if not p:
            return self.order + 1
        return min(m[self._index] for m in p)

    def mul(self, a: PolyElement, b: PolyElement) -> PolyElement:
        if self.valuation(a) + self.valuation(b) > self.order:
            return self.base.zero
        return self.truncate(a * b)

    def coefficient(self, p: PolyElement, k: int) -> PolyElement:
        """Coefficient of ``variable**k`` as an element free of the variable."""
        i = self._index
        return self.base.from_dict(
            {m[:i] + (0,) + m[i + 1 :]: c for m, c in p.items() if m[i] == k}
        )

    def part(self, p: PolyElement, k: int) -> PolyElement:
        """Terms of ``p`` of exact degree ``k`` in the variable."""
        return self.base.from_dict({m: c for m, c in p.items() if m[self._index] == k})

    def exp(self, s: PolyElement) -> PolyElement:
        """Truncated exponential of a series of valuation at least one."""
        if not s:
            return self.base.one
        v = self.valuation(s)
        if v < 1:
            raise ValuationError("exp needs a series without constant term in %s" % self.variable)
        result = term = self.base.one
        for k in range(1, self.order // v + 1):
            term = self.mul(term, s) * QQ(1, k)
            result += term
        return result

    def exp_coefficients(self, scale=1) -> list:
        """Coefficients ``(scale*z)**k / k!`` for ``k = 0..order``."""
        q = self.z * to_rational(scale) if not isinstance(scale, PolyElement) else scale
        term = self.base.one
        coefficients = [term]
        for k in range(1, self.order + 1):
            term = self.mul(term, q) * QQ(1, k)
            coefficients.append(term)
        return coefficients

    def rescale(self, p: PolyElement, name: str) -> PolyElement:
        """Substitute ``variable -> name * variable`` (deformation-parameter covariance)."""
        return substitute(p, {self.variable: self.z * self.gen(name)})


@dataclass(frozen=True)
class SolutionSet:
    """Affine solution set ``particular + span(kernel)``.

    ``assumptions`` lists the (monic) polynomials that were used as pivots and
    are therefore assumed nonzero.
    """

    particular: tuple
    kernel: tuple = ()
    assumptions: tuple = ()

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    def contains(self, vector: Sequence) -> bool:
        """Whether ``vector`` belongs to the affine set."""
        base = ring_of(list(vector) + list(self.particular))
        difference = [to_poly(v, base) - to_poly(p, base) for v, p in zip(vector, self.particular)]
        if not any(difference):
            return True
        if not self.kernel:
            return False
        columns = [[to_poly(k[i], base) for k in self.kernel] for i in range(len(difference))]
        try:
            solve_affine(columns, difference, base=base)
        except UnsolvableError:
            return False
        return True


def _reduced_echelon(rows: list, ncols: int) -> tuple[list, list]:
    """Gauss-Jordan elimination over the rationals."""
    rows = [list(row) for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inverse = QQ(1) / rows[r][c]
        rows[r] = [x * inverse for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> SolutionSet:
    """Exact kernel basis of a rational matrix.

    >>> nullspace([[0]]).dimension
    1
    >>> nullspace([[1, 0], [0, 1]]).dimension
    0

    """
    rows = [[to_rational(x) for x in row] for row in matrix]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    echelon, pivots = _reduced_echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free:
        vector = [QQ(0)] * ncols
        vector[f] = QQ(1)
        for row, c in zip(echelon, pivots):
            vector[c] = -row[f]
        kernel.append(tuple(vector))
    return SolutionSet(tuple([QQ(0)] * ncols), tuple(kernel))


def _divide(numerator: PolyElement, denominator: PolyElement):
    if denominator.is_ground:
        return numerator * (QQ(1) / denominator.LC)
    quotient, remainder = numerator.div(denominator)
    if not remainder:
        return quotient
    field = denominator.ring.to_field()
    return field(numerator) / field(denominator)


def solve_affine(
    matrix: Sequence[Sequence],
    rhs: Sequence,
    base: PolyRing | None = None,
    ncols: int | None = None,
):
    """Solve ``matrix @ x = rhs`` for generic values of the parameters.

    Fraction-free Gauss-Jordan elimination over the polynomial ring: rows are
    combined as ``p*row - f*pivot_row`` so nothing is divided until back
    substitution. Constant pivots are preferred; every non-constant pivot is
    recorded in :attr:`SolutionSet.assumptions`. Solution entries are
    polynomials when the division is exact, rational functions otherwise.

    >>> a1, a4 = gen("a1"), gen("a4")
    >>> solution = solve_affine([[a1]], [a1 * a4])
    >>> solution.particular == (a4,) and solution.assumptions == (a1,)
    True

    """
    if base is None:
        base = ring_of([x for row in matrix for x in row] + list(rhs))
    nrows = len(rhs)
    if ncols is None:
        ncols = len(matrix[0]) if nrows else 0
    rows = [[to_poly(x, base) for x in row] + [to_poly(b, base)] for row, b in zip(matrix, rhs)]

    pivots, assumptions = [], []
    r = 0
    for c in range(ncols):
        candidates = [i for i in range(r, nrows) if rows[i][c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: (not rows[i][c].is_ground, len(rows[i][c]), i))
        rows[r], rows[best] = rows[best], rows[r]
        pivot = rows[r][c]
        if pivot.is_ground:
            rows[r] = [x * (QQ(1) / pivot.LC) for x in rows[r]]
            pivot = base.one
        elif pivot.monic() not in assumptions:
            assumptions.append(pivot.monic())
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [pivot * x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break

    for i in range(r, nrows):
        if rows[i][-1]:
            raise UnsolvableError(f"Inconsistent equation 0 = {rows[i][-1]}")

    particular = [base.zero] * ncols
    for row, c in zip(rows, pivots):
        particular[c] = _divide(row[-1], row[c])
    kernel = []
    for f in (c for c in range(ncols) if c not in pivots):
        vector = [base.zero] * ncols
        vector[f] = base.one
        for row, c in zip(rows, pivots):
            vector[c] = _divide(-row[f], row[c])
        kernel.append(tuple(vector))
    return SolutionSet(tuple(particular), tuple(kernel), tuple(assumptions))


def reduce_by(p: PolyElement, q: PolyElement) -> PolyElement:
    """Return ``p / q`` when ``q`` divides ``p`` in the polynomial ring.

    >>> a1, a4, a6 = gen("a1"), gen("a4"), gen("a6")
    >>> reduce_by(4 * a1 * a6 + a4**2, 4 * a1 * a6 + a4**2) == 1
    True

    """
    if not q:
        raise ValueError("Cannot reduce by the zero polynomial")
    if q.ring != p.ring:
        q = embed(q, p.ring)
    quotient, remainder = p.div(q)
    if remainder:
        raise NotMultipleError(p, q)
    return quotient


def monic_generators(polys: Iterable[PolyElement]) -> tuple[PolyElement, ...]:
    """Nonzero polynomials made monic, deduplicated and sorted by their string form."""
    unique = {}
    for p in polys:
        if p:
            m = p.monic()
            unique[str(m)] = m
    return tuple(unique[k] for k in sorted(unique))
