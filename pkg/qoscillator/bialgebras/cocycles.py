# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
Cocommutators, classical r-matrices and their compatibility conditions.

A cocommutator is stored by the images ``delta(X_i)`` of the basis in the
second exterior power. The adjoint action on tensors is the derivation of
:func:`~qoscillator.algebra.lie.adjoint_action`, so the cocycle condition reads::

    delta([X_i, X_j]) = ad_{X_i} delta(X_j) - ad_{X_j} delta(X_i)

and a coboundary has ``delta(X) = ad_X r``.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Mapping, Sequence

from sympy import QQ
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..algebra.exact import (
    PARAMETERS,
    SolutionSet,
    accumulate,
    embed,
    monic_generators,
    nullspace,
    ring_of,
    solve_affine,
    substitute,
    symbol_names,
    to_poly,
)
from ..algebra.lie import LieAlgebra, Wedge, adjoint_action

LOGGER = logging.getLogger("qoscillator.engine")


class ClassificationError(RuntimeError):
    """A recomputed residual that must vanish did not."""


class FirstOrderNotLieWedge(ValueError):
    """The order-z antisymmetrized coproduct is not a wedge of generators."""


@dataclass(frozen=True)
class CocommutatorFamily:
    """A (parametric) linear map ``delta`` from the algebra to its second exterior power."""

    algebra: LieAlgebra
    images: tuple
    parameters: tuple = ()
    ring: PolyRing = PARAMETERS

    def image(self, name) -> Wedge:
        return self.images[self.algebra.index(name)]

    def restrict(self, values: Mapping) -> "CocommutatorFamily":
        """Substitute values for some parameters."""
        images = tuple(
            w.map_coefficients(lambda c: substitute(to_poly(c, self.ring), values))
            for w in self.images
        )
        return replace(
            self, images=images, parameters=tuple(p for p in self.parameters if p not in values)
        )

    def __bool__(self):
        return any(self.images)

    def format(self) -> dict:
        return {name: w.format(self.algebra) for name, w in zip(self.algebra.basis, self.images)}


def _pairs(n: int) -> list:
    return list(combinations(range(n), 2))


def _cocycle_residual_tensors(algebra: LieAlgebra, tensors: Sequence[Mapping]) -> dict:
    residual = {}
    n = algebra.dimension
    for i, j in combinations(range(n), 2):
        out = {}
        for k, c in algebra.bracket(i, j):
            for key, value in tensors[k].items():
                accumulate(out, key, value * c)
        for key, value in adjoint_action(algebra, i, tensors[j]).items():
            accumulate(out, key, -value)
        for key, value in adjoint_action(algebra, j, tensors[i]).items():
            accumulate(out, key, value)
        if out:
            residual[(i, j)] = out
    return residual


def cocycle_residual(family: CocommutatorFamily) -> dict:
    """Nonzero residuals of the cocycle condition, keyed by basis pairs."""
    return _cocycle_residual_tensors(family.algebra, [w.to_tensor() for w in family.images])


def solve_cocycle(algebra: LieAlgebra) -> CocommutatorFamily:
    """Solve the cocycle condition on a general skew-symmetric ansatz.

    The unknowns are the ``n * C(n, 2)`` coefficients of ``delta(X_i)`` on
    the wedges ``X_a^X_b``; their exact rational kernel becomes a family
    with free parameters ``t1, ..., td``.
    """
    n = algebra.dimension
    pairs = _pairs(n)
    ncols = n * len(pairs)
    rows = {}
    for col in range(ncols):
        i, p = divmod(col, len(pairs))
        tensors = [{} for _ in range(n)]
        tensors[i] = Wedge(2, ((pairs[p], QQ(1)),)).to_tensor()
        for pair, tensor in _cocycle_residual_tensors(algebra, tensors).items():
            for key, value in tensor.items():
                rows.setdefault((pair, key), {})[col] = value
    matrix = [[row.get(c, 0) for c in range(ncols)] for _, row in sorted(rows.items())]
    kernel = nullspace(matrix, ncols).kernel

    names = tuple(f"t{s + 1}" for s in range(len(kernel)))
    base = ring(",".join(names), QQ)[0] if names else PARAMETERS
    params = base.gens if names else ()
    images = []
    for i in range(n):
        coefficients = {}
        for p, pair in enumerate(pairs):
            column = i * len(pairs) + p
            value = sum((params[s] * v[column] for s, v in enumerate(kernel)), base.zero)
            if value:
                coefficients[pair] = value
        images.append(Wedge.from_dict(2, coefficients))
    LOGGER.log(15, "Cocycle space of %s has dimension %d", algebra, len(kernel))
    return CocommutatorFamily(algebra, tuple(images), names, base)


def _cyclic_sum(tensor: Mapping) -> dict:
    out = {}
    for (a, b, c), value in tensor.items():
        for key in ((a, b, c), (c, a, b), (b, c, a)):
            accumulate(out, key, value)
    return out


def cojacobi_ideal(family: CocommutatorFamily) -> tuple:
    """Generators of the co-Jacobi conditions.

    Every coefficient of the cyclic sum of ``(delta (x) id) delta(X)``,
    made monic and deduplicated.
    """
    tensors = [w.to_tensor() for w in family.images]
    conditions = []
    for tensor in tensors:
        composed = {}
        for (a, b), value in tensor.items():
            for (c, d), inner in tensors[a].items():
                accumulate(composed, (c, d, b), inner * value)
        conditions.extend(_cyclic_sum(composed).values())
    return monic_generators(to_poly(c, family.ring) for c in conditions)


def delta_from_r(algebra: LieAlgebra, r: Wedge) -> CocommutatorFamily:
    """The coboundary ``delta(X) = [1 (x) X + X (x) 1, r]``."""
    tensor = r.to_tensor()
    images = tuple(
        Wedge.from_tensor(adjoint_action(algebra, i, tensor), 2) for i in range(algebra.dimension)
    )
    base = ring_of([c for _, c in r.terms])
    family = CocommutatorFamily(algebra, images, (), base)
    if cocycle_residual(family):
        raise ClassificationError("Coboundary fails the cocycle condition")
    return family


def wedge_from_vector(algebra: LieAlgebra, vector: Sequence) -> Wedge:
    """Read a coordinate vector over the canonical wedge basis."""
    return Wedge.from_dict(2, {pair: v for pair, v in zip(_pairs(algebra.dimension), vector) if v})


def wedge_to_vector(algebra: LieAlgebra, wedge: Wedge) -> list:
    coefficients = wedge.as_dict()
    return [coefficients.get(pair, 0) for pair in _pairs(algebra.dimension)]


def r_from_delta(algebra: LieAlgebra, family: CocommutatorFamily) -> SolutionSet:
    """Solve ``ad_X r = delta(X)`` for ``r`` in the second exterior power.

    Raises :class:`~qoscillator.algebra.exact.UnsolvableError` when the
    cocommutator is not a coboundary.
    """
    pairs = _pairs(algebra.dimension)
    columns = [
        [adjoint_action(algebra, i, Wedge(2, ((pair, QQ(1)),)).to_tensor()) for pair in pairs]
        for i in range(algebra.dimension)
    ]
    matrix, rhs = [], []
    for i, image in enumerate(family.images):
        target = image.to_tensor()
        keys = sorted(set(target).union(*(set(c) for c in columns[i])))
        for key in keys:
            matrix.append([columns[i][p].get(key, 0) for p in range(len(pairs))])
            rhs.append(to_poly(target.get(key, 0), family.ring))
    return solve_affine(matrix, rhs, base=family.ring, ncols=len(pairs))


def schouten(algebra: LieAlgebra, r: Wedge) -> Wedge:
    """``[[r, r]] = [r12, r13] + [r12, r23] + [r13, r23]`` in the third exterior power."""
    tensor = r.to_tensor()
    out = {}
    for (a, b), x in tensor.items():
        for (c, d), y in tensor.items():
            value = x * y
            for k, s in algebra.bracket(a, c):
                accumulate(out, (k, b, d), value * s)
            for k, s in algebra.bracket(b, c):
                accumulate(out, (a, k, d), value * s)
            for k, s in algebra.bracket(b, d):
                accumulate(out, (a, c, k), value * s)
    return Wedge.from_tensor(out, 3)


def is_ad_invariant(algebra: LieAlgebra, wedge: Wedge) -> bool:
    tensor = wedge.to_tensor()
    return all(not adjoint_action(algebra, x, tensor) for x in range(algebra.dimension))


def first_order_cocommutator(coproducts: Mapping, algebra: LieAlgebra) -> CocommutatorFamily:
    """Read ``(Delta - sigma Delta) mod z^2`` as a cocommutator.

    ``coproducts`` maps basis names to two-fold tensor elements of a
    :class:`~qoscillator.quantum.pbw.OscillatorAlgebra`; the factor ``z`` is kept.
    """
    images = []
    for name in algebra.basis:
        value = coproducts[name]
        series, factor = value.series, value.factor
        skew = value - value.flip()
        tensor = {}
        for (left, right), coeff in skew.terms.items():
            if series.coefficient(coeff, 0):
                raise FirstOrderNotLieWedge(f"Coproduct of {name} is not cocommutative at z^0")
            first = series.part(coeff, 1)
            if not first:
                continue
            labels = factor.generator_of(left), factor.generator_of(right)
            if None in labels:
                raise FirstOrderNotLieWedge(
                    f"Order-z term of {name} involves {factor.format_monomial(left)}"
                    f" (x) {factor.format_monomial(right)}"
                )
            key = (algebra.index(labels[0]), algebra.index(labels[1]))
            accumulate(tensor, key, embed(first, PARAMETERS))
        images.append(Wedge.from_tensor(tensor, 2))
    return CocommutatorFamily(algebra, tuple(images))


def _linear_coefficients(p: PolyElement, names: Sequence[str]) -> list:
    variables = symbol_names(p.ring)
    out = [QQ(0)] * len(names)
    for monom, coeff in p.items():
        if sum(monom) != 1:
            raise ValueError(f"{p} is not linear in the template parameters")
        out[names.index(variables[monom.index(1)])] = coeff
    return out


def parameter_correspondence(
    family: CocommutatorFamily, template: CocommutatorFamily, names: Sequence[str] | None = None
) -> dict:
    """Express the parameters of a linear ``template`` through those of ``family``.

    Returns ``{template parameter: polynomial in the family ring}`` such that
    the substituted template equals the family coefficient for coefficient.
    """
    names = tuple(names or template.parameters)
    matrix, rhs = [], []
    for mine, theirs in zip(family.images, template.images):
        keys = sorted(set(mine.as_dict()) | set(theirs.as_dict()))
        for key in keys:
            matrix.append(_linear_coefficients(to_poly(theirs.coefficient(*key)), names))
            rhs.append(to_poly(mine.coefficient(*key), family.ring))
    solution = solve_affine(matrix, rhs, base=family.ring)
    values = [to_poly(v, family.ring) for v in solution.particular]
    for row, target in zip(matrix, rhs):
        if sum((v * c for v, c in zip(values, row)), family.ring.zero) != target:
            raise ClassificationError("Parameter correspondence does not reproduce the family")
    return dict(zip(names, values))
