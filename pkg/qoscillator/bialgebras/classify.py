# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
Classification of the Lie bialgebra structures on the oscillator algebra.

The general cocycle on ``h4`` is the six-parameter family::

    delta(N)  = a1 N^A+ + a2 N^A- + a5 A+^M + a6 A-^M
    delta(A+) = a2 N^M + a2 A+^A- + a3 A+^M
    delta(A-) = a1 N^M - a1 A+^A- + a4 A-^M
    delta(M)  = 0

Its co-Jacobi ideal is generated by ``a1 a2``, ``a1 a3`` and ``a2 a4``, which
splits the variety into three branches:

* ``A``: ``a1 != 0``, ``a2 = a3 = 0``;
* ``B``: ``a2 != 0``, ``a1 = a4 = 0``;
* ``C``: ``a1 = a2 = 0``.

Each branch is coboundary; its r-matrix, Schouten bracket and triangularity
condition are recomputed and cross-checked in :func:`classify_h4`.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cache
from itertools import product

from sympy import QQ

from ..algebra.exact import (
    FRACTIONS,
    PARAMETERS,
    NotMultipleError,
    SolutionSet,
    UnsolvableError,
    gen,
    nullspace,
    reduce_by,
    substitute,
    symbol_names,
    to_poly,
)
from ..algebra.lie import (
    LieAlgebra,
    Wedge,
    check_and_apply_automorphism,
    h4,
    make_automorphism,
    skew_part,
)
from .cocycles import (
    ClassificationError,
    CocommutatorFamily,
    cocycle_residual,
    cojacobi_ideal,
    delta_from_r,
    is_ad_invariant,
    parameter_correspondence,
    r_from_delta,
    schouten,
    solve_cocycle,
    wedge_from_vector,
    wedge_to_vector,
)

LOGGER = logging.getLogger("qoscillator.checks")

FAMILY_PARAMETERS = ("a1", "a2", "a3", "a4", "a5", "a6")
MAX_DIMENSION = 6

BRANCHES = {
    "A": {"nonzero": ("a1",), "zero": ("a2", "a3")},
    "B": {"nonzero": ("a2",), "zero": ("a1", "a4")},
    "C": {"nonzero": (), "zero": ("a1", "a2")},
}
"""Zero/nonzero pattern of each branch of the co-Jacobi variety."""

a1, a2, a3, a4, a5, a6 = (gen(name) for name in FAMILY_PARAMETERS)
alpha_p, alpha_m, beta_p, beta_m, vartheta, xi = (
    gen(name) for name in ("alpha_p", "alpha_m", "beta_p", "beta_m", "vartheta", "xi")
)

IDENTIFICATIONS = {
    "A": {"a1": alpha_p, "a4": 2 * vartheta, "a5": beta_p, "a6": -beta_m},
    "B": {"a2": -alpha_m, "a3": -2 * vartheta, "a5": beta_p, "a6": -beta_m},
    "C": {"a3": -vartheta - xi, "a4": vartheta - xi, "a5": beta_p, "a6": -beta_m},
}
"""Reference parametrizations of the three branches."""

TRIANGULARITY = {
    "A": 4 * a1 * a6 + a4**2,
    "B": 4 * a2 * a5 + a3**2,
    "C": a3 + a4,
}
"""Polynomial whose vanishing makes the branch r-matrix triangular."""

N, AP, AM, M = range(4)


class ReductionFailure(ArithmeticError):
    """A Schouten coefficient is not a multiple of the triangularity polynomial."""

    def __init__(self, coefficient, polynomial):
        self.coefficient = coefficient
        self.polynomial = polynomial
        super().__init__(f"Schouten coefficient {coefficient} is not a multiple of {polynomial}")


def _wedge(*terms) -> Wedge:
    return Wedge.from_dict(2, {(i, j): c for i, j, c in terms})


@cache
def h4_family() -> CocommutatorFamily:
    """The six-parameter cocycle family on ``h4`` (module documentation)."""
    images = (
        _wedge((N, AP, a1), (N, AM, a2), (AP, M, a5), (AM, M, a6)),
        _wedge((N, M, a2), (AP, AM, a2), (AP, M, a3)),
        _wedge((N, M, a1), (AP, AM, -a1), (AM, M, a4)),
        Wedge(2),
    )
    return CocommutatorFamily(h4(), images, FAMILY_PARAMETERS, PARAMETERS)


def restrict(family: CocommutatorFamily, branch: str) -> CocommutatorFamily:
    """Impose the vanishing conditions of a branch."""
    return family.restrict({name: 0 for name in BRANCHES[branch]["zero"]})


def r_matrix(branch: str) -> Wedge:
    """Classical r-matrix generating the branch."""
    half = QQ(1, 2)
    common = _wedge((AP, M, a5), (AM, M, -a6))
    if branch == "A":
        return common + _wedge((N, AP, a1), (N, M, a4 * half), (AP, AM, -a4 * half))
    if branch == "B":
        return common + _wedge((N, AM, -a2), (N, M, -a3 * half), (AP, AM, -a3 * half))
    if branch == "C":
        return common + _wedge((N, M, (a4 - a3) * half), (AP, AM, -(a4 + a3) * half))
    raise KeyError(f"Unknown branch {branch!r}")


def identification(branch: str) -> dict:
    """Branch parameters as polynomials in the reference parameters."""
    return dict(IDENTIFICATIONS[branch])


def check_identification(branch: str) -> dict:
    """Verify the reference parametrization of a branch.

    The substitution must be an invertible linear change of the free branch
    parameters and must commute with the coboundary map. Returns the
    triangularity polynomial rewritten in the reference parameters.
    """
    values = identification(branch)
    free = [p for p in FAMILY_PARAMETERS if p not in BRANCHES[branch]["zero"]]
    if sorted(values) != sorted(free):
        raise ClassificationError(f"Identification of branch {branch} misses parameters")
    references = sorted({s for v in values.values() for s in _variables(v)})
    matrix = [[v.coeff(gen(ref)) for ref in references] for v in values.values()]
    if len(references) != len(free) or nullspace(matrix).dimension:
        raise ClassificationError(f"Identification of branch {branch} is not invertible")

    substituted_r = r_matrix(branch).map_coefficients(lambda c: substitute(c, values))
    expected = restrict(h4_family(), branch).restrict(values)
    if delta_from_r(h4(), substituted_r).images != expected.images:
        raise ClassificationError(f"Identification of branch {branch} breaks the coboundary")
    return {
        "parameters": {k: str(v) for k, v in values.items()},
        "triangularity": str(substitute(TRIANGULARITY[branch], values)),
    }


def _variables(p) -> list:
    names = symbol_names(p.ring)
    return [names[i] for monom in p.monoms() for i, e in enumerate(monom) if e]


def schouten_quotients(branch: str) -> dict:
    """Divide every Schouten coefficient of the branch r-matrix by its condition."""
    polynomial = TRIANGULARITY[branch]
    quotients = {}
    for key, coeff in schouten(h4(), r_matrix(branch)).terms:
        try:
            quotients[key] = reduce_by(to_poly(coeff), polynomial)
        except NotMultipleError as exc:
            raise ReductionFailure(coeff, polynomial) from exc
    return quotients


def triangularity_conditions(branch: str):
    """The polynomial whose vanishing makes the branch triangular.

    Raises :class:`ReductionFailure` if some Schouten coefficient is not a
    multiple of it.
    """
    schouten_quotients(branch)
    return TRIANGULARITY[branch]


def _variables_of_monomial(p, names) -> set:
    monom = p.monoms()[0]
    return {names[i] for i, e in enumerate(monom) if e}


def enumerate_branches(ideal, order=FAMILY_PARAMETERS) -> list:
    """Split a monomial ideal into zero/nonzero branches.

    Branching variable: the one occurring in most pending generators (ties
    resolved by ``order``); the nonzero case comes first. Returns a list of
    ``(nonzero, zero)`` pairs of sorted tuples.
    """
    generators = []
    for g in ideal:
        if len(g) != 1:
            raise ValueError(f"Only monomial ideals can be split, got {g}")
        generators.append(_variables_of_monomial(g, symbol_names(g.ring)))

    branches = []

    def _split(nonzero: frozenset, zero: frozenset):
        pending = []
        changed = True
        while changed:
            changed, pending = False, []
            for variables in generators:
                if variables & zero:
                    continue
                undecided = variables - nonzero
                if not undecided:
                    return
                if len(undecided) == 1:
                    zero = zero | undecided
                    changed = True
                    break
                pending.append(undecided)
        if not pending:
            branches.append((tuple(sorted(nonzero)), tuple(sorted(zero))))
            return
        counts = {}
        for variables in pending:
            for v in variables:
                counts[v] = counts.get(v, 0) + 1
        pivot = min(counts, key=lambda v: (-counts[v], order.index(v)))
        _split(nonzero | {pivot}, zero)
        _split(nonzero, zero | {pivot})

    _split(frozenset(), frozenset())
    return branches


def branch_name(nonzero, zero) -> str:
    for name, pattern in BRANCHES.items():
        if set(pattern["nonzero"]) == set(nonzero) and set(pattern["zero"]) == set(zero):
            return name
    raise ClassificationError(f"Unexpected branch nonzero={nonzero}, zero={zero}")


def exhaustive_check(ideal, variables=("a1", "a2", "a3", "a4")) -> list:
    """Zero/nonzero patterns on the co-Jacobi variety not covered by any branch."""
    generators = [_variables_of_monomial(g, symbol_names(g.ring)) for g in ideal]
    uncovered = []
    for pattern in product((False, True), repeat=len(variables)):
        zero = {v for v, nz in zip(variables, pattern) if not nz}
        nonzero = set(variables) - zero
        if not all(g & zero for g in generators):
            continue
        if not any(
            set(b["zero"]) <= zero and set(b["nonzero"]) <= nonzero for b in BRANCHES.values()
        ):
            uncovered.append({"nonzero": sorted(nonzero), "zero": sorted(zero)})
    return uncovered


def central_shift(branch: str):
    """The automorphism ``N -> N + (a5/a1) M`` (branch A) or ``N -> N + (a6/a2) M`` (B)."""
    numerator, denominator = {"A": (a5, a1), "B": (a6, a2)}[branch]
    return make_automorphism(
        h4(),
        {"N": {"N": 1, "M": FRACTIONS(numerator) / FRACTIONS(denominator)}},
        assumptions=(denominator,),
    )


def check_central_shift(branch: str) -> CocommutatorFamily:
    """Remove ``a5`` (branch A) or ``a6`` (branch B) by a central shift of ``N``."""
    removed = {"A": "a5", "B": "a6"}[branch]
    family = restrict(h4_family(), branch)
    transformed = check_and_apply_automorphism(h4(), central_shift(branch), family)
    if transformed.images != family.restrict({removed: 0}).images:
        raise ClassificationError(f"Central shift does not remove {removed} on branch {branch}")
    return transformed


SWAP = {"N": {"N": -1}, "A+": {"A-": 1}, "A-": {"A+": 1}, "M": {"M": -1}}
"""Automorphism exchanging the creation and annihilation generators."""


def check_swap() -> dict:
    """Transport the six-parameter family along the swap automorphism.

    Returns the induced parameter map, the transformed co-Jacobi ideal and
    the image of branch B (which lands in branch A).
    """
    swap = make_automorphism(h4(), SWAP)
    if swap.inverse != swap.matrix:
        raise ClassificationError("Swap automorphism is not an involution")
    transformed = check_and_apply_automorphism(h4(), swap, h4_family())
    correspondence = parameter_correspondence(transformed, h4_family())
    ideal = cojacobi_ideal(transformed)
    if set(map(str, ideal)) != set(map(str, cojacobi_ideal(h4_family()))):
        raise ClassificationError("Swap automorphism changes the co-Jacobi ideal")

    on_b = {
        k: substitute(v, {p: 0 for p in BRANCHES["B"]["zero"]})
        for k, v in correspondence.items()
    }
    lands_in = [
        name
        for name, pattern in BRANCHES.items()
        if all(not on_b[p] for p in pattern["zero"]) and all(on_b[p] for p in pattern["nonzero"])
    ]
    if "A" not in lands_in:
        raise ClassificationError("Swap automorphism does not map branch B into branch A")
    return {
        "map": {k: str(v) for k, v in correspondence.items()},
        "ideal": [str(g) for g in ideal],
        "branch_B_to_A": {k: str(v) for k, v in on_b.items()},
    }


@dataclass
class BranchReport:
    """Everything recomputed about one branch of the classification."""

    name: str
    nonzero: tuple
    zero: tuple
    cocommutator: CocommutatorFamily
    r_matrix: Wedge
    r_solution: SolutionSet
    schouten: Wedge
    ad_invariant: bool
    triangularity: object
    identification: dict = field(default_factory=dict)
    coboundary: bool = True

    def to_dict(self) -> dict:
        algebra = self.cocommutator.algebra
        return {
            "branch": self.name,
            "nonzero": list(self.nonzero),
            "zero": list(self.zero),
            "cocommutator": self.cocommutator.format(),
            "r_matrix": self.r_matrix.format(algebra),
            "r_kernel_dimension": self.r_solution.dimension,
            "pivot_assumptions": [str(p) for p in self.r_solution.assumptions],
            "schouten": self.schouten.format(algebra),
            "schouten_ad_invariant": self.ad_invariant,
            "triangularity": str(self.triangularity),
            "identification": self.identification,
            "coboundary": self.coboundary,
        }


def check_cocycle_renaming() -> dict:
    """Match the computed cocycle space of ``h4`` with the six-parameter family."""
    computed = solve_cocycle(h4())
    if len(computed.parameters) != len(FAMILY_PARAMETERS):
        raise ClassificationError(
            f"Cocycle space of h4 has dimension {len(computed.parameters)}, expected 6"
        )
    renaming = parameter_correspondence(computed, h4_family())
    matrix = [[v.coeff(t) for t in computed.ring.gens] for v in renaming.values()]
    if nullspace(matrix).dimension:
        raise ClassificationError("Parameter renaming is not invertible")
    return {k: str(v) for k, v in renaming.items()}


def _branch_report(name: str, nonzero, zero) -> BranchReport:
    algebra = h4()
    family = restrict(h4_family(), name)
    if cocycle_residual(family):
        raise ClassificationError(f"Branch {name} fails the cocycle condition")
    if family.image("M"):
        raise ClassificationError(f"delta(M) does not vanish on branch {name}")
    vanishing = {"A": "A+", "B": "A-"}.get(name)
    if vanishing and family.image(vanishing):
        raise ClassificationError(f"delta({vanishing}) does not vanish on branch {name}")

    try:
        solution = r_from_delta(algebra, family)
    except UnsolvableError as exc:
        raise ClassificationError(f"Branch {name} is not coboundary") from exc
    r = r_matrix(name)
    if not solution.contains(wedge_to_vector(algebra, r)):
        raise ClassificationError(f"r-matrix of branch {name} is not a solution")
    if delta_from_r(algebra, r).images != family.images:
        raise ClassificationError(f"r-matrix of branch {name} does not reproduce the family")

    bracket = schouten(algebra, r)
    invariant = is_ad_invariant(algebra, bracket)
    if not invariant:
        raise ClassificationError(f"Schouten bracket of branch {name} is not ad-invariant")
    LOGGER.log(15, "Branch %s: r = %s", name, r.format(algebra))
    return BranchReport(
        name=name,
        nonzero=tuple(nonzero),
        zero=tuple(zero),
        cocommutator=family,
        r_matrix=r,
        r_solution=solution,
        schouten=bracket,
        ad_invariant=invariant,
        triangularity=triangularity_conditions(name),
        identification=check_identification(name),
    )


def classify_h4() -> list:
    """Run the full classification on ``h4``; any nonzero residual raises."""
    family = h4_family()
    if cocycle_residual(family):
        raise ClassificationError("Six-parameter family fails the cocycle condition")
    ideal = cojacobi_ideal(family)
    reports = []
    for nonzero, zero in enumerate_branches(ideal):
        name = branch_name(nonzero, zero)
        reports.append(_branch_report(name, nonzero, zero))
        LOGGER.log(25, "Branch %s classified (coboundary)", name)
    return reports


def named_bialgebras() -> dict:
    """Locate the standard and the Jordanian bialgebras in the classification."""
    algebra = h4()
    z = gen("z")
    standard_tensor = {(N, M): -z, (M, N): -z, (AM, AP): 2 * z}
    standard_r = skew_part(standard_tensor)
    standard = restrict(h4_family(), "C").restrict({"a5": 0, "a6": 0, "a3": z, "a4": z})
    if delta_from_r(algebra, standard_r).images != standard.images:
        raise ClassificationError("Standard bialgebra is not the expected branch C member")
    if standard_r != r_matrix("C").map_coefficients(
        lambda c: substitute(c, {"a5": 0, "a6": 0, "a3": z, "a4": z})
    ):
        raise ClassificationError("Standard r-matrix is not the branch C r-matrix")

    jordanian_r = _wedge((N, AP, z))
    values = {"a1": z, "a2": 0, "a3": 0, "a4": 0, "a5": 0, "a6": 0}
    jordanian = h4_family().restrict(values)
    if delta_from_r(algebra, jordanian_r).images != jordanian.images:
        raise ClassificationError("Jordanian bialgebra is not the expected branch A member")
    if schouten(algebra, jordanian_r):
        raise ClassificationError("Jordanian r-matrix is not triangular")
    return {
        "standard": {
            "branch": "C",
            "r_matrix": standard_r.format(algebra),
            "cocommutator": standard.format(),
            "schouten": schouten(algebra, standard_r).format(algebra),
        },
        "jordanian": {
            "branch": "A",
            "r_matrix": jordanian_r.format(algebra),
            "cocommutator": jordanian.format(),
        },
    }


def classify_algebra(algebra: LieAlgebra) -> dict:
    """Generic classification summary for an algebra read from a file."""
    if algebra.dimension > MAX_DIMENSION:
        raise ValueError(
            f"Classification is limited to dimension {MAX_DIMENSION}, got {algebra.dimension}"
        )
    family = solve_cocycle(algebra)
    if cocycle_residual(family):
        raise ClassificationError("Solved cocycle family fails the cocycle condition")
    ideal = cojacobi_ideal(family)
    try:
        solution = r_from_delta(algebra, family)
        r = wedge_from_vector(algebra, solution.particular)
        coboundary = True
    except UnsolvableError:
        solution, r, coboundary = None, None, False
    return {
        "algebra": str(algebra),
        "dimension": algebra.dimension,
        "cocycle_dimension": len(family.parameters),
        "cocommutator": family.format(),
        "cojacobi_ideal": [str(g) for g in ideal],
        "coboundary": coboundary,
        "r_matrix": r.format(algebra) if r is not None else None,
        "pivot_assumptions": [str(p) for p in solution.assumptions] if solution else [],
    }
