# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
Verification tasks
^^^^^^^^^^^^^^^^^^

Every function here takes the name of its task first and returns a
:class:`~qoscillator.reports.core.Check`. Workflow nodes look them up by
name; all inputs are plain values (orders, counts and seeds) taken from
:mod:`qoscillator.config` by :func:`~qoscillator.workflows.base.init_tasks`.

"""
from __future__ import annotations

from functools import reduce
from operator import mul

import numpy as np
from sympy import QQ

from ..algebra.exact import gen, monic_generators
from ..algebra.lie import Wedge, h4, load_lie_algebra
from ..bialgebras.classify import (
    BRANCHES,
    check_central_shift,
    check_cocycle_renaming,
    check_swap,
    classify_algebra,
    classify_h4,
    exhaustive_check,
    h4_family,
    named_bialgebras,
    schouten_quotients,
)
from ..bialgebras.cocycles import cojacobi_ideal, delta_from_r, first_order_cocommutator
from ..quantum.boson import (
    WeylAlgebra,
    casimir_value,
    expected_casimir,
    realization_check,
    weyl_normal_form,
)
from ..quantum.coordinates import (
    COORDINATE_LETTERS,
    QCoordAlgebra,
    qgroup_coproduct_check,
    quantization_consistency,
    rtt_residual,
    z_part,
)
from ..quantum.hopf import (
    HopfData,
    antipode_antihom,
    antipode_residuals,
    antipode_squared,
    casimir,
    casimir_centrality,
    check_coassoc,
    check_hom,
    classical_limits,
    counit_relations,
    counit_residuals,
    derive_antipode_counit,
    jordanian_hopf,
)
from ..quantum.pbw import (
    GENERATORS,
    RewritingFuelExhausted,
    classical_limit,
    exp_series,
    invert,
    jordanian_coproduct,
    normal_form,
    oscillator_algebra,
    tensor,
)
from ..quantum.rmatrix import (
    build_r,
    check_representation,
    cocommutator_residual,
    controls,
    functoriality_residual,
    intertwine_residual,
    qybe_residual,
    triangularity,
    yang_baxter_residual,
)
from ..quantum.sklyanin import (
    MISMATCH,
    PoissonBracket,
    antisymmetry_residuals,
    candidate_brackets,
    jacobi_residuals,
    quantization_brackets,
    sklyanin_check,
)
from ..reports.core import Check, control_check, residual_check


def _prefixed(prefix: str, residuals) -> dict:
    out = {}
    for key, value in residuals.items():
        out[(prefix,) + (key if isinstance(key, tuple) else (key,))] = value
    return out


def _entries(matrix: np.ndarray) -> dict:
    """Nonzero entries keyed by 1-based ``(row, column)``."""
    return {(i + 1, j + 1): x for (i, j), x in np.ndenumerate(matrix) if x}


def _random_words(seed: int, letters, count: int, length: int) -> list:
    rng = np.random.default_rng(seed)
    words = []
    for _ in range(count):
        size = int(rng.integers(1, length + 1))
        words.append([letters[int(i)] for i in rng.integers(0, len(letters), size=size)])
    return words


def _formatted(table) -> dict:
    return {k: v.format() for k, v in table.items()}


# Classification


def cocycle_space(name: str) -> Check:
    renaming = check_cocycle_renaming()
    return Check(name, tables={"renaming": renaming, "dimension": len(renaming)})


def cojacobi_variety(name: str) -> Check:
    a1, a2, a3, a4 = (gen(f"a{i}") for i in range(1, 5))
    ideal = monic_generators(cojacobi_ideal(h4_family()))
    expected = monic_generators((a1 * a2, a1 * a3, a2 * a4))
    found, wanted = {str(g) for g in ideal}, {str(g) for g in expected}
    residuals = {("unexpected", g): g for g in sorted(found - wanted)}
    residuals.update({("missing", g): g for g in sorted(wanted - found)})
    uncovered = exhaustive_check(cojacobi_ideal(h4_family()))
    residuals.update({("uncovered", str(i)): str(p) for i, p in enumerate(uncovered)})
    return residual_check(name, residuals, {"ideal": sorted(found)})


def branches(name: str) -> Check:
    reports = classify_h4()
    quotients = {
        report.name: {
            ",".join(map(str, key)): str(value)
            for key, value in schouten_quotients(report.name).items()
        }
        for report in reports
    }
    residuals = {}
    if sorted(r.name for r in reports) != sorted(BRANCHES):
        residuals["branches"] = ", ".join(r.name for r in reports)
    residuals.update({(r.name, "coboundary"): "False" for r in reports if not r.coboundary})
    tables = {
        "branches": [r.to_dict() for r in reports],
        "schouten_quotients": quotients,
    }
    return residual_check(name, residuals, tables)


def automorphisms(name: str) -> Check:
    tables = {
        f"central shift {branch}": check_central_shift(branch).format() for branch in ("A", "B")
    }
    tables["swap"] = check_swap()
    return Check(name, tables=tables)


def named_structures(name: str) -> Check:
    return Check(name, tables=named_bialgebras())


def classify_file(name: str, algebra_file: str) -> Check:
    summary = classify_algebra(load_lie_algebra(algebra_file))
    return Check(name, tables=summary)


# PBW engine


def engine_confluence(name: str, order: int, words: int, length: int, seed: int) -> Check:
    """Both rewriting strategies, the closed-form product and the classical limit agree."""
    deformed = oscillator_algebra(order)
    classical = oscillator_algebra(order, deformed=False)
    residuals = {}
    for word in _random_words(seed, GENERATORS, words, length):
        key = " ".join(word)
        left = normal_form(word, deformed, strategy="leftmost")
        residuals[(key, "rightmost")] = normal_form(word, deformed, strategy="rightmost") - left
        product = reduce(mul, (deformed.gen(x) for x in word), deformed.one)
        residuals[(key, "closed form")] = product - left
        residuals[(key, "classical limit")] = classical_limit(left) - normal_form(word, classical)
    return residual_check(name, residuals, {"words": words, "max_length": length})


def engine_termination(name: str, order: int, words: int, length: int, seed: int) -> Check:
    algebra = oscillator_algebra(order)
    residuals = {}
    for word in _random_words(seed, GENERATORS, words, length):
        try:
            normal_form(word, algebra)
        except RewritingFuelExhausted as exc:
            residuals[" ".join(word)] = str(exc)
    return residual_check(name, residuals, {"words": words, "max_length": length})


def engine_associativity(name: str, order: int, cases: int, seed: int) -> Check:
    algebra = oscillator_algebra(order)
    rng = np.random.default_rng(seed)

    def element():
        value = algebra.zero
        for _ in range(2):
            monomial = tuple(int(e) for e in rng.integers(0, 3, size=4))
            value = value + algebra.monomial(monomial, int(rng.integers(-3, 4)))
        return value

    residuals = {}
    for i in range(cases):
        a, b, c = element(), element(), element()
        residuals[(str(i), "associativity")] = (a * b) * c - a * (b * c)
        residuals[(str(i), "distributivity")] = a * (b + c) - (a * b + a * c)
    return residual_check(name, residuals, {"cases": cases})


def engine_series(name: str, order: int) -> Check:
    algebra = oscillator_algebra(order)
    z = gen("z")
    N, AP = algebra.gen("N"), algebra.gen("A+")
    E = exp_series(AP * z)
    return residual_check(
        name,
        {
            "exp(zA+) exp(-zA+) - 1": E * exp_series(AP * -z) - 1,
            "[N, exp(zA+)] - exp(zA+)^2 + exp(zA+)": N * E - E * N - (E * E - E),
            "exp(zA+)^-1 - exp(-zA+)": invert(E) - algebra.exp_a_plus(-1),
        },
    )


# Hopf structure


def hopf_homomorphism(name: str, order: int) -> Check:
    return residual_check(name, check_hom(jordanian_hopf(order)))


def hopf_coassociativity(name: str, order: int) -> Check:
    return residual_check(name, check_coassoc(jordanian_hopf(order)))


def hopf_antipode(name: str, order: int) -> Check:
    """Derived counit and antipode, both axioms, and their compatibility with the relations."""
    data = derive_antipode_counit(jordanian_hopf(order))
    residuals = {}
    residuals.update(_prefixed("counit", counit_residuals(data)))
    residuals.update(_prefixed("antipode", antipode_residuals(data)))
    residuals.update(_prefixed("anti-homomorphism", antipode_antihom(data)))
    residuals.update(_prefixed("counit relation", counit_relations(data)))
    tables = {
        "counit": {k: str(v) for k, v in data.counit.items()},
        "antipode": _formatted(data.antipode),
        "antipode squared minus identity": _formatted(antipode_squared(data)),
    }
    return residual_check(name, residuals, tables)


def hopf_primitive_control(name: str, order: int) -> Check:
    """A primitive ``Delta(A-)`` must break the homomorphism property."""
    algebra = oscillator_algebra(order)
    coproduct = jordanian_coproduct(algebra)
    AM = algebra.gen("A-")
    coproduct["A-"] = tensor(algebra.one, AM) + tensor(AM, algebra.one)
    return control_check(name, check_hom(HopfData(algebra, coproduct)))


def hopf_casimir(name: str, order: int) -> Check:
    algebra = oscillator_algebra(order)
    C = casimir(algebra)
    return residual_check(name, casimir_centrality(C), {"casimir": C.format()})


def hopf_covariance(name: str, order: int) -> Check:
    """The structure stays a Hopf algebra when ``z`` is rescaled to ``lam z``."""
    data = jordanian_hopf(order, scale="lam")
    algebra = data.algebra
    q = gen("lam") * gen("z")
    N, AP = algebra.gen("N"), algebra.gen("A+")
    # (exp(q A+) - 1)/q summed term by term
    term = expected = AP
    for k in range(2, order + 2):
        term = (term * AP).scale(q * QQ(1, k))
        expected = expected + term
    residuals = {
        ("parameter", "q - lam z"): algebra.q - q,
        ("relation", "N,A+"): N * AP - AP * N - expected,
    }
    residuals.update(_prefixed("homomorphism", check_hom(data)))
    residuals.update(_prefixed("coassociativity", check_coassoc(data)))
    residuals.update(_prefixed("Casimir", casimir_centrality(casimir(algebra))))
    return residual_check(name, residuals)


def hopf_classical_limits(name: str, order: int) -> Check:
    return residual_check(name, classical_limits(jordanian_hopf(order)))


def hopf_first_order(name: str, order: int) -> Check:
    """``(Delta - sigma Delta) mod z^2`` is the coboundary of ``z N ^ A+``."""
    algebra = h4()
    family = first_order_cocommutator(jordanian_coproduct(oscillator_algebra(order)), algebra)
    expected = delta_from_r(algebra, Wedge.from_dict(2, {(0, 1): gen("z")}))
    residuals = {x: family.image(x) - expected.image(x) for x in algebra.basis}
    return residual_check(name, residuals, {"cocommutator": family.format()})


# Universal R-matrix


def rmatrix_universal(name: str, order: int) -> Check:
    R = build_r(order)
    algebra = R.algebra
    N, AP = algebra.gen("N"), algebra.gen("A+")
    first = (tensor(N, AP) - tensor(AP, N)).scale(gen("z"))
    residuals = {
        "quantum Yang-Baxter": qybe_residual(R),
        "R21 R - 1": triangularity(R),
        "order z part": R.value.part(1) - first,
    }
    return residual_check(name, residuals, {"order z part": R.value.part(1).format()})


def rmatrix_intertwining(name: str, order: int) -> Check:
    R = build_r(order)
    coproduct = jordanian_coproduct(R.algebra)
    residuals = _prefixed("intertwining", intertwine_residual(R, coproduct))
    residuals.update(_prefixed("cocommutator", cocommutator_residual(R, coproduct)))
    return residual_check(name, residuals)


def rmatrix_controls(name: str, order: int) -> Check:
    """The sign-flipped product must fail Yang-Baxter; the factor-swapped one is reported."""
    variants = controls(oscillator_algebra(order))
    swapped = yang_baxter_residual(variants["factor-swapped"])
    flipped = yang_baxter_residual(variants["sign-flipped"])
    report = "vanishes" if not swapped else f"nonzero from order z^{swapped.valuation()}"
    return control_check(
        name,
        {"sign-flipped": flipped},
        {"factor-swapped Yang-Baxter residual": report},
    )


def rmatrix_matrices(name: str, order: int) -> Check:
    results = check_representation(order)
    represented = {f"{i},{j}": str(x) for (i, j), x in _entries(results["(D (x) D)(R)"]).items()}
    return Check(name, tables={"(D (x) D)(R) nonzero entries": represented})


def rmatrix_functoriality(name: str, order: int) -> Check:
    R = build_r(order)
    return residual_check(name, _entries(functoriality_residual(R.value)))


# Quantum group


def frt_relations(name: str) -> Check:
    return residual_check(name, _entries(rtt_residual()))


def frt_commuting_control(name: str) -> Check:
    """Commuting ``a+`` and ``a-`` break the RTT relations, at first order only."""
    residual = _entries(rtt_residual(QCoordAlgebra(commuting=True)))
    check = control_check(name, residual)
    classical = {k: z_part(v, 0) for k, v in residual.items() if z_part(v, 0)}
    if classical:
        check.status = "FAIL"
        check.error = f"Commuting control is nonzero at order z^0 at {sorted(classical)}"
    return check


def frt_coordinate_hopf(name: str) -> Check:
    return residual_check(name, qgroup_coproduct_check())


def frt_classical_coordinates(name: str) -> Check:
    """At ``z = 0`` the coordinates commute and keep their Hopf structure."""
    algebra = QCoordAlgebra(deformation=0)
    residuals = _prefixed("hopf", qgroup_coproduct_check(algebra))
    for x in COORDINATE_LETTERS:
        for y in COORDINATE_LETTERS:
            X, Y = algebra.gen(x), algebra.gen(y)
            residuals[("commutator", x, y)] = X * Y - Y * X
    return residual_check(name, residuals)


def frt_confluence(name: str, words: int, length: int, seed: int) -> Check:
    algebra = QCoordAlgebra()
    rng = np.random.default_rng(seed)
    residuals = {}
    for word in _random_words(seed, COORDINATE_LETTERS, words, length):
        key = " ".join(word)
        left = algebra.normal_form(word, strategy="leftmost")
        residuals[(key, "rightmost")] = algebra.normal_form(word, strategy="rightmost") - left
        residuals[(key, "random")] = algebra.normal_form(word, strategy="random", rng=rng) - left
    return residual_check(name, residuals, {"words": words, "max_length": length})


# Sklyanin bracket


def poisson_structure(name: str) -> Check:
    bracket = PoissonBracket(candidate_brackets())
    residuals = _prefixed("antisymmetry", antisymmetry_residuals(bracket))
    residuals.update(_prefixed("jacobi", jacobi_residuals(bracket)))
    tables = {",".join(pair): str(value) for pair, value in candidate_brackets().items()}
    return residual_check(name, residuals, {"brackets": tables})


def sklyanin_bracket(name: str) -> Check:
    """Entrywise comparison, up to the recorded global sign."""
    result = sklyanin_check()
    if result.status == MISMATCH:
        check = residual_check(name, _entries(result.residual))
    else:
        check = Check(name)
    check.tables = result.to_dict()
    return check


def quantization(name: str) -> Check:
    return residual_check(name, quantization_consistency(quantization_brackets()))


# Boson realization


def boson_realization(name: str, order: int) -> Check:
    residuals = _prefixed("deformed", realization_check(order))
    residuals.update(
        _prefixed("classical", realization_check(order, deformed=False, beta=0, delta=1))
    )
    return residual_check(name, residuals)


def boson_casimir(name: str, order: int) -> Check:
    value = casimir_value(order)
    expected = value.algebra.scalar_element(expected_casimir())
    return residual_check(name, {"casimir": value - expected}, {"casimir": value.format()})


def weyl_engine(name: str, order: int, words: int, length: int, seed: int) -> Check:
    algebra = WeylAlgebra(order)
    residuals = {}
    for word in _random_words(seed, algebra.letters, words, length):
        product = reduce(mul, (algebra.gen(x) for x in word), algebra.one)
        residuals[" ".join(word)] = weyl_normal_form(word, algebra) - product
    return residual_check(name, residuals, {"words": words, "max_length": length})
