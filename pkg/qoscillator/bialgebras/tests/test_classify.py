"""Classification of the Lie bialgebra structures on h4."""
import pytest

from qoscillator.algebra.exact import gen, substitute
from qoscillator.algebra.lie import load_lie_algebra, make_lie_algebra
from qoscillator.bialgebras import classify
from qoscillator.bialgebras.classify import (
    BRANCHES,
    ReductionFailure,
    check_central_shift,
    check_cocycle_renaming,
    check_identification,
    check_swap,
    classify_algebra,
    classify_h4,
    enumerate_branches,
    exhaustive_check,
    named_bialgebras,
    h4_family,
    r_matrix,
    restrict,
    triangularity_conditions,
)
from qoscillator.bialgebras.cocycles import cojacobi_ideal, delta_from_r, schouten
from qoscillator.data import load as load_data

a1, a2, a3, a4, a5, a6 = (gen(f'a{i}') for i in range(1, 7))


def test_enumerate_branches():
    branches = enumerate_branches(cojacobi_ideal(h4_family()))
    assert branches == [
        (('a1',), ('a2', 'a3')),
        (('a2',), ('a1', 'a4')),
        ((), ('a1', 'a2')),
    ]


def test_enumerate_branches_rejects_polynomials():
    with pytest.raises(ValueError):
        enumerate_branches([a1 + a2])


def test_exhaustive_check():
    assert exhaustive_check(cojacobi_ideal(h4_family())) == []


@pytest.mark.parametrize('branch', ['A', 'B', 'C'])
def test_branch_r_matrix(h4_algebra, branch):
    family = restrict(h4_family(), branch)
    assert delta_from_r(h4_algebra, r_matrix(branch)).images == family.images


@pytest.mark.parametrize(
    'branch,polynomial',
    [
        ('A', 4 * a1 * a6 + a4**2),
        ('B', 4 * a2 * a5 + a3**2),
        ('C', a3 + a4),
    ],
)
def test_triangularity(h4_algebra, branch, polynomial):
    assert triangularity_conditions(branch) == polynomial
    # the r-matrix becomes triangular on the condition
    bracket = schouten(h4_algebra, r_matrix(branch))
    assert bracket
    if branch == 'C':
        assert not bracket.map_coefficients(lambda c: substitute(c, {'a4': -a3}))


def test_triangularity_reduction_failure(monkeypatch):
    monkeypatch.setitem(classify.TRIANGULARITY, 'A', a1 + a2)
    with pytest.raises(ReductionFailure):
        triangularity_conditions('A')


def test_identifications():
    alpha_p, alpha_m, beta_p, beta_m, vartheta, xi = (
        gen(n) for n in ('alpha_p', 'alpha_m', 'beta_p', 'beta_m', 'vartheta', 'xi')
    )
    expected = {
        'A': -4 * alpha_p * beta_m + 4 * vartheta**2,
        'B': -4 * alpha_m * beta_p + 4 * vartheta**2,
        'C': -2 * xi,
    }
    for branch, polynomial in expected.items():
        assert check_identification(branch)['triangularity'] == str(polynomial)


def test_classify_h4():
    reports = classify_h4()
    assert [r.name for r in reports] == ['A', 'B', 'C']
    for report in reports:
        assert report.coboundary
        assert report.ad_invariant
        assert set(report.zero) == set(BRANCHES[report.name]['zero'])
        summary = report.to_dict()
        assert summary['branch'] == report.name
        assert summary['cocommutator']['M'] == '0'


def test_cocycle_renaming():
    renaming = check_cocycle_renaming()
    assert sorted(renaming) == ['a1', 'a2', 'a3', 'a4', 'a5', 'a6']


def test_swap():
    result = check_swap()
    assert result['map'] == {
        'a1': 'a2',
        'a2': 'a1',
        'a3': '-a4',
        'a4': '-a3',
        'a5': 'a6',
        'a6': 'a5',
    }
    assert result['ideal'] == ['a1*a2', 'a1*a3', 'a2*a4']
    assert result['branch_B_to_A']['a2'] == '0'


@pytest.mark.parametrize('branch,removed', [('A', 'a5'), ('B', 'a6')])
def test_central_shift(branch, removed):
    shifted = check_central_shift(branch)
    for wedge in shifted.images:
        for _, coeff in wedge.terms:
            assert removed not in str(coeff)


def test_named_bialgebras():
    named = named_bialgebras()
    assert named['jordanian']['r_matrix'] == 'z N^A+'
    assert named['jordanian']['branch'] == 'A'
    assert named['standard']['branch'] == 'C'
    assert named['standard']['cocommutator']['A+'] == 'z A+^M'
    assert named['standard']['schouten'] != '0'


def test_classify_one_dimensional():
    summary = classify_algebra(load_lie_algebra(load_data.cached('tests', 'one_dim.toml')))
    assert summary['cocycle_dimension'] == 0
    assert summary['coboundary']
    assert summary['r_matrix'] == '0'


def test_classify_abelian():
    summary = classify_algebra(load_lie_algebra(load_data.cached('tests', 'abelian2.toml')))
    assert summary['cocycle_dimension'] == 2
    assert not summary['coboundary']
    assert summary['r_matrix'] is None


def test_classify_h4_file(h4_algebra):
    summary = classify_algebra(h4_algebra)
    assert summary['cocycle_dimension'] == 6
    assert summary['cojacobi_ideal']


def test_classify_rejects_large_algebras():
    with pytest.raises(ValueError):
        classify_algebra(make_lie_algebra([f'X{i}' for i in range(7)]))
