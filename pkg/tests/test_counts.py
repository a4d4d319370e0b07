from fractions import Fraction

import pytest

from curvecount import bundles, chow, counts
from curvecount.counts import (
    DEGENERATE_CONIC_ASSUMPTION,
    DegreeMismatchError,
    HypersurfaceProblem,
    conic_obstruction,
    conic_space,
    count_conics,
    count_curves,
    count_lines,
    curve_plane_degree,
    dimension_ledger,
    incidence_class,
    incidence_from_universal_curve,
    line_obstruction,
    line_space,
)


def test_problem_validation():
    with pytest.raises(ValueError):
        HypersurfaceProblem(4, 5, 3)
    with pytest.raises(ValueError):
        HypersurfaceProblem(4, 5, 1, 1)
    with pytest.raises(ValueError):
        HypersurfaceProblem(4, 1, 2)
    with pytest.raises(ValueError):
        HypersurfaceProblem(1, 5, 1)


def test_spaces():
    assert line_space(4) == chow.grassmannian(2, 5)
    hilb = conic_space(4)
    assert hilb.base == chow.grassmannian(3, 5)
    assert hilb.dim == 11
    assert conic_space(5).dim == 14


def test_obstruction_ranks_balance_dimensions():
    # finite counts need rank(obstruction) + insertion degree = dim(moduli)
    assert bundles.rank(line_obstruction(5), line_space(4)) == line_space(4).dim
    sextic = conic_obstruction(6)
    assert bundles.rank(sextic, conic_space(5)) == conic_space(5).dim - 1


@pytest.mark.parametrize("curve_degree", [1, 2])
def test_incidence_matches_universal_curve_pushforward(curve_degree):
    space = line_space(5) if curve_degree == 1 else conic_space(5)
    assert incidence_from_universal_curve(5, curve_degree) == incidence_class(
        space, curve_degree
    )


@pytest.mark.parametrize("curve_degree,expected", [(1, 1), (2, 2)])
def test_universal_curve_has_the_right_fiber_degree(curve_degree, expected):
    assert curve_plane_degree(5, curve_degree) == expected
    assert curve_plane_degree(4, curve_degree) == expected


def test_incidence_class_needs_matching_space():
    with pytest.raises(chow.SpaceMismatchError):
        incidence_class(conic_space(5), 1)
    with pytest.raises(chow.SpaceMismatchError):
        incidence_class(line_space(5), 2)


@pytest.mark.parametrize("backend", ["symbolic", "bott"])
def test_classical_counts(backend):
    assert count_curves(HypersurfaceProblem(3, 3, 1), backend) == 27
    assert count_curves(HypersurfaceProblem(4, 5, 1), backend) == 2875
    assert count_curves(HypersurfaceProblem(4, 5, 2), backend) == 609250


@pytest.mark.parametrize("backend", ["symbolic", "bott"])
def test_sextic_fourfold_counts(backend):
    lines = HypersurfaceProblem(5, 6, 1, 2)
    conics = HypersurfaceProblem(5, 6, 2, 2)
    assert count_lines(lines, backend) == 60480
    assert count_conics(conics, backend) == 440884080


def test_counts_are_integers():
    for problem in (
        HypersurfaceProblem(3, 3, 1),
        HypersurfaceProblem(4, 5, 2),
        HypersurfaceProblem(5, 6, 2, 2),
    ):
        assert count_curves(problem).denominator == 1


def test_count_helpers_check_curve_degree():
    with pytest.raises(ValueError):
        count_lines(HypersurfaceProblem(4, 5, 2))
    with pytest.raises(ValueError):
        count_conics(HypersurfaceProblem(4, 5, 1))


def test_dimension_deficit_is_reported():
    # quintic threefold lines need no incidence condition; demanding one
    # leaves the integrand one short of top degree
    with pytest.raises(DegreeMismatchError) as err:
        count_curves(HypersurfaceProblem(4, 5, 1, 2))
    assert "1" in str(err.value)


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        count_curves(HypersurfaceProblem(3, 3, 1), "numeric")


def test_ledger_entries_all_pass():
    entries = dimension_ledger()
    names = [e.name for e in entries]
    assert len(names) == len(set(names))
    assert len(entries) >= 10
    for entry in entries:
        assert entry.passed, entry.name
        assert entry.computed == entry.expected


def test_degenerate_locus_codimensions():
    by_name = {e.name: e for e in dimension_ledger()}
    moduli_with_incidence = by_name["conic_incidence_dim"].computed
    assert by_name["double_line_incidence_dim"].computed < moduli_with_incidence
    assert by_name["line_pair_incidence_dim"].computed < moduli_with_incidence
    assert by_name["generic_conic_family_dim"].computed == 1


def test_degenerate_conic_assumption_is_stated():
    assert "excess" in DEGENERATE_CONIC_ASSUMPTION
    assert "double lines" in DEGENERATE_CONIC_ASSUMPTION
