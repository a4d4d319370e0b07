from fractions import Fraction
from math import comb

import pytest

from curvecount import bott, expr as ex
from curvecount.bott import (
    UnsupportedExpressionError,
    WeightCollisionError,
    bott_integrate,
    fixed_points,
    tangent_weights,
    weight_search,
)
from curvecount.bundles import Dual, RelO, Sym, TautSub, TensorLine, WhitneyQuotient
from curvecount.chow import ProjBundle, grassmannian, integrate
from curvecount.counts import (
    HypersurfaceProblem,
    conic_space,
    count_integrand,
    line_space,
)

GR24 = grassmannian(2, 4)
GR36 = grassmannian(3, 6)
CONICS = conic_space(5)

S1_4 = ex.Power(ex.Schubert((1,)), 4)


def test_weight_search_ladder_and_determinism():
    assert weight_search(0, 4) == (0, 1, 2, 3)
    w = weight_search(3, 6)
    assert w == weight_search(3, 6)
    assert len(set(w)) == 6
    assert all(x >= 1 for x in w)
    assert weight_search(3, 6) != weight_search(4, 6)


def test_fixed_points_of_grassmannian():
    pts = fixed_points(GR24, weight_search(0, 4))
    assert len(pts) == comb(4, 2)
    assert all(len(p) == 2 for p in pts)
    assert len(fixed_points(GR36, weight_search(1, 6))) == comb(6, 3)


def test_fixed_points_of_tower_add_an_eigenline():
    weights = weight_search(1, 6)
    pts = fixed_points(CONICS, weights)
    # each of the 20 planes carries 6 monomial conics
    assert len(pts) == comb(6, 3) * 6


def test_ladder_weights_collide_on_the_conic_tower():
    # with weights 0..5 two quadric monomials on the plane {0,1,2} share
    # the eigenvalue 2, so the fiber weights are not distinct
    with pytest.raises(WeightCollisionError):
        fixed_points(CONICS, weight_search(0, 6))


def test_sigma1_power_matches_symbolic():
    assert bott_integrate(GR24, S1_4) == 2
    weights = weight_search(2, 4)
    assert bott_integrate(GR24, S1_4, weights=weights) == 2


def test_weight_independence_across_explicit_seeds():
    integrand = count_integrand(HypersurfaceProblem(4, 5, 1))
    space = line_space(4)
    values = {
        bott_integrate(space, integrand, weights=weight_search(seed, 5))
        for seed in (1, 2, 3)
    }
    assert values == {Fraction(2875)}


def test_cubic_surface_lines_by_localization():
    integrand = count_integrand(HypersurfaceProblem(3, 3, 1))
    assert bott_integrate(line_space(3), integrand) == 27


def test_auto_mode_skips_colliding_seeds():
    # seed 0 collides on the conic tower; auto retry must still answer
    integrand = ex.EulerClass(
        WhitneyQuotient(
            Sym(6, Dual(TautSub())),
            TensorLine(Sym(4, Dual(TautSub())), RelO(-1)),
        )
    )
    full = ex.Product((integrand, ex.Sum((ex.Zeta(), ex.Product((ex.rational(2), ex.Schubert((1,))))))))
    value = bott_integrate(CONICS, full)
    assert value == 440884080


def test_general_schubert_class_is_rejected():
    with pytest.raises(UnsupportedExpressionError):
        bott_integrate(GR24, ex.Schubert((2, 2)))


def test_below_top_degree_localizes_to_zero():
    # equivariant pushforward of a class below top degree vanishes
    assert bott_integrate(GR24, ex.Power(ex.Schubert((1,)), 3)) == 0


def test_above_top_degree_integrand_is_rejected():
    # sigma_1^5 exceeds the dimension of Gr(2,4); the sum then depends on
    # the weights and the driver refuses to answer
    with pytest.raises(UnsupportedExpressionError):
        bott_integrate(GR24, ex.Power(ex.Schubert((1,)), 5))


def test_tangent_weight_count_matches_dimension():
    weights = weight_search(1, 6)
    for pt in fixed_points(CONICS, weights):
        assert len(tangent_weights(CONICS, pt, weights)) == CONICS.dim


def test_euler_class_localizes_to_weight_products():
    # integral of e(S^dual) over Gr(1,2): the line bundle O(1) on P^1 has
    # one zero, and the two fixed-point terms must assemble it
    p1 = grassmannian(1, 2)
    integrand = ex.EulerClass(Dual(TautSub()))
    assert bott_integrate(p1, integrand) == 1


def test_explicit_collision_surfaces_as_error():
    with pytest.raises(WeightCollisionError):
        bott_integrate(
            CONICS,
            ex.Power(ex.Zeta(), 14),
            weights=weight_search(0, 6),
        )
