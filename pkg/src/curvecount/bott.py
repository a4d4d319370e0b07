"""Torus fixed-point integration on Grassmannians and projective bundles.

A torus acts on the ambient n-space with distinct integer weights.  Fixed
points of Gr(k, n) are the k-element coordinate subsets; a projective bundle
adds one fixed point per eigenline of the fiber at each fixed point below,
which requires the fiber weights there to be pairwise distinct.  When they
are not, the weight vector is inadmissible and a retry with fresh weights is
signalled.

The integral of a supported integrand is the exact rational sum over fixed
points of (numerator weights) / (product of tangent weights).  Supported
numerator atoms are rational constants, sigma_1 (lifted as c1 of the
tautological quotient), zeta (lifted as minus the weight of the chosen
eigenline), and Chern or Euler factors of bundle expressions.  General
Schubert classes have no lift here; requesting one is an unsupported
expression, not a wrong answer.

This module deliberately shares no ring arithmetic with the symbolic Chow
backend, so agreement between the two is a real cross-check.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from math import prod

from . import expr as ex
from .bundles import (
    BundleExpr,
    Dual,
    InvalidBundleError,
    RelO,
    Sym,
    TautQuot,
    TautSub,
    TensorLine,
    Trivial,
    WhitneyQuotient,
)
from .chow import Grassmannian, ProjBundle, Space
from .symfunc import elementary_symmetric, sym_power_roots


class WeightCollisionError(RuntimeError):
    """The weight vector degenerates a fixed-point fiber; retry with fresh weights."""


class UnsupportedExpressionError(ValueError):
    """The integrand has no equivariant lift in this backend."""


def weight_search(seed: int, n: int) -> tuple[int, ...]:
    """Deterministic candidate weight vectors: seed 0 is the ladder 0..n-1,
    larger seeds draw distinct pseudo-random integers."""
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    if n < 1:
        raise ValueError("need at least one weight")
    if seed == 0:
        return tuple(range(n))
    rng = random.Random(seed)
    return tuple(rng.sample(range(1, 10**6), n))


def ambient_size(space: Space) -> int:
    """Number of torus weights needed: the n of the bottom Grassmannian."""
    while isinstance(space, ProjBundle):
        space = space.base
    if not isinstance(space, Grassmannian):
        raise UnsupportedExpressionError(f"unsupported space {space!r}")
    return space.n


def fixed_points(space: Space, weights: tuple[int, ...]) -> list:
    """Isolated fixed points: coordinate subsets, extended fiberwise on towers."""
    if isinstance(space, Grassmannian):
        from itertools import combinations

        if len(set(weights)) != len(weights):
            raise WeightCollisionError("ambient weights must be distinct")
        return [tuple(c) for c in combinations(range(space.n), space.k)]
    pts = []
    for bp in fixed_points(space.base, weights):
        fiber = bundle_weights(space.bundle, space.base, bp, weights)
        if len(set(fiber)) != len(fiber):
            raise WeightCollisionError(
                f"fiber weights collide at base point {bp!r}: {sorted(fiber)}"
            )
        pts.extend((bp, idx) for idx in range(len(fiber)))
    return pts


def bundle_weights(expr: BundleExpr, space: Space, pt, weights) -> list:
    """Multiset of equivariant weights of a bundle expression at a fixed point."""
    if isinstance(expr, TautSub):
        if isinstance(space, ProjBundle):
            return bundle_weights(expr, space.base, pt[0], weights)
        return [weights[a] for a in pt]
    if isinstance(expr, TautQuot):
        if isinstance(space, ProjBundle):
            return bundle_weights(expr, space.base, pt[0], weights)
        return [weights[b] for b in range(space.n) if b not in pt]
    if isinstance(expr, Trivial):
        return [0] * expr.rank
    if isinstance(expr, Dual):
        return [-w for w in bundle_weights(expr.arg, space, pt, weights)]
    if isinstance(expr, Sym):
        ws = bundle_weights(expr.arg, space, pt, weights)
        return [
            sum(m * w for m, w in zip(mono, ws))
            for mono in sym_power_roots(expr.degree, len(ws))
        ]
    if isinstance(expr, TensorLine):
        (t,) = bundle_weights(expr.line, space, pt, weights)
        return [w + t for w in bundle_weights(expr.arg, space, pt, weights)]
    if isinstance(expr, WhitneyQuotient):
        top = Counter(bundle_weights(expr.top, space, pt, weights))
        sub = Counter(bundle_weights(expr.sub, space, pt, weights))
        top.subtract(sub)
        if any(v < 0 for v in top.values()):
            raise UnsupportedExpressionError(
                "quotient weights are not contained in the ambient bundle"
            )
        return list(top.elements())
    if isinstance(expr, RelO):
        if not isinstance(space, ProjBundle):
            raise InvalidBundleError("relative O(k) needs a projective bundle")
        fiber = bundle_weights(space.bundle, space.base, pt[0], weights)
        # the sub-line has the eigenvalue itself; O(k) is its (-k)-th power
        return [-expr.twist * fiber[pt[1]]]
    raise InvalidBundleError(f"not a bundle expression: {expr!r}")


def tangent_weights(space: Space, pt, weights) -> list:
    if isinstance(space, Grassmannian):
        inside = set(pt)
        return [
            weights[b] - weights[a]
            for a in pt
            for b in range(space.n)
            if b not in inside
        ]
    base_pt, idx = pt
    fiber = bundle_weights(space.bundle, space.base, base_pt, weights)
    rel = [fiber[m] - fiber[idx] for m in range(len(fiber)) if m != idx]
    if any(w == 0 for w in rel):
        raise WeightCollisionError("degenerate fiber tangent weight")
    return tangent_weights(space.base, base_pt, weights) + rel


def evaluate_at(node: ex.ExprAst, space: Space, pt, weights) -> Fraction:
    """Equivariant value of an integrand at one fixed point."""
    if isinstance(node, ex.Rational):
        return node.value
    if isinstance(node, ex.Schubert):
        if isinstance(space, ProjBundle):
            return evaluate_at(node, space.base, pt[0], weights)
        if node.parts == ():
            return Fraction(1)
        if node.parts == (1,):
            inside = set(pt)
            return Fraction(
                sum(weights[b] for b in range(space.n) if b not in inside)
            )
        raise UnsupportedExpressionError(
            f"no equivariant lift for sigma_{list(node.parts)}; only sigma_1 is supported"
        )
    if isinstance(node, ex.Zeta):
        if not isinstance(space, ProjBundle):
            raise UnsupportedExpressionError("zeta only lives on a projective bundle")
        fiber = bundle_weights(space.bundle, space.base, pt[0], weights)
        return Fraction(-fiber[pt[1]])
    if isinstance(node, ex.ChernClass):
        ws = bundle_weights(node.bundle, space, pt, weights)
        if node.index > len(ws):
            return Fraction(0)
        return Fraction(elementary_symmetric(ws, node.index))
    if isinstance(node, ex.EulerClass):
        return Fraction(prod(bundle_weights(node.bundle, space, pt, weights), start=1))
    if isinstance(node, ex.Power):
        return evaluate_at(node.base, space, pt, weights) ** node.exponent
    if isinstance(node, ex.Product):
        out = Fraction(1)
        for f in node.factors:
            out *= evaluate_at(f, space, pt, weights)
        return out
    if isinstance(node, ex.Sum):
        out = Fraction(0)
        for t in node.terms:
            out += evaluate_at(t, space, pt, weights)
        return out
    raise TypeError(f"not an integrand expression: {node!r}")


def _integrate_once(space: Space, integrand: ex.ExprAst, weights) -> Fraction:
    total = Fraction(0)
    for pt in fixed_points(space, weights):
        numerator = evaluate_at(integrand, space, pt, weights)
        if numerator == 0:
            continue
        total += numerator / prod(tangent_weights(space, pt, weights), start=1)
    return total


def bott_integrate(
    space: Space,
    integrand: ex.ExprAst,
    weights: tuple[int, ...] | None = None,
    max_seed: int = 64,
) -> Fraction:
    """Localized integral of `integrand` over `space`.

    With explicit `weights` a single evaluation runs and a degenerate choice
    raises WeightCollisionError so the caller can retry.  Without weights the
    seed ladder is walked until two admissible vectors agree; disagreement
    means the integrand has no well-defined ordinary integral (for instance
    its degree exceeds the dimension) and is reported as unsupported.
    """
    if weights is not None:
        return _integrate_once(space, integrand, tuple(weights))
    n = ambient_size(space)
    values = []
    for seed in range(max_seed):
        try:
            values.append(_integrate_once(space, integrand, weight_search(seed, n)))
        except WeightCollisionError:
            continue
        if len(values) == 2:
            break
    if len(values) < 2:
        raise WeightCollisionError(
            f"no two admissible weight vectors among seeds 0..{max_seed - 1}"
        )
    if values[0] != values[1]:
        raise UnsupportedExpressionError(
            "localization result depends on the weights; integrand is not a "
            "well-defined top-degree class"
        )
    return values[0]
