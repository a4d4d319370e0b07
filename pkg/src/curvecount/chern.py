"""Chern, Segre, and Euler classes of bundle expressions.

Evaluation rules:

- tautological classes on Gr(k, n): c_i(S) = (-1)^i sigma_{(1^i)},
  c_i(Q) = sigma_{(i)};
- duals flip the sign of odd classes;
- symmetric powers go through Chern roots: the product of the root linear
  forms is expanded and rewritten in elementary symmetric generators, which
  are then substituted by the Chern classes of the argument;
- twists by a line bundle use c_k(E ox L) =
  sum_i binom(rank E - i, k - i) c_i(E) c1(L)^(k-i);
- quotients divide total Chern classes as truncated power series;
- the relative O(k) of a projective bundle has c1 = k * zeta.

Everything on a projective bundle that does not mention the relative O(k) is
evaluated on the base and pulled back, so the root expansion always runs at
the smallest possible truncation.  Results are cached per (expression, space).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from . import bundles, chow, symfunc
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
from .chow import ChowElement, Grassmannian, ProjBundle, Space


@lru_cache(maxsize=None)
def chern_classes(expr: BundleExpr, space: Space) -> tuple[ChowElement, ...]:
    """The tuple (c_0, ..., c_rank) of `expr` on `space`."""
    r = bundles.rank(expr, space)

    if isinstance(space, ProjBundle) and not bundles.mentions_rel(expr):
        return tuple(
            chow.pullback(space, c) for c in chern_classes(expr, space.base)
        )

    if isinstance(expr, TautSub):
        assert isinstance(space, Grassmannian)
        return tuple(
            (-1) ** i * chow.sigma(space, (1,) * i) for i in range(r + 1)
        )
    if isinstance(expr, TautQuot):
        assert isinstance(space, Grassmannian)
        return tuple(chow.sigma(space, (i,)) for i in range(r + 1))
    if isinstance(expr, Trivial):
        return (chow.unit(space),) + (chow.zero(space),) * r
    if isinstance(expr, Dual):
        inner = chern_classes(expr.arg, space)
        return tuple((-1) ** i * c for i, c in enumerate(inner))
    if isinstance(expr, Sym):
        return _sym_classes(expr.degree, expr.arg, space)
    if isinstance(expr, TensorLine):
        return _twist_classes(expr.arg, expr.line, space)
    if isinstance(expr, WhitneyQuotient):
        return _quotient_classes(expr.top, expr.sub, space)
    if isinstance(expr, RelO):
        return (chow.unit(space), expr.twist * chow.zeta(space))
    raise InvalidBundleError(f"not a bundle expression: {expr!r}")


def euler_class(expr: BundleExpr, space: Space) -> ChowElement:
    """Top Chern class."""
    return chern_classes(expr, space)[-1]


def total_chern(expr: BundleExpr, space: Space) -> ChowElement:
    out = chow.zero(space)
    for c in chern_classes(expr, space):
        out = out + c
    return out


def segre_classes(expr: BundleExpr, space: Space, up_to: int) -> tuple[ChowElement, ...]:
    """(s_0, ..., s_up_to), the inverse power series of the total Chern class."""
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    cs = chern_classes(expr, space)
    out = [chow.unit(space)]
    for j in range(1, up_to + 1):
        acc = chow.zero(space)
        for i in range(1, min(j, len(cs) - 1) + 1):
            acc = acc + cs[i] * out[j - i]
        out.append(-acc)
    return tuple(out)


def _sym_classes(d: int, arg: BundleExpr, space: Space) -> tuple[ChowElement, ...]:
    ra = bundles.rank(arg, space)
    rk = comb(ra + d - 1, d)
    arg_cs = chern_classes(arg, space)
    poly = symfunc.expand_linear_product(
        symfunc.sym_power_roots(d, ra), ra, space.dim
    )
    out = [chow.zero(space) for _ in range(rk + 1)]
    out[0] = chow.unit(space)
    powers: dict[tuple[int, int], ChowElement] = {}

    def power(i: int, p: int) -> ChowElement:
        key = (i, p)
        if key not in powers:
            powers[key] = arg_cs[i] ** p
        return powers[key]

    for ex, coeff in poly.coeffs.items():
        deg = sum((i + 1) * e for i, e in enumerate(ex))
        if deg == 0:
            continue
        term = chow.unit(space)
        for i, e in enumerate(ex):
            if e:
                term = term * power(i + 1, e)
        out[deg] = out[deg] + coeff * term
    return tuple(out)


def _twist_classes(arg: BundleExpr, line: BundleExpr, space: Space) -> tuple[ChowElement, ...]:
    if bundles.rank(line, space) != 1:
        raise InvalidBundleError("tensor twist must be a line bundle")
    re = bundles.rank(arg, space)
    arg_cs = chern_classes(arg, space)
    ell = chern_classes(line, space)[1]
    ell_pows = [chow.unit(space)]
    for _ in range(re):
        ell_pows.append(ell_pows[-1] * ell)
    out = []
    for k in range(re + 1):
        acc = chow.zero(space)
        for i in range(k + 1):
            acc = acc + comb(re - i, k - i) * (arg_cs[i] * ell_pows[k - i])
        out.append(acc)
    return tuple(out)


def _quotient_classes(top: BundleExpr, sub: BundleExpr, space: Space) -> tuple[ChowElement, ...]:
    rq = bundles.rank(top, space) - bundles.rank(sub, space)
    top_cs = chern_classes(top, space)
    sub_cs = chern_classes(sub, space)
    out = [chow.unit(space)]
    for k in range(1, rq + 1):
        acc = top_cs[k] if k < len(top_cs) else chow.zero(space)
        for i in range(1, min(k, len(sub_cs) - 1) + 1):
            acc = acc - sub_cs[i] * out[k - i]
        out.append(acc)
    return tuple(out)
