"""Partition combinatorics and symmetric-function expansion.

Partitions are plain tuples of weakly decreasing positive integers with
trailing zeros trimmed; the empty tuple is the empty partition.  This module
provides the combinatorial layer everything else is built on: box-bounded
partition enumeration, the Pieri rule, Littlewood-Richardson numbers by skew
tableau enumeration, and rewriting of products of linear forms in Chern roots
into elementary symmetric generators.

All functions are pure.  The caches only ever store values that any caller
would recompute identically, so concurrent readers and redundant concurrent
writes are harmless.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

Partition = tuple[int, ...]


def partition(parts) -> Partition:
    """Normalize an iterable of row lengths to a canonical partition tuple."""
    out = tuple(int(p) for p in parts)
    while out and out[-1] == 0:
        out = out[:-1]
    if any(p < 0 for p in out):
        raise ValueError(f"partition parts must be nonnegative: {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {out}")
    return out


def weight(lam: Partition) -> int:
    return sum(lam)


def fits_box(lam: Partition, rows: int, cols: int) -> bool:
    """Whether lam fits in a rows x cols rectangle."""
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of Young diagrams (inputs normalized, so lengths compare)."""
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def box_complement(lam: Partition, rows: int, cols: int) -> Partition:
    """Complement of lam in the rows x cols box, read back to front.

    This is the index of the Poincare-dual Schubert class on a Grassmannian
    whose tautological box is rows x cols.
    """
    if not fits_box(lam, rows, cols):
        raise ValueError(f"{lam} does not fit in a {rows}x{cols} box")
    padded = list(lam) + [0] * (rows - len(lam))
    return partition(cols - padded[rows - 1 - i] for i in range(rows))


@lru_cache(maxsize=None)
def enumerate_partitions(rows: int, cols: int) -> tuple[Partition, ...]:
    """All partitions inside a rows x cols box, sorted by weight then lex."""
    if rows < 0 or cols < 0:
        raise ValueError("box sides must be nonnegative")

    def gen(nrows: int, maxpart: int):
        yield ()
        if nrows == 0:
            return
        for first in range(1, maxpart + 1):
            for rest in gen(nrows - 1, first):
                yield (first, *rest)

    return tuple(sorted(gen(rows, cols), key=lambda p: (weight(p), p)))


def pieri_multiply(lam: Partition, i: int, box: tuple[int, int]) -> list[Partition]:
    """Partitions obtained from lam by adding a horizontal strip of size i.

    Results that leave the box are dropped, which is exactly the Pieri rule
    for multiplying a Schubert class by the i-th special class.
    """
    rows, cols = box
    lam = partition(lam)
    if i < 0:
        raise ValueError("strip size must be nonnegative")
    if not fits_box(lam, rows, cols):
        return []
    padded = list(lam) + [0] * (rows - len(lam))
    out: list[Partition] = []

    def rec(j: int, built: list[int], rem: int) -> None:
        if j == rows:
            if rem == 0:
                out.append(partition(built))
            return
        lo = padded[j]
        hi = cols if j == 0 else padded[j - 1]
        for v in range(lo, min(hi, lo + rem) + 1):
            built.append(v)
            rec(j + 1, built, rem - (v - lo))
            built.pop()

    rec(0, [], i)
    return out


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson number c^nu_{lam,mu}.

    Counts column-strict fillings of the skew shape nu/lam with content mu
    whose reverse reading word (rows top to bottom, each row right to left)
    is a lattice word.
    """
    return _lr(partition(lam), partition(mu), partition(nu))


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if weight(lam) + weight(mu) != weight(nu):
        return 0
    if not contains(nu, lam):
        return 0
    if not mu:
        return 1
    nrows = len(nu)
    lam_p = list(lam) + [0] * (nrows - len(lam))
    cells = [(r, c) for r in range(nrows) for c in range(nu[r] - 1, lam_p[r] - 1, -1)]
    mlen = len(mu)
    counts = [0] * mlen
    filling = [[0] * nu[r] for r in range(nrows)]
    total = 0

    def place(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        right = filling[r][c + 1] if c + 1 < nu[r] else mlen
        above = filling[r - 1][c] if r > 0 and c >= lam_p[r - 1] else 0
        for v in range(above + 1, min(right, mlen) + 1):
            if counts[v - 1] >= mu[v - 1]:
                continue
            # lattice condition: after placing v the count of v may not
            # exceed the count of v-1
            if v >= 2 and counts[v - 1] >= counts[v - 2]:
                continue
            counts[v - 1] += 1
            filling[r][c] = v
            place(idx + 1)
            counts[v - 1] -= 1
            filling[r][c] = 0

    place(0)
    return total


@lru_cache(maxsize=None)
def schubert_product(
    lam: Partition, mu: Partition, rows: int, cols: int
) -> tuple[tuple[Partition, int], ...]:
    """Structure constants of sigma_lam * sigma_mu in a rows x cols box.

    Returns the pairs (nu, c^nu_{lam,mu}) with nonzero coefficient and nu
    inside the box; everything outside the box is dropped.
    """
    if mu < lam:
        lam, mu = mu, lam
    if not fits_box(lam, rows, cols) or not fits_box(mu, rows, cols):
        return ()
    w = weight(lam) + weight(mu)
    if w > rows * cols:
        return ()
    pairs = []
    for nu in enumerate_partitions(rows, cols):
        if weight(nu) != w or not contains(nu, lam) or not contains(nu, mu):
            continue
        c = _lr(lam, mu, nu)
        if c:
            pairs.append((nu, c))
    return tuple(pairs)


@lru_cache(maxsize=None)
def sym_power_roots(d: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the Chern roots of the d-th symmetric power.

    For a bundle with roots x_1..x_r, Sym^d has one root sum(m_j x_j) per
    vector m with nonnegative entries summing to d.  The count is the rank
    binomial(r + d - 1, d).
    """
    if d < 0 or r < 1:
        raise ValueError("need d >= 0 and r >= 1")
    if r == 1:
        return ((d,),)
    return tuple(
        (first, *rest)
        for first in range(d, -1, -1)
        for rest in sym_power_roots(d - first, r - 1)
    )


def elementary_symmetric(values, k: int):
    """e_k of a finite list of exact numbers, by the usual one-pass recurrence."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e[k]


class TruncatedSymPoly:
    """A symmetric polynomial written in elementary symmetric generators.

    coeffs maps an exponent vector (d_1, ..., d_r) for e_1^d_1 * ... * e_r^d_r
    to its exact coefficient; deg e_i = i and every stored monomial has total
    degree at most `truncation`.
    """

    __slots__ = ("nvars", "truncation", "coeffs")

    def __init__(self, nvars: int, truncation: int, coeffs=None):
        self.nvars = nvars
        self.truncation = truncation
        self.coeffs = {k: v for k, v in dict(coeffs or {}).items() if v != 0}

    def degree_terms(self, k: int) -> dict[tuple[int, ...], Fraction]:
        return {
            ex: c
            for ex, c in self.coeffs.items()
            if sum((i + 1) * e for i, e in enumerate(ex)) == k
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSymPoly)
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"TruncatedSymPoly({self.nvars}, {self.truncation}, {self.coeffs!r})"


def expand_linear_product(forms, nvars: int, truncation: int) -> TruncatedSymPoly:
    """Expand prod(1 + sum_j m_j x_j) and rewrite in e_1..e_nvars.

    `forms` lists the integer coefficient vectors m over the roots x_1..x_nvars,
    one per linear factor.  The expansion is truncated in total degree, checked
    for symmetry under permuting the roots (an asymmetric product means the
    caller passed a root multiset that is not closed under the symmetric
    group, which is a bug), and then rewritten greedily: repeatedly subtract
    the elementary-symmetric monomial whose lex-leading root monomial matches.
    """
    zero_key = (0,) * nvars
    poly: dict[tuple[int, ...], int] = {zero_key: 1}
    for m in forms:
        m = tuple(m)
        if len(m) != nvars:
            raise ValueError(f"form {m} does not have {nvars} coefficients")
        new = dict(poly)
        for ex, c in poly.items():
            if sum(ex) + 1 > truncation:
                continue
            for j, mj in enumerate(m):
                if mj == 0:
                    continue
                ex2 = ex[:j] + (ex[j] + 1,) + ex[j + 1 :]
                new[ex2] = new.get(ex2, 0) + c * mj
        poly = {k: v for k, v in new.items() if v != 0}

    _check_symmetric(poly)

    elem = [None] + [
        {
            tuple(1 if j in subset else 0 for j in range(nvars)): 1
            for subset in combinations(range(nvars), i)
        }
        for i in range(1, nvars + 1)
    ]
    expanded_cache: dict[tuple[int, ...], dict] = {}

    def expand_e_monomial(key: tuple[int, ...]) -> dict:
        if key in expanded_cache:
            return expanded_cache[key]
        prod = {zero_key: 1}
        for i, mult in enumerate(key):
            for _ in range(mult):
                nxt: dict[tuple[int, ...], int] = {}
                for ex, c in prod.items():
                    if sum(ex) + i + 1 > truncation:
                        continue
                    for mono, _one in elem[i + 1].items():
                        ex2 = tuple(a + b for a, b in zip(ex, mono))
                        nxt[ex2] = nxt.get(ex2, 0) + c
                prod = nxt
        expanded_cache[key] = prod
        return prod

    result: dict[tuple[int, ...], int] = {}
    work = dict(poly)
    while work:
        alpha = max(work)
        c = work[alpha]
        if any(alpha[t] < alpha[t + 1] for t in range(nvars - 1)):
            raise ValueError("leading monomial is not a partition; product not symmetric")
        lam = partition(alpha)
        mu = conjugate(lam)
        key = tuple(sum(1 for p in mu if p == i + 1) for i in range(nvars))
        result[key] = result.get(key, 0) + c
        for ex, q in expand_e_monomial(key).items():
            v = work.get(ex, 0) - c * q
            if v:
                work[ex] = v
            else:
                work.pop(ex, None)
    return TruncatedSymPoly(nvars, truncation, result)


def _check_symmetric(poly: dict[tuple[int, ...], int]) -> None:
    canon_coeff: dict[tuple[int, ...], int] = {}
    orbit_seen: dict[tuple[int, ...], int] = {}
    for ex, c in poly.items():
        canon = tuple(sorted(ex, reverse=True))
        if canon in canon_coeff:
            if canon_coeff[canon] != c:
                raise ValueError("product of forms is not symmetric in the roots")
        else:
            canon_coeff[canon] = c
        orbit_seen[canon] = orbit_seen.get(canon, 0) + 1
    for canon, found in orbit_seen.items():
        if found != len(set(permutations(canon))):
            raise ValueError("product of forms is not symmetric in the roots")
