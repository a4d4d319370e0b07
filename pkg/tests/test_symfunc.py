from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from curvecount.symfunc import (
    box_complement,
    conjugate,
    contains,
    elementary_symmetric,
    enumerate_partitions,
    expand_linear_product,
    fits_box,
    lr_coefficient,
    partition,
    pieri_multiply,
    schubert_product,
    sym_power_roots,
    weight,
)


@st.composite
def partitions_in_box(draw, rows=3, cols=3):
    parts = []
    prev = cols
    for _ in range(rows):
        nxt = draw(st.integers(min_value=0, max_value=prev))
        parts.append(nxt)
        prev = nxt
    return partition(parts)


def test_partition_normalizes_trailing_zeros():
    assert partition([3, 1, 0, 0]) == (3, 1)
    assert partition([]) == ()
    assert partition((2,)) == (2,)


def test_partition_rejects_increasing():
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_weight_and_conjugate():
    assert weight((3, 1)) == 4
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate(conjugate((4, 2, 1))) == (4, 2, 1)


def test_contains():
    assert contains((3, 2), (2, 2))
    assert contains((3, 2), ())
    assert not contains((3, 2), (2, 2, 1))
    assert not contains((3, 2), (4,))


def test_box_complement():
    assert box_complement((3, 1), 2, 3) == (2,)
    assert box_complement((), 2, 2) == (2, 2)
    assert box_complement((2, 2), 2, 2) == ()


def test_enumerate_partitions_count_matches_binomial():
    # partitions in a k x (n-k) box index the Schubert basis of Gr(k, n)
    assert len(enumerate_partitions(3, 3)) == comb(6, 3)
    assert len(enumerate_partitions(2, 2)) == comb(4, 2)
    assert len(enumerate_partitions(2, 3)) == comb(5, 2)


def test_enumerate_partitions_small():
    assert set(enumerate_partitions(2, 2)) == {(), (1,), (2,), (1, 1), (2, 1), (2, 2)}


def test_pieri_horizontal_strips():
    assert set(pieri_multiply((1,), 1, (2, 2))) == {(2,), (1, 1)}
    assert set(pieri_multiply((2,), 2, (2, 2))) == {(2, 2)}
    assert pieri_multiply((2, 2), 1, (2, 2)) == []
    assert set(pieri_multiply((2, 1), 1, (3, 3))) == {(3, 1), (2, 2), (2, 1, 1)}


def test_pieri_zero_row_is_identity():
    assert pieri_multiply((2, 1), 0, (3, 3)) == [(2, 1)]


def test_lr_small_values():
    assert lr_coefficient((2,), (1,), (2, 1)) == 1
    assert lr_coefficient((1, 1), (2,), (2, 2)) == 0
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


def test_lr_weight_mismatch_is_zero():
    assert lr_coefficient((2,), (1,), (2, 2)) == 0


@given(partitions_in_box(), partitions_in_box())
@settings(max_examples=60, deadline=None)
def test_lr_commutes(lam, mu):
    for nu in enumerate_partitions(3, 3):
        assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


@given(partitions_in_box(), st.integers(min_value=0, max_value=3))
@settings(max_examples=60, deadline=None)
def test_lr_agrees_with_pieri(lam, i):
    # multiplying by a one-row shape must reproduce the Pieri expansion
    strips = pieri_multiply(lam, i, (3, 3))
    for nu in enumerate_partitions(3, 3):
        expected = 1 if nu in strips else 0
        assert lr_coefficient(lam, partition([i]), nu) == expected


def test_schubert_product_expands_in_box():
    prods = dict(schubert_product((1,), (1,), 2, 2))
    assert prods == {(2,): 1, (1, 1): 1}
    top = dict(schubert_product((2, 1), (1,), 2, 2))
    assert top == {(2, 2): 1}


def test_schubert_product_truncates_outside_box():
    assert dict(schubert_product((2, 2), (1,), 2, 2)) == {}


def test_sym_power_roots():
    assert sorted(sym_power_roots(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(sym_power_roots(3, 3)) == comb(3 + 3 - 1, 3)
    assert sym_power_roots(0, 2) == ((0, 0),)


def test_elementary_symmetric():
    vals = [Fraction(1), Fraction(2), Fraction(3)]
    assert elementary_symmetric(vals, 0) == 1
    assert elementary_symmetric(vals, 1) == 6
    assert elementary_symmetric(vals, 2) == 11
    assert elementary_symmetric(vals, 3) == 6
    assert elementary_symmetric(vals, 4) == 0


def test_expand_linear_product_sym2_rank2():
    # roots a, b give factors (1+2a)(1+a+b)(1+2b)
    # = 1 + 3e_1 + (2e_1^2 + 4e_2) + 4e_1e_2
    out = expand_linear_product(sym_power_roots(2, 2), 2, 3)
    assert out.coeffs[(1, 0)] == 3
    assert out.coeffs[(2, 0)] == 2
    assert out.coeffs[(0, 1)] == 4
    assert out.coeffs[(1, 1)] == 4


def test_expand_linear_product_sym3_rank2_top_degree():
    # top degree of (1+3a)(1+2a+b)(1+a+2b)(1+3b) is 9ab(2a^2+5ab+2b^2)
    # = 18 e_1^2 e_2 + 9 e_2^2
    out = expand_linear_product(sym_power_roots(3, 2), 2, 4)
    top = {e: c for e, c in out.coeffs.items() if sum((i + 1) * m for i, m in enumerate(e)) == 4}
    assert top == {(2, 1): 18, (0, 2): 9}


def test_expand_linear_product_rejects_asymmetric():
    with pytest.raises(ValueError):
        expand_linear_product(((1, 0), (0, 2)), 2, 2)


def test_fits_box():
    assert fits_box((2, 2), 2, 2)
    assert not fits_box((3,), 2, 2)
    assert not fits_box((1, 1, 1), 2, 2)
