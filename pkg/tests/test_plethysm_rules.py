"""Structural plethysm rules: LR splits for sums, Kronecker splits for products."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from forestrep.partitions import partitions_of
from forestrep.symfunc import (
    SymFunc,
    elementary,
    homogeneous,
    plethysm,
    plethysm_product_rule,
    plethysm_sum_rule,
    schur,
)

BASE = [schur((1,)), schur((2,)), schur((1, 1))]


def test_sum_rule_small():
    for weight in (1, 2, 3):
        for lam in partitions_of(weight):
            for g in BASE:
                for h in BASE:
                    assert plethysm_sum_rule(lam, g, h) == plethysm(schur(lam), g + h)


def test_product_rule_small():
    for weight in (1, 2, 3):
        for lam in partitions_of(weight):
            for g in BASE:
                for h in BASE:
                    assert plethysm_product_rule(lam, g, h) == plethysm(schur(lam), g * h)


def test_complete_homogeneous_splitting():
    g, h = schur((2,)), schur((1, 1))
    for n in range(1, 5):
        lhs = plethysm(homogeneous(n), g + h)
        rhs = SymFunc.zero()
        for k in range(n + 1):
            a = plethysm(homogeneous(k), g) if k else SymFunc.one()
            b = plethysm(homogeneous(n - k), h) if n - k else SymFunc.one()
            rhs = rhs + a * b
        assert lhs == rhs


def test_elementary_splitting():
    g, h = schur((2,)), schur((1,))
    for n in range(1, 5):
        lhs = plethysm(elementary(n), g + h)
        rhs = SymFunc.zero()
        for k in range(n + 1):
            a = plethysm(elementary(k), g) if k else SymFunc.one()
            b = plethysm(elementary(n - k), h) if n - k else SymFunc.one()
            rhs = rhs + a * b
        assert lhs == rhs


def coeffs(draw_ints):
    return st.dictionaries(
        st.sampled_from([(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]),
        draw_ints,
        min_size=1,
        max_size=4,
    )


def build(terms) -> SymFunc:
    total = SymFunc.zero()
    for parts, c in terms.items():
        total = total + SymFunc.p_of(parts).scale(Fraction(c))
    return total


@settings(max_examples=25, deadline=None)
@given(coeffs(st.integers(-3, 3)), coeffs(st.integers(-3, 3)))
def test_outer_argument_is_a_ring_map(f_terms, g_terms):
    f1 = build(f_terms)
    f2 = build(g_terms)
    g = schur((2,)) + SymFunc.p(1).scale(-1)
    if not g:
        return
    assert plethysm(f1 + f2, g) == plethysm(f1, g) + plethysm(f2, g)
    assert plethysm(f1 * f2, g) == plethysm(f1, g) * plethysm(f2, g)


@settings(max_examples=25, deadline=None)
@given(coeffs(st.integers(-2, 2)), st.integers(2, 4))
def test_power_sum_distributes_over_random_inner(g_terms, k):
    g = build(g_terms)
    h = schur((2, 1))
    pk = SymFunc.p(k)
    assert plethysm(pk, g + h) == plethysm(pk, g) + plethysm(pk, h)
