"""Symmetric functions in the power-sum basis: conversions, products, plethysm."""

from fractions import Fraction

import pytest

from forestrep.characters import fixed_point_character, irreducible_character
from forestrep.partitions import Partition, partitions_of
from forestrep.symfunc import (
    SymFunc,
    elementary,
    format_symfunc,
    frobenius_ch,
    homogeneous,
    inverse_frobenius,
    kostka,
    kronecker,
    littlewood_richardson,
    plethysm,
    plethysm_by_substitution,
    schur,
    schur_multiplicity,
    sign_coefficient,
    symfunc_to_json,
    to_monomial,
    to_schur,
    trivial_coefficient,
)

HALF = Fraction(1, 2)


def sf(parts_to_coeff):
    total = SymFunc.zero()
    for parts, c in parts_to_coeff.items():
        total = total + SymFunc.p_of(parts).scale(c)
    return total


def test_schur_p_expansions():
    assert schur((1,)) == SymFunc.p(1)
    assert schur((2,)) == sf({(2,): HALF, (1, 1): HALF})
    assert schur((1, 1)) == sf({(1, 1): HALF, (2,): -HALF})
    assert schur((2, 1)) == sf({(1, 1, 1): Fraction(1, 3), (3,): Fraction(-1, 3)})
    assert homogeneous(3) == schur((3,))
    assert elementary(3) == schur((1, 1, 1))
    # h_n = sum over cycle types of p_rho / z_rho
    for n in range(1, 6):
        from forestrep.partitions import z_of

        want = sf({rho.parts: Fraction(1, z_of(rho)) for rho in partitions_of(n)})
        assert homogeneous(n) == want


def test_ring_operations():
    f = schur((2,))
    g = schur((1, 1))
    assert f + g == SymFunc.p_of((1, 1))
    assert f - f == SymFunc.zero()
    assert (-f) + f == SymFunc.zero()
    assert f.scale(3) == f + f + f
    assert f * SymFunc.one() == f
    assert f * 2 == f + f
    assert SymFunc.p(2) * SymFunc.p(1) == SymFunc.p_of((2, 1))
    assert not SymFunc.zero()
    assert f.degree() == 2 and f.is_homogeneous()


def test_pieri_products_via_to_schur():
    s1, s2, s21 = schur((1,)), schur((2,)), schur((2, 1))
    assert to_schur(s1 * s1) == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert to_schur(s2 * s1) == {Partition((3,)): 1, Partition((2, 1)): 1}
    assert to_schur(s21 * s1) == {
        Partition((3, 1)): 1,
        Partition((2, 2)): 1,
        Partition((2, 1, 1)): 1,
    }


def test_littlewood_richardson_classic():
    mu = Partition((2, 1))
    want = {
        (4, 2): 1,
        (4, 1, 1): 1,
        (3, 3): 1,
        (3, 2, 1): 2,
        (3, 1, 1, 1): 1,
        (2, 2, 2): 1,
        (2, 2, 1, 1): 1,
    }
    for lam in partitions_of(6):
        assert littlewood_richardson(lam, mu, mu) == want.get(lam.parts, 0)


def test_kostka_numbers():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((2, 2), (1, 1, 1, 1)) == 2
    assert kostka((3, 1), (2, 1, 1)) == 2
    for lam in partitions_of(5):
        assert kostka(lam.parts, lam.parts) == 1
    # dominance: K vanishes unless lam >= mu
    assert kostka((1, 1, 1), (3,)) == 0


def test_to_monomial():
    assert to_monomial(homogeneous(2)) == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert to_monomial(elementary(2)) == {Partition((1, 1)): 1}
    assert to_monomial(SymFunc.p(2)) == {Partition((2,)): 1}
    assert to_monomial(SymFunc.p_of((1, 1))) == {Partition((2,)): 1, Partition((1, 1)): 2}
    assert to_monomial(schur((2, 1))) == {Partition((2, 1)): 1, Partition((1, 1, 1)): 2}


def test_plethysm_power_sum_axiom():
    for m in range(1, 6):
        for n in range(1, 6):
            assert plethysm(SymFunc.p(m), SymFunc.p(n)) == SymFunc.p(m * n)


def test_plethysm_is_a_ring_hom_in_the_outer_argument():
    g = schur((2,)) + SymFunc.p(1)
    f1, f2 = schur((2,)), schur((1, 1))
    assert plethysm(f1 + f2, g) == plethysm(f1, g) + plethysm(f2, g)
    assert plethysm(f1 * f2, g) == plethysm(f1, g) * plethysm(f2, g)
    assert plethysm(SymFunc.one(), g) == SymFunc.one()


def test_plethysm_power_sums_distribute_in_the_inner_argument():
    g, h = schur((2,)), schur((1, 1))
    for k in (2, 3):
        pk = SymFunc.p(k)
        assert plethysm(pk, g + h) == plethysm(pk, g) + plethysm(pk, h)
        assert plethysm(pk, g * h) == plethysm(pk, g) * plethysm(pk, h)


def test_plethysm_classical_values():
    h2, h3, e2 = homogeneous(2), homogeneous(3), elementary(2)
    assert to_schur(plethysm(h2, h2)) == {Partition((4,)): 1, Partition((2, 2)): 1}
    assert to_schur(plethysm(e2, h2)) == {Partition((3, 1)): 1}
    assert to_schur(plethysm(h2, e2)) == {Partition((2, 2)): 1, Partition((1, 1, 1, 1)): 1}
    assert to_schur(plethysm(e2, e2)) == {Partition((2, 1, 1)): 1}
    assert to_schur(plethysm(h3, h2)) == {
        Partition((6,)): 1,
        Partition((4, 2)): 1,
        Partition((2, 2, 2)): 1,
    }
    assert to_schur(plethysm(h2, homogeneous(4))) == {
        Partition((8,)): 1,
        Partition((6, 2)): 1,
        Partition((4, 4)): 1,
    }


def test_plethysm_rejects_constant_terms():
    with pytest.raises(ValueError):
        plethysm(schur((2,)), SymFunc.one() + SymFunc.p(1))


def test_plethysm_monomial_substitution_oracle():
    pairs = [
        (homogeneous(2), homogeneous(2)),
        (elementary(2), homogeneous(2)),
        (homogeneous(2), elementary(2)),
        (schur((2, 1)), schur((1,))),
        (homogeneous(3), homogeneous(2)),
        (homogeneous(2), schur((2, 1))),
        (schur((2,)), schur((1, 1, 1))),
        (homogeneous(4), homogeneous(2)),
    ]
    for f, g in pairs:
        assert f.degree() * g.degree() <= 8
        assert plethysm_by_substitution(f, g) == to_monomial(plethysm(f, g))


def test_frobenius_round_trip():
    for n in range(1, 6):
        for lam in partitions_of(n):
            chi = irreducible_character(lam)
            assert frobenius_ch(chi) == schur(lam)
            assert inverse_frobenius(schur(lam)) == chi
    chi = fixed_point_character(4, 2)
    assert inverse_frobenius(frobenius_ch(chi)) == chi


def test_sign_and_trivial_coefficients():
    f = schur((3, 1)) + schur((1, 1, 1, 1)).scale(5) + schur((4,)).scale(2)
    assert sign_coefficient(f, 4) == 5
    assert trivial_coefficient(f, 4) == 2
    assert schur_multiplicity(f, Partition((3, 1))) == 1
    assert schur_multiplicity(f, Partition((2, 2))) == 0


def test_kronecker_small():
    for lam in partitions_of(3):
        assert kronecker(lam, Partition((2, 1)), Partition((2, 1))) == 1
    want = {(4,): 1, (3, 1): 1, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 0}
    for lam in partitions_of(4):
        assert kronecker(lam, Partition((3, 1)), Partition((3, 1))) == want[lam.parts]


def test_formatting():
    assert format_symfunc(schur((2,)), "p") == "1/2*p[2] + 1/2*p[1,1]"
    assert format_symfunc(schur((2,)), "s") == "s[2]"
    assert format_symfunc(SymFunc.p_of((2, 1)), "m") == "m[3] + m[2,1]"
    assert format_symfunc(SymFunc.zero(), "p") == "0"
    assert symfunc_to_json(schur((2,)), "s") == {
        "basis": "s",
        "terms": [{"partition": [2], "coeff": "1"}],
    }
    with pytest.raises(ValueError):
        format_symfunc(schur((2,)), "q")
