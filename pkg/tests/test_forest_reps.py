"""Frobenius characteristics of forest shapes and their stratum aggregates."""

import json
from fractions import Fraction
from math import factorial

import pytest

import forestrep.forest_reps as fr
from forestrep.characters import IntegrityError, fixed_point_character
from forestrep.forests import Odun, chain_odun, enumerate_oduns
from forestrep.partitions import Partition, partitions_of, partitions_with_parts
from forestrep.symfunc import (
    SymFunc,
    homogeneous,
    plethysm,
    schur,
    to_schur,
)
from forestrep.forest_reps import (
    analyze_odun,
    character_of_all_strata,
    character_of_stratum,
    closed_form_C1n,
    decompose_stratum,
    dimension_of_odun,
    dimension_via_frobenius,
    frobenius_of_odun,
    frobenius_of_stratum,
    orbit_size_census,
    proposition_check_C1n,
    rook_chain_frobenius_formula,
    rook_frobenius,
    rook_irreducible_count,
    rook_sign_count,
    save_frobenius_cache,
    sign_by_stratum,
    sign_multiplicity,
    stratum_trivial_count,
    table_lines,
    total_sign_multiplicity,
    trivial_multiplicity,
)
from forestrep.transformations import enumerate_nilpotent


def test_frobenius_of_basic_shapes():
    p1 = SymFunc.p(1)
    assert frobenius_of_odun(Odun.from_text("()")) == p1
    assert frobenius_of_odun(Odun.from_text("(())")) == p1 * p1
    # two isolated vertices: an unordered pair of points
    assert frobenius_of_odun(Odun.from_text("()()")) == homogeneous(2)
    # cherry: root times unordered pair of leaf children
    cherry = frobenius_of_odun(Odun.from_text("(()())"))
    assert cherry == p1 * plethysm(homogeneous(2), p1)
    assert to_schur(cherry) == {Partition((3,)): 1, Partition((2, 1)): 1}


def test_frobenius_degree_and_trivial_part():
    for n in range(1, 6):
        for o in enumerate_oduns(n):
            f = frobenius_of_odun(o)
            assert f.is_homogeneous() and f.degree() == n
            assert trivial_multiplicity(o) == 1


def test_stratum_frobenius_sums_shapes():
    for n in range(1, 6):
        for k in range(n):
            want = SymFunc.zero()
            for o in enumerate_oduns(n, components=n - k):
                want = want + frobenius_of_odun(o)
            assert frobenius_of_stratum(n, k) == want


def test_character_of_stratum_matches_fixed_points():
    for n in range(1, 6):
        for k in range(n):
            assert character_of_stratum(n, k) == fixed_point_character(n, k)


def test_decompose_stratum_known_values():
    # the 3-vertex strata split as 1, 2(std)+triv+sign-free pattern, etc.
    assert decompose_stratum(3, 0).multiplicities == {Partition((3,)): 1}
    got = decompose_stratum(3, 2, method="fixed")
    assert got.multiplicities == {
        Partition((3,)): 2,
        Partition((2, 1)): 3,
        Partition((1, 1, 1)): 1,
    }
    assert decompose_stratum(3, 2, method="plethysm") == got
    with pytest.raises(ValueError):
        decompose_stratum(3, 1, method="magic")


def test_table_lines_layout():
    lines = table_lines(3)
    assert lines == [
        "C_{0,3} = V[3]",
        "C_{1,3} = V[3] + V[2,1]^2 + V[1,1,1]",
        "C_{2,3} = V[3]^2 + V[2,1]^3 + V[1,1,1]",
    ]


def test_dimension_three_ways():
    census = {n: orbit_size_census(n) for n in range(1, 6)}
    for n in range(1, 6):
        assert sum(census[n].values()) == (n + 1) ** (n - 1)
        for o in enumerate_oduns(n):
            d1 = dimension_of_odun(o)
            d2 = dimension_via_frobenius(o)
            d3 = census[n][o.encoding]
            assert d1 == d2 == d3


def test_dimension_of_chain_forests():
    # disjoint chains: n! over the product of multiplicities of equal lengths
    o = chain_odun([2, 2])
    assert dimension_of_odun(o) == factorial(4) // 2
    o = chain_odun([3, 2, 2, 1])
    assert dimension_of_odun(o) == factorial(8) // (2 * 1 * 1)


def test_dimension_repeated_branching_components():
    # repeated non-chain components: each copy contributes its internal factors
    two_cherries = Odun.from_text("(()())(()())")
    assert dimension_of_odun(two_cherries) == factorial(6) // (2 * 2 * 2)
    assert dimension_via_frobenius(two_cherries) == 90


def test_sign_multiplicity_paths_agree():
    for n in range(1, 7):
        for o in enumerate_oduns(n):
            assert sign_multiplicity(o, "blossoming") == sign_multiplicity(o, "schur")
    with pytest.raises(ValueError):
        sign_multiplicity(Odun.from_text("()"), "guess")


def test_total_sign_values():
    assert [total_sign_multiplicity(n) for n in range(2, 8)] == [1, 2, 4, 8, 16, 34]
    by_k = sign_by_stratum(5)
    assert sum(by_k.values()) == 8
    assert by_k[4] == 4  # trees on 5 vertices


def test_analyze_odun_bundle():
    rep = analyze_odun(Odun.from_text("(()())"))
    assert rep.dimension == 3
    assert rep.sign == 0 and rep.blossoming is False
    assert rep.decomposition.multiplicities == {Partition((3,)): 1, Partition((2, 1)): 1}


def test_rook_frobenius_and_formula():
    for n in range(1, 7):
        for parts in range(1, n + 1):
            total = SymFunc.zero()
            for lam in partitions_with_parts(n, parts):
                total = total + rook_chain_frobenius_formula(lam)
            assert rook_frobenius(n, parts) == total
    lam = Partition((2, 2, 1))
    direct = frobenius_of_odun(chain_odun(lam.parts))
    assert rook_chain_frobenius_formula(lam) == direct


def test_rook_sign_counts_match_odd_multiplicity_rule():
    # shapes with sign part: partitions with no repeated odd part
    for n in range(1, 8):
        for parts in range(1, n + 1):
            want = 0
            for lam in partitions_with_parts(n, parts):
                mults = lam.multiplicities()
                if all(m == 1 for p, m in mults.items() if p % 2 == 1):
                    want += 1
            assert rook_sign_count(n, parts) == want
    assert rook_irreducible_count(4, 2) >= rook_sign_count(4, 2)


def test_closed_form_C1n():
    for n in (4, 5, 6):
        assert closed_form_C1n(n) == decompose_stratum(n, 1)
        assert proposition_check_C1n(n)
    with pytest.raises(ValueError):
        closed_form_C1n(3)


def test_stratum_trivial_count_is_shape_count():
    for n in range(1, 6):
        for k in range(n):
            assert stratum_trivial_count(n, k) == len(enumerate_oduns(n, components=n - k))


def test_character_of_all_strata_totals():
    f = character_of_all_strata(4)
    assert f.coefficient(Partition((1, 1, 1, 1))) * factorial(4) == 5 ** 3


def test_frobenius_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(fr.CACHE_DIR_ENV, str(tmp_path))
    frobenius_of_odun(Odun.from_text("((()))"))  # populate the memo
    path = save_frobenius_cache()
    assert path is not None and path.exists()
    data = json.loads(path.read_text())
    assert "trees" in data and data["trees"]
    # a fresh process state can read the payload back
    monkeypatch.setattr(fr, "_CACHE_LOADED", False)
    before = dict(fr._TREE_MEMO)
    fr._TREE_MEMO.clear()
    fr._load_cache()
    assert fr._TREE_MEMO
    for enc, f in fr._TREE_MEMO.items():
        if enc in before:
            assert before[enc] == f
