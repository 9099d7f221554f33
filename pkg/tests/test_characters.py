"""Irreducible characters via Murnaghan-Nakayama and the fixed-point oracle."""

import itertools
from fractions import Fraction
from math import factorial

import pytest

from forestrep.characters import (
    ClassFunction,
    IntegrityError,
    IrredDecomposition,
    character_table,
    decompose,
    fixed_point_character,
    inner_product,
    irreducible_character,
    irreducible_dimension,
)
from forestrep.partitions import Partition, partitions_of, z_of
from forestrep.transformations import (
    conjugate_action,
    cycle_type,
    enumerate_nilpotent,
)

S3_TABLE = {
    (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
    (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
}

S4_TABLE = {
    (4,): {(1, 1, 1, 1): 1, (2, 1, 1): 1, (2, 2): 1, (3, 1): 1, (4,): 1},
    (3, 1): {(1, 1, 1, 1): 3, (2, 1, 1): 1, (2, 2): -1, (3, 1): 0, (4,): -1},
    (2, 2): {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0},
    (2, 1, 1): {(1, 1, 1, 1): 3, (2, 1, 1): -1, (2, 2): -1, (3, 1): 0, (4,): 1},
    (1, 1, 1, 1): {(1, 1, 1, 1): 1, (2, 1, 1): -1, (2, 2): 1, (3, 1): 1, (4,): -1},
}


def test_small_character_tables():
    for n, table in ((3, S3_TABLE), (4, S4_TABLE)):
        got = character_table(n)
        for lam_parts, row in table.items():
            chi = got[Partition(lam_parts)]
            for rho_parts, val in row.items():
                assert chi(Partition(rho_parts)) == val


def test_first_orthogonality():
    for n in range(1, 7):
        chars = character_table(n)
        lams = list(chars)
        for lam in lams:
            for mu in lams:
                want = 1 if lam == mu else 0
                assert inner_product(chars[lam], chars[mu]) == want


def test_dimensions():
    assert irreducible_dimension(Partition((3, 2))) == 5
    assert irreducible_dimension(Partition((2, 2))) == 2
    assert irreducible_dimension(Partition((4, 1))) == 4
    for n in range(1, 8):
        assert sum(irreducible_dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_conjugate_partition_twists_by_sign():
    for n in range(1, 7):
        for lam in partitions_of(n):
            chi = irreducible_character(lam)
            twisted = irreducible_character(lam.conjugate())
            for rho in partitions_of(n):
                eps = (-1) ** (n - rho.length)
                assert twisted(rho) == eps * chi(rho)


def test_class_function_validation_and_algebra():
    n = 3
    vals = {rho: 1 for rho in partitions_of(n)}
    one = ClassFunction(n, vals)
    assert one.degree == 1
    assert (one + one)(Partition((2, 1))) == 2
    assert (one * one) == one
    with pytest.raises(ValueError):
        ClassFunction(3, {Partition((3,)): 1})  # missing classes


def test_fixed_point_character_against_all_permutations():
    # class-representative shortcut vs averaging over the whole group
    for n in range(1, 5):
        for k in range(n):
            maps = list(enumerate_nilpotent(n, k))
            chi = fixed_point_character(n, k)
            for w in itertools.permutations(range(1, n + 1)):
                fixed = sum(1 for f in maps if conjugate_action(w, f) == f)
                assert chi(cycle_type(w)) == fixed


def test_fixed_point_character_threads_match():
    a = fixed_point_character(5, 3, threads=1)
    b = fixed_point_character(5, 3, threads=4)
    assert a == b


def test_decompose_round_trips():
    for n in range(1, 5):
        for k in range(n):
            chi = fixed_point_character(n, k)
            deco = decompose(chi)
            assert all(m > 0 for m in deco.multiplicities.values())
            rebuilt = None
            for lam, m in deco.multiplicities.items():
                term = ClassFunction(
                    n, {rho: m * irreducible_character(lam)(rho) for rho in partitions_of(n)}
                )
                rebuilt = term if rebuilt is None else rebuilt + term
            assert rebuilt == chi
            assert deco.degree() == chi.degree


def test_decompose_rejects_non_characters():
    n = 3
    delta = ClassFunction(
        n, {rho: (1 if rho == Partition((1, 1, 1)) else 0) for rho in partitions_of(n)}
    )
    with pytest.raises(IntegrityError):
        decompose(delta)


def test_decomposition_formatting():
    deco = IrredDecomposition(
        3, {Partition((3,)): 2, Partition((2, 1)): 3, Partition((1, 1, 1)): 1}
    )
    assert deco.format_text() == "V[3]^2 + V[2,1]^3 + V[1,1,1]"
    assert deco.to_json() == [
        {"partition": [3], "mult": 2},
        {"partition": [2, 1], "mult": 3},
        {"partition": [1, 1, 1], "mult": 1},
    ]


def test_inner_product_is_exact():
    chi = fixed_point_character(4, 2)
    triv = ClassFunction(4, {rho: 1 for rho in partitions_of(4)})
    v = inner_product(chi, triv)
    assert isinstance(v, Fraction)
    assert v.denominator == 1
    # average number of fixed maps = number of orbits (Burnside)
    orbits = v
    assert orbits == sum(
        Fraction(factorial(4), z_of(rho)) * chi(rho) for rho in partitions_of(4)
    ) / factorial(4)
