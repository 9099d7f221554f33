"""Representations attached to forest shapes.

The symmetric group permutes the nilpotent rank-k maps by conjugation;
orbits are the forest shapes with n-k components.  Each shape contributes
a transitive permutation module whose Frobenius image obeys a plethystic
recursion: a tree is s_(1) times the plethysms s_(m) o F over its distinct
child subtrees, and a forest is the product of s_(m) o F over its distinct
component trees.  Everything here is exact.
"""

from __future__ import annotations

import json
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import groupby
from math import factorial
from pathlib import Path

from .characters import (
    ClassFunction,
    IntegrityError,
    IrredDecomposition,
    decompose,
    fixed_point_character,
)
from .forests import (
    Odun,
    Tree,
    chain_odun,
    enumerate_oduns,
    forest_of,
    is_blossoming,
    odun_of,
    tree_encode,
)
from .partitions import Partition, partitions_with_parts
from .symfunc import (
    SymFunc,
    inverse_frobenius,
    plethysm,
    schur,
    sign_coefficient,
    to_schur,
    trivial_coefficient,
)
from .transformations import PartialTransformation, _nilpotent_images

CACHE_DIR_ENV = "FORESTREP_CACHE_DIR"

_TREE_MEMO: dict[str, SymFunc] = {}
_MEMO_LOCK = threading.Lock()
_CACHE_LOADED = False
_CACHE_DIRTY = False


def _cache_path() -> Path | None:
    base = os.environ.get(CACHE_DIR_ENV)
    return Path(base) / "tree_frobenius.json" if base else None


def _load_cache() -> None:
    global _CACHE_LOADED
    if _CACHE_LOADED:
        return
    _CACHE_LOADED = True
    path = _cache_path()
    if path is None or not path.exists():
        return
    raw = json.loads(path.read_text())
    with _MEMO_LOCK:
        for enc, terms in raw.get("trees", {}).items():
            _TREE_MEMO.setdefault(
                enc,
                SymFunc({tuple(parts): Fraction(c) for parts, c in terms}),
            )


def save_frobenius_cache() -> Path | None:
    """Persist the tree-level memo when the cache directory is configured."""
    global _CACHE_DIRTY
    path = _cache_path()
    if path is None:
        return None
    path.parent.mkdir(parents=True, exist_ok=True)
    with _MEMO_LOCK:
        payload = {
            "trees": {
                enc: [[list(parts), str(c)] for parts, c in f._terms.items()]
                for enc, f in _TREE_MEMO.items()
            }
        }
        _CACHE_DIRTY = False
    path.write_text(json.dumps(payload))
    return path


def _tree_frobenius(tree: Tree) -> SymFunc:
    global _CACHE_DIRTY
    _load_cache()
    enc = tree_encode(tree)
    hit = _TREE_MEMO.get(enc)
    if hit is not None:
        return hit
    f = SymFunc.p(1)
    for child, mult in _grouped(tree):
        f = f * plethysm(schur((mult,)), _tree_frobenius(child))
    with _MEMO_LOCK:
        _TREE_MEMO.setdefault(enc, f)
        _CACHE_DIRTY = True
    return f


def _grouped(trees) -> list[tuple[Tree, int]]:
    return [(t, sum(1 for _ in g)) for t, g in groupby(trees)]


def frobenius_of_odun(odun: Odun) -> SymFunc:
    """Frobenius image of the permutation module on labelings of the shape."""
    f = SymFunc.one()
    for tree, mult in odun.tree_multiplicities():
        f = f * plethysm(schur((mult,)), _tree_frobenius(tree))
    return f


def frobenius_of_stratum(n: int, k: int, threads: int = 1) -> SymFunc:
    """Sum of frobenius_of_odun over all shapes with n-k components."""
    oduns = enumerate_oduns(n, components=n - k)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            images = list(pool.map(frobenius_of_odun, oduns))
    else:
        images = [frobenius_of_odun(o) for o in oduns]
    total = SymFunc.zero()
    for f in images:
        total = total + f
    if _CACHE_DIRTY:
        save_frobenius_cache()
    return total


def character_of_stratum(n: int, k: int, threads: int = 1) -> ClassFunction:
    """Character of the rank-k stratum, through the plethystic route."""
    return inverse_frobenius(frobenius_of_stratum(n, k, threads=threads), n)


def decompose_stratum(
    n: int, k: int, method: str = "plethysm", threads: int = 1
) -> IrredDecomposition:
    """Irreducible multiplicities of the rank-k stratum.

    method="plethysm" expands the shape-wise Frobenius sum into Schur
    functions; method="fixed" counts fixed points of class representatives
    and takes inner products.  The two must agree.
    """
    if method == "plethysm":
        mults: dict[Partition, int] = {}
        for lam, c in to_schur(frobenius_of_stratum(n, k, threads=threads)).items():
            if c.denominator != 1 or c < 0:
                raise IntegrityError(f"multiplicity of {lam} came out as {c}")
            mults[lam] = int(c)
        return IrredDecomposition(n, mults)
    if method == "fixed":
        return decompose(fixed_point_character(n, k, threads=threads))
    raise ValueError(f"unknown method {method!r}")


def table_lines(n: int, method: str = "plethysm", threads: int = 1) -> list[str]:
    """One direct-sum line per stratum k = 0..n-1."""
    return [
        f"C_{{{k},{n}}} = " + decompose_stratum(n, k, method=method, threads=threads).format_text()
        for k in range(n)
    ]


# ---------------------------------------------------------------------------
# sign multiplicities and the blossoming classification
# ---------------------------------------------------------------------------

def sign_multiplicity(odun: Odun, method: str = "blossoming") -> int:
    """Multiplicity of the sign module in the shape's permutation module."""
    if method == "blossoming":
        return 1 if is_blossoming(odun) else 0
    if method == "schur":
        c = sign_coefficient(frobenius_of_odun(odun), odun.n)
        if c.denominator != 1 or c < 0:
            raise IntegrityError(f"sign multiplicity came out as {c}")
        return int(c)
    raise ValueError(f"unknown method {method!r}")


def total_sign_multiplicity(n: int, method: str = "blossoming") -> int:
    """Sign multiplicity summed over every stratum.

    Equals the blossoming census: 1, 1, 2, 4, 8, 16, 34, 75, ... for
    n = 1, 2, ...  This matches 2^(n-2) for 2 <= n <= 6 only; the closed
    form undercounts from n = 7 on (see count_blossoming).
    """
    return sum(sign_multiplicity(o, method) for o in enumerate_oduns(n))


def sign_in_top_stratum(n: int, method: str = "blossoming") -> int:
    """Sign multiplicity of the rank n-1 stratum.

    The top stratum carries the single-tree shapes, so this equals the
    blossoming census one vertex down: 2^(n-3) for 3 <= n <= 7, then
    34 at n = 8, and so on.
    """
    return sum(
        sign_multiplicity(o, method) for o in enumerate_oduns(n, components=1)
    )


def sign_by_stratum(n: int, method: str = "blossoming") -> dict[int, int]:
    out = {}
    for k in range(n):
        out[k] = sum(
            sign_multiplicity(o, method)
            for o in enumerate_oduns(n, components=n - k)
        )
    return out


def trivial_multiplicity(odun: Odun) -> int:
    """Always 1: each shape carries one copy of the trivial module."""
    c = trivial_coefficient(frobenius_of_odun(odun), odun.n)
    if c != 1:
        raise IntegrityError(f"trivial multiplicity came out as {c}")
    return 1


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------

def dimension_of_odun(odun: Odun) -> int:
    """Orbit size by the multiplicity product formula.

    n! divided by the product, over vertices of the add-a-root tree, of the
    factorials of repeated-child-subtree multiplicities.
    """
    denom = 1
    stack: list[Tree] = [odun.as_tree()]
    while stack:
        t = stack.pop()
        for child, mult in _grouped(t):
            denom *= factorial(mult)
            # every copy contributes its own internal factors
            stack.extend(child for _ in range(mult))
    n = odun.n
    if factorial(n) % denom:
        raise IntegrityError("multiplicity product does not divide n!")
    return factorial(n) // denom


def dimension_via_frobenius(odun: Odun) -> int:
    """<F, p_1^n> = degree of the module, read off the p_(1^n) coefficient."""
    f = frobenius_of_odun(odun)
    n = odun.n
    c = f.coefficient(Partition((1,) * n)) * factorial(n)
    if c.denominator != 1 or c < 0:
        raise IntegrityError(f"dimension came out as {c}")
    return int(c)


def orbit_size_census(n: int) -> dict[str, int]:
    """Shape encoding -> number of labeled nilpotent maps with that shape."""
    out: dict[str, int] = {}
    for k in range(n):
        for image in _nilpotent_images(n, k):
            enc = odun_of(forest_of(PartialTransformation(image))).encoding
            out[enc] = out.get(enc, 0) + 1
    return out


# ---------------------------------------------------------------------------
# rook strata (disjoint chains)
# ---------------------------------------------------------------------------

def rook_frobenius(n: int, parts: int) -> SymFunc:
    """Frobenius sum over chain forests on n vertices with the given part count."""
    total = SymFunc.zero()
    for lam in partitions_with_parts(n, parts):
        total = total + frobenius_of_odun(chain_odun(lam.parts))
    return total


def rook_chain_frobenius_formula(lam: Partition) -> SymFunc:
    """Product form prod_i s_(m_i) o p_1^i for the chain forest of lam."""
    f = SymFunc.one()
    for part, mult in lam.multiplicities().items():
        f = f * plethysm(schur((mult,)), SymFunc.p_of((1,) * part))
    return f


def rook_sign_count(n: int, parts: int) -> int:
    """Chain forests with the given part count whose sign multiplicity is 1."""
    return sum(
        sign_multiplicity(chain_odun(lam.parts))
        for lam in partitions_with_parts(n, parts)
    )


def rook_irreducible_count(n: int, parts: int) -> int:
    """Number of shapes in the rook stratum: partitions of n with that many parts."""
    return len(partitions_with_parts(n, parts))


# ---------------------------------------------------------------------------
# per-shape report and the closed-form check for the k=1 stratum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OdunRepresentation:
    """Everything the service reports about one shape."""

    odun: Odun
    frobenius: SymFunc
    decomposition: IrredDecomposition
    dimension: int
    sign: int
    blossoming: bool


def analyze_odun(odun: Odun) -> OdunRepresentation:
    f = frobenius_of_odun(odun)
    mults: dict[Partition, int] = {}
    for lam, c in to_schur(f).items():
        if c.denominator != 1 or c < 0:
            raise IntegrityError(f"multiplicity of {lam} came out as {c}")
        mults[lam] = int(c)
    deco = IrredDecomposition(odun.n, mults)
    dim = dimension_of_odun(odun)
    if deco.degree() != dim:
        raise IntegrityError(
            f"decomposition degree {deco.degree()} differs from dimension {dim}"
        )
    blossoming = is_blossoming(odun)
    sign = sign_multiplicity(odun, method="schur")
    if sign != (1 if blossoming else 0):
        raise IntegrityError("sign multiplicity disagrees with the blossoming test")
    return OdunRepresentation(odun, f, deco, dim, sign, blossoming)


def closed_form_C1n(n: int) -> IrredDecomposition:
    """V_(n) + 2 V_(n-1,1) + V_(n-2,2) + V_(n-2,1,1), valid for n >= 4."""
    if n < 4:
        raise ValueError("closed form stated for n >= 4")
    return IrredDecomposition(
        n,
        {
            Partition((n,)): 1,
            Partition((n - 1, 1)): 2,
            Partition((n - 2, 2)): 1,
            Partition((n - 2, 1, 1)): 1,
        },
    )


def proposition_check_C1n(n: int) -> bool:
    """Does the computed k=1 stratum match its closed form?"""
    return decompose_stratum(n, 1) == closed_form_C1n(n)


@lru_cache(maxsize=None)
def stratum_trivial_count(n: int, k: int) -> int:
    """Number of shapes (= trivial multiplicity) in the rank-k stratum."""
    return len(enumerate_oduns(n, components=n - k))


def character_of_all_strata(n: int, threads: int = 1) -> SymFunc:
    total = SymFunc.zero()
    for k in range(n):
        total = total + frobenius_of_stratum(n, k, threads=threads)
    return total
