"""Exact character theory of the symmetric group S_n.

Irreducible characters come from the Murnaghan-Nakayama recursion (computed
on beta-sets, memoized).  Permutation characters of the conjugation action
on nilpotent partial maps are obtained by counting fixed points of one class
representative per cycle type.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .partitions import Partition, partitions_of, z_of
from .transformations import Perm, _nilpotent_images, class_representative


class IntegrityError(RuntimeError):
    """An exact computation produced a structurally impossible value."""


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    size = len(lam)
    beta = tuple(lam[i] + (size - 1 - i) for i in range(size))
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((x for x in bset if x != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        newlam = tuple(
            p for p in (newbeta[i] - (size - 1 - i) for i in range(size)) if p > 0
        )
        total += (-1) ** height * _mn(newlam, rest)
    return total


class ClassFunction:
    """A function on conjugacy classes of S_n, keyed by cycle type."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping[Partition, int | Fraction]) -> None:
        expected = partitions_of(n)
        if set(values) != set(expected):
            raise ValueError(f"values must cover every cycle type of S_{n}")
        self.n = n
        self.values = {rho: values[rho] for rho in expected}

    def __call__(self, rho: Partition):
        return self.values[rho]

    @property
    def degree(self):
        """Value at the identity class."""
        return self.values[partitions_of(self.n)[-1]]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("sizes differ")
        return ClassFunction(
            self.n, {rho: a + other.values[rho] for rho, a in self.values.items()}
        )

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        """Pointwise product (character of the tensor product)."""
        if self.n != other.n:
            raise ValueError("sizes differ")
        return ClassFunction(
            self.n, {rho: a * other.values[rho] for rho, a in self.values.items()}
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, ClassFunction):
            return self.n == other.n and self.values == other.values
        return NotImplemented

    def __repr__(self) -> str:
        vals = {str(r): v for r, v in self.values.items()}
        return f"ClassFunction({self.n}, {vals})"


def irreducible_character(lam: Partition) -> ClassFunction:
    """chi^lam on all cycle types of S_{|lam|}."""
    n = lam.weight
    return ClassFunction(n, {rho: _mn(lam.parts, rho.parts) for rho in partitions_of(n)})


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[Partition, ClassFunction]:
    return {lam: irreducible_character(lam) for lam in partitions_of(n)}


def irreducible_dimension(lam: Partition) -> int:
    return _mn(lam.parts, (1,) * lam.weight)


def _count_fixed(n: int, k: int, w: Perm) -> int:
    count = 0
    for image in _nilpotent_images(n, k):
        for i in range(n):
            v = image[i]
            if image[w[i] - 1] != (0 if v == 0 else w[v - 1]):
                break
        else:
            count += 1
    return count


def fixed_point_character(n: int, k: int, threads: int = 1) -> ClassFunction:
    """Character of S_n permuting the nilpotent rank-k maps by conjugation."""
    reps = [(mu, class_representative(mu)) for mu in partitions_of(n)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            counts = list(pool.map(lambda mw: _count_fixed(n, k, mw[1]), reps))
        values = {mu: c for (mu, _), c in zip(reps, counts)}
    else:
        values = {mu: _count_fixed(n, k, w) for mu, w in reps}
    return ClassFunction(n, values)


def inner_product(a: ClassFunction, b: ClassFunction) -> Fraction:
    """<a, b> = sum_rho a(rho) b(rho) / z_rho, exact."""
    if a.n != b.n:
        raise ValueError("sizes differ")
    return sum(
        (Fraction(a.values[rho] * b.values[rho], z_of(rho)) for rho in partitions_of(a.n)),
        Fraction(0),
    )


class IrredDecomposition:
    """Multiplicities of the irreducible S_n modules in a representation."""

    __slots__ = ("n", "multiplicities")

    def __init__(self, n: int, multiplicities: Mapping[Partition, int]) -> None:
        self.n = n
        self.multiplicities = {
            lam: int(m) for lam, m in multiplicities.items() if m != 0
        }

    def __getitem__(self, lam: Partition) -> int:
        return self.multiplicities.get(lam, 0)

    def degree(self) -> int:
        return sum(
            m * irreducible_dimension(lam) for lam, m in self.multiplicities.items()
        )

    def format_text(self) -> str:
        """Direct-sum line, revlex partition order, exponent 1 omitted."""
        pieces = []
        for lam in partitions_of(self.n):
            m = self.multiplicities.get(lam, 0)
            if m:
                pieces.append(f"V{lam.to_text()}" + (f"^{m}" if m > 1 else ""))
        return " + ".join(pieces) if pieces else "0"

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(lam.parts), "mult": self.multiplicities[lam]}
            for lam in partitions_of(self.n)
            if lam in self.multiplicities
        ]

    def __eq__(self, other) -> bool:
        if isinstance(other, IrredDecomposition):
            return self.n == other.n and self.multiplicities == other.multiplicities
        return NotImplemented

    def __repr__(self) -> str:
        return f"IrredDecomposition({self.n}, {{{self.format_text()}}})"


def decompose(alpha: ClassFunction) -> IrredDecomposition:
    """Inner products against every chi^lam; error unless all are counts."""
    mults: dict[Partition, int] = {}
    for lam in partitions_of(alpha.n):
        m = inner_product(alpha, character_table(alpha.n)[lam])
        if m.denominator != 1:
            raise IntegrityError(f"multiplicity of {lam} is non-integral: {m}")
        if m < 0:
            raise IntegrityError(f"multiplicity of {lam} is negative: {m}")
        if m:
            mults[lam] = int(m)
    return IrredDecomposition(alpha.n, mults)
