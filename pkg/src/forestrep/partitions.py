"""Integer partitions and the small exact counting functions used everywhere else.

All arithmetic is exact: Python ints and fractions.Fraction only.
"""

from __future__ import annotations

from functools import lru_cache, total_ordering
from math import comb, factorial
from typing import Iterable, Iterator


@total_ordering
class Partition:
    """A weakly decreasing tuple of positive integers.

    Ordering sorts first by weight, then reverse-lexicographically on the
    parts, so sorted() lists partitions of n as (n), (n-1,1), ..., (1^n).
    """

    __slots__ = ("parts", "_mults")

    def __init__(self, parts: Iterable[int] = ()) -> None:
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
        self.parts = parts
        self._mults: dict[int, int] | None = None

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map part -> number of times it occurs (cached)."""
        if self._mults is None:
            m: dict[int, int] = {}
            for p in self.parts:
                m[p] = m.get(p, 0) + 1
            self._mults = m
        return self._mults

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        cols = [sum(1 for p in self.parts if p > i) for i in range(self.parts[0])]
        return Partition(cols)

    def to_text(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the bracketed form produced by to_text, e.g. "[3,1,1]"."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"expected bracketed partition text, got {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls()
        return cls(int(tok) for tok in body.split(","))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __lt__(self, other: "Partition") -> bool:
        if self.weight != other.weight:
            return self.weight < other.weight
        return self.parts > other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


def _descending_parts(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _descending_parts(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, reverse-lexicographic: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _descending_parts(n, n))


def partitions_with_parts(n: int, k: int) -> tuple[Partition, ...]:
    """Partitions of n with exactly k parts, in the partitions_of(n) order."""
    return tuple(lam for lam in partitions_of(n) if lam.length == k)


def z_of(rho: Partition) -> int:
    """Centralizer order of a permutation with cycle type rho."""
    z = 1
    for part, mult in rho.multiplicities().items():
        z *= part ** mult * factorial(mult)
    return z


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k is out of range, error on negative n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind S(n, k)."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
