"""Partial transformations on {1,...,n} and the conjugation action of S_n.

One-line notation throughout: a partial map f is the tuple
(f(1), ..., f(n)) with 0 standing for "undefined".  Permutations are plain
tuples in the same notation (always fully defined).
"""

from __future__ import annotations

from math import factorial
from typing import Iterator

from .partitions import Partition, binomial, stirling2

Perm = tuple[int, ...]


class PartialTransformation:
    """A partial self-map of {1, ..., n} in one-line notation."""

    __slots__ = ("n", "image")

    def __init__(self, image) -> None:
        image = tuple(int(v) for v in image)
        n = len(image)
        for v in image:
            if not 0 <= v <= n:
                raise ValueError(f"entries must lie in 0..{n}, got {v}")
        self.n = n
        self.image = image

    def __call__(self, i: int) -> int:
        """Value at i, 0 if undefined; i must be in 1..n."""
        if not 1 <= i <= self.n:
            raise ValueError(f"point {i} outside 1..{self.n}")
        return self.image[i - 1]

    def domain(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.image[i - 1] != 0)

    def image_set(self) -> frozenset[int]:
        return frozenset(v for v in self.image if v != 0)

    def rank(self) -> int:
        """Number of points where the map is defined."""
        return sum(1 for v in self.image if v != 0)

    def matrix(self) -> list[list[int]]:
        """0/1 matrix with a 1 in row i, column f(i) for each defined i."""
        m = [[0] * self.n for _ in range(self.n)]
        for i, v in enumerate(self.image):
            if v != 0:
                m[i][v - 1] = 1
        return m

    def to_text(self) -> str:
        return "[" + ",".join(str(v) for v in self.image) + "]"

    @classmethod
    def from_text(cls, text: str) -> "PartialTransformation":
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"expected bracketed one-line text, got {text!r}")
        body = s[1:-1].strip()
        if not body:
            raise ValueError("empty one-line notation")
        return cls(int(tok) for tok in body.split(","))

    def __eq__(self, other) -> bool:
        if isinstance(other, PartialTransformation):
            return self.image == other.image
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.image)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"PartialTransformation({list(self.image)!r})"


def compose(f: PartialTransformation, g: PartialTransformation) -> PartialTransformation:
    """f after g: defined at i iff g(i) and f(g(i)) are both defined."""
    if f.n != g.n:
        raise ValueError(f"size mismatch: {f.n} vs {g.n}")
    return PartialTransformation(
        f.image[v - 1] if v != 0 else 0 for v in g.image
    )


def _images_nilpotent(image: tuple[int, ...]) -> bool:
    n = len(image)
    state = [0] * (n + 1)
    for start in range(1, n + 1):
        if state[start]:
            continue
        path = []
        v = start
        while v != 0 and state[v] == 0:
            state[v] = 1
            path.append(v)
            v = image[v - 1]
        if v != 0 and state[v] == 1:
            return False
        for u in path:
            state[u] = 2
    return True


def is_nilpotent(f: PartialTransformation) -> bool:
    """True iff some power of f is the nowhere-defined map (acyclic digraph)."""
    return _images_nilpotent(f.image)


def conjugate_action(w: Perm, f: PartialTransformation) -> PartialTransformation:
    """w . f = w o f o w^{-1}, with w(0) read as 0."""
    if len(w) != f.n:
        raise ValueError(f"size mismatch: {len(w)} vs {f.n}")
    out = [0] * f.n
    for i, v in enumerate(f.image):
        if v != 0:
            out[w[i] - 1] = w[v - 1]
    return PartialTransformation(out)


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_compose(v: Perm, w: Perm) -> Perm:
    """v after w in one-line notation."""
    return tuple(v[w[i] - 1] for i in range(len(w)))


def perm_inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def cycle_type(w: Perm) -> Partition:
    n = len(w)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            length += 1
            v = w[v - 1]
        lengths.append(length)
    lengths.sort(reverse=True)
    return Partition(lengths)


def class_representative(mu: Partition, n: int | None = None) -> Perm:
    """A permutation of cycle type mu made of consecutive-integer cycles."""
    n = mu.weight if n is None else n
    if mu.weight != n:
        raise ValueError(f"cycle type {mu} does not have weight {n}")
    out = [0] * n
    start = 1
    for part in mu.parts:
        for off in range(part - 1):
            out[start + off - 1] = start + off + 1
        out[start + part - 2] = start
        start += part
    return tuple(out)


def _nilpotent_images(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Raw one-line tuples of the nilpotent rank-k maps, lexicographic order."""
    image = [0] * n

    def place(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i > n:
            yield tuple(image)
            return
        if remaining < n - i + 1:
            image[i - 1] = 0
            yield from place(i + 1, remaining)
        if remaining > 0:
            for j in range(1, n + 1):
                # reject j when the edge i -> j closes a cycle through
                # already-assigned positions (all of them are < i)
                v = j
                while 0 < v < i:
                    v = image[v - 1]
                if v == i:
                    continue
                image[i - 1] = j
                yield from place(i + 1, remaining - 1)
            image[i - 1] = 0

    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k >= n:
        return
    yield from place(1, k)


def enumerate_nilpotent(n: int, k: int) -> Iterator[PartialTransformation]:
    """Nilpotent partial maps on [n] of rank k, lexicographic on one-line tuples."""
    for image in _nilpotent_images(n, k):
        yield PartialTransformation(image)


def count_nilpotent(n: int, k: int) -> int:
    """|C_{k,n}| = C(n-1, k) * n^k."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0 or k > n:
        raise ValueError(f"k must lie in 0..{n}")
    return binomial(n - 1, k) * n ** k


def count_nilpotent_total(n: int) -> int:
    """Nilpotent maps of every rank on [n]: (n+1)^(n-1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return (n + 1) ** (n - 1)


def count_by_image_size(n: int, r: int) -> int:
    """Closed form C(n,r) * S(n, r+1) * r! from the literature comparison."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if r < 0 or r > n:
        raise ValueError(f"r must lie in 0..{n}")
    return binomial(n, r) * stirling2(n, r + 1) * factorial(r)


def image_size_census(n: int, nilpotent_only: bool = False) -> dict[int, int]:
    """Brute-force census of partial maps on [n] by image size |f([n])|."""
    counts: dict[int, int] = {r: 0 for r in range(n + 1)}
    stack = [()]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n:
            if not nilpotent_only or _images_nilpotent(prefix):
                counts[len(set(prefix) - {0})] += 1
            continue
        for v in range(n + 1):
            stack.append(prefix + (v,))
    return counts
