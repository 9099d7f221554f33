"""Labeled rooted forests, their canonical unlabeled shapes, and shape statistics.

A nilpotent partial map f corresponds to the forest whose parent map is f
restricted to its domain; undefined points are the roots.  Unlabeled shapes
(Odun objects) are stored as nested tuples: a tree is the tuple of its
canonical child subtrees, sorted by encoding, and a forest is the sorted
tuple of its canonical component trees.  The encoding is the usual balanced-
parenthesis string, so equality of encodings is isomorphism.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .transformations import PartialTransformation, is_nilpotent

Tree = tuple  # nested tuples of Tree


def tree_encode(t: Tree) -> str:
    return "(" + "".join(tree_encode(c) for c in t) + ")"


def tree_size(t: Tree) -> int:
    return 1 + sum(tree_size(c) for c in t)


def canonical_tree(t: Tree) -> Tree:
    """Recursively sort children (descending by encoding) into canonical form."""
    kids = sorted((canonical_tree(c) for c in t), key=tree_encode, reverse=True)
    return tuple(kids)


def is_chain(t: Tree) -> bool:
    while len(t) == 1:
        t = t[0]
    return len(t) == 0


def _parse_forest(text: str):
    trees = []
    stack: list[list] = []
    for ch in text.strip():
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise ValueError(f"unbalanced encoding {text!r}")
            done = tuple(stack.pop())
            if stack:
                stack[-1].append(done)
            else:
                trees.append(done)
        else:
            raise ValueError(f"unexpected character {ch!r} in encoding")
    if stack:
        raise ValueError(f"unbalanced encoding {text!r}")
    return trees


class Odun:
    """Canonical unlabeled rooted forest: a sorted multiset of canonical trees."""

    __slots__ = ("trees", "encoding")

    def __init__(self, trees: Iterable[Tree]) -> None:
        canon = sorted((canonical_tree(t) for t in trees), key=tree_encode, reverse=True)
        self.trees = tuple(canon)
        self.encoding = "".join(tree_encode(t) for t in self.trees)

    @classmethod
    def from_text(cls, text: str) -> "Odun":
        return cls(_parse_forest(text))

    @property
    def n(self) -> int:
        return sum(tree_size(t) for t in self.trees)

    @property
    def num_components(self) -> int:
        return len(self.trees)

    def tree_multiplicities(self) -> list[tuple[Tree, int]]:
        """Distinct component trees with multiplicities, in stored order."""
        out: list[tuple[Tree, int]] = []
        for t, group in itertools.groupby(self.trees):
            out.append((t, sum(1 for _ in group)))
        return out

    def as_tree(self) -> Tree:
        """The rooted tree obtained by hanging every component off a new root."""
        return self.trees

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "components": self.num_components,
            "trees": [
                {"repr": tree_encode(t), "mult": m} for t, m in self.tree_multiplicities()
            ],
        }

    def __eq__(self, other) -> bool:
        if isinstance(other, Odun):
            return self.encoding == other.encoding
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.encoding)

    def __str__(self) -> str:
        return self.encoding

    def __repr__(self) -> str:
        return f"Odun.from_text({self.encoding!r})"


class LabeledForest:
    """Rooted forest on vertices 1..n given by a parent map (roots are absent)."""

    __slots__ = ("n", "parent")

    def __init__(self, n: int, parent: dict[int, int]) -> None:
        if n < 0:
            raise ValueError("n must be nonnegative")
        parent = {int(a): int(b) for a, b in parent.items()}
        for a, b in parent.items():
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge {a}->{b} outside 1..{n}")
        self.n = n
        self.parent = parent
        image = [0] * n
        for a, b in parent.items():
            image[a - 1] = b
        if not is_nilpotent(PartialTransformation(image)):
            raise ValueError("parent map contains a cycle")

    def roots(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if v not in self.parent)

    def children(self) -> dict[int, list[int]]:
        ch: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in self.parent.items():
            ch[b].append(a)
        return ch

    @property
    def num_components(self) -> int:
        return self.n - len(self.parent)

    def __eq__(self, other) -> bool:
        if isinstance(other, LabeledForest):
            return (self.n, self.parent) == (other.n, other.parent)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.parent.items()))))

    def __repr__(self) -> str:
        return f"LabeledForest({self.n}, {self.parent!r})"


def forest_of(f: PartialTransformation) -> LabeledForest:
    """Forest with parent map f; requires f nilpotent."""
    if not is_nilpotent(f):
        raise ValueError("only nilpotent maps correspond to forests")
    return LabeledForest(f.n, {i: v for i, v in enumerate(f.image, start=1) if v != 0})


def transformation_of(forest: LabeledForest) -> PartialTransformation:
    image = [0] * forest.n
    for a, b in forest.parent.items():
        image[a - 1] = b
    return PartialTransformation(image)


def odun_of(forest: LabeledForest) -> Odun:
    ch = forest.children()

    def build(v: int) -> Tree:
        kids = sorted((build(c) for c in ch[v]), key=tree_encode, reverse=True)
        return tuple(kids)

    return Odun(build(r) for r in forest.roots())


@lru_cache(maxsize=None)
def canonical_trees(n: int) -> tuple[Tree, ...]:
    """All canonical rooted trees on n vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return ((),)
    return tuple(f for f in canonical_forests(n - 1))


@lru_cache(maxsize=None)
def canonical_forests(n: int) -> tuple[Tree, ...]:
    """All canonical rooted forests on n vertices, as sorted tuples of trees."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    pool: list[Tree] = []
    for size in range(n, 0, -1):
        pool.extend(canonical_trees(size))

    out: list[Tree] = []

    def pick(budget: int, start: int, acc: list[Tree]) -> None:
        if budget == 0:
            out.append(tuple(sorted(acc, key=tree_encode, reverse=True)))
            return
        for idx in range(start, len(pool)):
            t = pool[idx]
            s = tree_size(t)
            if s > budget:
                continue
            acc.append(t)
            pick(budget - s, idx, acc)
            acc.pop()

    pick(n, 0, [])
    return tuple(out)


def enumerate_oduns(n: int, components: int | None = None) -> tuple[Odun, ...]:
    """Canonical forests on n vertices, optionally with a fixed component count.

    Deterministic order: ascending by encoding string.
    """
    forests = canonical_forests(n)
    oduns = [Odun(f) for f in forests]
    if components is not None:
        oduns = [o for o in oduns if o.num_components == components]
    oduns.sort(key=lambda o: o.encoding)
    return tuple(oduns)


@lru_cache(maxsize=None)
def count_rooted_trees(n: int) -> int:
    """Number of unlabeled rooted trees on n vertices (recurrence, exact)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return 1
    m = n - 1  # t_{m+1} = (1/m) sum_k (sum_{d|k} d t_d) t_{m-k+1}
    total = 0
    for k in range(1, m + 1):
        divsum = sum(d * count_rooted_trees(d) for d in range(1, k + 1) if k % d == 0)
        total += divsum * count_rooted_trees(m - k + 1)
    if total % m:
        raise ArithmeticError(f"recurrence gave a non-integer at n={n}")
    return total // m


def maximal_terminal_branches(odun: Odun) -> list[tuple[int | None, int]]:
    """Maximal hanging chains of a one-component odun.

    Returns (attachment vertex id, chain length) pairs; ids are preorder
    positions in the canonical tree, and the id is None when the whole tree
    is a chain (the branch hangs above the root).
    """
    if odun.num_components != 1:
        raise ValueError("maximal terminal branches are defined for a single tree")
    tree = odun.trees[0]
    if is_chain(tree):
        return [(None, tree_size(tree))]

    out: list[tuple[int | None, int]] = []
    counter = itertools.count(1)

    def walk(t: Tree) -> None:
        my_id = next(counter)
        for c in t:
            if is_chain(c):
                out.append((my_id, tree_size(c)))
            else:
                walk(c)

    walk(tree)
    return out


def _tree_blossoming(t: Tree) -> bool:
    odd_chain_lengths: list[int] = []
    for c in t:
        if is_chain(c):
            s = tree_size(c)
            if s % 2:
                odd_chain_lengths.append(s)
        elif not _tree_blossoming(c):
            return False
    return len(odd_chain_lengths) == len(set(odd_chain_lengths))


def is_blossoming(odun: Odun) -> bool:
    """No vertex carries two or more equal-length odd maximal terminal branches.

    The forest is tested through the add-a-root bijection, so the forest's
    components are the branches hanging off the extra root.
    """
    return _tree_blossoming(odun.as_tree())


def count_blossoming(n: int) -> int:
    """Census of blossoming forests: 1, 1, 2, 4, 8, 16, 34, 75, 166, 373, ...

    Matches 2^(n-2) for 2 <= n <= 6 only.  From n = 7 on, disconnected
    blossoming forests with no 2-chain component and no isolated vertex
    (first: a 3-chain next to a 4-chain) push the census above that value.
    """
    return sum(1 for o in enumerate_oduns(n) if is_blossoming(o))


def natural_labelings_count(odun: Odun) -> int:
    """Labelings of a one-component odun where descendants get larger labels.

    Brute force over all bijective labelings; the root always receives 1.
    """
    if odun.num_components != 1:
        raise ValueError("natural labelings are defined for a single tree")
    tree = odun.trees[0]
    n = tree_size(tree)
    parents: list[int] = []  # parents[i] = preorder parent of vertex i, -1 for root

    def walk(t: Tree, parent: int) -> None:
        my_id = len(parents)
        parents.append(parent)
        for c in t:
            walk(c, my_id)

    walk(tree, -1)
    count = 0
    for labels in itertools.permutations(range(1, n + 1)):
        if all(labels[v] > labels[parents[v]] for v in range(1, n)):
            count += 1
    return count


def hook_length_value(odun: Odun) -> int:
    """n! over the product of subtree sizes, for a one-component odun."""
    if odun.num_components != 1:
        raise ValueError("the hook-length value is defined for a single tree")
    tree = odun.trees[0]

    def subtree_product(t: Tree) -> tuple[int, int]:
        size, prod = 1, 1
        for c in t:
            s, p = subtree_product(c)
            size += s
            prod *= p
        return size, prod * size

    n, prod = subtree_product(tree)
    if factorial(n) % prod:
        raise ArithmeticError("hook product does not divide n!")
    return factorial(n) // prod


def random_tree_odun(n: int, rng: random.Random) -> Odun:
    """Shape of a uniform random increasing tree on n vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    parent = {v: rng.randint(1, v - 1) for v in range(2, n + 1)}
    return odun_of(LabeledForest(n, parent))


def chain_odun(parts: Sequence[int]) -> Odun:
    """Disjoint chains with the given lengths (a rook forest)."""
    def chain(length: int) -> Tree:
        t: Tree = ()
        for _ in range(length - 1):
            t = (t,)
        return t

    if any(p < 1 for p in parts):
        raise ValueError("chain lengths must be positive")
    return Odun(chain(p) for p in parts)
