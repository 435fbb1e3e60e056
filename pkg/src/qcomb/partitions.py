"""Two-colored partitions of upper and lower points.

A partition has k upper points and l lower points, each colored white
('o') or black ('x'), and a set partition of the k + l points into
blocks.  Points are indexed 0..k-1 (upper, left to right) then
k..k+l-1 (lower, left to right).

Serialization: ``upper;lower;b_0,...,b_{k+l-1}`` where upper and lower
are color words ('e' when empty) and b_i is the 1-based block label of
point i, blocks numbered by first appearance.  Example: the two-block
crossing pair partition with upper 'ox' and lower 'ox' is
``ox;ox;1,2,1,2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .words import ALPHABET, WHITE, word_from_str, word_to_str

_FLIP = str.maketrans("ox", "xo")


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        p = self.parent
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[ri] = rj


def _canonical_labels(blocks_of: list[int]) -> tuple[int, ...]:
    """Relabel block ids by first appearance, 0-based."""
    seen: dict[int, int] = {}
    out = []
    for b in blocks_of:
        if b not in seen:
            seen[b] = len(seen)
        out.append(seen[b])
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    upper: str
    lower: str
    labels: tuple[int, ...]  # canonical block label of each point

    def __post_init__(self):
        n = len(self.upper) + len(self.lower)
        if len(self.labels) != n:
            raise ValueError("label count does not match point count")
        if self.labels != _canonical_labels(list(self.labels)):
            object.__setattr__(self, "labels", _canonical_labels(list(self.labels)))

    # -- construction -------------------------------------------------

    @staticmethod
    def from_blocks(upper: str, lower: str, blocks: list[list[int]]) -> "Partition":
        n = len(upper) + len(lower)
        lab = [-1] * n
        for b, block in enumerate(blocks):
            for i in block:
                if lab[i] != -1:
                    raise ValueError(f"point {i} in two blocks")
                lab[i] = b
        if -1 in lab:
            raise ValueError("point missing from blocks")
        return Partition(upper, lower, _canonical_labels(lab))

    @staticmethod
    def from_str(s: str) -> "Partition":
        up_s, lo_s, lab_s = s.split(";")
        upper = word_from_str(up_s)
        lower = word_from_str(lo_s)
        labels = tuple(int(t) - 1 for t in lab_s.split(",")) if lab_s else ()
        return Partition(upper, lower, _canonical_labels(list(labels)))

    def __str__(self) -> str:
        return "{};{};{}".format(
            word_to_str(self.upper),
            word_to_str(self.lower),
            ",".join(str(b + 1) for b in self.labels),
        )

    # -- basic data ----------------------------------------------------

    @property
    def n_upper(self) -> int:
        return len(self.upper)

    @property
    def n_lower(self) -> int:
        return len(self.lower)

    @property
    def n_points(self) -> int:
        return len(self.labels)

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        nb = max(self.labels, default=-1) + 1
        out: list[list[int]] = [[] for _ in range(nb)]
        for i, b in enumerate(self.labels):
            out[b].append(i)
        return tuple(tuple(blk) for blk in out)

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def color(self, i: int) -> str:
        k = self.n_upper
        return self.upper[i] if i < k else self.lower[i - k]

    def block_sizes(self) -> list[int]:
        return sorted(len(b) for b in self.blocks)

    @cached_property
    def through_blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks meeting both rows, ordered by smallest upper point."""
        k = self.n_upper
        tb = [b for b in self.blocks if b[0] < k <= b[-1]]
        return tuple(sorted(tb, key=lambda b: b[0]))

    @property
    def n_through(self) -> int:
        return len(self.through_blocks)

    # -- structural predicates -----------------------------------------

    def is_pair_partition(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    def is_noncrossing(self) -> bool:
        """Noncrossing on the circular order: upper left-to-right, then
        lower right-to-left.  Checked with a stack on that linearization."""
        order = list(range(self.n_upper)) + list(
            range(self.n_points - 1, self.n_upper - 1, -1)
        )
        remaining = {b: len(blk) for b, blk in enumerate(self.blocks)}
        stack: list[int] = []
        for i in order:
            b = self.labels[i]
            if stack and stack[-1] == b:
                pass
            elif b in stack:
                return False
            else:
                stack.append(b)
            remaining[b] -= 1
            if remaining[b] == 0:
                stack.pop()
        return True

    # -- category operations --------------------------------------------

    def tensor(self, other: "Partition") -> "Partition":
        """Horizontal concatenation."""
        k1, l1 = self.n_upper, self.n_lower
        k2, l2 = other.n_upper, other.n_lower
        shift = self.n_blocks
        lab = [0] * (k1 + k2 + l1 + l2)
        for i, b in enumerate(self.labels):
            j = i if i < k1 else i + k2
            lab[j] = b
        for i, b in enumerate(other.labels):
            j = k1 + i if i < k2 else k1 + l1 + i
            lab[j] = b + shift
        return Partition(self.upper + other.upper, self.lower + other.lower, _canonical_labels(lab))

    def adjoint(self) -> "Partition":
        """Reflect across the horizontal axis; colors stay with their points."""
        k, l = self.n_upper, self.n_lower
        lab = list(self.labels[k:]) + list(self.labels[:k])
        return Partition(self.lower, self.upper, _canonical_labels(lab))

    def compose(self, other: "Partition") -> tuple["Partition", int]:
        """Vertical composition self . other, stacking other on top.

        other : (k -> l) drawn above, self : (l -> m) below; the l lower
        points of other are glued to the l upper points of self.  Returns
        the composed (k -> m) partition together with the number of
        closed middle loops.  Colors on the glued row must agree.
        """
        if other.lower != self.upper:
            raise ValueError("middle colors do not match")
        k, l = other.n_upper, other.n_lower
        m = self.n_lower
        # points: 0..k-1 upper, k..k+l-1 middle, k+l..k+l+m-1 lower
        uf = UnionFind(k + l + m)
        for blk in other.blocks:
            for a, b in zip(blk, blk[1:]):
                uf.union(a, b)
        for blk in self.blocks:
            for a, b in zip(blk, blk[1:]):
                uf.union(a + k, b + k)
        roots_outer: dict[int, int] = {}
        lab = []
        outer = list(range(k)) + list(range(k + l, k + l + m))
        for i in outer:
            r = uf.find(i)
            if r not in roots_outer:
                roots_outer[r] = len(roots_outer)
            lab.append(roots_outer[r])
        loops = len({uf.find(i) for i in range(k, k + l)} - set(roots_outer))
        return (
            Partition(other.upper, self.lower, _canonical_labels(lab)),
            loops,
        )

    def rotate_left_down(self) -> "Partition":
        """Move the leftmost upper point to the front of the lower row,
        flipping its color."""
        if self.n_upper == 0:
            raise ValueError("no upper point to rotate")
        k = self.n_upper
        lab = list(self.labels[1:k]) + [self.labels[0]] + list(self.labels[k:])
        upper = self.upper[1:]
        lower = self.upper[0].translate(_FLIP) + self.lower
        return Partition(upper, lower, _canonical_labels(lab))

    def rotate_down_left(self) -> "Partition":
        """Inverse of rotate_left_down."""
        if self.n_lower == 0:
            raise ValueError("no lower point to rotate")
        k = self.n_upper
        lab = [self.labels[k]] + list(self.labels[:k]) + list(self.labels[k + 1 :])
        upper = self.lower[0].translate(_FLIP) + self.upper
        lower = self.lower[1:]
        return Partition(upper, lower, _canonical_labels(lab))

    def rotate_right_down(self) -> "Partition":
        """Move the rightmost upper point to the end of the lower row,
        flipping its color."""
        if self.n_upper == 0:
            raise ValueError("no upper point to rotate")
        k = self.n_upper
        lab = list(self.labels[: k - 1]) + list(self.labels[k:]) + [self.labels[k - 1]]
        upper = self.upper[:-1]
        lower = self.lower + self.upper[-1].translate(_FLIP)
        return Partition(upper, lower, _canonical_labels(lab))

    def rotate_down_right(self) -> "Partition":
        """Inverse of rotate_right_down."""
        if self.n_lower == 0:
            raise ValueError("no lower point to rotate")
        k = self.n_upper
        lab = list(self.labels[:k]) + [self.labels[-1]] + list(self.labels[k:-1])
        upper = self.upper + self.lower[-1].translate(_FLIP)
        lower = self.lower[:-1]
        return Partition(upper, lower, _canonical_labels(lab))

    def reverse(self) -> "Partition":
        """Mirror left-right and invert every color."""
        k, l = self.n_upper, self.n_lower
        perm = list(range(k - 1, -1, -1)) + list(range(k + l - 1, k - 1, -1))
        lab = [self.labels[p] for p in perm]
        return Partition(
            self.upper[::-1].translate(_FLIP),
            self.lower[::-1].translate(_FLIP),
            _canonical_labels(lab),
        )

    # -- projective structure --------------------------------------------

    def is_projective(self) -> bool:
        """p is projective when p = p* and p . p = p with no loop penalty
        changing it, i.e. pp = p and p* = p."""
        if self.upper != self.lower:
            return False
        if self.adjoint() != self:
            return False
        comp, _ = self.compose(self)
        return comp == self

    def build_projective(self) -> "Partition":
        """p* p, the canonical projective partition below p's domain."""
        comp, _ = self.adjoint().compose(self)
        return comp

    def range_projective(self) -> "Partition":
        """p p*, the canonical projective partition on p's codomain."""
        comp, _ = self.compose(self.adjoint())
        return comp

    def dominates(self, other: "Partition") -> bool:
        """q <= p when qp = q = pq (both projective, same colors)."""
        if self.upper != other.upper or self.lower != other.lower:
            return False
        a, _ = other.compose(self)
        b, _ = self.compose(other)
        return a == other and b == other


class NotFactorizable(Exception):
    pass


def through_factorize(p: Partition) -> list[Partition]:
    """Split a noncrossing projective partition into tensor factors with
    one through-block each.

    Cuts are placed at the leftmost upper point of every through-block
    after the first, so non-through clutter attaches to the factor of the
    through-block to its right (trailing clutter goes to the last factor).
    Raises NotFactorizable when there is no through-block.
    """
    if not (p.upper == p.lower and p.is_projective() and p.is_noncrossing()):
        raise ValueError("through_factorize needs a noncrossing projective partition")
    tb = p.through_blocks
    if not tb:
        raise NotFactorizable("no through-block")
    k = p.n_upper
    cuts = [0] + [blk[0] for blk in tb[1:]] + [k]
    factors = []
    for a, b in zip(cuts, cuts[1:]):
        pts = list(range(a, b)) + list(range(k + a, k + b))
        lab = [p.labels[i] for i in pts]
        factors.append(Partition(p.upper[a:b], p.lower[a:b], _canonical_labels(lab)))
    return factors


# ---------------------------------------------------------------------------
# Constructors for common partitions


def identity(colors: str) -> Partition:
    n = len(colors)
    return Partition(colors, colors, tuple(list(range(n)) * 2))


def word_partition(w: str) -> Partition:
    """p_w: each upper point joined to the lower point below it, colors w."""
    return identity(w)


def duality(c1: str, c2: str) -> Partition:
    """D_{c1 c2}: two upper points in one block, no lower points."""
    if c1 == c2:
        raise ValueError("duality partition needs two different colors")
    return Partition(c1 + c2, "", (0, 0))


def singleton(color: str = WHITE) -> Partition:
    """s: one lower point in its own block."""
    return Partition("", color, (0,))


def one_block(upper: str, lower: str) -> Partition:
    """All points in a single block (p_3, p_4 and friends)."""
    n = len(upper) + len(lower)
    return Partition(upper, lower, (0,) * n)


def crossing(c1: str, c2: str) -> Partition:
    """Two through-blocks crossing: upper c1 c2, lower c2 c1."""
    return Partition(c1 + c2, c2 + c1, (0, 1, 1, 0))


# ---------------------------------------------------------------------------
# Enumeration


def _all_set_partitions(n: int):
    """All set partitions of range(n) as canonical label tuples."""

    def rec(i, labels, nb):
        if i == n:
            yield tuple(labels)
            return
        for b in range(nb):
            labels.append(b)
            yield from rec(i + 1, labels, nb)
            labels.pop()
        labels.append(nb)
        yield from rec(i + 1, labels, nb + 1)
        labels.pop()

    yield from rec(0, [], 0)


def _pair_partitions(n: int):
    """All perfect matchings of range(n) as canonical label tuples."""
    if n % 2:
        return
    points = list(range(n))

    def rec(free: list[int], pairs: list[tuple[int, int]]):
        if not free:
            lab = [0] * n
            for b, (a, c) in enumerate(pairs):
                lab[a] = lab[c] = b
            yield _canonical_labels(lab)
            return
        a = free[0]
        rest = free[1:]
        for j, c in enumerate(rest):
            pairs.append((a, c))
            yield from rec(rest[:j] + rest[j + 1 :], pairs)
            pairs.pop()

    yield from rec(points, [])


def enumerate_partitions(
    upper: str,
    lower: str,
    *,
    noncrossing: bool = False,
    pair_only: bool = False,
    block_sizes=None,
    predicate=None,
):
    """All partitions with the given colored rows, filtered."""
    n = len(upper) + len(lower)
    if pair_only:
        source = _pair_partitions(n)
    else:
        source = _all_set_partitions(n)
    for labels in source:
        if block_sizes is not None:
            sizes: dict[int, int] = {}
            for b in labels:
                sizes[b] = sizes.get(b, 0) + 1
            if any(s not in block_sizes for s in sizes.values()):
                continue
        p = Partition(upper, lower, labels)
        if noncrossing and not p.is_noncrossing():
            continue
        if predicate is not None and not predicate(p):
            continue
        yield p


def all_colorings(n: int):
    return ("".join(c) for c in product(ALPHABET, repeat=n))
