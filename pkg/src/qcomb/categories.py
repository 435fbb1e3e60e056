"""Named categories of partitions and bounded generated closures.

The named categories come in two groups.  The uncolored ones (NC2, NC12,
NC12', NC12#, NCeven, NC', NC, P2) are color-insensitive predicates on the
block structure; membership ignores the coloring entirely.  CU is the
colored category of noncrossing pair partitions where connected points
have the same color in different rows and different colors in the same
row.  (The pair-and-color rule alone admits the crossing swap, which the
corresponding quantum group excludes, so noncrossing is part of the CU
predicate here.)
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import (
    Partition,
    all_colorings,
    enumerate_partitions,
    identity,
)
from .words import WHITE


class FrameTooLarge(Exception):
    pass


MAX_FRAME_POINTS = 12


# ---------------------------------------------------------------------------
# Membership predicates


def _sizes(p: Partition) -> list[int]:
    return [len(b) for b in p.blocks]


def _singleton_parity_ok(p: Partition) -> bool:
    return sum(1 for b in p.blocks if len(b) == 1) % 2 == 0


def _sharp_ok(p: Partition) -> bool:
    """Even number of singletons between any two connected points, in the
    circular order (upper left to right, then lower right to left)."""
    k = p.n_upper
    order = list(range(k)) + list(range(p.n_points - 1, k - 1, -1))
    pos = {pt: i for i, pt in enumerate(order)}
    single = [len(p.blocks[p.labels[pt]]) == 1 for pt in order]
    prefix = [0]
    for s in single:
        prefix.append(prefix[-1] + (1 if s else 0))
    for blk in p.blocks:
        if len(blk) != 2:
            continue
        a, b = sorted(pos[pt] for pt in blk)
        if (prefix[b] - prefix[a + 1]) % 2:
            return False
    return True


def in_nc2(p: Partition) -> bool:
    return p.is_noncrossing() and all(s == 2 for s in _sizes(p))


def in_nc12(p: Partition) -> bool:
    return p.is_noncrossing() and all(s <= 2 for s in _sizes(p))


def in_nc12_prime(p: Partition) -> bool:
    return in_nc12(p) and _singleton_parity_ok(p)


def in_nc12_sharp(p: Partition) -> bool:
    return in_nc12_prime(p) and _sharp_ok(p)


def in_nc_even(p: Partition) -> bool:
    return p.is_noncrossing() and all(s % 2 == 0 for s in _sizes(p))


def in_nc_prime(p: Partition) -> bool:
    return p.is_noncrossing() and sum(1 for s in _sizes(p) if s % 2) % 2 == 0


def in_nc(p: Partition) -> bool:
    return p.is_noncrossing()


def in_p2(p: Partition) -> bool:
    return all(s == 2 for s in _sizes(p))


def in_cu(p: Partition) -> bool:
    """Noncrossing pairs; same color across rows, different color within."""
    if not p.is_noncrossing():
        return False
    k = p.n_upper
    for blk in p.blocks:
        if len(blk) != 2:
            return False
        a, b = blk
        same_row = (a < k) == (b < k)
        if same_row and p.color(a) == p.color(b):
            return False
        if not same_row and p.color(a) != p.color(b):
            return False
    return True


@dataclass(frozen=True)
class CategorySpec:
    """A named category (pure predicate) or a generated closure."""

    name: str
    predicate: callable = field(compare=False)
    colored: bool = False
    members: frozenset = field(default=None, compare=False)  # Generated only
    point_bound: int | None = None

    def contains(self, p: Partition) -> bool:
        if self.members is not None:
            return p in self.members
        return self.predicate(p)

    def __str__(self) -> str:
        return self.name


CU = CategorySpec("CU", in_cu, colored=True)
NC2 = CategorySpec("NC2", in_nc2)
NC12 = CategorySpec("NC12", in_nc12)
NC12_PRIME = CategorySpec("NC12prime", in_nc12_prime)
NC12_SHARP = CategorySpec("NC12sharp", in_nc12_sharp)
NC_EVEN = CategorySpec("NCeven", in_nc_even)
NC_PRIME = CategorySpec("NCprime", in_nc_prime)
NC = CategorySpec("NCall", in_nc)
P2 = CategorySpec("P2", in_p2)

NAMED = {
    c.name: c
    for c in (CU, NC2, NC12, NC12_PRIME, NC12_SHARP, NC_EVEN, NC_PRIME, NC, P2)
}

# block-size restrictions used to prune enumeration
_BLOCK_SIZES = {
    "NC2": {2},
    "NC12": {1, 2},
    "NC12prime": {1, 2},
    "NC12sharp": {1, 2},
    "NCeven": {2, 4, 6, 8, 10, 12},
    "P2": {2},
    "CU": {2},
}


def contains(cat: CategorySpec, p: Partition) -> bool:
    return cat.contains(p)


@lru_cache(maxsize=None)
def _enumerate_cached(cat_name: str, upper: str, lower: str) -> tuple[Partition, ...]:
    cat = NAMED[cat_name]
    pair_only = _BLOCK_SIZES.get(cat_name) == {2}
    return tuple(
        enumerate_partitions(
            upper,
            lower,
            pair_only=pair_only,
            block_sizes=_BLOCK_SIZES.get(cat_name),
            predicate=cat.predicate,
        )
    )


def enumerate_members(
    cat: CategorySpec, upper: str, lower: str, cache_dir: str | None = None
) -> list[Partition]:
    """All members of the category with the given frame."""
    if len(upper) + len(lower) > MAX_FRAME_POINTS:
        raise FrameTooLarge(f"frame has {len(upper) + len(lower)} > {MAX_FRAME_POINTS} points")
    if cat.members is not None:
        return [p for p in cat.members if p.upper == upper and p.lower == lower]
    if cache_dir is not None:
        path = os.path.join(cache_dir, f"{cat.name}_{upper or 'e'}_{lower or 'e'}.txt")
        if os.path.exists(path):
            with open(path) as fh:
                return [Partition.from_str(line.strip()) for line in fh if line.strip()]
        result = list(_enumerate_cached(cat.name, upper, lower))
        os.makedirs(cache_dir, exist_ok=True)
        with open(path, "w") as fh:
            fh.writelines(str(p) + "\n" for p in result)
        return result
    return list(_enumerate_cached(cat.name, upper, lower))


def all_members(cat: CategorySpec, point_bound: int, colorings=None) -> list[Partition]:
    """All members with at most point_bound points.

    For uncolored categories only all-white frames are produced (membership
    does not depend on the coloring, and all computations downstream are
    color-blind for these categories).  For CU every coloring is scanned.
    """
    out = []
    for k in range(point_bound + 1):
        for l in range(point_bound + 1 - k):
            if cat.colored:
                for up in all_colorings(k):
                    for lo in all_colorings(l):
                        out.extend(enumerate_members(cat, up, lo))
            else:
                out.extend(enumerate_members(cat, WHITE * k, WHITE * l))
    return out


# ---------------------------------------------------------------------------
# Generated categories


def generated(gens: list[Partition], point_bound: int) -> CategorySpec:
    """Closure of gens + id under the five category operations, truncated
    to partitions with at most point_bound points."""
    members: set[Partition] = {identity(WHITE)}
    for g in gens:
        if g.n_points > point_bound:
            raise ValueError("generator exceeds the point bound")
        members.add(g)
    queue = list(members)
    while queue:
        p = queue.pop()
        new = {p.adjoint(), p.reverse()}
        if p.n_upper:
            new.add(p.rotate_left_down())
            new.add(p.rotate_right_down())
        if p.n_lower:
            new.add(p.rotate_down_left())
            new.add(p.rotate_down_right())
        for q in list(members):
            for a, b in ((p, q), (q, p)):
                if a.n_points + b.n_points <= point_bound:
                    new.add(a.tensor(b))
                if b.lower == a.upper:
                    new.add(a.compose(b)[0])
                if a.lower == b.upper:
                    new.add(b.compose(a)[0])
        for q in new:
            if q.n_points <= point_bound and q not in members:
                members.add(q)
                queue.append(q)
    return CategorySpec(
        "Generated", None, colored=True, members=frozenset(members), point_bound=point_bound
    )
