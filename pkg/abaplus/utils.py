"""Small bitmask helpers used by the enumeration code."""

from __future__ import annotations

from typing import Iterator


def bit(index: int) -> int:
    return 1 << index


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit indices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(small: int, big: int) -> bool:
    return small & ~big == 0


def maximal_masks(masks) -> list[int]:
    """Return the inclusion-maximal masks, ascending."""
    unique = sorted(set(masks))
    return [m for m in unique if not any(m != o and is_subset(m, o) for o in unique)]


def transitive_closure(pairs) -> frozenset:
    """Transitive closure of a finite relation given as (a, b) pairs."""
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        successors: dict = {}
        for a, b in closed:
            successors.setdefault(a, set()).add(b)
        for a, b in list(closed):
            for c in successors.get(b, ()):
                if (a, c) not in closed:
                    closed.add((a, c))
                    changed = True
    return frozenset(closed)
