"""Points, subsets and families of subsets over a small ground set.

A subset is a plain ``int`` bitmask: bit ``i`` is set when ``labels[i]``
belongs to the subset.
"""
from __future__ import annotations

from array import array
from bisect import bisect_left
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import DuplicateLabel, UnknownLabel

MAX_POINTS = 20


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not 1 <= len(labels) <= MAX_POINTS:
            raise ValueError(f"ground set must have 1..{MAX_POINTS} points, got {len(labels)}")
        seen = set()
        for name in labels:
            if name in seen:
                raise DuplicateLabel(name)
            seen.add(name)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        """Default labels a, b, c, ... (p0, p1, ... past 26 points)."""
        if n <= 26:
            return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:n]))
        return cls(tuple(f"p{i}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownLabel(name) from None

    def names(self, mask: int) -> list[str]:
        """Labels of ``mask`` sorted by label text, never by bit position."""
        return sorted(self.labels[i] for i in range(self.n) if mask >> i & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)


def subset_from_labels(gs: GroundSet, names: Iterable[str]) -> int:
    mask = 0
    for name in names:
        bit = 1 << gs.index(name)
        if mask & bit:
            raise DuplicateLabel(name)
        mask |= bit
    return mask


def points(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def submasks(mask: int) -> Iterator[int]:
    """Every submask of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SetFamily(Sequence[int]):
    """Strictly ascending, duplicate-free tuple of subset masks."""

    __slots__ = ("members", "_lookup")

    def __init__(self, members: Iterable[int] = ()):
        self.members = tuple(sorted(set(members)))
        self._lookup = frozenset(self.members)

    def __contains__(self, mask) -> bool:
        return mask in self._lookup

    def __getitem__(self, i):
        return self.members[i]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __eq__(self, other) -> bool:
        if isinstance(other, SetFamily):
            return self.members == other.members
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"SetFamily({list(self.members)!r})"

    def index(self, mask: int, *args) -> int:
        i = bisect_left(self.members, mask)
        if i < len(self.members) and self.members[i] == mask:
            return i
        raise ValueError(f"{mask} not in family")

    def flags(self, n: int) -> bytearray:
        out = bytearray(1 << n)
        for m in self.members:
            out[m] = 1
        return out

    @classmethod
    def from_flags(cls, flags) -> "SetFamily":
        fam = cls.__new__(cls)
        fam.members = tuple(kernels.flagged_members(flags))
        fam._lookup = frozenset(fam.members)
        return fam

    def complements(self, full: int) -> "SetFamily":
        return SetFamily(full ^ m for m in self.members)


def family_intersection(fam: Iterable[int], default: int) -> int:
    """Bitwise AND of the members, ``default`` for an empty family."""
    members = list(fam)
    if not members:
        return default
    return reduce(lambda x, y: x & y, members)


def family_union(fam: Iterable[int]) -> int:
    return reduce(lambda x, y: x | y, fam, 0)


def union_closed_witness(fam: SetFamily) -> tuple[int, int] | None:
    """First pair of members whose union is missing, or None.

    Pairwise closure suffices: any finite union is built from pairwise ones.
    """
    if not fam:
        return None
    width = max(fam.members).bit_length()
    flags = fam.flags(width)
    return kernels.union_closed_pair(array("I", fam.members), flags)


def is_union_closed(fam: SetFamily) -> bool:
    return union_closed_witness(fam) is None
