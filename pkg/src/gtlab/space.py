"""Generalized topologies and the primitive mu-closure / mu-interior."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import MissingEmptySet, NotUnionClosed
from .sets import GroundSet, SetFamily, family_union, union_closed_witness


@dataclass(frozen=True)
class GenTopology:
    """A ground set and a family ``mu`` containing the empty set and closed
    under unions. ``X`` itself need not be open."""

    gs: GroundSet
    mu: SetFamily
    name: str | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.gs.n

    @property
    def full(self) -> int:
        return self.gs.full

    def key(self) -> tuple:
        return (self.gs.labels, self.mu.members)

    def describe(self) -> dict:
        return {
            "points": list(self.gs.labels),
            "open_sets": sorted(self.gs.names(m) for m in self.mu),
        }


def validate_gt(gs: GroundSet, fam: SetFamily | Iterable[int], name: str | None = None) -> GenTopology:
    if not isinstance(fam, SetFamily):
        fam = SetFamily(fam)
    for m in fam:
        if m < 0 or m > gs.full:
            raise ValueError(f"mask {m} outside ground set of {gs.n} points")
    if 0 not in fam:
        raise MissingEmptySet()
    pair = union_closed_witness(fam)
    if pair is not None:
        raise NotUnionClosed(pair, [gs.names(pair[0]), gs.names(pair[1])])
    return GenTopology(gs, fam, name)


def mu_interior(T: GenTopology, A: int) -> int:
    return family_union(u for u in T.mu if u & ~A == 0)


def mu_closure(T: GenTopology, A: int) -> int:
    """Adherent points of A: every open set around the point meets A.

    A point with no open neighbourhood is adherent to every set.
    """
    out = 0
    for x in range(T.n):
        bit = 1 << x
        if all(u & A for u in T.mu if u & bit):
            out |= bit
    return out


def mu_closure_by_closed_sets(T: GenTopology, A: int) -> int:
    """Intersection of the mu-closed supersets of A (X is always one)."""
    full = T.full
    out = full
    for u in T.mu:
        closed = full ^ u
        if A & ~closed == 0:
            out &= closed
    return out
