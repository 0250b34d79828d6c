"""Semi-mu-open sets and the operators built on them.

``build_cache`` materializes every operator as a table indexed by subset
mask, so later queries are single lookups.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass

from . import kernels
from .errors import DefinitionMismatch
from .sets import SetFamily
from .space import GenTopology


@dataclass(frozen=True, eq=False)
class OperatorCache:
    space: GenTopology
    mu_interior: array
    mu_closure: array
    s_mu_open: SetFamily
    s_mu_closed: SetFamily
    open_flags: bytearray
    closed_flags: bytearray
    closure: array
    interior: array
    wedge: array
    vee: array

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def full(self) -> int:
        return self.space.full


def build_cache(T: GenTopology) -> OperatorCache:
    n = T.n
    mu_members = array("I", T.mu.members)
    int_tbl = kernels.join_below(T.mu.flags(n), n)
    cl_tbl = kernels.adherence_closure(mu_members, n)

    open_flags = kernels.semi_open_flags(int_tbl, cl_tbl)
    witnessed = kernels.semi_open_witness_flags(mu_members, cl_tbl, n)
    if open_flags != witnessed:
        bad = next(a for a in range(1 << n) if open_flags[a] != witnessed[a])
        raise DefinitionMismatch(
            f"semi-open by A<=cl(int A) is {bool(open_flags[bad])} but by an "
            f"open E<=A<=cl(E) is {bool(witnessed[bad])} for subset {T.gs.names(bad)}"
        )
    closed_flags = kernels.complement_flags(open_flags, n)

    interior = kernels.join_below(open_flags, n)
    bad = kernels.first_escape(interior, open_flags)
    if bad >= 0:
        raise DefinitionMismatch(
            f"semi-open sets are not union-closed: the union of those inside "
            f"{T.gs.names(bad)} is not semi-open"
        )

    return OperatorCache(
        space=T,
        mu_interior=int_tbl,
        mu_closure=cl_tbl,
        s_mu_open=SetFamily.from_flags(open_flags),
        s_mu_closed=SetFamily.from_flags(closed_flags),
        open_flags=open_flags,
        closed_flags=closed_flags,
        closure=kernels.meet_above(closed_flags, n),
        interior=interior,
        wedge=kernels.meet_above(open_flags, n),
        vee=kernels.join_below(closed_flags, n),
    )


def s_mu_closure(C: OperatorCache, A: int) -> int:
    return C.closure[A]


def s_mu_interior(C: OperatorCache, A: int) -> int:
    return C.interior[A]


def s_wedge_mu(C: OperatorCache, A: int) -> int:
    """Intersection of the semi-open supersets of A; X when there are none."""
    return C.wedge[A]


def s_vee_mu(C: OperatorCache, A: int) -> int:
    """Union of the semi-closed subsets of A; empty when there are none."""
    return C.vee[A]


def is_s_mu_open(C: OperatorCache, A: int) -> bool:
    return bool(C.open_flags[A])


def is_s_mu_closed(C: OperatorCache, A: int) -> bool:
    return bool(C.closed_flags[A])


def is_s_wedge_mu_set(C: OperatorCache, A: int) -> bool:
    return C.wedge[A] == A


def is_s_vee_mu_set(C: OperatorCache, A: int) -> bool:
    return C.vee[A] == A
