"""The s-lambda layer: s-lambda-closed/open sets and their operators."""
from __future__ import annotations

from array import array
from dataclasses import dataclass

from . import kernels
from .errors import DefinitionMismatch, NotOpen
from .semi import OperatorCache, build_cache
from .sets import SetFamily


@dataclass(frozen=True, eq=False)
class LambdaCache:
    base: OperatorCache
    s_lambda_closed: SetFamily
    s_lambda_open: SetFamily
    closed_flags: bytearray
    open_flags: bytearray
    closure: array
    interior: array
    wedge: array
    vee: array
    # derived classification tables
    sg_closed_flags: bytearray
    sbeta_closed_flags: bytearray

    @property
    def space(self):
        return self.base.space

    @property
    def gs(self):
        return self.base.space.gs

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def full(self) -> int:
        return self.base.full


def is_s_lambda_closed(C: OperatorCache, A: int) -> bool:
    return C.wedge[A] & C.closure[A] == A


def build_lambda_cache(C: OperatorCache) -> LambdaCache:
    n = C.n
    closed_flags = kernels.meet_fixed_flags(C.wedge, C.closure)
    open_flags = kernels.complement_flags(closed_flags, n)

    closure = kernels.meet_above(closed_flags, n)
    bad = kernels.first_escape(closure, closed_flags)
    if bad >= 0:
        raise DefinitionMismatch(
            "s-lambda-closed sets are not closed under intersection: the "
            f"intersection of those around {C.space.gs.names(bad)} escapes"
        )
    wedge = kernels.meet_above(open_flags, n)
    return LambdaCache(
        base=C,
        s_lambda_closed=SetFamily.from_flags(closed_flags),
        s_lambda_open=SetFamily.from_flags(open_flags),
        closed_flags=closed_flags,
        open_flags=open_flags,
        closure=closure,
        interior=kernels.join_below(open_flags, n),
        wedge=wedge,
        vee=kernels.join_below(closed_flags, n),
        sg_closed_flags=kernels.contained_flags(closure, wedge),
        sbeta_closed_flags=kernels.meet_fixed_flags(wedge, closure),
    )


def s_lambda_closure(L: LambdaCache, A: int) -> int:
    return L.closure[A]


def s_lambda_interior(L: LambdaCache, A: int) -> int:
    return L.interior[A]


def s_wedge_lambda(L: LambdaCache, A: int) -> int:
    return L.wedge[A]


def s_vee_lambda(L: LambdaCache, A: int) -> int:
    return L.vee[A]


def decompose_s_lambda_open(L: LambdaCache, A: int) -> tuple[int, int]:
    """Split an s-lambda-open A into (s-vee-mu kernel, semi-mu-interior).

    The first part is an s-vee-mu-set, the second is semi-mu-open, and their
    union is A. Raises NotOpen when A is not s-lambda-open.
    """
    if not L.open_flags[A]:
        raise NotOpen(f"{L.gs.names(A)} is not s-lambda-open")
    C = L.base
    vee, inner = C.vee[A], C.interior[A]
    if vee | inner != A:
        raise DefinitionMismatch(
            f"decomposition of {L.gs.names(A)} gives {L.gs.names(vee | inner)}"
        )
    return vee, inner


def build(T) -> LambdaCache:
    """Shorthand for both cache layers of a space."""
    return build_lambda_cache(build_cache(T))
