"""Literal readings of the definitions, computed from scratch by scanning.

Nothing here touches the kernel tables. The harness and the tests compare
these against the cached fast routes; keep them slow and obvious.
"""
from __future__ import annotations

from functools import cached_property

from .sets import family_intersection, family_union, points
from .space import GenTopology, mu_closure


def supersets_in(fam, A):
    return [U for U in fam if A & ~U == 0]


def subsets_in(fam, A):
    return [F for F in fam if F & ~A == 0]


def kernel_scan(open_fam, A, full):
    """Intersection of the members containing A (X when none do)."""
    return family_intersection(supersets_in(open_fam, A), full)


def join_scan(closed_fam, A):
    return family_union(subsets_in(closed_fam, A))


def adherence_scan(open_fam, A, n):
    """Points every one of whose open neighbourhoods in ``open_fam`` meets A."""
    out = 0
    for x in range(n):
        bit = 1 << x
        if all(U & A for U in open_fam if U & bit):
            out |= bit
    return out


class NaiveSpace:
    """Every derived family of one space, rebuilt from the definitions."""

    def __init__(self, T: GenTopology):
        self.T = T
        self.n = T.n
        self.full = T.full
        self.all = range(1 << T.n)

    @cached_property
    def mu_closures(self):
        return {E: mu_closure(self.T, E) for E in self.T.mu}

    @cached_property
    def smu_open(self) -> frozenset:
        """Sets squeezed between an open E and its closure."""
        out = set()
        for A in self.all:
            for E in self.T.mu:
                if E & ~A == 0 and A & ~self.mu_closures[E] == 0:
                    out.add(A)
                    break
        return frozenset(out)

    @cached_property
    def smu_closed(self) -> frozenset:
        return frozenset(self.full ^ A for A in self.smu_open)

    @cached_property
    def swedge_mu_sets(self) -> frozenset:
        return frozenset(A for A in self.all if kernel_scan(self.smu_open, A, self.full) == A)

    @cached_property
    def svee_mu_sets(self) -> frozenset:
        return frozenset(A for A in self.all if join_scan(self.smu_closed, A) == A)

    @cached_property
    def slambda_closed(self) -> frozenset:
        """Intersections of an s-wedge-mu-set with a semi-mu-closed set."""
        return frozenset(K & P for K in self.swedge_mu_sets for P in self.smu_closed)

    @cached_property
    def slambda_open(self) -> frozenset:
        return frozenset(self.full ^ A for A in self.slambda_closed)

    @cached_property
    def slambda_open_by_union(self) -> frozenset:
        """Unions of an s-vee-mu-set with a semi-mu-open set."""
        return frozenset(N | H for N in self.svee_mu_sets for H in self.smu_open)

    @cached_property
    def swedge_lambda_sets(self) -> frozenset:
        return frozenset(
            A for A in self.all if kernel_scan(self.slambda_open, A, self.full) == A
        )

    @cached_property
    def sbeta_closed(self) -> frozenset:
        """Intersections of an s-wedge-lambda-set with an s-lambda-closed set."""
        return frozenset(H & Q for H in self.swedge_lambda_sets for Q in self.slambda_closed)

    def lambda_closure(self, A):
        return adherence_scan(self.slambda_open, A, self.n)

    def sg_closed_quantified(self, A) -> bool:
        """Closure inside every s-lambda-open superset."""
        cl = self.lambda_closure(A)
        return all(cl & ~U == 0 for U in supersets_in(self.slambda_open, A))

    def sg_closed_by_difference(self, A) -> bool:
        """cl(A) - A holds no nonempty s-lambda-closed set."""
        gap = self.lambda_closure(A) & ~A
        return not any(F and F & ~gap == 0 for F in self.slambda_closed)

    def sg_wedge_quantified(self, A) -> bool:
        kernel = kernel_scan(self.slambda_open, A, self.full)
        return all(kernel & ~F == 0 for F in supersets_in(self.slambda_closed, A))


def singletons(n):
    return [1 << i for i in range(n)]


def separated(U, x, y) -> bool:
    """U holds exactly one of the points x, y (given as indices)."""
    return bool(U >> x & 1) != bool(U >> y & 1)


def point_list(mask):
    return list(points(mask))
