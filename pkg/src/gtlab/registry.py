"""Registry of checkable results.

Each entry maps an id to a check taking a ``Context`` and returning ``None``
on success or a witness dict naming the failing instance. Both sides of every
implication or equivalence are computed by separate routes: cached kernel
tables on one side, literal scans from ``definitional`` on the other.
"""
from __future__ import annotations

from functools import cached_property
from itertools import permutations, product

from . import axioms as ax
from .classify import is_sg_wedge_lambda
from .definitional import (
    NaiveSpace,
    adherence_scan,
    join_scan,
    kernel_scan,
    singletons,
)
from .enumerate import enumerate_gts
from .lambda_ops import LambdaCache, build
from .maps import PointMap
from .sets import submasks
from .space import GenTopology, mu_closure, mu_closure_by_closed_sets, mu_interior


class Context:
    """One space with its caches and its from-scratch twin."""

    def __init__(self, T: GenTopology, L: LambdaCache | None = None):
        self.T = T
        self.L = L if L is not None else build(T)
        self.C = self.L.base
        self.n = T.n
        self.full = T.full
        self.all = range(1 << T.n)

    @cached_property
    def naive(self) -> NaiveSpace:
        return NaiveSpace(self.T)

    def names(self, A):
        return self.T.gs.names(A)

    def fail(self, detail, *subsets, points=None, **extra):
        out = {"detail": detail}
        if subsets:
            out["subsets"] = [self.names(A) for A in subsets]
        if points is not None:
            out["points"] = [self.T.gs.labels[i] for i in points]
        out.update(extra)
        return out

    def supersets(self, A):
        """Every B containing A."""
        for extra in submasks(self.full ^ A):
            yield A | extra

    # flag shorthands
    def sg_closed(self, A):
        return bool(self.L.sg_closed_flags[A])

    def sg_open(self, A):
        return bool(self.L.sg_closed_flags[self.full ^ A])

    def sl_closed(self, A):
        return bool(self.L.closed_flags[A])

    def sl_open(self, A):
        return bool(self.L.open_flags[A])

    def sbeta(self, A):
        return bool(self.L.sbeta_closed_flags[A])


REGISTRY: dict = {}


def theorem(tid, anchor):
    def register(fn):
        REGISTRY[tid] = (anchor, fn)
        return fn

    return register


def _closure_operator_laws(x: Context, cl, is_closed, label):
    """Extensive, idempotent, monotone, closed-valued, fixed points = closed."""
    for A in x.all:
        c = cl[A]
        if A & ~c:
            return x.fail(f"{label}: A not inside its closure", A)
        if cl[c] != c:
            return x.fail(f"{label}: closure not idempotent", A)
        if not is_closed(c):
            return x.fail(f"{label}: closure not closed", A)
        if is_closed(A) != (c == A):
            return x.fail(f"{label}: closed <=> A = cl(A) fails", A)
        for B in x.supersets(A):
            if c & ~cl[B]:
                return x.fail(f"{label}: closure not monotone", A, B)
    return None


def _interior_operator_laws(x: Context, it, is_open, label):
    for A in x.all:
        i = it[A]
        if i & ~A:
            return x.fail(f"{label}: interior not inside A", A)
        if not is_open(i):
            return x.fail(f"{label}: interior not open", A)
        if is_open(A) != (i == A):
            return x.fail(f"{label}: open <=> int(A) = A fails", A)
        for B in x.supersets(A):
            if i & ~it[B]:
                return x.fail(f"{label}: interior not monotone", A, B)
    return None


# ---- preliminaries ----

@theorem("L2", "For mu-closure the following hold")
def _l2(x: Context):
    T, cl = x.T, x.C.mu_closure
    for A in x.all:
        direct = mu_closure(T, A)
        if cl[A] != direct or mu_closure_by_closed_sets(T, A) != direct:
            return x.fail("adherence closure differs from intersection of closed supersets", A)
    return _closure_operator_laws(x, cl, lambda A: (x.full ^ A) in T.mu, "mu-closure")


@theorem("R3", "for mu-interior the following hold")
def _r3(x: Context):
    T, it, cl = x.T, x.C.mu_interior, x.C.mu_closure
    for A in x.all:
        if it[A] != mu_interior(T, A):
            return x.fail("interior table differs from direct union", A)
        if x.full ^ cl[x.full ^ A] != it[A]:
            return x.fail("X - cl(X - A) differs from int(A)", A)
    return _interior_operator_laws(x, it, lambda A: A in T.mu, "mu-interior")


@theorem("D4", "there exists a mu-open set E")
def _d4(x: Context):
    for A in x.all:
        if bool(x.C.open_flags[A]) != (A in x.naive.smu_open):
            return x.fail("A <= cl(int A) disagrees with the open-E form", A)
    return None


@theorem("SMU-GT", "collection of smu-open sets forms a generalized topology")
def _smu_gt(x: Context):
    opens = x.naive.smu_open
    for A in x.T.mu:
        if A not in opens:
            return x.fail("mu-open set not semi-mu-open", A)
    for A in opens:
        for B in opens:
            if A | B not in opens:
                return x.fail("union of semi-mu-open sets not semi-mu-open", A, B)
    return None


@theorem("L7", "For smu-closure the following hold")
def _l7(x: Context):
    C, naive = x.C, x.naive
    for A in x.all:
        if C.closure[A] != kernel_scan(naive.smu_closed, A, x.full):
            return x.fail("semi-closure differs from intersection of semi-closed supersets", A)
        if C.closure[A] != adherence_scan(naive.smu_open, A, x.n):
            return x.fail("semi-closure differs from semi-adherence", A)
    return _closure_operator_laws(x, C.closure, lambda A: bool(C.closed_flags[A]), "semi-closure")


@theorem("R8", "for smu-interior the following hold")
def _r8(x: Context):
    C = x.C
    for A in x.all:
        if C.interior[A] != join_scan(x.naive.smu_open, A):
            return x.fail("semi-interior differs from union of semi-open subsets", A)
    return _interior_operator_laws(x, C.interior, lambda A: bool(C.open_flags[A]), "semi-interior")


def _kernel_laws(x: Context, wedge, vee, clause, label):
    full = x.full
    if clause == 1:
        if (wedge[0], vee[0], wedge[full], vee[full]) != (0, 0, full, full):
            return x.fail(f"{label}: kernels of empty set / X wrong")
        return None
    for A in x.all:
        if clause == 2 and (A & ~wedge[A] or vee[A] & ~A):
            return x.fail(f"{label}: A <= wedge(A) or vee(A) <= A fails", A)
        if clause == 3 and (wedge[wedge[A]] != wedge[A] or vee[vee[A]] != vee[A]):
            return x.fail(f"{label}: kernel not idempotent", A)
        if clause == 4:
            for B in x.supersets(A):
                if wedge[A] & ~wedge[B] or vee[A] & ~vee[B]:
                    return x.fail(f"{label}: kernel not monotone", A, B)
        if clause == 5 and (
            wedge[full ^ A] != full ^ vee[A] or vee[full ^ A] != full ^ wedge[A]
        ):
            return x.fail(f"{label}: complement duality fails", A)
    return None


def _register_kernel_clauses():
    for clause in range(1, 6):
        def mu_check(x, clause=clause):
            return _kernel_laws(x, x.C.wedge, x.C.vee, clause, "mu")

        def lam_check(x, clause=clause):
            return _kernel_laws(x, x.L.wedge, x.L.vee, clause, "lambda")

        theorem(f"L9.{clause}", "Then the following hold")(mu_check)
        theorem(f"L9.{clause}-lambda", "if mu is replaced by lambda")(lam_check)


_register_kernel_clauses()


@theorem("D5", "if there is no smu-open set")
def _d5(x: Context):
    naive = x.naive
    for A in x.all:
        if x.C.wedge[A] != kernel_scan(naive.smu_open, A, x.full):
            return x.fail("wedge table differs from scan", A)
        if x.C.vee[A] != join_scan(naive.smu_closed, A):
            return x.fail("vee table differs from scan", A)
    return None


@theorem("N9.vee", "is a svee_mu-set if and only if")
def _n9_vee(x: Context):
    naive = x.naive
    for A in x.all:
        if (A in naive.svee_mu_sets) != ((x.full ^ A) in naive.swedge_mu_sets):
            return x.fail("vee-set <=> complement wedge-set fails", A)
    vees = naive.svee_mu_sets
    for A in vees:
        for B in vees:
            if A | B not in vees:
                return x.fail("union of s-vee-mu-sets not one", A, B)
    return None


@theorem("L7-lambda", "slambda-closure laws")
def _l7_lambda(x: Context):
    L, naive = x.L, x.naive
    for A in x.all:
        if L.closure[A] != adherence_scan(naive.slambda_open, A, x.n):
            return x.fail("lambda-closure table differs from lambda-adherence", A)
    return _closure_operator_laws(x, L.closure, x.sl_closed, "lambda-closure")


@theorem("R8-lambda", "slambda-interior laws")
def _r8_lambda(x: Context):
    L = x.L
    for A in x.all:
        if x.full ^ L.closure[x.full ^ A] != L.interior[A]:
            return x.fail("X - cl(X - A) differs from lambda-interior", A)
        if L.interior[A] != join_scan(x.naive.slambda_open, A):
            return x.fail("lambda-interior differs from union of open subsets", A)
    return _interior_operator_laws(x, L.interior, x.sl_open, "lambda-interior")


# ---- s-lambda-closed and sg-lambda-closed sets ----

@theorem("T12", "whenever F subset A and F is slambda-closed")
def _t12(x: Context):
    L, naive = x.L, x.naive
    for A in x.all:
        by_def = naive.sg_closed_quantified(x.full ^ A)
        inner = L.interior[A]
        by_sets = all(not F & ~inner for F in L.s_lambda_closed if not F & ~A)
        by_kernel = not L.vee[A] & ~inner
        if not by_def == by_sets == by_kernel:
            return x.fail(
                f"sg-open routes disagree: definition={by_def}, closed subsets={by_sets}, kernel={by_kernel}",
                A,
            )
    return None


@theorem("L13.1", "A is slambda-closed if and only if")
def _l13_1(x: Context):
    for A in x.all:
        if x.sl_closed(A) != (A in x.naive.slambda_closed):
            return x.fail("kernel-closure form disagrees with K-and-P form", A)
    return None


@theorem("L13.2", "If A is slambda-closed then")
def _l13_2(x: Context):
    for A in x.all:
        if x.sl_closed(A) and x.C.wedge[A] & x.L.closure[A] != A:
            return x.fail("A != wedge_mu(A) & lambda-closure(A)", A)
    return None


@theorem("L13.3", "If A is smu-closed then A is slambda-closed")
def _l13_3(x: Context):
    for A in x.all:
        if x.C.closed_flags[A] and not x.sl_closed(A):
            return x.fail("semi-closed but not s-lambda-closed", A)
    return None


@theorem("R14", "every swedge_mu-set is slambda-closed")
def _r14(x: Context):
    for A in x.all:
        if A in x.naive.swedge_mu_sets and not x.sl_closed(A):
            return x.fail("s-wedge-mu-set not s-lambda-closed", A)
        if x.sl_closed(A) and not x.sg_closed(A):
            return x.fail("s-lambda-closed but not sg-lambda-closed", A)
    return None


@theorem("D16", "then A is sg-wedge-lambda-set")
def _d16(x: Context):
    naive, full = x.naive, x.full
    for A in x.all:
        if x.L.wedge[A] == A and not naive.sg_wedge_quantified(A):
            return x.fail("s-wedge-lambda-set not sg-wedge-lambda", A)
        if x.L.vee[A] == A and not naive.sg_wedge_quantified(full ^ A):
            return x.fail("s-vee-lambda-set not sg-vee-lambda", A)
    return None


@theorem("T17.1", "either slambda-open or sg-vee-lambda-set")
def _t17_1(x: Context):
    for s in singletons(x.n):
        if not (x.sl_open(s) or x.naive.sg_wedge_quantified(x.full ^ s)):
            return x.fail("singleton neither s-lambda-open nor sg-vee-lambda", s)
    return None


@theorem("T17.2", "either slambda-closed or sg-lambda-open")
def _t17_2(x: Context):
    for s in singletons(x.n):
        if not (x.sl_closed(s) or x.naive.sg_closed_quantified(x.full ^ s)):
            return x.fail("singleton neither s-lambda-closed nor sg-lambda-open", s)
    return None


@theorem("T18.1", "If A is slambda-closed, then A is sg-lambda-closed")
def _t18_1(x: Context):
    for A in x.all:
        if x.sl_closed(A) and not x.naive.sg_closed_quantified(A):
            return x.fail("s-lambda-closed but not sg-lambda-closed", A)
    return None


@theorem("T18.2", "sg-lambda-closed and slambda-open, then")
def _t18_2(x: Context):
    for A in x.all:
        if x.sg_closed(A) and x.sl_open(A) and not x.sl_closed(A):
            return x.fail("sg-closed and s-lambda-open but not s-lambda-closed", A)
    return None


@theorem("T18.3", "A subset B subset cl(A), then B is sg-lambda-closed")
def _t18_3(x: Context):
    L = x.L
    for A in x.all:
        if not x.sg_closed(A):
            continue
        for extra in submasks(L.closure[A] & ~A):
            B = A | extra
            if not x.sg_closed(B):
                return x.fail("B between A and cl(A) not sg-closed", A, B)
    return None


@theorem("T19.1", "does not contain any non-void slambda-closed set")
def _t19_1(x: Context):
    naive = x.naive
    for A in x.all:
        kernel_form = x.sg_closed(A)
        quantified = naive.sg_closed_quantified(A)
        difference = naive.sg_closed_by_difference(A)
        if not kernel_form == quantified == difference:
            return x.fail(
                f"sg-closed routes disagree: kernel={kernel_form}, "
                f"quantified={quantified}, difference={difference}",
                A,
            )
    return None


@theorem("T19.2", "A is sg-lambda-closed (resp. sg-lambda-open) if and only if")
def _t19_2(x: Context):
    L = x.L
    for A in x.all:
        if L.wedge[A] == A and x.sg_closed(A) != x.sl_closed(A):
            return x.fail("on an s-wedge-lambda-set sg-closed != s-lambda-closed", A)
        if L.vee[A] == A and x.sg_open(A) != x.sl_open(A):
            return x.fail("on an s-vee-lambda-set sg-open != s-lambda-open", A)
    return None


@theorem("T19.3", "if sA-wedge-lambda is sg-lambda-closed")
def _t19_3(x: Context):
    L = x.L
    for A in x.all:
        if x.sg_closed(L.wedge[A]) and not x.sg_closed(A):
            return x.fail("wedge(A) sg-closed but A not", A)
        if x.sg_open(L.vee[A]) and not x.sg_open(A):
            return x.fail("vee(A) sg-open but A not", A)
    return None


def _all_meets(family, full):
    """The intersection of every subfamily (X for the empty one)."""
    reach = {full}
    for m in family:
        reach |= {r & m for r in reach}
    return reach


def _all_joins(family):
    reach = {0}
    for m in family:
        reach |= {r | m for r in reach}
    return reach


@theorem("L20", "arbitrary intersection of swedge_mu-sets")
def _l20(x: Context):
    naive = x.naive
    for level, sets in (("mu", naive.swedge_mu_sets), ("lambda", naive.swedge_lambda_sets)):
        for A in sorted(_all_meets(sorted(sets), x.full)):
            if A not in sets:
                return x.fail(f"intersection of s-wedge-{level}-sets is not one", A)
    return None


@theorem("T21.1", "is slambda-closed")
def _t21_1(x: Context):
    fam = x.L.s_lambda_closed
    for A in sorted(_all_meets(fam, x.full)):
        if A not in fam:
            return x.fail("intersection of s-lambda-closed sets escapes", A)
    return None


@theorem("T21.2", "is slambda-open")
def _t21_2(x: Context):
    fam = x.L.s_lambda_open
    for A in sorted(_all_joins(fam)):
        if A not in fam:
            return x.fail("union of s-lambda-open sets escapes", A)
    return None


@theorem("T24.1", "N is a svee_mu-set")
def _t24_1(x: Context):
    for A in x.all:
        if x.sl_open(A) != (A in x.naive.slambda_open_by_union):
            return x.fail("s-lambda-open disagrees with N-union-H form", A)
    return None


@theorem("T24.2", "A = sA-vee-mu union sInt_mu(A)")
def _t24_2(x: Context):
    C = x.C
    for A in x.all:
        if x.sl_open(A) != (C.vee[A] | C.interior[A] == A):
            return x.fail("s-lambda-open disagrees with decomposition identity", A)
    return None


# ---- s-beta-lambda-closed sets ----

@theorem("L29", "if and only if A=sA-wedge-lambda")
def _l29(x: Context):
    for A in x.all:
        if x.sbeta(A) != (A in x.naive.sbeta_closed):
            return x.fail("kernel-closure form disagrees with H-and-Q form", A)
    return None


@theorem("R29A", "slambda-closed set is both sg-lambda-closed and sbeta-lambda-closed")
def _r29a(x: Context):
    for A in x.all:
        if x.sl_closed(A) and not (x.sg_closed(A) and x.sbeta(A)):
            return x.fail("s-lambda-closed but not both sg- and s-beta-closed", A)
    return None


@theorem("T30", "both sg-lambda-closed and sbeta-lambda-closed")
def _t30(x: Context):
    for A in x.all:
        if x.sl_closed(A) != (x.sg_closed(A) and x.sbeta(A)):
            return x.fail("s-lambda-closed != sg-closed and s-beta-closed", A)
    return None


# ---- separation axioms ----

def _same(x: Context, label, *routes):
    values = [fn(x.L) for fn in routes]
    oks = [w is None for w in values]
    if len(set(oks)) != 1:
        return x.fail(f"{label}: routes disagree {oks}")
    return None


@theorem("T23", "Every singleton of X is either")
def _t23(x: Context):
    return _same(
        x,
        "T1/2 characterizations",
        ax.sg_closed_are_slambda_closed,
        ax.singletons_open_or_closed,
        ax.sg_wedge_are_wedge,
    )


@theorem("T26", "either slambda-open or slambda-closed")
def _t26(x: Context):
    return _same(x, "T0", ax.t0_definitional, ax.t0_open_or_closed)


@theorem("T27", "every singleton of X is slambda-closed")
def _t27(x: Context):
    return _same(x, "T1", ax.t1_definitional, ax.singletons_slambda_closed)


@theorem("T31", "every subset of (X,mu) is sbeta-lambda-closed")
def _t31(x: Context):
    return _same(x, "T1/2", ax.sg_closed_are_slambda_closed, ax.every_subset_sbeta_closed)


@theorem("T33.1", "every singleton of X is sbeta-lambda-closed")
def _t33_1(x: Context):
    return _same(x, "T0", ax.t0_definitional, ax.singletons_sbeta_closed)


@theorem("T33.2", "every finite subset of X is sbeta-lambda-closed")
def _t33_2(x: Context):
    return _same(x, "T1/4", ax.t_quarter_definitional, ax.finite_subsets_sbeta_closed)


@theorem("T33.3", "every countable subset of X is sbeta-lambda-closed")
def _t33_3(x: Context):
    return _same(x, "T3/8", ax.t_three_eighths_definitional, ax.countable_subsets_sbeta_closed)


def _verdicts(x: Context):
    return {
        "T0": ax.t0_definitional(x.L) is None,
        "T1": ax.t1_definitional(x.L) is None,
        "T1/4": ax.t_quarter_definitional(x.L) is None,
        "T3/8": ax.t_three_eighths_definitional(x.L) is None,
        "T1/2": ax.sg_closed_are_slambda_closed(x.L) is None,
        "symmetric": ax.symmetric_definitional(x.L) is None,
    }


@theorem("R34", "every slambda-T1/2 GTspace implies")
def _r34(x: Context):
    v = _verdicts(x)
    chain = ("T1", "T1/2", "T3/8", "T1/4", "T0")
    for stronger, weaker in zip(chain, chain[1:]):
        if v[stronger] and not v[weaker]:
            return x.fail(f"{stronger} holds but {weaker} fails", verdicts=v)
    return None


@theorem("T35", "for every pair of distinct points")
def _t35(x: Context):
    if ax.t0_definitional(x.L) is not None:
        return None
    pair = ax.closure_separation_failure(x.L)
    if pair is not None:
        return x.fail("T0 but each point in the other's closure", points=pair)
    return None


@theorem("T37", "sg-lambda-closed for each x")
def _t37(x: Context):
    return _same(x, "symmetry", ax.symmetric_definitional, ax.singletons_sg_closed)


@theorem("T38", "slambda-symmetric and slambda-T0")
def _t38(x: Context):
    v = _verdicts(x)
    if v["T1"] != (v["symmetric"] and v["T0"]):
        return x.fail("T1 != symmetric and T0", verdicts=v)
    return None


@theorem("T39", "are all equivalent")
def _t39(x: Context):
    v = _verdicts(x)
    if v["symmetric"] and len({v[a] for a in ("T0", "T1", "T1/4", "T3/8", "T1/2")}) != 1:
        return x.fail("symmetric space with unequal axiom verdicts", verdicts=v)
    return None


# ---- maps ----

_SMALL_TARGETS: list = []


def small_targets():
    """Every generalized topology on one or two points."""
    if not _SMALL_TARGETS:
        _SMALL_TARGETS.extend(enumerate_gts(1))
        _SMALL_TARGETS.extend(enumerate_gts(2))
    return _SMALL_TARGETS


def continuity_failure(profile: dict):
    """None when the three continuity notions satisfy the biconditional."""
    if profile["slambda"] != (profile["sbeta_lambda"] and profile["sg_lambda"]):
        return profile
    return None


def all_maps(source, target):
    for images in product(range(target.n), repeat=source.n):
        yield PointMap(source, target, images)


@theorem("T41", "both sbeta-lambda-continuous and sg-lambda-continuous")
def _t41(x: Context):
    # targets: every space on <= 2 points, plus the space itself
    targets = list(small_targets()) + [x.T]
    seen = {}
    for T2 in targets:
        for f in all_maps(x.T.gs, T2.gs):
            # the verdicts depend on the map only through its preimages
            key = ax.preimages(f, T2)
            if key not in seen:
                seen[key] = continuity_failure(ax.continuity_from_preimages(x.L, *key))
            bad = seen[key]
            if bad is not None:
                return x.fail(
                    "continuity biconditional fails",
                    map=f.as_labels(),
                    target=T2.describe(),
                    kinds=bad,
                )
    return None


@theorem("T44", "is a group")
def _t44(x: Context):
    L, n = x.L, x.n
    whole = ax.homeo_group(L, 0)
    members = set(whole.elements)
    if n <= 5:
        for p in permutations(range(n)):
            if (p in members) != ax.homeomorphism_of(L, p):
                return x.fail("group filter disagrees with map definition", permutation=list(p))
    # every E on small spaces; empty set, X and singletons beyond that
    scope = x.all if n <= 4 else [0, x.full, *singletons(n)]
    for E in scope:
        sub = ax.homeo_group(L, E)
        if not ax.is_subgroup(sub, whole):
            return x.fail("stabilizer is not a subgroup", E)
        if whole.order % sub.order:
            return x.fail("stabilizer order does not divide group order", E)
    return None


THEOREM_IDS = tuple(REGISTRY)


def run_checks(T: GenTopology, ids=None):
    """[(theorem id, witness or None)] for one space, in registry order."""
    x = Context(T)
    return [(tid, REGISTRY[tid][1](x)) for tid in (ids or THEOREM_IDS)]
