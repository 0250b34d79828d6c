"""Separation axioms, s-lambda symmetry, continuity and s-lambda-homeomorphisms.

Each axiom is decided by every available characterization ("route"). The
routes of one axiom must agree; a disagreement raises RouteMismatch.
Witnesses are the first failure in mask / index order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .classify import is_sg_wedge_lambda
from .definitional import separated, singletons
from .errors import (
    GroundSetMismatch,
    GroundSetTooLarge,
    ImplicationViolation,
    NotBijective,
    RouteMismatch,
)
from .lambda_ops import LambdaCache
from .maps import PointMap, identity
from .space import GenTopology

AXIOMS = ("T0", "T1", "T1/4", "T3/8", "T1/2", "symmetric")
COLLAPSE_NOTE = (
    "finite ground set: every subset is finite and countable, so T1/4, T3/8 "
    "and T1/2 all reduce to 'every subset is s-beta-lambda-closed'"
)


@dataclass(frozen=True)
class Witness:
    """A failing instance: a subset, a point pair, or a (subset, point) pair."""

    kind: str  # "pair" | "subset" | "point" | "subset_point"
    subset: int | None = None
    points: tuple[int, ...] = ()

    def render(self, gs) -> dict:
        out = {"kind": self.kind}
        if self.subset is not None:
            out["subset"] = gs.names(self.subset)
        if self.points:
            out["points"] = [gs.labels[i] for i in self.points]
        return out


@dataclass(frozen=True)
class AxiomEntry:
    name: str
    verdict: bool
    routes: tuple[tuple[str, bool], ...]
    witness: Witness | None = None
    route_witnesses: dict = field(default_factory=dict, compare=False)
    note: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    entries: dict

    def __getitem__(self, name: str) -> AxiomEntry:
        return self.entries[name]

    def verdicts(self) -> dict:
        return {k: e.verdict for k, e in self.entries.items()}


def _pairs(n):
    for x in range(n):
        for y in range(x + 1, n):
            yield x, y


# ---- routes: each returns a Witness on failure, None on success ----

def t0_definitional(L: LambdaCache):
    opens = L.s_lambda_open
    for x, y in _pairs(L.n):
        if not any(separated(U, x, y) for U in opens):
            return Witness("pair", points=(x, y))
    return None


def t0_open_or_closed(L: LambdaCache):
    candidates = set(L.s_lambda_open) | set(L.s_lambda_closed)
    for x, y in _pairs(L.n):
        if not any(separated(A, x, y) for A in candidates):
            return Witness("pair", points=(x, y))
    return None


def singletons_sbeta_closed(L: LambdaCache):
    for s in singletons(L.n):
        if not L.sbeta_closed_flags[s]:
            return Witness("subset", subset=s)
    return None


def t1_definitional(L: LambdaCache):
    opens = L.s_lambda_open
    for x, y in _pairs(L.n):
        has_u = any(U >> x & 1 and not U >> y & 1 for U in opens)
        has_v = any(V >> y & 1 and not V >> x & 1 for V in opens)
        if not (has_u and has_v):
            return Witness("pair", points=(x, y))
    return None


def singletons_slambda_closed(L: LambdaCache):
    for s in singletons(L.n):
        if not L.closed_flags[s]:
            return Witness("subset", subset=s)
    return None


def finite_subsets(n):
    return range(1 << n)


def countable_subsets(n):
    # every subset of a finite ground set is countable
    return range(1 << n)


def _separated_from_each_outside(L: LambdaCache, scope):
    separators = sorted(set(L.s_lambda_open) | set(L.s_lambda_closed))
    for E in scope:
        for y in range(L.n):
            if E >> y & 1:
                continue
            if not any(E & ~G == 0 and not G >> y & 1 for G in separators):
                return Witness("subset_point", subset=E, points=(y,))
    return None


def t_quarter_definitional(L: LambdaCache):
    return _separated_from_each_outside(L, finite_subsets(L.n))


def t_three_eighths_definitional(L: LambdaCache):
    return _separated_from_each_outside(L, countable_subsets(L.n))


def _all_sbeta_closed(L: LambdaCache, scope):
    for A in scope:
        if not L.sbeta_closed_flags[A]:
            return Witness("subset", subset=A)
    return None


def finite_subsets_sbeta_closed(L: LambdaCache):
    return _all_sbeta_closed(L, finite_subsets(L.n))


def countable_subsets_sbeta_closed(L: LambdaCache):
    return _all_sbeta_closed(L, countable_subsets(L.n))


def every_subset_sbeta_closed(L: LambdaCache):
    return _all_sbeta_closed(L, range(1 << L.n))


def sg_closed_are_slambda_closed(L: LambdaCache):
    for A in range(1 << L.n):
        if L.sg_closed_flags[A] and not L.closed_flags[A]:
            return Witness("subset", subset=A)
    return None


def singletons_open_or_closed(L: LambdaCache):
    for s in singletons(L.n):
        if not (L.open_flags[s] or L.closed_flags[s]):
            return Witness("subset", subset=s)
    return None


def sg_wedge_are_wedge(L: LambdaCache):
    for A in range(1 << L.n):
        if L.wedge[A] != A and is_sg_wedge_lambda(L, A):
            return Witness("subset", subset=A)
    return None


def symmetric_definitional(L: LambdaCache):
    cl = [L.closure[s] for s in singletons(L.n)]
    for x in range(L.n):
        for y in range(L.n):
            if cl[y] >> x & 1 and not cl[x] >> y & 1:
                return Witness("pair", points=(x, y))
    return None


def singletons_sg_closed(L: LambdaCache):
    for s in singletons(L.n):
        if not L.sg_closed_flags[s]:
            return Witness("subset", subset=s)
    return None


# route tables: (route id, function); the first route supplies the headline
# witness unless WITNESS_ROUTE says otherwise
ROUTES = {
    "T0": (
        ("definition", t0_definitional),
        ("open-or-closed separator", t0_open_or_closed),
        ("singletons s-beta-lambda-closed", singletons_sbeta_closed),
    ),
    "T1": (
        ("definition", t1_definitional),
        ("singletons s-lambda-closed", singletons_slambda_closed),
    ),
    "T1/4": (
        ("definition (finite E)", t_quarter_definitional),
        ("finite subsets s-beta-lambda-closed", finite_subsets_sbeta_closed),
    ),
    "T3/8": (
        ("definition (countable E)", t_three_eighths_definitional),
        ("countable subsets s-beta-lambda-closed", countable_subsets_sbeta_closed),
    ),
    "T1/2": (
        ("definition (sg-closed are s-lambda-closed)", sg_closed_are_slambda_closed),
        ("singletons s-lambda-open or s-lambda-closed", singletons_open_or_closed),
        ("sg-wedge-lambda-sets are s-wedge-lambda-sets", sg_wedge_are_wedge),
        ("every subset s-beta-lambda-closed", every_subset_sbeta_closed),
    ),
    "symmetric": (
        ("definition", symmetric_definitional),
        ("singletons sg-lambda-closed", singletons_sg_closed),
    ),
}
WITNESS_ROUTE = {"T1": 1}


def _entry(L: LambdaCache, name: str) -> AxiomEntry:
    results = [(rid, fn(L)) for rid, fn in ROUTES[name]]
    routes = tuple((rid, w is None) for rid, w in results)
    values = {ok for _, ok in routes}
    if len(values) != 1:
        raise RouteMismatch(name, routes)
    verdict = values.pop()
    witness = None if verdict else results[WITNESS_ROUTE.get(name, 0)][1]
    note = COLLAPSE_NOTE if name in ("T1/4", "T3/8") else None
    return AxiomEntry(
        name,
        verdict,
        routes,
        witness,
        {rid: w for rid, w in results if w is not None},
        note,
    )


def check_T0(L: LambdaCache) -> AxiomEntry:
    return _entry(L, "T0")


def check_T1(L: LambdaCache) -> AxiomEntry:
    return _entry(L, "T1")


def check_T_quarter(L: LambdaCache) -> AxiomEntry:
    return _entry(L, "T1/4")


def check_T_three_eighths(L: LambdaCache) -> AxiomEntry:
    return _entry(L, "T3/8")


def check_T_half(L: LambdaCache) -> AxiomEntry:
    return _entry(L, "T1/2")


def check_symmetric(L: LambdaCache) -> AxiomEntry:
    return _entry(L, "symmetric")


def closure_separation_failure(L: LambdaCache):
    """A pair p, q with p in cl{q} and q in cl{p}, or None."""
    cl = [L.closure[s] for s in singletons(L.n)]
    for p, q in _pairs(L.n):
        if cl[q] >> p & 1 and cl[p] >> q & 1:
            return (p, q)
    return None


def axiom_report(L: LambdaCache) -> AxiomReport:
    entries = {name: _entry(L, name) for name in AXIOMS}
    v = {k: e.verdict for k, e in entries.items()}
    chain = ("T1", "T1/2", "T3/8", "T1/4", "T0")
    for stronger, weaker in zip(chain, chain[1:]):
        if v[stronger] and not v[weaker]:
            raise ImplicationViolation(f"{stronger} => {weaker}", v)
    if v["T1"] != (v["symmetric"] and v["T0"]):
        raise ImplicationViolation("T1 <=> symmetric and T0", v)
    if v["symmetric"] and len({v[a] for a in chain}) != 1:
        raise ImplicationViolation("symmetric => T0..T1 equivalent", v)
    if v["T0"]:
        pair = closure_separation_failure(L)
        if pair is not None:
            raise ImplicationViolation(
                "T0 => p not in cl{q} or q not in cl{p}",
                [L.gs.labels[i] for i in pair],
            )
    return AxiomReport(entries)


# ---- maps ----

CONTINUITY_KINDS = ("slambda", "sbeta_lambda", "sg_lambda")


def _closed_test(L: LambdaCache, kind: str):
    if kind == "slambda":
        return lambda A: bool(L.closed_flags[A])
    if kind == "sbeta_lambda":
        return lambda A: bool(L.sbeta_closed_flags[A])
    if kind == "sg_lambda":
        return lambda A: bool(L.sg_closed_flags[A])
    raise ValueError(f"unknown continuity kind {kind!r}")


def _check_between(f: PointMap, L1: LambdaCache, T2: GenTopology):
    if f.source != L1.gs or f.target != T2.gs:
        raise GroundSetMismatch("map does not run between the given spaces")


def continuity_from_preimages(L1: LambdaCache, open_preimages, closed_preimages) -> dict:
    """Decide every continuity kind from the preimages of the target's open
    sets and of its closed sets. The two readings must agree."""
    full = L1.full
    out = {}
    for kind in CONTINUITY_KINDS:
        closed = _closed_test(L1, kind)
        by_open = all(closed(full ^ P) for P in open_preimages)
        by_closed = all(closed(P) for P in closed_preimages)
        if by_open != by_closed:
            raise RouteMismatch(f"{kind}-continuity", (("open", by_open), ("closed", by_closed)))
        out[kind] = by_open
    return out


def preimages(f: PointMap, T2: GenTopology):
    full2 = T2.full
    return (
        tuple(f.preimage(V) for V in T2.mu),
        tuple(f.preimage(full2 ^ V) for V in T2.mu),
    )


def continuity_profile(f: PointMap, L1: LambdaCache, T2: GenTopology) -> dict:
    _check_between(f, L1, T2)
    return continuity_from_preimages(L1, *preimages(f, T2))


def is_continuous(kind: str, f: PointMap, L1: LambdaCache, T2: GenTopology) -> bool:
    """Preimages of open sets are open of the given kind.

    Also decided through preimages of closed sets; the two must agree.
    """
    _check_between(f, L1, T2)
    _closed_test(L1, kind)
    return continuity_from_preimages(L1, *preimages(f, T2))[kind]


def is_s_lambda_homeomorphism(f: PointMap, L1: LambdaCache, L2: LambdaCache) -> bool:
    if not f.is_bijective:
        raise NotBijective("an s-lambda-homeomorphism must be a bijection")
    if f.source != L1.gs or f.target != L2.gs:
        raise GroundSetMismatch("map does not run between the given spaces")
    g = f.inverse()
    return all(L1.open_flags[f.preimage(V)] for V in L2.s_lambda_open) and all(
        L2.open_flags[g.preimage(U)] for U in L1.s_lambda_open
    )


MAX_GROUP_POINTS = 8


@dataclass(frozen=True)
class HomeoGroup:
    space: GenTopology
    stabilized: int
    elements: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def _perm_image(p, mask):
    out = 0
    for i, j in enumerate(p):
        if mask >> i & 1:
            out |= 1 << j
    return out


def group_audit(elements, n):
    """Problems found treating ``elements`` as a permutation group, or []."""
    problems = []
    members = set(elements)
    ident = tuple(range(n))
    if ident not in members:
        problems.append("identity missing")
    for p in elements:
        inv = [0] * n
        for i, j in enumerate(p):
            inv[j] = i
        if tuple(inv) not in members:
            problems.append(f"inverse of {p} missing")
        for q in elements:
            if tuple(q[p[i]] for i in range(n)) not in members:
                problems.append(f"{q} after {p} missing")
    return problems


def homeo_group(L: LambdaCache, E: int = 0) -> HomeoGroup:
    """All s-lambda-homeomorphisms of the space onto itself fixing E setwise."""
    n = L.n
    if n > MAX_GROUP_POINTS:
        raise GroundSetTooLarge(f"homeomorphism groups need n <= {MAX_GROUP_POINTS}, got {n}")
    opens = L.s_lambda_open
    flags = L.open_flags
    elements = []
    for p in permutations(range(n)):
        if _perm_image(p, E) != E:
            continue
        # a bijection of a finite space preserves the open family both ways
        # exactly when it maps every open set onto an open set
        if all(flags[_perm_image(p, U)] for U in opens):
            elements.append(p)
    group = HomeoGroup(L.space, E, tuple(elements))
    problems = group_audit(group.elements, n)
    if problems:
        raise ImplicationViolation("homeomorphisms form a group", problems[0])
    return group


def homeomorphism_of(L: LambdaCache, p) -> bool:
    """Decide one permutation through the two-sided map definition."""
    f = PointMap(L.gs, L.gs, tuple(p))
    return is_s_lambda_homeomorphism(f, L, L)


def is_subgroup(sub: HomeoGroup, whole: HomeoGroup) -> bool:
    return set(sub.elements) <= set(whole.elements) and not group_audit(
        sub.elements, sub.space.n
    )


__all__ = [
    "AXIOMS",
    "AxiomEntry",
    "AxiomReport",
    "HomeoGroup",
    "Witness",
    "axiom_report",
    "check_T0",
    "check_T1",
    "check_T_half",
    "check_T_quarter",
    "check_T_three_eighths",
    "check_symmetric",
    "homeo_group",
    "identity",
    "is_continuous",
    "is_s_lambda_homeomorphism",
]
