"""Verification campaigns and counterexample search over enumerated spaces."""
from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import axioms as ax
from .classify import is_sg_wedge_lambda
from .enumerate import MAX_EXHAUSTIVE, enumerate_gts, enumerate_gts_sampled
from .errors import TooLarge, UnknownPredicate
from .lambda_ops import LambdaCache, build
from .registry import REGISTRY, THEOREM_IDS, all_maps, continuity_failure, run_checks
from .sets import GroundSet, SetFamily
from .space import GenTopology


@dataclass(frozen=True)
class CampaignConfig:
    n_range: tuple[int, int] = (1, 3)
    mode: str = "exhaustive"  # or "sampled"
    count: int = 0
    seed: int = 0
    theorems: tuple[str, ...] | None = None
    jobs: int = 1
    keep_going: bool = False

    def __post_init__(self):
        lo, hi = self.n_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad point-count range {lo}..{hi}")
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and hi > MAX_EXHAUSTIVE:
            raise TooLarge(f"exhaustive campaigns need n <= {MAX_EXHAUSTIVE}, got {hi}")
        if self.theorems is not None:
            unknown = [t for t in self.theorems if t not in REGISTRY]
            if unknown:
                raise KeyError(f"unknown theorem ids: {', '.join(unknown)}")


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    space: GenTopology
    passed: bool
    witness: dict | None = field(default=None, compare=False)


def spaces(cfg: CampaignConfig) -> Iterator[GenTopology]:
    lo, hi = cfg.n_range
    for n in range(lo, hi + 1):
        if cfg.mode == "exhaustive":
            yield from enumerate_gts(n)
        else:
            yield from enumerate_gts_sampled(n, cfg.count, cfg.seed)


def _work(job):
    labels, members, ids = job
    T = GenTopology(GroundSet(labels), SetFamily(members))
    return run_checks(T, ids)


def verify_theorems(cfg: CampaignConfig, on_space: Callable | None = None) -> list[TheoremVerdict]:
    """Every selected theorem on every configured space, in enumeration order.

    Unless ``keep_going`` is set, the campaign stops after the first space
    that produced a failing verdict.
    """
    ids = tuple(cfg.theorems) if cfg.theorems else THEOREM_IDS
    stream = list(spaces(cfg))
    jobs = ((T.gs.labels, T.mu.members, ids) for T in stream)
    verdicts = []
    pool = multiprocessing.Pool(cfg.jobs) if cfg.jobs > 1 else None
    try:
        results = pool.imap(_work, jobs, chunksize=8) if pool else map(_work, jobs)
        for T, checks in zip(stream, results):
            failed = False
            for tid, witness in checks:
                verdicts.append(TheoremVerdict(tid, T, witness is None, witness))
                failed |= witness is not None
            if on_space is not None:
                on_space(T)
            if failed and not cfg.keep_going:
                break
    finally:
        if pool is not None:
            pool.terminate()
    return verdicts


def summarize(verdicts) -> dict:
    per = {}
    for v in verdicts:
        row = per.setdefault(v.theorem_id, {"passed": 0, "failed": 0})
        row["passed" if v.passed else "failed"] += 1
    failures = [
        {"theorem": v.theorem_id, "space": v.space.describe(), "witness": v.witness}
        for v in verdicts
        if not v.passed
    ]
    return {
        "spaces": len({v.space.key() for v in verdicts}),
        "verdicts": len(verdicts),
        "failed": len(failures),
        "theorems": per,
        "failures": failures,
    }


# ---- campaigns over pairs of spaces ----

def continuity_campaign(n_max: int = 3) -> dict:
    """Every map between every pair of spaces on <= n_max points, checking
    that s-lambda-continuity is s-beta-lambda- plus sg-lambda-continuity."""
    every = [T for n in range(1, n_max + 1) for T in enumerate_gts(n)]
    maps = 0
    failures = []
    for T1 in every:
        L1 = build(T1)
        for T2 in every:
            for f in all_maps(T1.gs, T2.gs):
                maps += 1
                bad = continuity_failure(ax.continuity_profile(f, L1, T2))
                if bad is not None:
                    failures.append(
                        {"source": T1.describe(), "target": T2.describe(),
                         "map": f.as_labels(), "kinds": bad}
                    )
    return {"pairs": len(every) ** 2, "maps": maps, "failed": len(failures), "failures": failures}


def group_campaign(n_max: int = 3) -> dict:
    """Stabilizer subgroups for every E on every space with <= n_max points."""
    spaces_seen = 0
    failures = []
    orders = {}
    for n in range(1, n_max + 1):
        for T in enumerate_gts(n):
            spaces_seen += 1
            L = build(T)
            whole = ax.homeo_group(L, 0)
            orders[whole.order] = orders.get(whole.order, 0) + 1
            for E in range(1 << n):
                sub = ax.homeo_group(L, E)
                if not ax.is_subgroup(sub, whole) or whole.order % sub.order:
                    failures.append({"space": T.describe(), "E": T.gs.names(E)})
    return {
        "spaces": spaces_seen,
        "failed": len(failures),
        "failures": failures,
        "group_orders": {str(k): v for k, v in sorted(orders.items())},
    }


# ---- counterexample search ----

def _subset_predicates() -> dict:
    def sl_closed(L, A):
        return bool(L.closed_flags[A])

    return {
        "slambda_closed-not-swedge_mu": lambda L, A: sl_closed(L, A) and L.base.wedge[A] != A,
        "slambda_closed-not-smu_closed": lambda L, A: sl_closed(L, A) and not L.base.closed_flags[A],
        "sg_lambda_closed-not-slambda_closed": lambda L, A: bool(L.sg_closed_flags[A]) and not sl_closed(L, A),
        "sbeta_lambda_closed-not-slambda_closed": lambda L, A: bool(L.sbeta_closed_flags[A]) and not sl_closed(L, A),
        "sg_wedge_lambda-not-swedge_lambda": lambda L, A: L.wedge[A] != A and is_sg_wedge_lambda(L, A),
        "smu_open-not-mu_open": lambda L, A: bool(L.base.open_flags[A]) and A not in L.space.mu,
    }


def _space_predicates() -> dict:
    def holds(route):
        return lambda L: route(L) is None

    t0, t1 = holds(ax.t0_definitional), holds(ax.t1_definitional)
    half = holds(ax.sg_closed_are_slambda_closed)
    sym = holds(ax.symmetric_definitional)
    return {
        "T0-not-T1": lambda L: t0(L) and not t1(L),
        "T0-not-T1/2": lambda L: t0(L) and not half(L),
        "T1/2-not-T1": lambda L: half(L) and not t1(L),
        "symmetric-not-T0": lambda L: sym(L) and not t0(L),
    }


SUBSET_PREDICATES = _subset_predicates()
SPACE_PREDICATES = _space_predicates()
PREDICATE_IDS = tuple(SUBSET_PREDICATES) + tuple(SPACE_PREDICATES)


@dataclass(frozen=True)
class SearchResult:
    predicate_id: str
    found: bool
    spaces_scanned: int
    space: GenTopology | None = None
    subset: int | None = None

    def render(self) -> dict:
        out = {"predicate": self.predicate_id, "found": self.found,
               "spaces_scanned": self.spaces_scanned}
        if self.found:
            out["space"] = self.space.describe()
            if self.subset is not None:
                out["subset"] = self.space.gs.names(self.subset)
        return out


def predicate_holds(predicate_id: str, L: LambdaCache, A: int | None = None) -> bool:
    if predicate_id in SUBSET_PREDICATES:
        return SUBSET_PREDICATES[predicate_id](L, A)
    if predicate_id in SPACE_PREDICATES:
        return SPACE_PREDICATES[predicate_id](L)
    raise UnknownPredicate(predicate_id)


def search_counterexample(predicate_id: str, cfg: CampaignConfig) -> SearchResult:
    """First (space, subset) in canonical order satisfying the predicate."""
    if predicate_id not in SUBSET_PREDICATES and predicate_id not in SPACE_PREDICATES:
        raise UnknownPredicate(predicate_id)
    scanned = 0
    for T in spaces(cfg):
        scanned += 1
        L = build(T)
        if predicate_id in SPACE_PREDICATES:
            if SPACE_PREDICATES[predicate_id](L):
                return SearchResult(predicate_id, True, scanned, T)
            continue
        test = SUBSET_PREDICATES[predicate_id]
        for A in range(1 << T.n):
            if test(L, A):
                return SearchResult(predicate_id, True, scanned, T, A)
    return SearchResult(predicate_id, False, scanned)
