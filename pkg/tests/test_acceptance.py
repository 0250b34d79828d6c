"""Release acceptance checks, one per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (visible in
``pytest -v`` output) before asserting.
"""
import json
import subprocess
import sys
import time

import pytest
from conftest import FIXTURES, S, load

from gtlab import build
from gtlab.axioms import AXIOMS, ROUTES, axiom_report, homeo_group, is_subgroup
from gtlab.classify import classify_subset
from gtlab.definitional import NaiveSpace
from gtlab.enumerate import enumerate_gts
from gtlab.harness import CampaignConfig, continuity_campaign, group_campaign, summarize, verify_theorems
from gtlab.semi import s_wedge_mu

from test_harness import brute_gt_count


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
        return ok

    return emit


def small_spaces():
    return [T for n in (1, 2, 3) for T in enumerate_gts(n)]


def test_criterion_1_examples(report):
    start = time.perf_counter()
    E1, E2, E3 = load("E1"), load("E2"), load("E3")
    L1, L2, L3 = build(E1), build(E2), build(E3)
    b = classify_subset(L1, S(E1, "b"))
    ab = classify_subset(L2, S(E2, "ab"))
    ad = classify_subset(L3, S(E3, "ad"))
    C3 = L3.base
    checks = [
        b["slambda_closed"],
        s_wedge_mu(L1.base, S(E1, "b")) == S(E1, "ab"),
        not b["swedge_mu_set"],
        ab["slambda_closed"] and not ab["smu_closed"],
        ad["sg_lambda_closed"] and not ad["slambda_closed"],
        C3.wedge[S(E3, "ad")] & C3.closure[S(E3, "ad")] == E3.full,
    ]
    elapsed = time.perf_counter() - start
    ok = all(checks) and elapsed < 1.0
    assert report(1, ok, f"{sum(checks)}/{len(checks)} exact, {elapsed:.3f} s")


@pytest.mark.parametrize("n_range", [(1, 3), (4, 4)], ids=["n1-3", "n4"])
def test_criterion_2_campaign(report, n_range):
    verdicts = verify_theorems(CampaignConfig(n_range=n_range, keep_going=True))
    s = summarize(verdicts)
    ok = s["failed"] == 0 and len(s["theorems"]) >= 50
    detail = f"n={n_range[0]}..{n_range[1]}: {s['spaces']} spaces, {s['verdicts']} verdicts, {s['failed']} failed"
    if s["failures"]:
        detail += f"; first witness {json.dumps(s['failures'][0], sort_keys=True)}"
    assert report(2, ok, detail)


def test_criterion_3_counts(report):
    counts = {n: sum(1 for _ in enumerate_gts(n)) for n in (1, 2)}
    brute = {n: brute_gt_count(n) for n in (1, 2)}
    ok = counts == brute == {1: 2, 2: 7}
    assert report(3, ok, f"enumerated {counts}, brute force {brute}")


def test_criterion_4_equivalence_oracles(report):
    mismatches = 0
    checked = 0
    for T in small_spaces():
        L, N = build(T), NaiveSpace(T)
        for A in range(1 << T.n):
            checked += 1
            sl = bool(L.closed_flags[A])
            sg = bool(L.sg_closed_flags[A])
            sb = bool(L.sbeta_closed_flags[A])
            if sl != (A in N.slambda_closed):
                mismatches += 1
            if not sg == N.sg_closed_quantified(A) == N.sg_closed_by_difference(A):
                mismatches += 1
            if sb != (A in N.sbeta_closed):
                mismatches += 1
    assert report(4, mismatches == 0, f"{checked} subsets, {mismatches} disagreements")


def test_criterion_5_axiom_routes(report):
    expected = {"T0": 3, "T1": 2, "T1/4": 2, "T3/8": 2, "T1/2": 4, "symmetric": 2}
    shape_ok = {a: len(ROUTES[a]) for a in AXIOMS} == expected
    spaces = small_spaces()
    for T in spaces:
        # raises on route disagreement or a broken implication
        rep = axiom_report(build(T))
        for entry in rep.entries.values():
            assert len({ok for _, ok in entry.routes}) == 1
    assert report(5, shape_ok, f"{len(spaces)} spaces, route counts {expected}")


def test_criterion_6_groups(report):
    start = time.perf_counter()
    E0 = load("E0")
    L0 = build(E0)
    whole, fixed_a = homeo_group(L0), homeo_group(L0, S(E0, "a"))
    camp = group_campaign(3)
    subgroup = is_subgroup(fixed_a, whole)
    elapsed = time.perf_counter() - start
    ok = whole.order == 6 and fixed_a.order == 2 and subgroup and camp["failed"] == 0 and elapsed < 5.0
    assert report(6, ok, f"orders {whole.order}/{fixed_a.order}, {camp['spaces']} spaces audited, {elapsed:.2f} s")


def test_criterion_7_continuity(report):
    camp = continuity_campaign(3)
    ok = camp["failed"] == 0 and camp["pairs"] == 70 * 70
    assert report(7, ok, f"{camp['pairs']} pairs, {camp['maps']} maps, {camp['failed']} exceptions")


DETERMINISM_RUNS = [
    ["verify", "--n", "1..3", "--exhaustive", "--with-pairs"],
    ["verify", "--n", "4", "--exhaustive"],
    ["enumerate", "--n", "1..2", "--exhaustive"],
    ["axioms", str(FIXTURES / "E3.json")],
    ["homeo-group", str(FIXTURES / "E0.json"), "--stabilize", "a"],
    ["continuity", str(FIXTURES / "E3_to_E1.json"), str(FIXTURES / "E1.json")],
    ["classify", str(FIXTURES / "E3.json")],
    ["search", "sg_lambda_closed-not-slambda_closed", "--n", "1..3", "--exhaustive"],
]


def test_criterion_8_determinism(report):
    differing = []
    for args in DETERMINISM_RUNS:
        argv = [sys.executable, "-m", "gtlab.cli", *args, "--json"]
        first, second = (subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2))
        if first != second or not first:
            differing.append(args[0])
    ok = not differing
    assert report(8, ok, f"{len(DETERMINISM_RUNS)} commands run twice, differing: {differing or 'none'}")
