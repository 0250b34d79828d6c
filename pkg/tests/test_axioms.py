from itertools import permutations, product

import pytest
from conftest import S, as_oracle, gts, mask
from hypothesis import given, settings, strategies as st

from gtlab import build
from gtlab.axioms import (
    AXIOMS,
    axiom_report,
    continuity_profile,
    homeo_group,
    homeomorphism_of,
    is_continuous,
    is_s_lambda_homeomorphism,
    is_subgroup,
)
from gtlab.errors import GroundSetMismatch, NotBijective
from gtlab.maps import PointMap, identity, permutation


def test_axioms_e3(L3, E3):
    rep = axiom_report(L3)
    assert rep.verdicts() == {
        "T0": False, "T1": False, "T1/4": False, "T3/8": False, "T1/2": False, "symmetric": True,
    }
    gs = E3.gs
    assert rep["T0"].witness.render(gs) == {"kind": "pair", "points": ["a", "b"]}
    assert rep["T1"].witness.render(gs) == {"kind": "subset", "subset": ["a"]}
    assert rep["T1/4"].witness.render(gs) == {"kind": "subset_point", "subset": ["a"], "points": ["b"]}
    assert rep["T1/2"].witness.render(gs)["subset"] == ["a"]
    # the {a, d} example also fails: it is sg-closed but not s-lambda-closed
    assert rep["T1/2"].route_witnesses
    assert L3.sg_closed_flags[S(E3, "ad")] and not L3.closed_flags[S(E3, "ad")]
    assert rep["T1/4"].note and rep["T3/8"].note


@pytest.mark.parametrize("name", ["E0", "E1", "E2"])
def test_axioms_hold(name, request):
    L = request.getfixturevalue("L" + name[1])
    rep = axiom_report(L)
    assert all(rep.verdicts().values())
    assert all(ok for e in rep.entries.values() for _, ok in e.routes)


def oracle_axioms(o):
    pts = sorted(o.X)
    opens = o.lambda_open()
    cl = {x: o.l_closure(frozenset({x})) for x in pts}
    pairs = [(x, y) for x in pts for y in pts if x < y]
    t0 = all(any((x in U) != (y in U) for U in opens) for x, y in pairs)
    t1 = all(
        any(x in U and y not in U for U in opens) and any(y in U and x not in U for U in opens)
        for x, y in pairs
    )
    sym = all((x not in cl[y]) or (y in cl[x]) for x in pts for y in pts)
    closed = set(o.lambda_closed())
    half = all(A in closed for A in o.subsets if o.sg_closed(A))
    return {"T0": t0, "T1": t1, "T1/4": half, "T3/8": half, "T1/2": half, "symmetric": sym}


@given(gts())
def test_axioms_against_oracle(T):
    rep = axiom_report(build(T))
    assert set(rep.entries) == set(AXIOMS)
    assert rep.verdicts() == oracle_axioms(as_oracle(T))


def test_identity_continuous(L1, E1):
    assert all(continuity_profile(identity(E1.gs), L1, E1).values())


def test_constant_map(L3, E3, E1):
    const = PointMap.from_labels(E3.gs, E1.gs, {p: "a" for p in "abcd"})
    assert continuity_profile(const, L3, E1) == {
        "slambda": True, "sbeta_lambda": True, "sg_lambda": True,
    }
    with pytest.raises(ValueError):
        is_continuous("bogus", const, L3, E1)
    with pytest.raises(GroundSetMismatch):
        is_continuous("slambda", identity(E1.gs), L3, E1)


def test_continuity_e1_to_e3(L1, E1, E3):
    # sends a, b, c into a, b, d; the open set {a, b, c} pulls back to {a, b}
    f = PointMap.from_labels(E1.gs, E3.gs, {"a": "a", "b": "b", "c": "d"})
    assert continuity_profile(f, L1, E3)["slambda"]


@given(gts(3), gts(3), st.data())
@settings(max_examples=40)
def test_continuity_against_oracle(T1, T2, data):
    images = tuple(data.draw(st.integers(0, T2.n - 1)) for _ in range(T1.n))
    f = PointMap(T1.gs, T2.gs, images)
    o1 = as_oracle(T1)
    lab = lambda m: frozenset(T1.gs.names(m))
    closed_pre = [lab(f.preimage(T2.full & ~V)) for V in T2.mu]
    lclosed = set(o1.lambda_closed())
    prof = continuity_profile(f, build(T1), T2)
    assert prof["slambda"] == all(P in lclosed for P in closed_pre)
    assert prof["sg_lambda"] == all(o1.sg_closed(P) for P in closed_pre)
    assert prof["sbeta_lambda"] == all(o1.beta_closed(P) for P in closed_pre)


def test_homeomorphism_examples(L1, L3, E1, E3):
    swap = permutation(E1.gs, (1, 0, 2))
    # every subset of E1 is s-lambda-open, so any bijection qualifies
    assert is_s_lambda_homeomorphism(swap, L1, L1)
    assert is_s_lambda_homeomorphism(identity(E3.gs), L3, L3)
    with pytest.raises(NotBijective):
        is_s_lambda_homeomorphism(PointMap(E1.gs, E1.gs, (0, 0, 1)), L1, L1)


def test_group_orders(L0, L1, L2, L3, E0):
    assert homeo_group(L0).order == 6
    assert homeo_group(L0, S(E0, "a")).order == 2
    assert homeo_group(L1).order == 6
    assert homeo_group(L2).order == 2
    assert homeo_group(L3).order == 6


@given(gts(4))
@settings(max_examples=30)
def test_group_against_definition(T):
    L = build(T)
    whole = homeo_group(L)
    assert set(whole.elements) == {p for p in permutations(range(T.n)) if homeomorphism_of(L, p)}
    for E in range(T.full + 1):
        sub = homeo_group(L, E)
        assert is_subgroup(sub, whole)
