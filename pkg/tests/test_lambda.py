import pytest
from conftest import S, as_oracle, gts, mask
from hypothesis import given

from gtlab import build, build_cache
from gtlab.errors import NotOpen
from gtlab.lambda_ops import (
    decompose_s_lambda_open,
    is_s_lambda_closed,
    s_lambda_closure,
    s_lambda_interior,
    s_vee_lambda,
    s_wedge_lambda,
)


def test_closed_families(L0, L1, L2, L3, E2, E3):
    assert tuple(L0.s_lambda_closed) == tuple(range(8))
    assert tuple(L1.s_lambda_closed) == tuple(range(8))
    assert tuple(L2.s_lambda_closed) == tuple(m for m in range(8) if m != S(E2, "ac"))
    assert tuple(L3.s_lambda_closed) == tuple(sorted(S(E3, w) for w in ("", "d", "abc", "abcd")))


def test_membership_from_base(E2):
    C = build_cache(E2)
    assert is_s_lambda_closed(C, S(E2, "ab"))
    assert not is_s_lambda_closed(C, S(E2, "ac"))


def test_operator_examples(L1, L3, E1, E3):
    assert s_lambda_closure(L3, S(E3, "ad")) == E3.full
    assert s_lambda_closure(L3, S(E3, "a")) == S(E3, "abc")
    assert s_lambda_interior(L3, S(E3, "abd")) == S(E3, "d")
    assert s_lambda_interior(L1, S(E1, "bc")) == S(E1, "bc")
    assert s_wedge_lambda(L3, S(E3, "ad")) == E3.full
    assert s_wedge_lambda(L3, S(E3, "a")) == S(E3, "abc")


def test_decompose(L3, E3):
    assert decompose_s_lambda_open(L3, S(E3, "d")) == (S(E3, "d"), S(E3, "d"))
    vee, inner = decompose_s_lambda_open(L3, E3.full)
    assert vee | inner == E3.full
    with pytest.raises(NotOpen):
        decompose_s_lambda_open(L3, S(E3, "ad"))


@given(gts())
def test_against_oracle(T):
    L, o = build(T), as_oracle(T)
    assert set(L.s_lambda_closed) == {mask(T, A) for A in o.lambda_closed()}
    assert set(L.s_lambda_open) == {mask(T, A) for A in o.lambda_open()}
    for A in range(T.full + 1):
        lab = frozenset(T.gs.names(A))
        assert s_lambda_closure(L, A) == mask(T, o.l_closure(lab))
        assert s_lambda_interior(L, A) == mask(T, o.l_interior(lab))
        assert s_wedge_lambda(L, A) == mask(T, o.l_wedge(lab))
        assert s_vee_lambda(L, A) == mask(T, o.l_vee(lab))


@given(gts())
def test_family_structure(T):
    L = build(T)
    closed = set(L.s_lambda_closed)
    assert 0 in closed and T.full in closed
    assert all(a & b in closed for a in closed for b in closed)
    for A in L.s_lambda_open:
        vee, inner = decompose_s_lambda_open(L, A)
        assert L.base.vee[vee] == vee and L.base.open_flags[inner]
