import pytest
from conftest import S, as_oracle, gts, mask
from hypothesis import given

from gtlab import build_cache
from gtlab.errors import DefinitionMismatch
from gtlab.semi import (
    is_s_mu_closed,
    is_s_mu_open,
    is_s_vee_mu_set,
    is_s_wedge_mu_set,
    s_mu_closure,
    s_mu_interior,
    s_vee_mu,
    s_wedge_mu,
)


def family(T, *words):
    return tuple(sorted(S(T, w) for w in words))


def test_semi_open_families(E0, E1, E2, E3):
    assert tuple(build_cache(E1).s_mu_open) == family(E1, "", "a", "c", "ab", "ac", "abc")
    assert tuple(build_cache(E2).s_mu_open) == family(E2, "", "ab", "bc", "abc")
    assert tuple(build_cache(E3).s_mu_open) == family(E3, "", "d", "abc", "abcd")
    assert tuple(build_cache(E0).s_mu_open) == tuple(range(8))


def test_semi_closure_interior(E1, E3):
    C1, C3 = build_cache(E1), build_cache(E3)
    assert s_mu_closure(C1, S(E1, "b")) == S(E1, "b")
    assert s_mu_closure(C3, S(E3, "ad")) == E3.full
    assert s_mu_interior(C3, S(E3, "ad")) == S(E3, "d")
    assert s_mu_interior(C1, S(E1, "bc")) == S(E1, "c")


def test_kernels(E1, E3):
    C1, C3 = build_cache(E1), build_cache(E3)
    assert s_wedge_mu(C1, S(E1, "b")) == S(E1, "ab")
    assert s_wedge_mu(C3, S(E3, "ad")) == E3.full
    assert s_vee_mu(C1, S(E1, "ac")) == S(E1, "c")
    assert s_vee_mu(C3, S(E3, "ad")) == S(E3, "d")


def test_membership(E1, E2):
    C1, C2 = build_cache(E1), build_cache(E2)
    assert is_s_mu_open(C1, S(E1, "ab"))
    assert not is_s_mu_open(C1, S(E1, "b"))
    assert not is_s_wedge_mu_set(C1, S(E1, "b"))
    assert is_s_wedge_mu_set(C2, S(E2, "ab"))
    assert not is_s_mu_closed(C2, S(E2, "ab"))
    assert is_s_vee_mu_set(C1, S(E1, "c"))


@given(gts())
def test_against_oracle(T):
    C, o = build_cache(T), as_oracle(T)
    assert set(C.s_mu_open) == {mask(T, A) for A in o.semi_open()}
    assert set(C.s_mu_closed) == {mask(T, A) for A in o.semi_closed()}
    for A in range(T.full + 1):
        lab = frozenset(T.gs.names(A))
        assert s_mu_closure(C, A) == mask(T, o.s_closure(lab))
        assert s_mu_interior(C, A) == mask(T, o.s_interior(lab))
        assert s_wedge_mu(C, A) == mask(T, o.s_wedge(lab))
        assert s_vee_mu(C, A) == mask(T, o.s_vee(lab))


@given(gts())
def test_kernel_laws(T):
    C = build_cache(T)
    full = T.full
    for A in range(full + 1):
        w, v = s_wedge_mu(C, A), s_vee_mu(C, A)
        assert A & ~w == 0 and v & ~A == 0
        assert s_wedge_mu(C, w) == w and s_vee_mu(C, v) == v
        # the two kernels are dual under complement
        assert v == full & ~s_wedge_mu(C, full & ~A)
        for B in range(full + 1):
            if A & ~B == 0:
                assert w & ~s_wedge_mu(C, B) == 0
                assert v & ~s_vee_mu(C, B) == 0
            assert s_wedge_mu(C, A | B) == s_wedge_mu(C, A) | s_wedge_mu(C, B)
            assert s_vee_mu(C, A & B) == s_vee_mu(C, A) & s_vee_mu(C, B)


def test_definition_mismatch_aborts(E1, monkeypatch):
    from gtlab import semi

    real = semi.kernels.semi_open_witness_flags

    def broken(*args):
        out = bytearray(real(*args))
        out[S(E1, "b")] ^= 1
        return out

    monkeypatch.setattr(semi.kernels, "semi_open_witness_flags", broken)
    with pytest.raises(DefinitionMismatch):
        build_cache(E1)
