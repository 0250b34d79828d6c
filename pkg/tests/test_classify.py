from conftest import S, as_oracle, gts
from hypothesis import given

from gtlab import build
from gtlab.classify import (
    FLAG_NAMES,
    IMPLICATIONS,
    classify_subset,
    is_s_beta_lambda_closed,
    is_sg_lambda_closed,
    is_sg_wedge_lambda,
)


def test_e3_examples(L3, E3):
    ad, abd = S(E3, "ad"), S(E3, "abd")
    assert is_sg_lambda_closed(L3, ad)
    assert is_sg_lambda_closed(L3, abd)
    assert is_sg_wedge_lambda(L3, S(E3, "a"))
    assert is_sg_wedge_lambda(L3, ad)
    assert not is_s_beta_lambda_closed(L3, ad)
    rec = classify_subset(L3, ad)
    assert rec["sg_lambda_closed"] and not rec["slambda_closed"]


def test_e1_every_subset_sbeta(L1):
    assert all(is_s_beta_lambda_closed(L1, A) for A in range(8))


def test_e2_ab(L2, E2):
    rec = classify_subset(L2, S(E2, "ab"))
    assert rec["slambda_closed"] and rec["swedge_mu_set"]
    assert not rec["smu_closed"]


def test_e1_b_not_wedge(L1, E1):
    assert not classify_subset(L1, S(E1, "b"))["swedge_mu_set"]


@given(gts())
def test_records_against_oracle(T):
    L, o = build(T), as_oracle(T)
    for A in range(T.full + 1):
        rec = classify_subset(L, A)
        assert set(rec.flags) == set(FLAG_NAMES)
        for premise, conclusion in IMPLICATIONS:
            assert not rec[premise] or rec[conclusion]
        lab = frozenset(T.gs.names(A))
        assert rec["sg_lambda_closed"] == o.sg_closed(lab)
        assert rec["sg_wedge_lambda_set"] == o.sg_wedge(lab)
        assert rec["sbeta_lambda_closed"] == o.beta_closed(lab)
        assert rec["slambda_closed"] == (rec["sg_lambda_closed"] and rec["sbeta_lambda_closed"])
