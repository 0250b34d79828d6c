"""Per-subset classification against every family the package knows."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .lambda_ops import LambdaCache

FLAG_NAMES = (
    "mu_open",
    "mu_closed",
    "smu_open",
    "smu_closed",
    "swedge_mu_set",
    "svee_mu_set",
    "slambda_closed",
    "slambda_open",
    "swedge_lambda_set",
    "svee_lambda_set",
    "sg_lambda_closed",
    "sg_lambda_open",
    "sg_wedge_lambda_set",
    "sg_vee_lambda_set",
    "sbeta_lambda_closed",
    "sbeta_lambda_open",
)

# (premise, conclusion) pairs every record must satisfy
IMPLICATIONS = (
    ("smu_closed", "slambda_closed"),
    ("swedge_mu_set", "slambda_closed"),
    ("slambda_closed", "sg_lambda_closed"),
    ("slambda_closed", "sbeta_lambda_closed"),
    ("swedge_lambda_set", "sg_wedge_lambda_set"),
    ("svee_lambda_set", "sg_vee_lambda_set"),
    ("mu_open", "smu_open"),
    ("mu_closed", "smu_closed"),
)


@dataclass(frozen=True)
class ClassificationRecord:
    subset: int
    flags: dict

    def __getitem__(self, name: str) -> bool:
        return self.flags[name]


def is_sg_lambda_closed(L: LambdaCache, A: int) -> bool:
    """Closure inside the s-wedge-lambda kernel."""
    return not L.closure[A] & ~L.wedge[A]


def is_sg_lambda_open(L: LambdaCache, A: int) -> bool:
    by_kernels = not L.vee[A] & ~L.interior[A]
    if by_kernels != is_sg_lambda_closed(L, L.full ^ A):
        raise InvariantViolation("sg_lambda_open <=> complement sg_lambda_closed", L.gs.names(A))
    return by_kernels


def is_sg_wedge_lambda(L: LambdaCache, A: int) -> bool:
    kernel = L.wedge[A]
    return all(not kernel & ~f for f in L.s_lambda_closed if not A & ~f)


def is_sg_vee_lambda(L: LambdaCache, A: int) -> bool:
    return is_sg_wedge_lambda(L, L.full ^ A)


def is_s_beta_lambda_closed(L: LambdaCache, A: int) -> bool:
    return L.wedge[A] & L.closure[A] == A


def is_s_beta_lambda_open(L: LambdaCache, A: int) -> bool:
    return is_s_beta_lambda_closed(L, L.full ^ A)


def classify_subset(L: LambdaCache, A: int) -> ClassificationRecord:
    C = L.base
    mu = C.space.mu
    full = L.full
    comp = full ^ A
    flags = {
        "mu_open": A in mu,
        "mu_closed": comp in mu,
        "smu_open": bool(C.open_flags[A]),
        "smu_closed": bool(C.closed_flags[A]),
        "swedge_mu_set": C.wedge[A] == A,
        "svee_mu_set": C.vee[A] == A,
        "slambda_closed": bool(L.closed_flags[A]),
        "slambda_open": bool(L.open_flags[A]),
        "swedge_lambda_set": L.wedge[A] == A,
        "svee_lambda_set": L.vee[A] == A,
        "sg_lambda_closed": is_sg_lambda_closed(L, A),
        "sg_lambda_open": is_sg_lambda_open(L, A),
        "sg_wedge_lambda_set": is_sg_wedge_lambda(L, A),
        "sg_vee_lambda_set": is_sg_vee_lambda(L, A),
        "sbeta_lambda_closed": is_s_beta_lambda_closed(L, A),
        "sbeta_lambda_open": is_s_beta_lambda_open(L, A),
    }
    for premise, conclusion in IMPLICATIONS:
        if flags[premise] and not flags[conclusion]:
            raise InvariantViolation(f"{premise} => {conclusion}", L.gs.names(A))
    if flags["slambda_closed"] != (flags["sg_lambda_closed"] and flags["sbeta_lambda_closed"]):
        raise InvariantViolation(
            "slambda_closed <=> sg_lambda_closed and sbeta_lambda_closed", L.gs.names(A)
        )
    return ClassificationRecord(A, flags)
