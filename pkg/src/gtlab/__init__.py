"""Finite generalized-topology laboratory.

Semi-open, s-lambda, sg-lambda and s-beta-lambda classifications, low
separation axioms and s-lambda-homeomorphism groups on finite ground sets,
plus an exhaustive verification harness for the relations between them.
"""
from .errors import GTLabError
from .kernels import BACKEND
from .lambda_ops import LambdaCache, build, build_lambda_cache
from .semi import OperatorCache, build_cache
from .sets import GroundSet, SetFamily, subset_from_labels
from .space import GenTopology, mu_closure, mu_interior, validate_gt

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GTLabError",
    "GenTopology",
    "GroundSet",
    "LambdaCache",
    "OperatorCache",
    "SetFamily",
    "build",
    "build_cache",
    "build_lambda_cache",
    "mu_closure",
    "mu_interior",
    "subset_from_labels",
    "validate_gt",
]
