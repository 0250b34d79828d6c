import sys
from pathlib import Path

import pytest
from hypothesis import settings

from gtlab import build, subset_from_labels
from gtlab.spacedoc import load_space

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))

# the label-set oracle is slow; bound examples, not wall time
settings.register_profile("gtlab", deadline=None, max_examples=60)
settings.load_profile("gtlab")


def load(name):
    return load_space(str(FIXTURES / f"{name}.json"))[0]


def S(T, text):
    """Mask from a compact label string: S(T, "ad") -> {a, d}."""
    return subset_from_labels(T.gs, list(text))


def names(T, mask):
    return "".join(T.gs.names(mask))


@pytest.fixture(scope="session")
def E0():
    return load("E0")


@pytest.fixture(scope="session")
def E1():
    return load("E1")


@pytest.fixture(scope="session")
def E2():
    return load("E2")


@pytest.fixture(scope="session")
def E3():
    return load("E3")


@pytest.fixture(scope="session")
def L0(E0):
    return build(E0)


@pytest.fixture(scope="session")
def L1(E1):
    return build(E1)


@pytest.fixture(scope="session")
def L2(E2):
    return build(E2)


@pytest.fixture(scope="session")
def L3(E3):
    return build(E3)


def as_oracle(T):
    from oracle import Space

    return Space(T.gs.labels, [frozenset(T.gs.names(m)) for m in T.mu])


def mask(T, labels):
    return subset_from_labels(T.gs, sorted(labels))


def gts(max_n=4):
    """Hypothesis strategy: a random generalized topology on 1..max_n points."""
    from hypothesis import strategies as st

    from gtlab.enumerate import union_closure
    from gtlab.sets import GroundSet
    from gtlab.space import validate_gt

    @st.composite
    def build_gt(draw):
        n = draw(st.integers(1, max_n))
        gens = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=2 * n))
        return validate_gt(GroundSet.of_size(n), union_closure(gens))

    return build_gt()
