"""Enumeration of generalized topologies on small ground sets."""
from __future__ import annotations

import random
from typing import Iterator

from .errors import TooLarge
from .sets import GroundSet, SetFamily
from .space import GenTopology, validate_gt

MAX_EXHAUSTIVE = 4
MAX_SAMPLED = 7


def union_closed_families(n: int) -> Iterator[tuple[int, ...]]:
    """Every union-closed family over n points that contains 0.

    Depth-first over masks in increasing order, so families come out in
    lexicographic order of their sorted member tuples. ``pending`` holds the
    unions of chosen masks that are not chosen yet; since a union is never
    smaller than its parts, a pending union below the next candidate mask can
    never be added and the branch is dead.
    """
    top = 1 << n

    def extend(chosen, pending):
        if not pending:
            yield tuple(chosen)
        limit = min(pending) if pending else top - 1
        start = chosen[-1] + 1
        for c in range(start, limit + 1):
            new_pending = {u for u in pending if u != c}
            for m in chosen:
                u = m | c
                if u != c and u != m:
                    new_pending.add(u)
            chosen.append(c)
            yield from extend(chosen, new_pending)
            chosen.pop()

    yield from extend([0], set())


def enumerate_gts(n: int) -> Iterator[GenTopology]:
    if not 1 <= n <= MAX_EXHAUSTIVE:
        raise TooLarge(f"exhaustive enumeration needs 1 <= n <= {MAX_EXHAUSTIVE}, got {n}")
    gs = GroundSet.of_size(n)
    for members in union_closed_families(n):
        yield validate_gt(gs, SetFamily(members))


def union_closure(generators) -> set[int]:
    fam = {0}
    for g in generators:
        fam |= {g | m for m in fam}
    return fam


def enumerate_gts_sampled(n: int, count: int, seed: int) -> Iterator[GenTopology]:
    """``count`` seeded draws of random union-closed families, repeats dropped.

    Each draw picks between 0 and 2n nonempty generator masks and closes them
    under union. The stream depends only on (n, count, seed).
    """
    if not 1 <= n <= MAX_SAMPLED:
        raise TooLarge(f"sampled enumeration needs 1 <= n <= {MAX_SAMPLED}, got {n}")
    rng = random.Random(f"gtlab:{n}:{seed}")
    gs = GroundSet.of_size(n)
    nonempty = range(1, 1 << n)
    seen = set()
    for _ in range(count):
        k = rng.randint(0, min(2 * n, len(nonempty)))
        members = tuple(sorted(union_closure(rng.sample(nonempty, k))))
        if members in seen:
            continue
        seen.add(members)
        yield validate_gt(gs, SetFamily(members))
