"""Point maps between ground sets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotBijective
from .sets import GroundSet


@dataclass(frozen=True)
class PointMap:
    source: GroundSet
    target: GroundSet
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.source.n:
            raise ValueError(f"map has {len(images)} images for {self.source.n} points")
        fibers = [0] * self.target.n
        for i, j in enumerate(images):
            if not 0 <= j < self.target.n:
                raise ValueError(f"image index {j} outside target")
            fibers[j] |= 1 << i
        object.__setattr__(self, "_fibers", tuple(fibers))

    @classmethod
    def from_labels(cls, source: GroundSet, target: GroundSet, pairs: dict) -> "PointMap":
        return cls(source, target, tuple(target.index(pairs[x]) for x in source.labels))

    @property
    def is_bijective(self) -> bool:
        return self.source.n == self.target.n and len(set(self.images)) == self.source.n

    def preimage(self, mask: int) -> int:
        out = 0
        j = 0
        while mask:
            if mask & 1:
                out |= self._fibers[j]
            mask >>= 1
            j += 1
        return out

    def image(self, mask: int) -> int:
        out = 0
        for i, j in enumerate(self.images):
            if mask >> i & 1:
                out |= 1 << j
        return out

    def inverse(self) -> "PointMap":
        if not self.is_bijective:
            raise NotBijective("map is not a bijection")
        inv = [0] * self.target.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return PointMap(self.target, self.source, tuple(inv))

    def then(self, other: "PointMap") -> "PointMap":
        """``other`` after ``self``."""
        return PointMap(self.source, other.target, tuple(other.images[j] for j in self.images))

    def as_labels(self) -> dict:
        return {x: self.target.labels[j] for x, j in zip(self.source.labels, self.images)}


def identity(gs: GroundSet) -> PointMap:
    return PointMap(gs, gs, tuple(range(gs.n)))


def permutation(gs: GroundSet, images: Sequence[int]) -> PointMap:
    return PointMap(gs, gs, tuple(images))
