"""JSON space documents.

    {"name": "E1", "points": ["a", "b", "c"], "open_sets": [[], ["a"], ["a", "b"]],
     "maps": [{"target_space": "E2", "images": {"a": "a", "b": "b", "c": "c"}}]}

``name`` and ``maps`` are optional. Output always renders sets as sorted
label lists and sorts keys, so it never depends on bit positions.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DuplicateSet, SpaceSyntaxError
from .sets import GroundSet, SetFamily, subset_from_labels
from .space import GenTopology, validate_gt


@dataclass(frozen=True)
class SpaceDocument:
    points: tuple[str, ...]
    open_sets: tuple[tuple[str, ...], ...]
    name: str | None = None
    maps: tuple[dict, ...] = field(default=())

    def to_json(self) -> dict:
        out = {
            "points": list(self.points),
            "open_sets": sorted(sorted(s) for s in self.open_sets),
        }
        if self.name is not None:
            out["name"] = self.name
        if self.maps:
            out["maps"] = [dict(m) for m in self.maps]
        return out

    def space(self) -> GenTopology:
        gs = GroundSet(self.points)
        masks = [subset_from_labels(gs, s) for s in self.open_sets]
        if len(set(masks)) != len(masks):
            seen = set()
            for s, m in zip(self.open_sets, masks):
                if m in seen:
                    raise DuplicateSet(f"open set {sorted(s)} listed twice")
                seen.add(m)
        return validate_gt(gs, SetFamily(masks), self.name)


def _require(cond, message):
    if not cond:
        raise SpaceSyntaxError(message)


def parse_document(text: str) -> SpaceDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpaceSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    _require(isinstance(raw, dict), "space document must be a JSON object")
    unknown = set(raw) - {"points", "open_sets", "name", "maps"}
    _require(not unknown, f"unknown keys: {sorted(unknown)}")
    pts = raw.get("points")
    _require(isinstance(pts, list) and all(isinstance(p, str) for p in pts),
             "'points' must be a list of strings")
    sets = raw.get("open_sets")
    _require(isinstance(sets, list), "'open_sets' must be a list of lists")
    for s in sets:
        _require(isinstance(s, list) and all(isinstance(p, str) for p in s),
                 "'open_sets' must be a list of lists of strings")
    name = raw.get("name")
    _require(name is None or isinstance(name, str), "'name' must be a string")
    maps = raw.get("maps", [])
    _require(isinstance(maps, list), "'maps' must be a list")
    for m in maps:
        _require(isinstance(m, dict) and isinstance(m.get("images"), dict),
                 "each map block needs an 'images' object")
    return SpaceDocument(
        tuple(pts),
        tuple(tuple(s) for s in sets),
        name,
        tuple(maps),
    )


def parse_space(text: str) -> GenTopology:
    return parse_document(text).space()


def document_of(T: GenTopology, maps=()) -> SpaceDocument:
    return SpaceDocument(
        T.gs.labels,
        tuple(tuple(T.gs.names(m)) for m in T.mu),
        T.name,
        tuple(maps),
    )


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)


def serialize_space(T: GenTopology, maps=()) -> str:
    return dumps(document_of(T, maps).to_json())


def load_space(path: str) -> tuple[GenTopology, SpaceDocument]:
    with open(path, encoding="utf-8") as fh:
        doc = parse_document(fh.read())
    return doc.space(), doc
