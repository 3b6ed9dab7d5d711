"""JSON formats for tilings, complexes and realizers.

Rationals are always strings (``"p/q"`` or ``"p"``) so nothing ever passes
through a float.
"""
from __future__ import annotations

import json

from .errors import UsageError
from .geometry import Box, Interval, format_coord, is_finite, parse_rational
from .order import Realizer, SimplicialComplex
from .tiling import Tiling


def tiling_to_obj(t: Tiling) -> dict:
    boxes = []
    for b in t.boxes:
        if not all(is_finite(iv.lo) and is_finite(iv.hi) for iv in b.intervals):
            raise UsageError("infinite coordinates cannot be serialized")
        boxes.append([[format_coord(iv.lo), format_coord(iv.hi)] for iv in b.intervals])
    return {"d": t.d, "boxes": boxes}


def dumps_tiling(t: Tiling) -> str:
    """Serialize with one box per line; output is byte-stable."""
    obj = tiling_to_obj(t)
    if not obj["boxes"]:
        return '{"d": %d, "boxes": []}\n' % t.d
    rows = ",\n".join("  " + json.dumps(b) for b in obj["boxes"])
    return '{"d": %d, "boxes": [\n%s\n]}\n' % (t.d, rows)


def tiling_from_obj(obj) -> Tiling:
    if not isinstance(obj, dict) or "d" not in obj or "boxes" not in obj:
        raise UsageError('tiling JSON must be an object with "d" and "boxes"')
    d = obj["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise UsageError(f'"d" must be a positive integer, got {d!r}')
    if not isinstance(obj["boxes"], list):
        raise UsageError('"boxes" must be a list')
    boxes = []
    for k, raw in enumerate(obj["boxes"]):
        if not isinstance(raw, list) or len(raw) != d:
            raise UsageError(f"box {k} must be a list of {d} [lo, hi] pairs")
        ivs = []
        for pair in raw:
            if not isinstance(pair, list) or len(pair) != 2:
                raise UsageError(f"box {k}: each interval must be a [lo, hi] pair")
            ivs.append(Interval(parse_rational(pair[0]), parse_rational(pair[1])))
        boxes.append(Box(tuple(ivs)))
    return Tiling(d, tuple(boxes))


def loads_tiling(text: str) -> Tiling:
    return tiling_from_obj(_loads(text))


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def _id_list(raw, what: str) -> list[int]:
    if not isinstance(raw, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
        raise UsageError(f"{what} must be a list of integer identifiers")
    return raw


def complex_from_obj(obj) -> SimplicialComplex:
    if not isinstance(obj, dict) or "vertices" not in obj or "maximal_faces" not in obj:
        raise UsageError('complex JSON must have "vertices" and "maximal_faces"')
    verts = _id_list(obj["vertices"], "vertices")
    if not isinstance(obj["maximal_faces"], list):
        raise UsageError('"maximal_faces" must be a list')
    faces = [_id_list(f, "a face") for f in obj["maximal_faces"]]
    return SimplicialComplex.from_faces(verts, faces)


def realizer_from_obj(obj) -> Realizer:
    if not isinstance(obj, dict) or not isinstance(obj.get("orders"), list):
        raise UsageError('realizer JSON must have an "orders" list')
    return Realizer(tuple(tuple(_id_list(o, "an order")) for o in obj["orders"]))


def loads_any(text: str) -> Tiling | SimplicialComplex | Realizer:
    """Parse a document of any of the three kinds, telling them apart by keys."""
    obj = _loads(text)
    if isinstance(obj, dict):
        if "boxes" in obj:
            return tiling_from_obj(obj)
        if "maximal_faces" in obj:
            return complex_from_obj(obj)
        if "orders" in obj:
            return realizer_from_obj(obj)
    raise UsageError("unrecognised JSON document (expected a tiling, complex or realizer)")
