"""JSON document formats for point sets, matrices, functions, and reports.

Formats (all JSON):

  * point set:  {"dimension": n, "points": [["x1", "x2", "x3"], ...]}
  * rational:   "p/q" with q > 0 and gcd(p, q) = 1, or the integer
                shortcut "p"; str(Fraction) produces exactly this form
  * matrix:     array of arrays of rational strings
  * function:   {"values": [[pointIndex, "p/q"], ...]} keyed by point
                position in the point-set document; must cover every point
  * boundary:   {"coords": [[axis, "symbol"], ...],
                 "values": [["symbol@axis", "p/q"], ...]} (values optional)
  * components: {"blocks": [[pointIndex, ...], ...]}
  * geodesic:   {"found": bool, "subset": [pointIndex, ...],
                 "alternatives": count}

Malformed documents raise ParseError; substantive validation (duplicate
points, bad dimensions) is left to the model layer and raises its errors.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Mapping

from .analysis import BoundarySet, Decomposition
from .components import GeodesicResult, Partition
from .errors import ParseError
from .linalg import Matrix
from .model import CoordinateLabel, Point, PointSet, point_set

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p". Any other shape (decimals, spaces) is rejected."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator: {text!r}") from None


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParseError(message)


def point_set_to_doc(s: PointSet) -> dict[str, Any]:
    return {
        "dimension": s.dimension,
        "points": [list(p.symbols()) for p in s],
    }


def point_set_from_doc(doc: Any) -> PointSet:
    _require(isinstance(doc, dict), "point-set document must be a JSON object")
    _require("dimension" in doc and "points" in doc, 'point-set document needs "dimension" and "points"')
    dimension = doc["dimension"]
    rows = doc["points"]
    _require(isinstance(dimension, int) and not isinstance(dimension, bool), '"dimension" must be an integer')
    _require(isinstance(rows, list), '"points" must be an array')
    for row in rows:
        _require(
            isinstance(row, list) and all(isinstance(sym, str) for sym in row),
            f"point {row!r} must be an array of strings",
        )
    return point_set(rows, dimension)


def matrix_to_doc(m: Matrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.entries]


def matrix_from_doc(doc: Any) -> Matrix:
    _require(isinstance(doc, list), "matrix document must be an array of arrays")
    for row in doc:
        _require(isinstance(row, list), "matrix document must be an array of arrays")
    return Matrix.of([[parse_rational(x) for x in row] for row in doc], cols=None if doc else 0)


def _point_index(raw: Any, size: int) -> int:
    if isinstance(raw, bool):
        raise ParseError(f"not a point index: {raw!r}")
    if isinstance(raw, str):
        _require(bool(re.match(r"^\d+$", raw)), f"not a point index: {raw!r}")
        raw = int(raw)
    _require(isinstance(raw, int), f"not a point index: {raw!r}")
    _require(0 <= raw < size, f"point index {raw} out of range 0..{size - 1}")
    return raw


def function_values_from_doc(doc: Any, s: PointSet) -> dict[Point, Fraction]:
    """Parse a function document into a total map on the points of `s`."""
    _require(isinstance(doc, dict) and "values" in doc, 'function document needs "values"')
    pairs = doc["values"]
    _require(isinstance(pairs, list), '"values" must be an array of [index, rational] pairs')
    out: dict[Point, Fraction] = {}
    seen: set[int] = set()
    for pair in pairs:
        _require(isinstance(pair, list) and len(pair) == 2, f"bad value pair: {pair!r}")
        idx = _point_index(pair[0], len(s))
        _require(idx not in seen, f"duplicate value for point index {idx}")
        seen.add(idx)
        out[s.points[idx]] = parse_rational(pair[1])
    missing = [i for i in range(len(s)) if i not in seen]
    _require(not missing, f"function document must cover every point; missing {missing}")
    return out


def function_values_to_doc(values: Mapping[Point, Fraction], s: PointSet) -> dict[str, Any]:
    return {
        "values": [[i, format_rational(values[p])] for i, p in enumerate(s)],
    }


def _label_from_key(key: Any) -> CoordinateLabel:
    _require(isinstance(key, str) and "@" in key, f'boundary value key must be "symbol@axis": {key!r}')
    symbol, _, axis_text = key.rpartition("@")
    _require(bool(symbol) and bool(re.match(r"^\d+$", axis_text)), f"bad boundary value key: {key!r}")
    return CoordinateLabel(int(axis_text), symbol)


def boundary_from_doc(doc: Any) -> tuple[list[CoordinateLabel], dict[CoordinateLabel, Fraction] | None]:
    """Parse a boundary document into labels and optional pinned values."""
    _require(isinstance(doc, dict) and "coords" in doc, 'boundary document needs "coords"')
    coords = doc["coords"]
    _require(isinstance(coords, list), '"coords" must be an array of [axis, symbol] pairs')
    labels = []
    for pair in coords:
        _require(
            isinstance(pair, list)
            and len(pair) == 2
            and isinstance(pair[0], int)
            and not isinstance(pair[0], bool)
            and isinstance(pair[1], str),
            f"bad coordinate pair: {pair!r}",
        )
        labels.append(CoordinateLabel(pair[0], pair[1]))
    values: dict[CoordinateLabel, Fraction] | None = None
    if "values" in doc:
        raw = doc["values"]
        _require(isinstance(raw, list), '"values" must be an array of [key, rational] pairs')
        values = {}
        for pair in raw:
            _require(isinstance(pair, list) and len(pair) == 2, f"bad value pair: {pair!r}")
            values[_label_from_key(pair[0])] = parse_rational(pair[1])
    return labels, values


def boundary_to_doc(
    boundary: BoundarySet, values: Mapping[CoordinateLabel, Fraction] | None = None
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "coords": [[lab.axis, lab.symbol] for lab in boundary],
    }
    if values is not None:
        doc["values"] = [[str(lab), format_rational(values[lab])] for lab in boundary]
    return doc


def decomposition_to_doc(decomposition: Decomposition) -> dict[str, Any]:
    return {
        "axes": [
            {
                "axis": axis,
                "values": [
                    [lab.symbol, format_rational(val)]
                    for lab, val in decomposition.component(axis).items()
                ],
            }
            for axis in range(1, decomposition.dimension + 1)
        ]
    }


def partition_to_doc(partition: Partition) -> dict[str, Any]:
    return {"blocks": [list(block) for block in partition.index_blocks]}


def geodesic_to_doc(result: GeodesicResult) -> dict[str, Any]:
    return {
        "found": result.found,
        "subset": list(result.indices) if result.indices else [],
        "alternatives": result.alternatives,
    }
