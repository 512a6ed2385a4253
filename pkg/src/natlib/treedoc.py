"""JSON tree documents: serialization for every object the CLI handles.

A document is ``{"kind": ..., ...}`` with kinds:

- ``binary``:  {"kind": "binary", "root": node|null, "side": "L"|"R"}
  where node = {"left": node|null, "right": node|null}; an absent root is
  one of the two empty trees, told apart by "side".
- ``nat``:     binary document plus {"left_labels": {path: int},
  "right_labels": {path: int}}, paths being strings over {"L","R"}
  ("" is the root).
- ``ordered``: {"kind": "ordered", "root": {"children": [node, ...]}}.
- ``dk``:      {"kind": "dk", "d": d, "k": k, "root": node|null,
  "direction": "i1,i2"} with node = {"children": {"1,3": node, ...}};
  "direction" is only needed for empty trees.
- ``dknat``:   dk document plus {"labels": {path: [int|null, ...]}},
  paths being "/"-joined directions such as "1,3/2,3".
- ``cycle``:   {"kind": "cycle", "i": i, "j": j, "word": "(b2 b1 r1)"}
  for two-coloured cycles.
"""

from __future__ import annotations

from typing import Any

from .formulas import ParamPoly
from .nat_core import Nat, validate_nat
from .natdk import DKNat, validate_dknat
from .perms import TwoColouredCycle, validate_2cbd
from .series import TruncSeries
from .trees import (
    EMPTY_LEFT,
    EMPTY_RIGHT,
    DKTree,
    Direction,
    Empty,
    EmptyDK,
    Node,
    OrderedTree,
)

__all__ = [
    "DocumentError",
    "dump_document",
    "load_document",
    "poly_to_json",
    "series_to_json",
]


class DocumentError(ValueError):
    """Raised when a JSON document is malformed or fails validation."""


# -- binary trees ----------------------------------------------------------


def _node_to_json(node: Node | None) -> Any:
    if node is None:
        return None
    return {"left": _node_to_json(node.left), "right": _node_to_json(node.right)}


def _node_from_json(obj: Any) -> Node | None:
    if obj is None:
        return None
    if not isinstance(obj, dict):
        raise DocumentError(f"binary node must be an object, got {obj!r}")
    return Node(_node_from_json(obj.get("left")), _node_from_json(obj.get("right")))


# -- ordered trees ---------------------------------------------------------


def _ordered_to_json(t: OrderedTree) -> Any:
    return {"children": [_ordered_to_json(c) for c in t.children]}


def _ordered_from_json(obj: Any) -> OrderedTree:
    if not isinstance(obj, dict) or not isinstance(obj.get("children"), list):
        raise DocumentError(f"ordered node must have a children list: {obj!r}")
    return OrderedTree(tuple(_ordered_from_json(c) for c in obj["children"]))


# -- dk trees ---------------------------------------------------------------


def _direction_str(pi: Direction) -> str:
    return ",".join(str(i) for i in pi)


def _direction_from_str(text: str, d: int, k: int) -> Direction:
    try:
        pi = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise DocumentError(f"bad direction {text!r}") from None
    if len(pi) != k or sorted(set(pi)) != list(pi) or not all(1 <= i <= d for i in pi):
        raise DocumentError(f"{text!r} is not a ({d},{k})-direction")
    return pi


def _dk_to_json(t: DKTree) -> Any:
    return {
        "children": {
            _direction_str(pi): _dk_to_json(sub) for pi, sub in t.children
        }
    }


def _dk_from_json(obj: Any, d: int, k: int) -> DKTree:
    if not isinstance(obj, dict) or not isinstance(obj.get("children"), dict):
        raise DocumentError(f"dk node must have a children mapping: {obj!r}")
    children = tuple(
        sorted(
            (_direction_from_str(key, d, k), _dk_from_json(sub, d, k))
            for key, sub in obj["children"].items()
        )
    )
    try:
        return DKTree(d, k, children)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


# -- documents ---------------------------------------------------------------


def dump_document(obj) -> dict:
    """Serialize a library object to a JSON-compatible document."""
    if isinstance(obj, Empty):
        return {"kind": "binary", "root": None, "side": obj.side}
    if isinstance(obj, Node):
        return {"kind": "binary", "root": _node_to_json(obj)}
    if isinstance(obj, Nat):
        return {
            "kind": "nat",
            "root": _node_to_json(obj.shape),
            "left_labels": {p: v for p, v in obj.left_items},
            "right_labels": {p: v for p, v in obj.right_items},
        }
    if isinstance(obj, OrderedTree):
        return {"kind": "ordered", "root": _ordered_to_json(obj)}
    if isinstance(obj, EmptyDK):
        k = len(obj.direction)
        return {
            "kind": "dk",
            "d": max(obj.direction),
            "k": k,
            "root": None,
            "direction": _direction_str(obj.direction),
        }
    if isinstance(obj, DKTree):
        return {"kind": "dk", "d": obj.d, "k": obj.k, "root": _dk_to_json(obj)}
    if isinstance(obj, DKNat):
        return {
            "kind": "dknat",
            "d": obj.shape.d,
            "k": obj.shape.k,
            "root": _dk_to_json(obj.shape),
            "labels": {
                "/".join(_direction_str(pi) for pi in path): list(lab)
                for path, lab in obj.label_items
            },
        }
    if isinstance(obj, TwoColouredCycle):
        return {"kind": "cycle", "i": obj.i, "j": obj.j, "word": str(obj)}
    raise DocumentError(f"cannot serialize {type(obj).__name__}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DocumentError(message)


def load_document(doc: Any):
    """Parse and validate a JSON document into a library object."""
    _require(isinstance(doc, dict), "document must be a JSON object")
    kind = doc.get("kind")
    if kind == "binary":
        root = _node_from_json(doc.get("root"))
        if root is None:
            side = doc.get("side", "L")
            _require(side in ("L", "R"), f"bad empty-tree side {side!r}")
            return EMPTY_LEFT if side == "L" else EMPTY_RIGHT
        return root
    if kind == "nat":
        root = _node_from_json(doc.get("root"))
        _require(root is not None, "a nat document needs a non-empty root")
        left = doc.get("left_labels", {})
        right = doc.get("right_labels", {})
        _require(
            isinstance(left, dict) and isinstance(right, dict),
            "labels must be path -> integer mappings",
        )
        bad = validate_nat(root, dict(left), dict(right))
        if bad:
            raise DocumentError("; ".join(bad))
        return Nat.from_labels(root, dict(left), dict(right))
    if kind == "ordered":
        return _ordered_from_json(doc.get("root"))
    if kind in ("dk", "dknat"):
        d, k = doc.get("d"), doc.get("k")
        _require(
            isinstance(d, int) and isinstance(k, int) and 1 <= k <= d,
            "dk documents need integers 1 <= k <= d",
        )
        if doc.get("root") is None:
            _require(kind == "dk", "a dknat document needs a non-empty root")
            return EmptyDK(_direction_from_str(doc.get("direction", ""), d, k))
        shape = _dk_from_json(doc["root"], d, k)
        if kind == "dk":
            return shape
        labels_doc = doc.get("labels", {})
        _require(isinstance(labels_doc, dict), "labels must be a mapping")
        labels = {}
        for key, lab in labels_doc.items():
            path = tuple(
                _direction_from_str(part, d, k)
                for part in key.split("/") if part
            )
            _require(
                isinstance(lab, list) and len(lab) == d
                and all(v is None or isinstance(v, int) for v in lab),
                f"label at {key!r} must be a {d}-list of integers and nulls",
            )
            labels[path] = tuple(lab)
        t = DKNat.from_labels(shape, labels)
        bad = validate_dknat(t)
        if bad:
            raise DocumentError("; ".join(bad))
        return t
    if kind == "cycle":
        i, j = doc.get("i"), doc.get("j")
        _require(
            isinstance(i, int) and isinstance(j, int) and i >= 0 and j >= 0,
            "cycle documents need non-negative integers i and j",
        )
        try:
            c = TwoColouredCycle.parse(doc.get("word", ""), i, j)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
        bad = validate_2cbd(c)
        if bad:
            raise DocumentError("; ".join(bad))
        return c
    raise DocumentError(f"unknown document kind {kind!r}")


# -- polynomials and series --------------------------------------------------


def _monomial_str(symbols: tuple[str, ...], expo: tuple[int, ...]) -> str:
    parts = [
        s if e == 1 else f"{s}^{e}" for s, e in zip(symbols, expo) if e
    ]
    return "*".join(parts) if parts else "1"


def poly_to_json(poly: ParamPoly) -> list[dict]:
    """Sorted list of {"monomial": "a^2*b", "coeff": "3"} records."""
    return [
        {
            "monomial": _monomial_str(poly.symbols, expo),
            "coeff": str(poly.coeffs[expo]),
        }
        for expo in sorted(poly.coeffs)
    ]


def series_to_json(s: TruncSeries) -> list[dict]:
    """Flattened coefficient table: series variables and parameters mixed."""
    rows = []
    for expo in sorted(s.coeffs, key=lambda e: (sum(e), e)):
        poly = s.coeffs[expo]
        for p_expo in sorted(poly.coeffs):
            symbols = s.variables + poly.symbols
            exponents = expo + p_expo
            rows.append(
                {
                    "monomial": _monomial_str(symbols, exponents),
                    "coeff": str(poly.coeffs[p_expo]),
                }
            )
    return rows
