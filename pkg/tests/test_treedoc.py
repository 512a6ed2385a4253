"""JSON document round-trips and schema conformance."""

import json
from pathlib import Path

import jsonschema
import pytest

from natlib.natdk import DKNat, enumerate_dknats_of_shape
from natlib.nat_core import SINGLE_NODE_NAT, enumerate_nats_by_size
from natlib.perms import TwoColouredCycle
from natlib.treedoc import (
    DocumentError,
    dump_document,
    load_document,
    poly_to_json,
    series_to_json,
)
from natlib.formulas import ParamPoly
from natlib.series import TruncSeries
from natlib.trees import (
    EMPTY_LEFT,
    EMPTY_RIGHT,
    LEAF,
    DKTree,
    EmptyDK,
    Node,
    OrderedTree,
    enumerate_binary_trees,
    enumerate_dk_trees,
    enumerate_ordered_trees,
)

SCHEMA_PATH = (Path(__file__).parent.parent / "src" / "natlib" / "schemas"
               / "treedoc.schema.json")
with open(SCHEMA_PATH, "r", encoding="utf-8") as fh:
    SCHEMA = json.load(fh)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)


def roundtrip(obj):
    doc = dump_document(obj)
    VALIDATOR.validate(doc)
    # force a pass through real JSON text
    return load_document(json.loads(json.dumps(doc)))


class TestRoundTrips:
    def test_binary(self):
        for n in range(0, 5):
            for t in enumerate_binary_trees(n):
                assert roundtrip(t) == t
        assert roundtrip(EMPTY_LEFT) == EMPTY_LEFT
        assert roundtrip(EMPTY_RIGHT) == EMPTY_RIGHT

    def test_nat(self):
        assert roundtrip(SINGLE_NODE_NAT) == SINGLE_NODE_NAT
        for t in enumerate_nats_by_size(3, 2):
            assert roundtrip(t) == t

    def test_ordered(self):
        assert roundtrip(LEAF) == LEAF
        for t in enumerate_ordered_trees(4):
            assert roundtrip(t) == t

    def test_dk(self):
        for t in enumerate_dk_trees(3, 2, 3):
            assert roundtrip(t) == t
        assert roundtrip(EmptyDK((1, 3))) == EmptyDK((1, 3))

    def test_dknat(self):
        shape = DKTree(3, 2, (((1, 2), DKTree(3, 2, ())),
                              ((2, 3), DKTree(3, 2, ()))))
        for t in enumerate_dknats_of_shape(shape):
            assert roundtrip(t) == t

    def test_cycle(self):
        c = TwoColouredCycle.parse("(b2 b1 r1)", 1, 2)
        assert roundtrip(c) == c


class TestRejections:
    def test_unknown_kind(self):
        with pytest.raises(DocumentError):
            load_document({"kind": "weird"})
        with pytest.raises(DocumentError):
            load_document([1, 2, 3])

    def test_invalid_nat_labelling(self):
        doc = {
            "kind": "nat",
            "root": {"left": {"left": None, "right": None}, "right": None},
            "left_labels": {"L": 7},
            "right_labels": {},
        }
        with pytest.raises(DocumentError):
            load_document(doc)

    def test_invalid_cycle(self):
        doc = {"kind": "cycle", "i": 1, "j": 2, "word": "(b1 b2 r1)"}
        with pytest.raises(DocumentError):
            load_document(doc)  # blocks must decrease

    def test_bad_direction(self):
        doc = {"kind": "dk", "d": 3, "k": 2, "root": None, "direction": "2,1"}
        with pytest.raises(DocumentError):
            load_document(doc)

    def test_nat_needs_root(self):
        with pytest.raises(DocumentError):
            load_document({"kind": "nat", "root": None,
                           "left_labels": {}, "right_labels": {}})


class TestShippedFigures:
    @pytest.mark.parametrize("name", ["burstein.json", "sigma_example.json",
                                      "ex_hook.json"])
    def test_figures_are_schema_valid(self, name):
        path = Path(__file__).parent.parent / "demos" / "figures" / name
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        VALIDATOR.validate(doc)
        load_document(doc)


class TestPolynomialSerialization:
    def test_poly_rows(self):
        a = ParamPoly.var("a", ("a", "b"))
        b = ParamPoly.var("b", ("a", "b"))
        rows = poly_to_json(3 * a ** 2 * b + 1)
        assert {"monomial": "1", "coeff": "1"} in rows
        assert {"monomial": "a^2*b", "coeff": "3"} in rows

    def test_rational_coefficients_are_strings(self):
        from fractions import Fraction

        p = ParamPoly(("q",), {(1,): Fraction(1, 3)})
        assert poly_to_json(p) == [{"monomial": "q", "coeff": "1/3"}]

    def test_series_rows(self):
        x = TruncSeries.var("x", ("x",), 3)
        rows = series_to_json(1 + 2 * x)
        assert rows == [
            {"monomial": "1", "coeff": "1"},
            {"monomial": "x", "coeff": "2"},
        ]
