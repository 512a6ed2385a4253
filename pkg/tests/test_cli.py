"""Command-line interface: outputs, determinism, exit codes."""

import json
from pathlib import Path

import jsonschema
import pytest

from natlib.cli import main

FIGURES = Path(__file__).parent.parent / "demos" / "figures"
SCHEMA_PATH = (Path(__file__).parent.parent / "src" / "natlib" / "schemas"
               / "treedoc.schema.json")
with open(SCHEMA_PATH, "r", encoding="utf-8") as fh:
    VALIDATOR = jsonschema.Draft202012Validator(json.load(fh))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestCount:
    def test_trivial_size(self, capsys):
        assert run_json(capsys, "count", "--size", "1x1") == {"count": 1}

    def test_derived_size(self, capsys):
        assert run_json(capsys, "count", "--size", "2x2") == {"count": 3}

    def test_shape_file(self, capsys):
        out = run_json(capsys, "count", "--shape",
                       str(FIGURES / "ex_hook.json"))
        assert out == {"count": 24}

    def test_q_polynomial(self, capsys):
        out = run_json(capsys, "count", "--shape",
                       str(FIGURES / "ex_hook.json"), "--q")
        rows = out["polynomial"]
        assert {"monomial": "q_L*q_R^2", "coeff": "2"} in rows
        assert sum(int(r["coeff"]) for r in rows) == 24

    def test_hook_refinement(self, capsys):
        out = run_json(capsys, "count", "--size", "3x3", "--hook", "2")
        assert out == {"count": 18}

    def test_alpha_beta_polynomial(self, capsys):
        out = run_json(capsys, "count", "--size", "2x2", "--alpha", "--beta")
        total = sum(int(r["coeff"]) for r in out["polynomial"])
        assert total == 3

    def test_bad_size_is_input_error(self, capsys):
        code, _, err = run(capsys, "count", "--size", "2by2")
        assert code == 2
        assert err

    def test_missing_file_is_input_error(self, capsys):
        code, _, _ = run(capsys, "count", "--shape", "/no/such/file.json")
        assert code == 2


class TestBijection:
    def test_phi_reference(self, capsys):
        out = run_json(capsys, "bijection", "phi",
                       str(FIGURES / "burstein.json"))
        assert out["cycles"] == ("(1 6 20 12 5 22 10 2 23 13)"
                                 "(3 7 17 15 4 19 18)(8 16 14 9)(11)(21)")
        assert out["permutation"][22] == 13

    def test_psi_reference(self, capsys):
        out = run_json(capsys, "bijection", "psi",
                       str(FIGURES / "burstein.json"))
        VALIDATOR.validate(out["cycle"])
        assert out["cycle"]["word"].startswith("(b9 r5 b8 b3")

    def test_theta_from_cycle_document(self, capsys, tmp_path):
        doc = {"kind": "cycle", "i": 1, "j": 2, "word": "(b2 b1 r1)"}
        path = tmp_path / "cycle.json"
        path.write_text(json.dumps(doc))
        out = run_json(capsys, "bijection", "theta", str(path))
        assert sorted(out["permutation"]) == [1, 2]

    def test_zeta_on_file(self, capsys):
        out = run_json(capsys, "bijection", "zeta",
                       str(FIGURES / "ex_hook.json"))
        VALIDATOR.validate(out["ordered"])

    def test_zeta_table(self, capsys):
        out = run_json(capsys, "bijection", "zeta", "--size", "3", "--all")
        assert len(out["pairs"]) == 5
        for pair in out["pairs"]:
            VALIDATOR.validate(pair["binary"])
            VALIDATOR.validate(pair["ordered"])

    @pytest.mark.parametrize("which", ["phi", "psi", "theta", "zeta"])
    def test_verify_roundtrip(self, capsys, which):
        out = run_json(capsys, "bijection", which,
                       "--verify-roundtrip", "--max-size", "5")
        assert out["ok"] is True
        assert out["checked"] > 0

    def test_wrong_document_kind(self, capsys):
        code, _, _ = run(capsys, "bijection", "phi",
                         str(FIGURES / "ex_hook.json"))
        assert code == 2

    def test_missing_input(self, capsys):
        code, _, _ = run(capsys, "bijection", "phi")
        assert code == 2


class TestSeries:
    @pytest.mark.parametrize("which,extra", [
        ("N", []),
        ("M", []),
        ("N_ab", []),
        ("hookgf", []),
        ("Ndk", ["--d", "2", "--k", "1"]),
        ("Ndk", ["--d", "3", "--k", "3"]),
        ("BpOp", []),
    ])
    def test_diff_against_closed_form_is_zero(self, capsys, which, extra):
        out = run_json(capsys, "series", which, "--order", "5",
                       "--diff-against-closed-form", *extra)
        assert out == {"difference": "0"}

    def test_coefficient_dump(self, capsys):
        out = run_json(capsys, "series", "N", "--order", "3")
        rows = {r["monomial"]: r["coeff"] for r in out["series"]}
        assert rows["1"] == "1"
        assert rows["x*y"] == "3"

    def test_ndk_requires_dimensions(self, capsys):
        code, _, _ = run(capsys, "series", "Ndk", "--order", "3")
        assert code == 2

    def test_order_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("NATLIB_MAX_ORDER", "4")
        code, _, err = run(capsys, "series", "N", "--order", "6")
        assert code == 3
        assert "cap" in err

    def test_no_closed_form_is_input_error(self, capsys):
        code, _, _ = run(capsys, "series", "Ndk", "--order", "3",
                         "--d", "3", "--k", "2",
                         "--diff-against-closed-form")
        assert code == 2


class TestHistogram:
    def test_hook_csv(self, capsys):
        code, out, _ = run(capsys, "histogram", "--size", "2x2",
                           "--stat", "hook")
        assert code == 0
        assert out.splitlines() == ["value,count", "1,1", "2,2"]

    def test_ce_matches_hook(self, capsys):
        _, hook_out, _ = run(capsys, "histogram", "--size", "3x3",
                             "--stat", "hook")
        _, ce_out, _ = run(capsys, "histogram", "--size", "3x3",
                           "--stat", "ce")
        assert hook_out == ce_out

    def test_binary_vs_ordered_transport(self, capsys):
        _, b_out, _ = run(capsys, "histogram", "--binary-size", "4",
                          "--stat", "hook")
        _, o_out, _ = run(capsys, "histogram", "--ordered-edges", "4",
                          "--stat", "childleaf")
        assert b_out == o_out

    def test_size_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("NATLIB_MAX_ORDER", "4")
        code, _, _ = run(capsys, "histogram", "--size", "4x4",
                         "--stat", "hook")
        assert code == 3

    def test_invalid_stat_combination(self, capsys):
        code, _, _ = run(capsys, "histogram", "--binary-size", "3",
                         "--stat", "ce")
        assert code == 2


class TestDeterminism:
    def test_repeated_runs_agree(self, capsys):
        first = run(capsys, "series", "N_ab", "--order", "4")
        second = run(capsys, "series", "N_ab", "--order", "4")
        assert first == second
