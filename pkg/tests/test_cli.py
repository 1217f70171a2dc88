"""Command-line interface: golden outputs, exit codes, determinism."""

import json
import subprocess
import sys

import pytest


def run_cli(*args, stdin_text=None):
    return subprocess.run(
        [sys.executable, "-m", "tanglekit.cli", *args],
        capture_output=True,
        text=True,
        input=stdin_text,
    )


class TestClosure:
    def test_montesinos_plus_integral(self):
        out = run_cli("closure", "(1/2, -1/3) + (-1)")
        assert out.returncode == 0
        data = json.loads(out.stdout)
        assert data["closure"] == {"p": 5, "q": 1, "torus": 5}

    def test_infinity(self):
        out = run_cli("closure", "(inf)")
        assert json.loads(out.stdout)["closure"] == {"p": 1, "q": 0, "torus": 1}

    def test_not_fourplat(self):
        out = run_cli("closure", "(1/2) + (1/3) + (1/5)")
        assert out.returncode == 0
        assert json.loads(out.stdout)["closure"] == {
            "not_fourplat": "three_exceptional_fibers"
        }

    def test_parse_error_exit_2(self):
        out = run_cli("closure", "(1/2")
        assert out.returncode == 2
        assert "error" in out.stderr

    def test_golden_bytes(self):
        out = run_cli("closure", "(1/2, -1/3) + (-1)")
        assert out.stdout == (
            '{"closure":{"p":5,"q":1,"torus":5},'
            '"input":"(1/2, -1/3) + (-1)",'
            '"value":"(1/2, -1/3, -1)"}\n'
        )


class TestCf:
    def test_worked_example(self):
        out = run_cli("cf", "(11/7)")
        assert json.loads(out.stdout) == {
            "fraction": "11/7",
            "vector": [3, 1, 1, 1],
            "class": "strictly_rational",
        }

    def test_warning_field(self):
        data = json.loads(run_cli("cf", "(2/4)").stdout)
        assert data["fraction"] == "1/2" and data["warnings"]


class TestSolve:
    def test_parametric_matches_worked_formulas(self):
        out = run_cli("solve", "inverted", "(11/7)", "--branch", "lower", "--t-min", "0", "--t-max", "0")
        data = json.loads(out.stdout)
        fam = data["families"][0]
        assert fam["bezout"] == {"r": -3, "s": 2}
        assert fam["class"] == 3
        assert all(row["pass"] for row in fam["instantiations"])
        assert out.returncode == 0

    def test_fourth_family(self):
        out = run_cli("solve", "inverted", "--family", "fourth", "--p", "0", "--branch", "lower")
        data = json.loads(out.stdout)["families"][0]
        assert data["P"] == "(0)" and data["R"] == "(-1)"
        assert data["O_f"]["2"] == ["(1/2, -1/3)"]
        assert data["pass"] is True

    def test_chiral_family(self):
        out = run_cli("solve", "inverted", "--family", "chiral", "--p", "0")
        data = json.loads(out.stdout)["families"][0]
        assert data["pinned_k1"] is True
        assert data["O_f"]["1"] == ["(-1/2)"]

    def test_fourth_needs_inverted(self):
        out = run_cli("solve", "direct", "--family", "fourth")
        assert out.returncode == 2


class TestClasses:
    def test_direct_has_three(self):
        data = json.loads(run_cli("classes", "direct").stdout)
        assert [c["class"] for c in data["classes"]] == [1, 2, 3]

    def test_inverted_has_four(self):
        data = json.loads(run_cli("classes", "inverted").stdout)
        assert [c["class"] for c in data["classes"]] == [1, 2, 3, 4]
        assert all(c["sample"]["pass"] for c in data["classes"])


SOLUTION_FIXTURE = {
    "system": "inverted",
    "branch": "lower",
    "P": "(0)",
    "R": "(-1)",
    "O_c": "(0)",
    "O_f": {"0": "(inf)", "1": "(-1/2)", "2": "(1/2, -1/3)", "3": "(-1/6)"},
}


class TestVerify:
    def test_pass_is_exit_zero(self, tmp_path):
        path = tmp_path / "solution.json"
        path.write_text(json.dumps(SOLUTION_FIXTURE), encoding="utf-8")
        out = run_cli("verify", str(path))
        assert out.returncode == 0
        data = json.loads(out.stdout)
        assert data["pass"] is True
        assert all(c["pass"] for c in data["checks"])

    def test_stdin_and_failure_exit_one(self):
        broken = dict(SOLUTION_FIXTURE, R="(2)")
        out = run_cli("verify", "-", stdin_text=json.dumps(broken))
        assert out.returncode == 1
        assert json.loads(out.stdout)["pass"] is False

    def test_oracle_output_is_bit_identical(self, tmp_path):
        path = tmp_path / "solution.json"
        path.write_text(json.dumps(SOLUTION_FIXTURE), encoding="utf-8")
        plain = run_cli("verify", str(path))
        oracle = run_cli("verify", str(path), "--oracle")
        assert oracle.returncode == 0
        assert oracle.stdout == plain.stdout


class TestOracle:
    def test_equal_expressions(self):
        out = run_cli("oracle", "(5)", "(1/2, -4/3)")
        assert out.returncode == 0
        assert json.loads(out.stdout)["jones_equal"] is True

    def test_unequal_exit_one(self):
        out = run_cli("oracle", "(3)", "(-3)")
        assert out.returncode == 1

    def test_pd_files(self, tmp_path):
        a = tmp_path / "a.pd"
        b = tmp_path / "b.pd"
        a.write_text("pd 1\nL 0\nX 0 1 4 3\nX 4 2 2 5\nX 3 5 1 0\n", encoding="utf-8")
        b.write_text("pd 1\nL 0\nX 1 2 3 4\nX 0 4 5 0\nX 5 3 2 1\n", encoding="utf-8")
        out = run_cli("oracle", str(a), str(b), "--pd")
        assert out.returncode == 0
        assert json.loads(out.stdout)["jones_equal"] is True


class TestSearch:
    def test_unit_r_search(self):
        out = run_cli(
            "search", "inverted", "(0)", "--k", "1", "--bound", "20", "--r", "(1)", "--r", "(-1)"
        )
        data = json.loads(out.stdout)
        assert {(h["O"], h["R"]) for h in data["hits"]} == {
            ("(1/2)", "(1)"),
            ("(-1/4)", "(1)"),
            ("(-1/2)", "(-1)"),
            ("(1/4)", "(-1)"),
        }

    def test_montesinos_search(self):
        out = run_cli("search", "--montesinos", "--bound", "4")
        data = json.loads(out.stdout)
        texts = {row["text"] for row in data["montesinos"]}
        assert "(1/2, -1/3)" in texts and "(1/2, -1/3) *v (-1/2)" in texts

    def test_config_default_bound(self, tmp_path):
        cfg = tmp_path / "config.json"
        cfg.write_text(json.dumps({"bound": 4}), encoding="utf-8")
        out = run_cli("search", "--montesinos", "--config", str(cfg))
        assert json.loads(out.stdout)["bound"] == 4


class TestXer:
    def test_hits_carry_family_tags(self):
        data = json.loads(run_cli("xer", "--bound", "8").stdout)
        assert data["hits"]
        assert all(h["darcy_family"] is not None for h in data["hits"])


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ("closure", "(1/2, 2/3, -1)"),
            ("cf", "(-11/7)"),
            ("solve", "inverted", "(11/7)", "--t-min", "-1", "--t-max", "1"),
            ("classes", "inverted"),
            ("xer", "--bound", "6"),
            ("search", "--montesinos", "--bound", "3"),
        ],
    )
    def test_byte_identical_reruns(self, args):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode

    def test_pretty_is_stable(self):
        a = run_cli("closure", "(11/7)", "--pretty")
        b = run_cli("closure", "(11/7)", "--pretty")
        assert a.stdout == b.stdout
        assert "\n  " in a.stdout
