import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from bifixlab import ternary_witness, unary_free
from bifixlab.cli import EXIT_ERROR, EXIT_FAIL, EXIT_OK, main, parse_map
from bifixlab.io import parse_dfa, write_dfa

SCHEMA = json.loads(resources.files("bifixlab").joinpath("schemas/report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def t9(tmp_path):
    path = tmp_path / "t9.dfa"
    write_dfa(ternary_witness(9), path)
    return str(path)


class TestWitness:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "witness", "ternary", "-n", "9")
        assert code == EXIT_OK
        assert parse_dfa(out) == ternary_witness(9)

    def test_json(self, capsys):
        code, out, _ = run(capsys, "witness", "unary", "-n", "4", "--json")
        data = json.loads(out)
        assert data["states"] == 4 and data["delta"] == unary_free(4).delta.tolist()

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "w.dfa"
        code, out, _ = run(capsys, "witness", "revmagic", "-n", "6", "--alpha", "7", "-o", str(path))
        assert code == EXIT_OK and out == ""
        assert parse_dfa(path.read_text()).state_count == 6

    def test_bad_size(self, capsys):
        code, _, err = run(capsys, "witness", "ternary", "-n", "5")
        assert code == EXIT_ERROR and err.startswith("bifixlab: error:")


class TestInspect:
    def test_check(self, capsys, t9):
        code, out, _ = run(capsys, "check", t9, "--json")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["bifix_free"] and data["minimal"] and data["empty_state"] == 8

    def test_check_text(self, capsys, t9):
        _, out, _ = run(capsys, "check", t9)
        assert "bifix_free: true" in out

    def test_semigroup(self, capsys, t9):
        code, out, _ = run(capsys, "semigroup", t9, "--classify", "--pairs")
        assert code == EXIT_OK
        assert "syntactic: 2820" in out and "sub_wbf: true" in out
        assert "colliding: -" in out

    def test_atoms(self, capsys, t9):
        code, out, _ = run(capsys, "atoms", t9, "--json")
        assert json.loads(out)["count"] == 66

    def test_export_dot(self, capsys, t9):
        _, out, _ = run(capsys, "export-dot", t9)
        assert out.startswith("digraph")


class TestOps:
    def test_reverse(self, capsys, t9):
        code, out, _ = run(capsys, "op", "reverse", t9)
        assert code == EXIT_OK and parse_dfa(out).state_count == 66

    def test_concat(self, capsys, t9):
        _, out, _ = run(capsys, "op", "concat", t9, t9)
        assert parse_dfa(out).state_count == 16

    def test_arity(self, capsys, t9):
        assert run(capsys, "op", "union", t9)[0] == EXIT_ERROR
        assert run(capsys, "op", "star", t9, t9)[0] == EXIT_ERROR

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "op", "star", str(tmp_path / "none.dfa"))
        assert code == EXIT_ERROR and "error" in err

    def test_dialect(self, capsys, t9):
        _, out, _ = run(capsys, "dialect", t9, "--map", "a=a,b=c,c=b")
        d = parse_dfa(out)
        assert d.transformation("b") == ternary_witness(9).transformation("c")


class TestReports:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "--json", "table", "ops", "--m", "9", "--n", "9")
        data = json.loads(out)
        jsonschema.validate(data, SCHEMA)
        assert code == EXIT_OK and data["all_passed"]
        assert data["observed"]["reversal"] == 66

    def test_flag_after_command(self, capsys):
        _, a, _ = run(capsys, "--json", "verify", "syntactic", "-n", "6")
        _, b, _ = run(capsys, "verify", "syntactic", "-n", "6", "--json")
        assert a == b and json.loads(a)["observed"]["syntactic"] == 213

    def test_failing_report(self, capsys):
        code, out, _ = run(capsys, "verify", "atoms", "-n", "6")
        assert code == EXIT_FAIL and "FAIL" in out

    def test_resource_guard(self, capsys):
        code, _, err = run(capsys, "--max-elements", "100", "verify", "syntactic", "-n", "7")
        assert code == EXIT_ERROR and "error" in err


def test_parse_map():
    assert parse_map("a=b,b=a,c=-") == {"a": "b", "b": "a", "c": None}
    with pytest.raises(Exception):
        parse_map("a")


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "bifixlab", "verify", "product", "-n", "7", "--trials", "4",
           "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["all_passed"]
