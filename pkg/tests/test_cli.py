import io
import json

import pytest

from hyperlattice.cli import run_cli


def run(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_points_json():
    code, out, _ = run("points", "0", "0", "-4", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 6


def test_global_flag_before_command():
    code, out, _ = run("--format", "csv", "points", "1", "3", "1")
    assert code == 0 and out == "x,y\n-2,1\n0,1\n"


def test_count_degenerate():
    code, out, _ = run("count", "1", "2", "1")
    assert code == 0
    assert out == "infinite; family y = x + 1, x ≠ -1\n"


def test_count_finite_json():
    code, out, _ = run("count", "2", "1", "10", "--format", "json")
    assert json.loads(out) == {"D": 12, "count": 12, "N": 3, "square": False}


def test_verify():
    code, out, _ = run("verify", "2", "1", "10")
    assert code == 0
    assert out == "OK: 12 = 12 = 12 points (formula/divisor-scan/window-scan)\n"
    code, out, _ = run("verify", "1", "2", "1")
    assert code == 0 and out.startswith("OK: degenerate line")


def test_verify_mismatch_exit_code(monkeypatch):
    from hyperlattice import oracle
    from hyperlattice.model import PointSet

    monkeypatch.setattr(oracle, "divisor_scan_points", lambda curve: PointSet())
    code, out, err = run("verify", "2", "1", "10")
    assert code == 3
    assert out.startswith("MISMATCH") and err.startswith("error: mismatch:")


def test_analyze():
    code, out, _ = run("analyze", "2", "0", "0", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["critical_xs"] == [0, -4] and rec["local_max"] == [-4, -8]
    code, out, _ = run("analyze", "3", "2", "1", "--format", "json")
    assert json.loads(out)["y_intercept"] == "1/3"
    code, out, _ = run("analyze", "1", "2", "1", "--format", "json")
    assert json.loads(out) == {"shape": "line", "slope": 1, "intercept": 1, "hole_x": -1}


def test_analyze_non_square_is_domain_error():
    code, out, err = run("analyze", "0", "3", "2")
    assert code == 1 and out == ""
    assert err.startswith("error: domain:") and err.count("\n") == 1


def test_parametric():
    code, out, _ = run("parametric", "0", "4", "4", "--format", "json")
    rec = json.loads(out)
    assert rec["positive"] == [{"x": 1, "y": 9}, {"x": 2, "y": 8}, {"x": 4, "y": 9}]
    assert rec["zero"] == {"x": -2, "y": 0}
    code, out, _ = run("parametric", "0", "4", "4", "--format", "csv")
    assert out.splitlines()[0] == "family,x,y" and len(out.splitlines()) == 7


def test_trinomial():
    code, out, _ = run("trinomial", "-1", "0", "4", "--format", "json")
    assert json.loads(out) == {
        "discriminant": 16,
        "nature": "two_rational",
        "integer_roots": [-2, 2],
        "unit_shortcut": [-2, 2],
    }
    code, _, err = run("trinomial", "0", "1", "1")
    assert code == 1 and "domain" in err


@pytest.mark.parametrize(
    "argv",
    [("points", "x", "0", "1"), ("points", "0", "1"), ("frobnicate",), ("points", "2000000000", "0", "1")],
)
def test_parse_errors(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_bound_flag_and_env(monkeypatch):
    assert run("points", "11", "0", "1", "--bound", "10")[0] == 2
    monkeypatch.setenv("HYPERLATTICE_BOUND", "5")
    code, _, err = run("points", "6", "0", "1")
    assert code == 2 and err.startswith("error: bound:")
    assert run("points", "6", "0", "1", "--bound", "100")[0] == 0


def test_points_on_degenerate_is_domain_error():
    assert run("points", "1", "2", "1")[0] == 1


def test_out_file(tmp_path):
    target = tmp_path / "pts.csv"
    code, out, _ = run("points", "0", "0", "1", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "x,y\n-1,-2\n1,2\n"


def test_plot_explicit_bounds():
    code, out, _ = run("plot", "0", "4", "4", "--xmin", "-8", "--xmax", "8", "--ymin", "-12", "--ymax", "12")
    assert code == 0 and out.count('class="point"') == 6
    assert run("plot", "0", "4", "4", "--xmin", "3", "--xmax", "1")[0] == 1


def test_batch(tmp_path):
    src = tmp_path / "in.jsonl"
    src.write_text('{"a":0,"b":0,"c":-4}\n{"a":1,"b":2,"c":1}\n{bad\n')
    code, out, _ = run("batch", str(src))
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(lines) == 4
    assert lines[2] == {"error": "parse"}
    assert run("batch", str(tmp_path / "missing.jsonl"))[0] == 2


def test_batch_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"a":1,"b":3,"c":1}\n'))
    code, out, _ = run("batch", "-")
    assert code == 0 and json.loads(out.splitlines()[0])["count"] == 2
