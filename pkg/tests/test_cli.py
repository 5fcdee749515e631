import io
import json
import subprocess
import sys

import pytest

from cycshuffle import theorems
from cycshuffle.qpoly import QPoly
from cycshuffle.veritool import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_stats_cyclic():
    code, text = run("stats", "4,1,3,2", "--cyclic")
    assert code == 0
    lines = dict(line.split("=", 1) for line in text.splitlines())
    assert lines["cmaj"] == "4" and lines["cdes"] == "2" and lines["cbd"] == "{1,2}"
    assert lines["class"] == "[4,1,3,2]"


def test_stats_cyclic_any_rotation():
    _, text = run("stats", "3,2,4,1", "--cyclic")
    assert "class=[4,1,3,2]" in text


def test_stats_linear():
    code, text = run("stats", "6,1,4,3")
    assert code == 0
    assert "des_set={1,3}" in text and "maj=4" in text


def test_shuffles_linear():
    code, text = run("shuffles", "--sigma", "6,3", "--pi", "1,4")
    assert code == 0
    rows = [line.split("\t") for line in text.splitlines()]
    assert {r[0] for r in rows} == {"6,3,1,4", "6,1,3,4", "6,1,4,3", "1,4,6,3", "1,6,3,4", "1,6,4,3"}
    assert ["6,1,4,3", "des=2", "maj=4"] in rows


def test_shuffles_cyclic_in_lexicographic_order():
    code, text = run("shuffles", "--sigma", "6,3", "--pi", "4,1", "--cyclic")
    assert code == 0
    classes = [line.split("\t")[0] for line in text.splitlines()]
    assert classes == ["[6,1,3,4]", "[6,1,4,3]", "[6,3,1,4]", "[6,3,4,1]", "[6,4,1,3]", "[6,4,3,1]"]


def test_table_cyclic():
    code, text = run("table", "--sigma", "6,3", "--pi", "4,1", "--cyclic")
    assert code == 0
    rows = [line.split("\t") for line in text.splitlines()[1:]]
    assert rows == [
        ["1", "q", "q", "yes"],
        ["2", "2*q^3 + 2*q^4", "2*q^3 + 2*q^4", "yes"],
        ["3", "q^6", "q^6", "yes"],
    ]


def test_table_cyclic_swapped_operands():
    _, a = run("table", "--sigma", "6,3", "--pi", "4,1", "--cyclic")
    _, b = run("table", "--sigma", "4,1", "--pi", "6,3", "--cyclic")
    assert a == b


def test_table_linear():
    code, text = run("table", "--sigma", "6,3", "--pi", "1,4")
    assert code == 0
    assert "1\tq + q^2 + q^3\tq + q^2 + q^3\tyes" in text


def test_table_reports_mismatch(monkeypatch):
    monkeypatch.setattr(theorems, "stanley_rhs", lambda a, b, k: QPoly({0: 1}))
    code, text = run("table", "--sigma", "6,3", "--pi", "1,4")
    assert code == 1 and "NO" in text


@pytest.mark.parametrize("argv, code, needle", [
    (("stats", "4,x,2"), cli.EXIT_MALFORMED, "malformed"),
    (("stats", "4,4,2"), cli.EXIT_MALFORMED, "distinct"),
    (("stats", "4,0"), cli.EXIT_MALFORMED, "positive"),
    (("shuffles", "--sigma", "6,3", "--pi", "3,1"), cli.EXIT_DISJOINT, "not disjoint"),
    (("table", "--sigma", "6,3", "--pi", "6,1", "--cyclic"), cli.EXIT_DISJOINT, "not disjoint"),
    (("verify", "--max-total", "11"), cli.EXIT_RESOURCE, "resource limit"),
    (("verify", "--max-total", "4", "--oracle-bound", "6"), cli.EXIT_USAGE, "invalid sweep"),
])
def test_error_diagnostics(capsys, argv, code, needle):
    got, _ = run(*argv)
    assert got == code
    assert needle in capsys.readouterr().err


def test_unknown_flag(capsys):
    got, _ = run("stats", "1,2", "--bogus")
    assert got == cli.EXIT_USAGE
    assert "unrecognized arguments" in capsys.readouterr().err


def test_unknown_theorem(capsys):
    got, _ = run("verify", "--theorems", "stanley,foo")
    assert got == cli.EXIT_USAGE
    assert "unknown theorem" in capsys.readouterr().err


def test_verify_json_clean():
    code, text = run("verify", "--theorems", "all", "--max-total", "4", "--format", "json")
    assert code == 0
    report = json.loads(text)
    assert report["schema"] == 1 and report["failures"] == []
    assert set(report) == {"schema", "config", "cases_checked", "failures", "elapsed_ms", "rollup"}


def test_verify_exit_status_on_corruption(monkeypatch):
    original = theorems.cyclic_stanley_rhs
    monkeypatch.setattr(theorems, "cyclic_stanley_rhs", lambda pair, k: original(pair, k).shift(1))
    code, text = run("verify", "--theorems", "cyclic", "--max-total", "3", "--format", "json")
    assert code == 1
    assert json.loads(text)["failures"]


def test_verify_output_file(tmp_path):
    target = tmp_path / "report.tsv"
    code, text = run("verify", "--theorems", "counts", "--max-total", "3", "--format", "tsv",
                     "-o", str(target))
    assert code == 0 and text == ""
    assert target.read_text().startswith("theorem\tpair\tk")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cycshuffle", "stats", "6,4,1,3", "--cyclic"],
                          capture_output=True, text=True, check=True)
    assert "cbd={1,4}" in proc.stdout
