import io
import json
import subprocess
import sys

import pytest

from intervalmono.cli import main
from intervalmono.enumeration import froidure_pin
from intervalmono.presentation import format_relations, machine_presentation, standard_alphabet, standard_assignment


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = main(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


def error_of(err):
    lines = err.splitlines()
    assert len(lines) == 1
    return json.loads(lines[0])


def test_count():
    assert run("count", "--family", "IM", "--n", "7") == (0, "505\n", "")
    status, out, _ = run("count", "--family", "PIO", "--n-range", "1:4", "--enumerate", "--oracle", "--format", "csv")
    assert status == 0
    assert out.splitlines()[1:] == ["1,PIO,2,2,2,True", "2,PIO,8,8,8,True", "3,PIO,28,28,28,True", "4,PIO,82,82,82,True"]


def test_table():
    status, out, _ = run("table", "--max-n", "12")
    rows = out.splitlines()
    assert status == 0 and len(rows) == 4
    assert rows[1].endswith(",12277,26612")
    assert rows[3].startswith("N(PIM_n),1,3,11,35")


def test_rank_is_reproducible():
    first = run("rank", "--family", "PIM", "--n", "4", "--method", "exhaustive")
    assert first == run("rank", "--family", "PIM", "--n", "4", "--method", "exhaustive")
    doc = json.loads(first[1])
    assert first[0] == 0 and doc["claimed_rank"] == 4 and doc["valid"]
    assert "wall_time" not in doc
    timed = json.loads(run("rank", "--family", "IM", "--n", "3", "--timing")[1])
    assert timed["wall_time"] >= 0


def test_structural_rank():
    status, out, _ = run("rank", "--family", "IM", "--n", "8", "--method", "structural")
    assert status == 0 and json.loads(out)["claimed_rank"] == 5


def test_enumerate_methods_agree():
    listings = {m: run("enumerate", "--family", "PIM", "--n", "3", "--method", m)[1] for m in ("constructive", "filter", "froidure-pin")}
    assert len(set(listings.values())) == 1
    assert len(listings["filter"].splitlines()) == 37


def test_nilpotents():
    doc = json.loads(run("nilpotents", "--n", "4", "--witness")[1])
    assert doc["count"] == doc["formula"] == 35
    assert all(row["count"] == row["formula"] for row in doc["by_domain"])
    assert len(doc["witness"]) == 2


def test_cayley_dot():
    status, out, _ = run("cayley-dot", "--n", "3", "--generators", "[1 2 3 / 3 2 1]")
    assert status == 0
    assert out.count("->") == 2


def _write_machine_base(tmp_path, n, family):
    letters = standard_alphabet(n, family, with_h=False)
    assignment = standard_assignment(n, family)
    table = froidure_pin([assignment[x] for x in letters], n, letters)
    path = tmp_path / f"{family}{n}.rel"
    path.write_text(format_relations(machine_presentation(table).relations))
    return str(path)


@pytest.mark.parametrize("family,n,size", [("IM", 3, 13), ("IM", 4, 36), ("PIM", 3, 37)])
def test_verify_presentation(tmp_path, family, n, size):
    path = _write_machine_base(tmp_path, n, family)
    status, out, _ = run("verify-presentation", "--family", family, "--n", str(n), "--relations", path)
    doc = json.loads(out)
    assert status == 0 and doc["defines_monoid"]
    assert doc["quotient_size"] == doc["expected_size"] == size


def test_verify_presentation_incomplete_base(tmp_path):
    # with no base relations the quotient is infinite
    path = tmp_path / "empty.rel"
    path.write_text("")
    status, out, _ = run("verify-presentation", "--n", "3", "--relations", str(path), "--bound", "200")
    doc = json.loads(out)
    assert status == 1 and doc["quotient_size"] is None and doc["bound_exceeded"]


def test_errors(tmp_path):
    status, _, err = run("count", "--family", "IM")
    assert status == 2 and error_of(err)["error"] == "usage"
    status, _, err = run("bogus")
    assert status == 2 and error_of(err)["error"] == "usage"
    status, _, err = run("enumerate", "--family", "PIM", "--n", "7", "--method", "filter")
    assert status == 3 and error_of(err)["error"] == "resource-guard"
    status, _, err = run("verify-presentation", "--n", "3", "--relations", str(tmp_path / "missing.rel"))
    assert status == 4 and error_of(err)["error"] == "io"
    bad = tmp_path / "bad.rel"
    bad.write_text("a1 z9 = 1\n")
    status, _, err = run("verify-presentation", "--n", "3", "--relations", str(bad))
    assert status == 4 and error_of(err)["error"] == "relation-file"
    status, _, err = run("enumerate", "--family", "XYZ", "--n", "3")
    assert status == 2 and error_of(err)["error"] == "invalid-argument"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "intervalmono", "count", "--family", "PIM", "--n", "12"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "121579\n"
