import json
import subprocess
import sys

import pytest

from ivlattice.cli import main
from ivlattice.enumeration import Catalog


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj) + "\n")
        return str(path)
    return _write


def test_counts(capsys):
    assert run(capsys, "counts", "--n", "4") == (0, "15\n", "")
    assert run(capsys, "counts", "--n", "4", "--sp") == (0, "14\n", "")
    assert run(capsys, "counts", "--n", "6")[1] == "217\n"


def test_meet_with_itself_is_byte_identical(capsys, write, tmp_path):
    path = write("p.json", {"n": 4, "lt": [[1, 4], [2, 3], [2, 4]]})
    code, out, _ = run(capsys, "meet", "--a", path, "--b", path)
    assert code == 0
    assert out == (tmp_path / "p.json").read_text()


def test_canon(capsys, write):
    path = write("fence.json", {"n": 4, "lt": [[1, 3], [2, 3], [2, 4]]})
    code, out, _ = run(capsys, "canon", "--in", path)
    assert code == 0 and json.loads(out) == {"n": 4, "lt": [[1, 4], [2, 3], [2, 4]]}


def test_join_with_and_without_catalog(capsys, caplog, write, tmp_path):
    a = write("a.json", {"n": 4, "lt": [[1, 4], [2, 3], [2, 4], [3, 4]]})
    b = write("b.json", {"n": 4, "lt": [[1, 3], [1, 4], [2, 3], [2, 4]]})
    code, out, err = run(capsys, "join", "--a", a, "--b", b)
    assert code == 0 and json.loads(out)["lt"] == [[1, 4], [2, 3], [2, 4]]
    assert "building the size-4 catalog" in caplog.text
    cat = tmp_path / "av4.jsonl"
    assert run(capsys, "enumerate", "--n", "4", "--out", str(cat))[0] == 0
    code, out2, err = run(capsys, "join", "--a", a, "--b", b, "--catalog", str(cat))
    assert (code, out2, err) == (0, out, "")
    cat3 = tmp_path / "av3.jsonl"
    run(capsys, "enumerate", "--n", "3", "--out", str(cat3))
    code, _, err = run(capsys, "join", "--a", a, "--b", b, "--catalog", str(cat3))
    assert code == 1 and json.loads(err)["error"] == "CatalogError"


def test_domain_errors(capsys, write, tmp_path):
    bad = write("bad.json", {"n": 4, "lt": [[1, 2], [3, 4]]})
    code, out, err = run(capsys, "canon", "--in", bad)
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "NotAnIntervalOrder"
    code, _, err = run(capsys, "canon", "--in", str(tmp_path / "missing.json"))
    assert code == 1 and json.loads(err)["error"] == "FileNotFoundError"
    (tmp_path / "junk.json").write_text("{not json")
    code, _, err = run(capsys, "canon", "--in", str(tmp_path / "junk.json"))
    assert code == 1 and json.loads(err)["error"] == "JSONDecodeError"
    small = write("small.json", {"n": 2, "lt": []})
    big = write("big.json", {"n": 3, "lt": []})
    code, _, err = run(capsys, "meet", "--a", small, "--b", big)
    assert code == 1 and json.loads(err)["error"] == "SizeMismatch"
    intrans = write("t.json", {"n": 3, "lt": [[1, 2], [2, 3]]})
    code, _, err = run(capsys, "canon", "--in", intrans)
    assert code == 1 and json.loads(err)["error"] == "TransitivityError"


def test_meet_outside_class_is_reported(capsys, write):
    a = write("a.json", {"n": 5, "lt": [[1, 4], [1, 5], [2, 3], [2, 4], [2, 5], [3, 5]]})
    b = write("b.json", {"n": 5, "lt": [[1, 3], [1, 4], [1, 5], [2, 3], [2, 4], [2, 5]]})
    code, out, err = run(capsys, "meet", "--a", a, "--b", b)
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "TheoremViolation"


def test_usage_errors():
    for argv in ([], ["counts"], ["verify", "--n", "3", "--suite", "nope"], ["frobnicate"]):
        proc = subprocess.run([sys.executable, "-m", "ivlattice.cli", *argv],
                              capture_output=True, text=True)
        assert proc.returncode == 2, argv


def test_enumerate_to_stdout_round_trips(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--sp")
    cat = Catalog.loads(out)
    assert code == 0 and cat.sp_only and len(cat) == 42


def test_hasse(capsys, tmp_path):
    dot = tmp_path / "av4.dot"
    assert run(capsys, "hasse", "--n", "4", "--dot", str(dot))[0] == 0
    text = dot.read_text()
    assert text.count("[label=") == 15 and text.count("->") == 23


def test_verify_suites(capsys):
    for suite in ("tamari", "meetsub", "labelling"):
        code, out, _ = run(capsys, "verify", "--n", "4", "--suite", suite)
        assert code == 0 and all(r["ok"] for r in json.loads(out))
    code, out, _ = run(capsys, "verify", "--n", "4", "--suite", "lattice")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--n", "5", "--suite", "lattice")
    report = json.loads(out)[0]
    assert code == 1 and not report["ok"] and report["witnesses"]["glb_exists"]


def test_representation_conversions(capsys, write, tmp_path):
    fence = write("fence.json", {"n": 4, "lt": [[1, 4], [2, 3], [2, 4]]})
    code, out, _ = run(capsys, "represent", "--in", fence)
    assert json.loads(out) == {"intervals": [[1, 2], [1, 1], [2, 3], [3, 3]]}
    (tmp_path / "iv.json").write_text(out)
    code, back, _ = run(capsys, "from-intervals", "--in", str(tmp_path / "iv.json"))
    assert back == (tmp_path / "fence.json").read_text()
    bad = write("biv.json", {"intervals": [[3, 1]]})
    assert run(capsys, "from-intervals", "--in", bad)[0] == 1


def test_tree_to_poset(capsys, write):
    tree = write("t.json", {"tree": [[[]], []]})
    code, out, _ = run(capsys, "tree-to-poset", "--in", tree)
    assert code == 0 and json.loads(out) == {"n": 3, "lt": [[1, 3], [2, 3]]}
