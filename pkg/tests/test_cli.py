import json
import subprocess
import sys

import pytest

from pancyclic.cli import main
from pancyclic.generators import complete, complete_bipartite, gnp_conditioned, petersen
from pancyclic.graph import serialize


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in [
        ("k10", complete(10)),
        ("k33", complete_bipartite(3, 3)),
        ("pet", petersen()),
        ("g12", gnp_conditioned(12, 0.7, 1)),
    ]:
        p = tmp_path / f"{name}.edges"
        p.write_text(serialize(g))
        out[name] = str(p)
    bad = tmp_path / "bad.edges"
    bad.write_text("3 2\n0 1\n1 x\n")
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_certify_k10(files, capsys):
    code, out, _ = run(capsys, "certify", "--epsilon", "0.5", "--seed", "1", files["k10"], "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["missing"] == []
    assert doc["plan"]["epsilon"]["exact"] == "1/2"


def test_spectrum_k33(files, capsys):
    code, out, _ = run(capsys, "spectrum", files["k33"], "--format", "json")
    assert code == 1 and json.loads(out)["missing"] == [3, 5]


def test_partition_needs_seed(files, capsys):
    code, _, err = run(capsys, "partition", files["g12"])
    assert code == 3 and "--seed" in err


def test_unknown_flag_and_parse_error(files, capsys):
    code, _, err = run(capsys, "profile", files["pet"], "--bogus")
    assert code == 3 and "usage" in err
    code, _, err = run(capsys, "profile", files["bad"])
    assert code == 3 and "input error" in err
    assert run(capsys, "profile", "/nonexistent/file")[0] == 3


def test_precondition_exit_code(files, capsys):
    code, _, err = run(capsys, "certify", "--epsilon", "1", "--seed", "0", files["k33"])
    assert code == 2 and "rejected" in err
    assert run(capsys, "hamilton-triangles", files["pet"])[0] == 2


def test_profile_petersen(files, capsys):
    code, out, _ = run(capsys, "profile", files["pet"], "--format", "json")
    assert code == 0 and json.loads(out)["kappa"] == 3
    code, out, _ = run(capsys, "profile", files["pet"])
    assert "delta: 3" in out


def test_json_is_byte_identical(files, capsys):
    argv = ["certify", "--epsilon", "1/3", "--seed", "5", files["g12"], "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_partition_and_even_cycle(files, capsys):
    code, out, _ = run(capsys, "partition", files["k10"], "--seed", "3", "--trials", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["seed"] == 3 and doc["E"]
    code, out, _ = run(capsys, "even-cycle", files["k33"], "--l", "3", "--format", "json")
    assert code == 0 and len(json.loads(out)["cycle"]) == 6
    code, out, _ = run(capsys, "even-cycle", files["pet"], "--l", "2", "--format", "json")
    assert code == 1 and json.loads(out)["found"] is False


def test_gen_round_trip(tmp_path, capsys):
    assert run(capsys, "gen", "gnp(10,0.5)")[0] == 3
    code, out, _ = run(capsys, "gen", "gnp(10,0.5)", "--seed", "4")
    assert code == 0
    target = tmp_path / "g.edges"
    assert run(capsys, "gen", "complete(6)", "-o", str(target))[0] == 0
    code, out, _ = run(capsys, "spectrum", str(target), "--format", "json")
    assert code == 0 and json.loads(out)["missing"] == []


def test_shorten_and_augment(tmp_path, capsys):
    p = tmp_path / "k30.edges"
    p.write_text(serialize(complete(30)))
    code, out, _ = run(capsys, "shorten", str(p), "--format", "json")
    assert code == 0 and json.loads(out)["new_len"] == 28
    code, _, err = run(capsys, "shorten", str(p), "--path", "0,1,2,99")
    assert code == 3
    code, _, _ = run(capsys, "augment", str(p), "--r", "1", "--length", "5")
    assert code == 2


def test_bench(files, capsys):
    code, out, _ = run(capsys, "bench", files["k10"], files["g12"], "--seed", "0", "--format", "json")
    rows = json.loads(out)["results"]
    assert code == 0 and [r["status"] for r in rows] == ["pancyclic", "pancyclic"]
    assert all("seconds" not in r for r in rows)
    code, out, _ = run(capsys, "bench", files["k33"], "--seed", "0")
    assert code == 2 and "rejected" in out


def test_stdin_via_subprocess():
    text = serialize(complete(5))
    proc = subprocess.run(
        [sys.executable, "-m", "pancyclic", "spectrum", "-", "--format", "json"],
        input=text,
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["missing"] == []
