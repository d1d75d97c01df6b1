import io
import json
import subprocess
import sys

import pytest

from pshelly import cli
from pshelly.helly import MUTATE_ENV
from pshelly.instance_io import dumps, loads, wrap
from pshelly.structure import PshpHypergraph


@pytest.fixture
def run(monkeypatch, capsys):
    def _run(argv, stdin=""):
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        code = cli.main(argv)
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def test_h0_pipeline_min_hit(run):
    code, h0, _ = run(["gen", "--kind", "h0", "--k", "2"])
    assert code == 0
    code, out, _ = run(["oracle", "--what", "min-hit"], h0)
    assert code == 0 and out.splitlines()[0] == "3"


def test_k4_pipeline_pshp4(run):
    _, k4, _ = run(["gen", "--kind", "k4"])
    code, out, _ = run(["color", "--mode", "pshp4"], k4)
    assert code == 0 and "1 2 4 3" in out


def test_precondition_prints_triple(run):
    tri = '{"kind":"aba","n":3,"edges":[[0,1],[0,1,2],[0,2],[1,2]]}'
    code, _, err = run(["hit", "--mode", "pshp-triple"], tri)
    assert code == 1
    assert "[0, 1]" in err and "[0, 2]" in err and "[1, 2]" in err


def test_precondition_prints_pair(run):
    code, _, err = run(["cover", "--mode", "pshp-pairwise"], '{"kind":"aba","n":6,"edges":[[0,1],[2,3],[4,5]]}')
    assert code == 1 and "witness" in err


def test_verify_prints_aba_witness(run):
    code, _, err = run(["verify"], '{"kind":"aba","n":3,"edges":[[0,2],[1]]}')
    assert code == 3 and "x=0 y=1 z=2" in err


def test_bad_json_exit_3(run):
    code, _, err = run(["verify"], '{"kind": ')
    assert code == 3 and "line 1" in err


def test_missing_file_exit_3(run, tmp_path):
    code, _, _ = run(["verify", str(tmp_path / "nope.json")])
    assert code == 3


def test_wrong_kind_for_mode(run):
    _, k4, _ = run(["gen", "--kind", "k4"])
    assert run(["color", "--mode", "dual3"], k4)[0] == 3


def test_budget_exit_4(run):
    _, h0, _ = run(["gen", "--kind", "h0", "--k", "3"])
    code, _, err = run(["oracle", "--what", "min-hit", "--max-n", "5"], h0)
    assert code == 4 and "budget" in err


def test_h0_needs_a_labeling(run):
    _, h0, _ = run(["gen", "--kind", "h0", "--k", "2"])
    assert run(["hit", "--mode", "pshp-pairwise"], h0)[0] == 1  # not ABA-free as all topsets
    code, out, _ = run(["oracle", "--what", "witness", "--json"], h0)
    found = json.loads(out)
    labels = found["certificate"]["labels"]
    assert code == 0 and found["certificate"]["order"] == list(range(6))
    top = [e for e, s in zip(found["edges"], labels) if s == "top"]
    bottom = [e for e, s in zip(found["edges"], labels) if s == "bottom"]
    pshp = json.dumps({"kind": "pshp", "n": 6, "top": top, "bottom": bottom})
    code, out, _ = run(["hit", "--mode", "pshp-pairwise", "--json"], pshp)
    assert code == 0
    data = json.loads(out)
    assert data["certificate"]["bound"] == 3 and len(data["certificate"]["vertices"]) == 3


def test_extremal_output(run):
    _, text, _ = run(["gen", "--kind", "halfplane", "--points", "0,0 1,3 2,1 4,0"])
    code, out, _ = run(["extremal", "--check"], text)
    assert code == 0
    assert out.splitlines()[:2] == ["T: 0 1 3", "B: 0 3"]
    assert "structure lemmas: ok" in out


@pytest.mark.parametrize(
    "extra",
    [
        ["--kind", "halfplane", "--n", "6", "--seed", "4"],
        ["--kind", "minus-one", "--size", "4"],
        ["--kind", "blocks", "--blocks", "2,2,2"],
        ["--kind", "random-aba", "--n", "6", "--m", "5", "--seed", "42"],
        ["--kind", "random-pshp", "--n", "6", "--m", "5", "--seed", "42"],
        ["--kind", "wiring", "--lines", "4", "--seed", "3"],
        ["--kind", "wiring", "--lines", "3", "--crossings", "0 1 0"],
        ["--kind", "wiring", "--non-pappus", "--flip"],
    ],
)
def test_gen_kinds_are_deterministic_and_load(run, extra):
    code, first, _ = run(["gen", *extra])
    assert code == 0
    assert run(["gen", *extra])[1] == first
    assert dumps(loads(first)) == first


def test_gen_writes_file(run, tmp_path):
    target = tmp_path / "h0.json"
    assert run(["gen", "--kind", "h0", "-o", str(target)])[0] == 0
    assert run(["verify", str(target)])[1].startswith("ok: kind=plain n=6")


def test_every_mode_runs(run):
    pshp = dumps(wrap(PshpHypergraph.from_sides(4, [[0, 1, 2, 3]], [])))
    for mode in ("aba2", "pshp-pairwise", "pshp-triple"):
        assert run(["hit", "--mode", mode], pshp if mode != "aba2" else '{"kind":"aba","n":2,"edges":[[0,1]]}')[0] == 0
    hemi = '{"kind":"hemi","n":3,"F":[[0,1],[1,2]],"X":[],"flags":["straight","complemented"]}'
    assert run(["hit", "--mode", "hemi"], hemi)[0] == 0
    k3 = '{"kind":"hemi","n":3,"F":[[0,1],[0,2],[1,2]],"X":[],"flags":["straight","straight","straight"]}'
    assert run(["cover", "--mode", "hemi"], k3)[0] == 0
    dual = '{"kind":"dual_pshp","n":3,"F":[[0,1],[1,2],[0,2]],"X":[],"flags":["straight","straight","straight"]}'
    assert run(["color", "--mode", "dual3"], dual)[0] == 0
    assert run(["oracle", "--what", "witness", "--dual", "--orders"], dual)[0] == 0


def test_small_suite_passes(run):
    code, out, _ = run(["suite", "--seeds", "0..29"])
    assert code == 0 and "violations: 0" in out


def test_mutated_suite_replays(run, monkeypatch, tmp_path):
    monkeypatch.setenv(MUTATE_ENV, "h1-rank")
    code, out, _ = run(["suite", "--seeds", "0..99", "--no-fixtures", "--out", str(tmp_path)])
    assert code == 2
    cert_text = out[out.index("{"):]
    cert = json.loads(cert_text.splitlines()[0])["certificate"]
    assert cert["type"] == "contradiction" and cert["check"] == "cover_pshp_3wise"
    assert run(["verify"], cert_text)[0] == 2
    saved = sorted(tmp_path.iterdir())
    assert saved and run(["verify", str(saved[0])])[0] == 2
    monkeypatch.delenv(MUTATE_ENV)
    assert run(["verify"], cert_text)[0] == 0


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "pshelly.cli", "gen", "--kind", "blocks"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["edges"] == [[0], [1], [2]]
