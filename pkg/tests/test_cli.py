import json
import os
import subprocess
import sys

import pytest

from latglue.cli import main


def run(*args, env=None):
    e = dict(os.environ)
    e.update(env or {})
    return subprocess.run([sys.executable, "-m", "latglue.cli", *args], capture_output=True, env=e)


def test_kissing_l12(capsys):
    assert main(["kissing-l12"]) == 0
    assert capsys.readouterr().out == "648\n"


def test_densities(capsys):
    assert main(["densities"]) == 0
    assert capsys.readouterr().out == "δ8=1/96 δ4=1/12 δ12=1/32 δ10=1/32\n"


def test_tables_text(capsys):
    assert main(["tables", "--threads", "2"]) == 0
    out = capsys.readouterr().out
    assert "[5/6 1/3 1/2 0]    12     14/3    72" in out
    assert "4/3-2/3√3  4/3+2/3√3" in out
    assert "144    1728" in out


def test_tables_json(capsys):
    assert main(["tables", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc) == 4
    t1 = next(v for k, v in doc.items() if k.startswith("Table 1"))
    assert t1[2] == {"h": "[1/3 1/3 1/3 1/3]", "orbit": "4", "depth8": "4/3", "tau8": "3"}


def test_csv_has_no_floats(capsys):
    assert main(["cosines", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "cosine,pairs"
    assert "." not in out


def test_gram(capsys):
    assert main(["gram"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 12 and all(len(r.split()) == 12 for r in rows)


def test_kissing_q10(capsys):
    assert main(["kissing-q10", "--singular", "--format", "csv"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "total,19,378," in out


def test_lemma(capsys):
    assert main(["lemma", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[1].endswith(",0")


def test_patch_verify_tiling(tmp_path, capsys):
    p = tmp_path / "patch.json"
    svg = tmp_path / "t.svg"
    assert main(["patch", "--bound", "8", "--out", str(p)]) == 0
    recs = json.loads(p.read_text())
    assert set(recs[0]) == {"glue", "c4", "perp_norm"}
    assert main(["verify", str(p)]) == 0
    assert main(["tiling", str(p), "--svg", str(svg)]) == 0
    out = capsys.readouterr().out
    assert "2/3+1/3√3" in out
    assert svg.read_text().startswith("<svg")


def test_patch_with_centering(capsys):
    assert main(["patch", "--bound", "1", "--centering", "1/7,0,1/5+1/9√3,0"]) == 0
    recs = json.loads(capsys.readouterr().out)
    assert recs


def test_tampered_patch_fails(tmp_path, capsys):
    p = tmp_path / "patch.json"
    p.write_text(json.dumps([{"glue": ["0", "0", "0", "0"], "c4": [3, 0, 0, 0], "perp_norm": "6"}]))
    assert main(["verify", str(p)]) == 1
    assert "not admitted" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["nonsense"],
        ["patch", "--bound", "x"],
        ["patch", "--centering", "1,2"],
        ["tables", "--format", "xml"],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def test_usage_error_codes():
    assert main(["patch", "--bound", "0"]) == 2
    assert main(["kissing-q10"]) == 2
    assert main(["verify", "/nonexistent/patch.json"]) == 2


def test_cap_env_gives_certificate_failure():
    r = run("kissing-l12", env={"LATGLUE_CAP": "3"})
    assert r.returncode == 1
    assert b"cap" in r.stderr


@pytest.mark.parametrize("cmd", [["tables"], ["cosines", "--format", "json"], ["patch", "--bound", "3"], ["gram", "--format", "csv"]])
def test_output_is_byte_identical_across_runs(cmd):
    a = run(*cmd, env={"PYTHONHASHSEED": "1"})
    b = run(*cmd, env={"PYTHONHASHSEED": "2"})
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_thread_count_does_not_change_output():
    a = run("tables", "--threads", "1")
    b = run("tables", "--threads", "4")
    assert a.stdout == b.stdout
