import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tightsurf import pec
from tightsurf.cli import main
from tightsurf.complex import Embedding, PolySurface
from tightsurf.constructions import CORE_NAMES

from _support import built


@pytest.mark.parametrize("name", CORE_NAMES)
def test_roundtrip_catalog(name):
    e = built(name)[0]
    text = pec.dumps(e, ["note"])
    again = pec.loads(text)
    assert again == e
    assert pec.dumps(again, ["note"]) == text
    assert pec.from_json(pec.to_json(e)) == e


rats = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(rats, rats, rats), min_size=3, max_size=3))
def test_roundtrip_arbitrary_rationals(pts):
    e = Embedding(PolySurface(3, ((0, 1, 2),)), tuple(pts))
    assert pec.loads(pec.dumps(e)) == e


@pytest.mark.parametrize("text", [
    "", "PEC 2\n", "PEC 1\nv 0 1\n", "PEC 1\ndim 1\nv 1 0\n", "PEC 1\ndim 1\nv 0 1/0\n",
    "PEC 1\ndim 2\nv 0 1\n", "PEC 1\ndim 1\nv 0 0\nf 0 1 2\n", "PEC 1\ndim 1\nv 0 x\n",
    "PEC 1\ndim 1\nq 0\n",
])
def test_parse_errors(text):
    with pytest.raises(pec.PecParseError):
        pec.loads(text)


def test_comments_ignored():
    e = pec.loads("# hi\nPEC 1\n# c\ndim 2\nv 0 0 0\nv 1 1 0\nv 2 0 -1/2\nf 0 1 2\n")
    assert e.coords[2] == (0, Fraction(-1, 2))


def test_off_export():
    e = built("S2_2")[0]
    off = pec.to_off(e).splitlines()
    assert off[0] == "OFF"
    assert off[2] == "6 3 9"
    assert sum(1 for ln in off if ln.startswith("4 ")) == 3


def test_off_needs_projection_above_three():
    with pytest.raises(ValueError):
        pec.to_off(built("P2_1")[0])
    out = pec.to_off(built("P2_1")[0], 3, [0, 1, 2])
    assert "1.000 0.000 0.000" in out


def test_cli_build_verify(tmp_path, capsys):
    path = tmp_path / "p21.pec"
    assert main(["build", "P2_1", "-o", str(path)]) == 0
    assert main(["verify", str(path)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tight"] and report["zero_tight"] and report["substantial"]
    assert report["theorem1"]["n"] == 4 and report["theorem1"]["c0_upper"] == 5


def test_cli_verify_with_oracle(tmp_path, capsys):
    path = tmp_path / "g21.pec"
    main(["build", "G2_1", "-o", str(path)])
    assert main(["verify", str(path), "--oracle"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["oracle"]["agrees"] and report["tight"]


def test_cli_verify_deterministic(tmp_path, capsys):
    path = tmp_path / "t.pec"
    main(["build", "T2_2", "-o", str(path)])
    main(["verify", str(path), "--oracle"])
    first = capsys.readouterr().out
    main(["verify", str(path), "--oracle"])
    assert capsys.readouterr().out == first


def test_cli_folded_fixture(tmp_path, capsys):
    path = tmp_path / "folded.pec"
    path.write_text("PEC 1\ndim 2\nv 0 0 0\nv 1 2 0\nv 2 0 2\nv 3 1 0\nf 0 1 2\nf 0 2 3\n")
    assert main(["verify", str(path)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert any(f["check"] == "embedded" for f in report["failures"])


def test_cli_not_tight_exit_one(tmp_path, capsys):
    path = tmp_path / "open.pec"
    path.write_text("PEC 1\ndim 3\nv 0 0 0 0\nv 1 1 0 0\nv 2 0 1 0\nv 3 0 0 1\nf 0 1 3\nf 1 2 3\nf 2 0 3\n")
    assert main(["verify", str(path)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["zero_tight"] and not report["tight"]


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["build", "nosuch"]) == 2
    bad = tmp_path / "bad.pec"
    bad.write_text("nonsense\n")
    assert main(["verify", str(bad)]) == 3
    assert main(["verify", str(tmp_path / "missing.pec")]) == 3
    with pytest.raises(SystemExit) as info:
        main(["chromatic"])
    assert info.value.code == 2
    assert main(["chromatic", "--crosscaps", "2", "--orientable", "--genus", "1", "-p", "1"]) == 2
    assert main(["chromatic", "--orientable", "--genus", "1", "-p", "0"]) == 2


def test_cli_chromatic(capsys):
    for argv, want in (
        (["--orientable", "--genus", "1", "-p", "3"], "exact 7 (table)"),
        (["--crosscaps", "4", "-p", "2"], "bounds [7,8] (theorem)"),
        (["--orientable", "--genus", "0", "-p", "1"], "exact 3 (table)"),
    ):
        assert main(["chromatic", *argv]) == 0
        assert capsys.readouterr().out.strip() == want


def test_cli_export(tmp_path, capsys):
    path = tmp_path / "p21.pec"
    main(["build", "P2_1", "-o", str(path)])
    assert main(["export", str(path), "--format", "off"]) == 2
    capsys.readouterr()
    assert main(["export", str(path), "--format", "off", "--project", "0,1,2", "--precision", "4"]) == 0
    assert capsys.readouterr().out.startswith("OFF")
    assert main(["export", str(path), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dim"] == 4 and len(doc["vertices"]) == 5


def test_console_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "tightsurf.cli", "chromatic", "--crosscaps", "1", "-p", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "exact 5 (table)"
