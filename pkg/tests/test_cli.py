import json
import shutil
import subprocess
import sys

import pytest

from bicatmnd import corpus
from bicatmnd.cli import dumps_report, main, render, run_command
from bicatmnd.workspace import Workspace, dumps, parse_workspace


def strip_timing(data):
    return {k: v for k, v in data.items() if k != "timing"}


def test_em_ceil_report():
    status, data = run_command(Workspace(), "em", ["CeilM"])
    assert status == 0
    assert data["verdicts"] == {"CeilM.cone": True, "CeilM.universal": True}
    assert data["CeilM.size"] == {"objects": 1, "morphisms": 1}
    assert data["samples"] == ["One", "Arrow"]
    em = next(c for c in data["payload"]["categories"] if c["name"].startswith("EM("))
    assert len(em["objects"]) == 1


@pytest.mark.parametrize("command,names", [
    ("em", ["CeilM", "id_monad(Arrow)"]),
    ("kleisli", ["CeilM", "id_monad(Iso2)"]),
    ("monadic", ["FreeCeil"]),
    ("mnd2adj", ["CeilM"]),
    ("adj2mnd", ["FreeCeil", "PickZero"]),
    ("compose-dl", ["CeilM/CeilM"]),
])
def test_determinism(command, names):
    _, a = run_command(Workspace(), command, names)
    _, b = run_command(Workspace(), command, names)
    assert dumps_report(strip_timing(a)) == dumps_report(strip_timing(b))


@pytest.mark.parametrize("command", ["em", "kleisli"])
def test_outputs_reingest_and_validate(command):
    names = [m.name for m in corpus.fixture_monads()]
    status, data = run_command(Workspace(), command, names)
    assert status == 0
    ws = parse_workspace(dumps(data["payload"]), use_builtins=False)
    assert set(ws.names("monad")) == set(names)
    status, report = run_command(ws, "validate", [])
    assert status == 0, report["violations"]
    assert all(report["verdicts"].values())


def test_reingested_cone_validates():
    _, data = run_command(Workspace(), "em", ["CeilM"])
    ws = parse_workspace(dumps(data["payload"]))
    assert ws.kind("CeilM.em_cone") == "cone"
    status, report = run_command(ws, "validate", ["CeilM.em_cone"])
    assert status == 0 and report["verdicts"] == {"CeilM.em_cone": True}
    status, report = run_command(ws, "em", ["CeilM"])
    assert status == 0 and report["verdicts"]["CeilM.universal"]


def test_monadic_verdicts():
    status, data = run_command(Workspace(), "monadic", ["FreeCeil"])
    assert status == 0
    assert data["FreeCeil.witness"]["comparison_props"]["is_equivalence"]
    status, data = run_command(Workspace(), "monadic", ["PickZero"])
    assert status == 1
    assert data["verdicts"]["PickZero.agreement"] is True


def test_laws_default_corpus():
    status, data = run_command(Workspace(), "laws", ["CatFin"], corpus_name="default")
    assert status == 0 and data["violations"] == []
    assert data["sample_objects"] == ["One", "Arrow", "Disc2", "Mono", "Iso2"]


def test_input_errors():
    assert run_command(Workspace(), "em", ["Nope"])[0] == 2
    assert run_command(Workspace(), "em", [])[0] == 2
    assert run_command(Workspace(), "em", ["FreeCeil"])[0] == 2
    assert run_command(Workspace(), "laws", ["Bogus"])[0] == 2
    assert run_command(Workspace(), "frobnicate", ["x"])[0] == 2


def test_bound_exceeded():
    status, data = run_command(Workspace(), "em", ["CeilM"], bound=2)
    assert status == 3 and "bound" in data["error"]


def test_main_exit_codes(tmp_path, capsys):
    assert main(["em", "CeilM", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["schema_version"] == 1 and out["status"] == 0
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema_version": 1,\n "categories": [}')
    assert main(["validate", "--workspace", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().out
    assert main(["validate", "--workspace", str(tmp_path / "missing.json")]) == 2
    assert main(["monadic", "PickZero"]) == 1
    assert main(["em", "CeilM", "--bound", "2"]) == 3
    capsys.readouterr()


def test_text_rendering_derives_from_report():
    _, data = run_command(Workspace(), "duals", ["FreeCeil"])
    text = render(data)
    assert text.splitlines()[0] == "duals FreeCeil"
    assert "FreeCeil.op1: true" in text


def test_workspace_file_and_samples(tmp_path, capsys):
    from importlib import resources
    path = resources.files("bicatmnd") / "data" / "ceil.monad.json"
    assert main(["em", "CeilM", "--workspace", str(path), "--samples", "One,Arrow,Disc2"]) == 0
    assert "samples: One, Arrow, Disc2" in capsys.readouterr().out


def test_console_script():
    exe = shutil.which("bicatmnd")
    cmd = [exe] if exe else [sys.executable, "-m", "bicatmnd.cli"]
    proc = subprocess.run(cmd + ["adj2mnd", "FreeCeil", "--json"], capture_output=True,
                          text=True, check=False)
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["verdicts"]["FreeCeil.monad"] is True
