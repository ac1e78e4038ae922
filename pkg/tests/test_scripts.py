import runpy
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("name", ["reproduce_examples", "h_sweep", "ladders"])
def test_script_runs(name, capsys, monkeypatch):
    monkeypatch.setattr(sys, "argv", [name])
    with pytest.raises(SystemExit) if name == "h_sweep" else _null():
        runpy.run_path(str(SCRIPTS / f"{name}.py"), run_name="__main__")
    out = capsys.readouterr().out
    assert "MISMATCH" not in out and "FAILURES" not in out
    assert out.count("\n") > 5


class _null:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def test_h_sweep_exit_code(monkeypatch):
    monkeypatch.setattr(sys, "argv", ["h_sweep", "--lo", "-8", "--hi", "8", "--step", "8"])
    with pytest.raises(SystemExit) as exc:
        runpy.run_path(str(SCRIPTS / "h_sweep.py"), run_name="__main__")
    assert exc.value.code == 0
