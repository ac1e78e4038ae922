import ast
import re
import shlex
from pathlib import Path

import pytest

from pin2fill.cli import main

README = (Path(__file__).resolve().parent.parent / "README.md").read_text(encoding="utf-8")
CONSOLE = re.findall(r"```console\n\$ pin2fill (.*?)\n(.*?)```", README, flags=re.S)


def test_readme_has_examples():
    assert len(CONSOLE) >= 15


@pytest.mark.parametrize("args,expected", CONSOLE, ids=[c[0] for c in CONSOLE])
def test_cli_example(args, expected, capsys):
    code = main(shlex.split(args))
    out, err = capsys.readouterr()
    assert out + err == expected
    assert (code != 0) == expected.startswith("error:")


def test_python_snippet():
    (code,) = re.findall(r"```python\n(.*?)```", README, flags=re.S)
    ns: dict = {}
    lines = code.splitlines()
    for line in lines:
        expr, _, comment = line.partition("#")
        if comment.strip().startswith("("):
            assert eval(expr, ns) == ast.literal_eval(comment.strip())
        elif line.strip():
            exec(line, ns)
