import importlib.util
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[name] = mod  # dataclasses look the module up by name
    spec.loader.exec_module(mod)
    return mod


@pytest.mark.parametrize(
    "name, argv",
    [
        ("sweep_family", ["--count", "40", "--max-e", "9"]),
        ("sweep_family", ["--exhaustive", "--max-b", "2", "--max-e", "7", "--no-lemmas"]),
        ("corpus_census", ["--max-e", "6", "--max-gen", "25"]),
    ],
)
def test_script_runs_clean(name, argv, capsys, tmp_path):
    out = tmp_path / "out.json"
    assert load(name).main(argv + ["--json-out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "mismatches: none" in text or "violations: none" in text
    assert out.read_text().startswith("{")
