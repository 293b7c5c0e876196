"""Smoke test for the monoalg_py extension module.

Builds the extension with cargo (unless MONOALG_PY_LIB points at a built
library), imports it and checks a few known results.

    python3 python/smoke_test.py
"""

import importlib.util
import json
import os
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
WORKED = [[4, 0, 0], [0, 4, 0], [0, 0, 4], [1, 0, 3], [0, 2, 2], [3, 0, 1], [1, 2, 1]]


def built_library() -> Path:
    if "MONOALG_PY_LIB" in os.environ:
        return Path(os.environ["MONOALG_PY_LIB"])
    subprocess.run(
        ["cargo", "build", "--release", "-p", "monoalg-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    target = Path(os.environ.get("CARGO_TARGET_DIR", ROOT / "target"))
    for name in ("libmonoalg_py.so", "libmonoalg_py.dylib", "monoalg_py.dll"):
        path = target / "release" / name
        if path.exists():
            return path
    sys.exit("built library not found")


def load(lib: Path):
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    tmp = Path(tempfile.mkdtemp()) / f"monoalg_py{suffix}"
    shutil.copy(lib, tmp)
    found = importlib.util.spec_from_file_location("monoalg_py", tmp)
    module = importlib.util.module_from_spec(found)
    found.loader.exec_module(module)
    return module


def validator():
    try:
        import jsonschema
    except ImportError:
        return None
    schema = json.loads((ROOT / "schema" / "report.json").read_text())
    return jsonschema.Draft202012Validator(schema)


def main() -> None:
    m = load(built_library())
    check = validator()

    b = m.AffineSemigroup(WORKED)
    assert b.ambient_dim == 3 and b.rank == 3 and b.is_simplicial()
    assert b.frame() == [[4, 0, 0], [0, 4, 0], [0, 0, 4]]
    assert b.member([2, 2, 4]) and not b.member([1, 0, 0])
    assert len(b.module_generators()) == 10
    assert b.degree_functional() == ["1/4", "1/4", "1/4"]

    dec = b.decompose()
    assert dec["groupOrder"] == 8 and len(dec["summands"]) == 8
    shifts = sorted(tuple(s["shift"]) for s in dec["summands"])
    assert (2, 0, 2) in shifts

    props = b.properties()
    flags = [props[k] for k in ("seminormal", "normal", "cohenMacaulay", "buchsbaum", "gorenstein")]
    assert flags == [False, False, False, True, False], flags

    reg = b.regularity()
    assert (reg["reg"], reg["degree"], reg["codim"], reg["bound"], reg["depth"]) == (2, 8, 4, 4, 1)
    assert b.eg() == {"reg": 2, "bound": 4, "holds": True}

    full = b.analyze()
    if check is not None:
        check.validate(full)
        check.validate({"input": full["input"], "decomposition": b.decompose(verbose=True)})

    numerical = m.AffineSemigroup([[2], [3]]).analyze()
    assert numerical["properties"]["gorenstein"] is True
    assert numerical["regularity"]["error"]["kind"] == "NotHomogeneous"

    maximal = m.betti([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    assert maximal["reg"] == 1 and maximal["depth"] == 1
    assert maximal["table"] == [[0, 1, 3], [1, 2, 3], [2, 3, 1]]

    for bad in ([], [[1, -1]], [[1, 0], [0]]):
        try:
            m.AffineSemigroup(bad)
        except m.MonoalgError:
            pass
        else:
            raise AssertionError(f"accepted {bad}")

    print("smoke test passed" + ("" if check else " (schema check skipped)"))


if __name__ == "__main__":
    main()
