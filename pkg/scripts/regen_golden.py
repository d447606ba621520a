"""Rewrite tests/golden/*.out from the current CLI. Review the diff before committing."""

import contextlib
import io
import json
import pathlib
import sys

from landauer.cli import main

GOLDEN = pathlib.Path(__file__).resolve().parents[1] / "tests" / "golden"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue()


if __name__ == "__main__":
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for name, case in cases.items():
        code, text = run(case["argv"])
        if code != case["exit"]:
            sys.exit(f"{name}: exit {code}, expected {case['exit']}")
        (GOLDEN / f"{name}.out").write_text(text)
        print(f"{name}: {len(text)} bytes")
