"""Regenerate the CLI golden reports in tests/golden from tests/golden/cases.json.

Run only after an intended change to the report format; the test suite
compares fresh output against these files byte for byte.
"""

from __future__ import annotations

import contextlib
import io
import json
from pathlib import Path

from planemaps.cli.main import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def render(argv: list[str]) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv, env={})
    return code, buf.getvalue()


def run() -> None:
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for name, argv in cases.items():
        code, text = render(argv)
        (GOLDEN / f"{name}.json").write_text(text, encoding="utf-8")
        print(f"{name}: exit {code}, {len(text)} bytes")


if __name__ == "__main__":
    run()
