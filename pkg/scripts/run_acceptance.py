"""Run the full verification stack end to end: the bundled suites through
the CLI, then the pytest acceptance module, and print a one-line summary
per criterion and per suite."""

from __future__ import annotations

import json
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]


def sh(*args):
    return subprocess.run([sys.executable, *args], cwd=ROOT,
                          capture_output=True, text=True, timeout=1800)


def main() -> int:
    failures = 0

    p = sh("-m", "twocat.cli", "verify", "all")
    try:
        rep = json.loads(p.stdout)
        bad = [c for c in rep["checks"] if c["status"] != "pass"]
        print(f"verify all: {rep['status']} "
              f"({len(rep['checks'])} checks, {len(bad)} failing, exit {p.returncode})")
        for c in bad[:10]:
            print("  FAIL", c["name"], "-", c["detail"][:100])
    except json.JSONDecodeError:
        print("verify all: no report", p.stdout[:200])
    failures += p.returncode != 0

    p = sh("-m", "pytest", "tests/test_acceptance.py", "-q", "-s")
    for line in p.stdout.splitlines():
        if "criterion" in line or "passed" in line or "failed" in line:
            print(line.lstrip("."))
    failures += p.returncode != 0

    print("RESULT:", "pass" if failures == 0 else "fail")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
