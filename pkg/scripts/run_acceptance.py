"""Run the acceptance suite and print one pass/fail line per criterion.

    python scripts/run_acceptance.py [-k EXPR]

Exit status is 0 only when every criterion passes.
"""

import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    cmd = [sys.executable, "-m", "pytest", "-q", "-s", "-p", "no:cacheprovider",
           str(ROOT / "tests" / "test_acceptance.py"), *argv]
    proc = subprocess.run(cmd, cwd=ROOT, capture_output=True, text=True)
    lines = [ln for ln in proc.stdout.splitlines() if ln.startswith("criterion ")]
    seen = set()
    for ln in lines:  # the terminal summary repeats each line
        if ln not in seen:
            seen.add(ln)
            print(ln)
    if not lines:
        sys.stdout.write(proc.stdout[-4000:])
        sys.stderr.write(proc.stderr[-4000:])
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())
