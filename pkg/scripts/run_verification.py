#!/usr/bin/env python3
"""Run the full verification matrix and write a JSON report.

Usage: python3 scripts/run_verification.py [report.json]

Equivalent to `holobranch --format json verify --all` with a local cache,
kept as a script so the whole pipeline is reproducible from a checkout.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from holobranch.cli import main  # noqa: E402

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else None
    argv = ["--threads", "4", "--cache-dir",
            str(Path(__file__).resolve().parents[1] / ".cache")]
    if out:
        argv += ["--format", "json"]
    argv += ["verify", "--all"]
    if out:
        import contextlib
        import io
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            rc = main(argv)
        Path(out).write_text(buf.getvalue())
        print(f"report written to {out}")
        sys.exit(rc)
    sys.exit(main(argv))
