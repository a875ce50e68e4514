#!/usr/bin/env python3
"""Write the bundled corpus to a scratch directory and print its summary table.

Usage: python scripts/analyze_corpus.py [target-dir]
"""

import sys
import tempfile
from pathlib import Path

from kahlercheck.cli import main


def run(argv):
    if argv:
        target = Path(argv[0])
        main(["fixtures", str(target)])
        return main(["batch", str(target)])
    with tempfile.TemporaryDirectory(prefix="kahlercheck-") as tmp:
        main(["fixtures", tmp])
        return main(["batch", tmp])


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
