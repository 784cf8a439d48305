#!/usr/bin/env python3
"""Run the dual-path verification suites and print the report.

Exit status 0 means every suite passed.  Arguments are forwarded, e.g.::

    python scripts/run_verification.py --bins 512 --seed 7
"""

import sys

from rindler_teleport.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", *sys.argv[1:]]))
