#!/usr/bin/env python3
"""CLI entrypoint wrapper that delegates to oddtrails.cli.main.
Kept at the repository root so pyinstaller can freeze a single-file
executable with the same flags as the package CLI.
"""
import sys
from oddtrails.cli import main


if __name__ == "__main__":
    sys.exit(main())
