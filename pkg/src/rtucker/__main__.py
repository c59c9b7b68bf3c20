#!/usr/bin/env python3
"""Entry point for ``python -m rtucker``."""

if __name__ == "__main__":
    from rtucker.cli import run
    run()
