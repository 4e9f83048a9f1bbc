#!/usr/bin/env python3
"""
pframe: finite partial frames from the command line.

Usage:
    python pframe.py check D4+finite
    python pframe.py verify --catalog --suite all --format json
"""
import sys

from src.main import main

if __name__ == "__main__":
    sys.exit(main())
