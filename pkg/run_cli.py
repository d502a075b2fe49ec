#!/usr/bin/env python3
"""
Launch the Harmonic Series Tool CLI
Usage:
    python run_cli.py list
    python run_cli.py verify --only 'THM_HARDY*' --digits 30
    python run_cli.py euler-sum --p 1 --q 2
"""
import sys
import os

# Add the package to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from harmonic_series_tool.cli.main import main

if __name__ == "__main__":
    main()
