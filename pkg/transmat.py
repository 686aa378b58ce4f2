#!/usr/bin/env python3
"""
transmat - transition matroids of 4-regular graphs.

Main entry point for the application.

Usage:
    python transmat.py --help
    python transmat.py martin --via both graph.frg
    python transmat.py --json rank --transversal 11 abab.dow
    python transmat.py bracket --normalize trefoil.pd
"""

import os
import sys
from pathlib import Path

# Load environment variables from .env file
from dotenv import load_dotenv
load_dotenv(Path(__file__).parent / ".env")

# Add src to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.presentation.cli import main

if __name__ == "__main__":
    main()
