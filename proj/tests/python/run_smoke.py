"""Runs the pytest smoke tests; exits 77 (skipped) when the module is not installed."""

import importlib.util
import sys

if importlib.util.find_spec("sepcirc") is None or importlib.util.find_spec("pytest") is None:
    print("sepcirc python module not installed; run `pip install --no-build-isolation .` first")
    sys.exit(77)

import pytest

sys.exit(pytest.main(["-q", "-p", "no:cacheprovider", sys.argv[1]]))
