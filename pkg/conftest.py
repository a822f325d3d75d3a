"""
Test collection hooks.

Tests marked `slow` run the exhaustive witness searches over whole corpora.
They are collected but skipped unless RUN_SLOW_TESTS is truthy.
"""

import os

import pytest

TRUTHY = {"1", "true", "yes", "on"}


def pytest_collection_modifyitems(config, items):
    if os.getenv("RUN_SLOW_TESTS", "").strip().lower() in TRUTHY:
        return

    marker = pytest.mark.skip(reason="exhaustive search; export RUN_SLOW_TESTS=1 to run it")
    for item in items:
        if item.get_closest_marker("slow"):
            item.add_marker(marker)
