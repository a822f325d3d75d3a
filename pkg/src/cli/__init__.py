"""
Command-Line Surface
construct / verify / classify / batch / catalog
"""

from .report import Report, SCHEMA_VERSION, build_report, render, summarize_graph
from .batch import BatchItem, run_batch, write_batch_outputs, discover_inputs, format_summary_table
from .commands import (
    EXIT_OK,
    EXIT_INTERNAL,
    EXIT_INPUT,
    EXIT_NO_WITNESS,
    EXIT_ABORTED,
    FAMILIES,
    resolve_input,
    parse_sets,
    parse_plan,
    build_construction,
    cmd_construct,
    cmd_verify,
    cmd_classify,
    cmd_batch,
    cmd_catalog,
)

__all__ = [
    "Report",
    "SCHEMA_VERSION",
    "build_report",
    "render",
    "summarize_graph",
    "BatchItem",
    "run_batch",
    "write_batch_outputs",
    "discover_inputs",
    "format_summary_table",
    "EXIT_OK",
    "EXIT_INTERNAL",
    "EXIT_INPUT",
    "EXIT_NO_WITNESS",
    "EXIT_ABORTED",
    "FAMILIES",
    "resolve_input",
    "parse_sets",
    "parse_plan",
    "build_construction",
    "cmd_construct",
    "cmd_verify",
    "cmd_classify",
    "cmd_batch",
    "cmd_catalog",
]
