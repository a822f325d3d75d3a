"""
ackkit - Main Entry Point
Exact kernel toolkit and witness search for the ACK conjecture

Usage:
    python main.py construct satellite --k 5 --out s11.g6
    python main.py construct catalog --name E10 --out e10.edges
    python main.py construct dominating --base catalog:G18 --sets "3,5;13,15" --out f20.g6
    python main.py verify catalog:NUT7
    python main.py verify catalog:G14 --oracle --json
    python main.py classify catalog:E8
    python main.py catalog --export corpus/
    python main.py batch corpus/ --parallel 8 --json-out reports/
"""

import os
import sys
import argparse
import logging

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.config import config
from src.cli import commands


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="ackkit - exact kernels, nut graphs and ACK witness search"
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    # construct
    construct = sub.add_parser("construct", help="Build a graph family or operation and write it")
    construct.add_argument("family", choices=commands.FAMILIES)
    construct.add_argument("--k", type=int, help="Satellite parameter (k >= 3)")
    construct.add_argument("--n", type=int, help="Order for path/cycle/complete")
    construct.add_argument("--name", help="Catalog entry name")
    construct.add_argument("--base", help="Base graph: file path or catalog:NAME")
    construct.add_argument("--sets", help='Vertex sets, e.g. "3,5;13,15"')
    construct.add_argument("--pair", help='Attachment pair for nut-extension, e.g. "5,6"')
    construct.add_argument("--plan", help='Duplication plan, e.g. "1:1,5:2"')
    construct.add_argument("--zero-sum", dest="zero_sum", help='Zero-sum subset for duplicate, e.g. "2,3"')
    construct.add_argument("--limit-n", dest="limit_n", type=int, help="Witness search limit")
    construct.add_argument("--out", "-o", help="Output graph file (.g6 or .edges)")
    construct.add_argument("--format", choices=["graph6", "edgelist"], help="Override output format")

    # verify
    verify = sub.add_parser("verify", help="Full report and ACK witness search")
    verify.add_argument("target", help="Graph file or catalog:NAME")
    verify.add_argument("--oracle", action="store_true", help="Also run the brute-force oracle")
    verify.add_argument("--limit-n", dest="limit_n", type=int, help="Witness search limit")
    verify.add_argument("--json", action="store_true", help="Print the JSON report")

    # classify
    classify = sub.add_parser("classify", help="Class-C necessary conditions")
    classify.add_argument("target", help="Graph file or catalog:NAME")
    classify.add_argument("--json", action="store_true", help="Print JSON")

    # batch
    batch = sub.add_parser("batch", help="Verify every .g6/.edges file in a directory")
    batch.add_argument("directory")
    batch.add_argument("--parallel", "-p", type=int, help="Worker threads")
    batch.add_argument("--json-out", dest="json_out", help="Directory for per-file reports")
    batch.add_argument("--limit-n", dest="limit_n", type=int, help="Witness search limit")
    batch.add_argument("--timings", action="store_true", help="Include per-phase timings in reports")

    # catalog
    listing = sub.add_parser("catalog", help="List or export the built-in catalog")
    listing.add_argument("--export", help="Write every entry into this directory")
    listing.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")

    return parser


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the CLI"""
    args = build_parser().parse_args(argv)

    # Configure logging
    if args.debug or config.DEBUG:
        log_level = logging.DEBUG
    else:
        log_level = logging.getLevelName(config.LOG_LEVEL)
        if not isinstance(log_level, int):
            log_level = logging.INFO
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=log_level
    )
    logger = logging.getLogger(__name__)

    # Validate configuration
    problems = config.validate()
    if problems:
        logger.error(f"Configuration validation failed! {', '.join(problems)}")
        return commands.EXIT_INPUT

    if args.command == "construct":
        params = {
            key: getattr(args, key)
            for key in ("k", "n", "name", "base", "sets", "pair", "plan", "zero_sum", "limit_n")
        }
        return commands.cmd_construct(args.family, params, args.out, fmt=args.format)
    if args.command == "verify":
        return commands.cmd_verify(args.target, oracle=args.oracle, limit_n=args.limit_n, as_json=args.json)
    if args.command == "classify":
        return commands.cmd_classify(args.target, as_json=args.json)
    if args.command == "batch":
        return commands.cmd_batch(
            args.directory,
            parallel=args.parallel,
            json_out=args.json_out,
            limit_n=args.limit_n,
            timings=args.timings,
        )
    if args.command == "catalog":
        return commands.cmd_catalog(export_dir=args.export, fmt=args.format)
    return commands.EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
