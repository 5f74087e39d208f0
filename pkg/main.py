"""Command-line entry point: argparse front end over the command handlers."""
import argparse
import json
import logging
import sys
from typing import List, Optional

from app.catalog import FROZEN_MAX_LO
from app.config import get_settings
from command_handlers import (catalog_handler, classgroup_handler, distributions_handler, group_handler,
                              identify_handler, report_handler, tree_handler)

logger = logging.getLogger(__name__)


def _tree_arguments(parser: argparse.ArgumentParser, root_required: bool) -> None:
    if root_required:
        parser.add_argument("root", help="root identifier, e.g. <9,2> or <243,6>")
    else:
        parser.add_argument("--root", default="<9,2>", help="root identifier")
    parser.add_argument("--file", help="read the root presentation from a .pc file instead of the catalog")
    parser.add_argument("--max-lo", type=int, default=None, help="largest logarithmic order to grow to")
    parser.add_argument("--target", help="first-layer IPAD to search for, [1^2;...] or a type list")
    parser.add_argument("--kappa", help="kernel digits the matches must share up to relabelling")
    parser.add_argument("--figure", help="figure whose MD/AF labels annotate the DOT output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="artin", description="Artin patterns and 3-class tower identification")
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="inspect a stored group")
    group.add_argument("action", choices=("show", "pattern"))
    group.add_argument("identifier")
    group.add_argument("--file", help="presentation file in the pc text format")
    group.add_argument("--tau2", action="store_true", help="include the third layer of every row")
    group.set_defaults(handler=group_handler.command_handler)

    tree = sub.add_parser("tree", help="grow a descendant tree")
    tree.add_argument("action", choices=("grow",))
    _tree_arguments(tree, root_required=True)
    tree.add_argument("--format", choices=("json", "dot"), default="json")
    tree.add_argument("--output", help="write the dump to this file")
    tree.set_defaults(handler=tree_handler.command_handler)

    identify = sub.add_parser("identify", help="tower verdicts for a field dataset")
    identify.add_argument("dataset", nargs="?", help="JSON-lines dataset; default is the shipped one")
    identify.add_argument("--format", choices=("json", "table"), default="json")
    identify.add_argument("--output")
    identify.set_defaults(handler=identify_handler.command_handler)

    catalog = sub.add_parser("catalog", help="freeze presentations of tabulated groups")
    catalog.add_argument("action", choices=("freeze",))
    catalog.add_argument("--max-lo", type=int, default=FROZEN_MAX_LO, help="largest logarithmic order to freeze")
    catalog.add_argument("--output", help="directory for the .pc files; default is the fixture directory")
    catalog.set_defaults(handler=catalog_handler.command_handler)

    classgroup = sub.add_parser("classgroup", help="class group of an imaginary quadratic field")
    classgroup.add_argument("d", type=int)
    classgroup.set_defaults(handler=classgroup_handler.command_handler)

    dist = sub.add_parser("distributions", help="MD and AF maps over tree vertices")
    dist.add_argument("dataset", nargs="?")
    dist.add_argument("--level", choices=("second", "tower"), default="tower")
    dist.add_argument("--kind", choices=("real", "imaginary"))
    dist.add_argument("--census", help="census range to add, e.g. 0<d<10^9")
    dist.set_defaults(handler=distributions_handler.command_handler)

    report = sub.add_parser("report", help="write a verdict table, the canonical dataset or a tree dump")
    report.add_argument("subject", choices=("verdicts", "dataset", "tree"))
    report.add_argument("--dataset")
    report.add_argument("--format", choices=("table", "json", "dot"), default="table")
    report.add_argument("--output")
    _tree_arguments(report, root_required=False)
    report.set_defaults(handler=report_handler.command_handler)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(level=getattr(logging, settings.log_level, logging.INFO),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    result = args.handler(args)
    body = json.loads(result["body"])
    for key in ("table", "text", "dot"):
        if isinstance(body, dict) and isinstance(body.get(key), str):
            sys.stdout.write(body.pop(key))
    if body:
        print(json.dumps(body, indent=2, ensure_ascii=False))
    return result["exitCode"]


if __name__ == "__main__":
    sys.exit(main())
