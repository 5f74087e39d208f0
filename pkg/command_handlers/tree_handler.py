import logging
from pathlib import Path
from typing import Any, Dict

from app.abelian import parse_ipad, parse_types
from app.catalog import load_catalog
from app.errors import ScopeError
from app.fields import report_tree
from app.pcgroup import load_presentation
from app.pgen import GrowthPolicy, TargetPattern, TreeNode, grow_tree

from .responses import failure, success

logger = logging.getLogger(__name__)


def _target(args) -> TargetPattern:
    tau1 = None
    if args.target:
        text = args.target.strip()
        tau1 = parse_ipad(text)[1] if text.startswith("[") else parse_types(text)
    return TargetPattern(tau1=tau1, kappa=args.kappa)


def command_handler(args) -> Dict[str, Any]:
    """`tree grow ROOT --max-lo N [--target PATTERN]`."""
    try:
        if args.file:
            root = TreeNode.root(load_presentation(args.file), args.root)
        else:
            entry = load_catalog().resolve(args.root)
            if entry.presentation is None:
                raise ScopeError(f"{entry.id} has no stored presentation to grow from")
            root = TreeNode.root(entry.presentation, entry.id)
        policy = GrowthPolicy(max_lo=args.max_lo or 0, target=_target(args))
        logger.info(f"Growing tree from {root.name} up to order 3^{policy.max_lo}")
        report = grow_tree(root, policy)
        text = report_tree(report, args.format, args.figure)

        body = {
            "root": root.name,
            "maxLo": policy.max_lo,
            "vertices": report.graph.number_of_nodes(),
            "matches": [n.catalog_id or n.name for n in report.matches],
            "boundHit": report.bound_hit,
            "isoBudgetExhausted": report.iso_budget_exhausted,
        }
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
            body["output"] = str(args.output)
        else:
            body[args.format] = text
        return success(body)
    except Exception as e:
        return failure(e)
