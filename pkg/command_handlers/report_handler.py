import logging
from pathlib import Path
from typing import Any, Dict

from app.errors import ScopeError
from app.fields import dump, identify_all, ingest, load_fields, report_verdicts

from . import tree_handler
from .responses import failure, success

logger = logging.getLogger(__name__)


def command_handler(args) -> Dict[str, Any]:
    """`report verdicts|dataset|tree`: write a verdict table, canonical dataset or tree dump."""
    if args.subject == "tree":
        if args.format == "table":
            args.format = "dot"
        return tree_handler.command_handler(args)
    try:
        records = ingest(args.dataset) if args.dataset else list(load_fields())
        if args.subject == "dataset":
            text = dump(records)
        elif args.subject == "verdicts":
            text = report_verdicts(identify_all(records), args.format)
        else:
            raise ScopeError(f"unknown report subject {args.subject!r}")
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
            logger.info(f"Report written to {args.output}")
            return success({"subject": args.subject, "output": str(args.output)})
        return success({"subject": args.subject, "text": text})
    except Exception as e:
        return failure(e)
