import logging
from pathlib import Path
from typing import Any, Dict

from app.criteria import VerdictStatus
from app.fields import identify_all, ingest, load_fields, report_verdicts

from .responses import EXIT_OK, EXIT_UNRESOLVED, failure, success

logger = logging.getLogger(__name__)

UNDECIDED = (VerdictStatus.UNRESOLVED, VerdictStatus.NEEDS_DATA)


def command_handler(args) -> Dict[str, Any]:
    """`identify [DATASET]`: one verdict per record, exit code 2 when some stay undecided."""
    try:
        records = ingest(args.dataset) if args.dataset else list(load_fields())
        verdicts = identify_all(records)
        undecided = [v.d for v in verdicts if v.status in UNDECIDED]
        if undecided:
            logger.warning(f"{len(undecided)} records left undecided")

        body: Dict[str, Any] = {"records": len(verdicts), "undecided": undecided}
        if args.output:
            Path(args.output).write_text(report_verdicts(verdicts, args.format), encoding="utf-8")
            body["output"] = str(args.output)
        elif args.format == "table":
            body["table"] = report_verdicts(verdicts, "table")
        else:
            body["verdicts"] = [v.model_dump(mode="json") for v in verdicts]
        return success(body, EXIT_UNRESOLVED if undecided else EXIT_OK)
    except Exception as e:
        return failure(e)
