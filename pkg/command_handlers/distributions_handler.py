import logging
from typing import Any, Dict

from app.fields import census_frequencies, census_shares, distributions, identify_all, ingest, load_fields

from .responses import failure, success

logger = logging.getLogger(__name__)


def command_handler(args) -> Dict[str, Any]:
    """`distributions [DATASET]`: MD and AF maps over the identified vertices."""
    try:
        records = ingest(args.dataset) if args.dataset else list(load_fields())
        verdicts = identify_all(records)
        report = distributions(records, verdicts, level=args.level, kind=args.kind)
        body = report.model_dump(mode="json")
        if args.census:
            body["census"] = {
                "range": args.census,
                "frequencies": census_frequencies(args.census),
                "shares": census_shares(args.census),
            }
        return success(body)
    except Exception as e:
        return failure(e)
