import logging
from typing import Any, Dict

from app.catalog import load_catalog
from app.pcgroup import describe_group, load_presentation
from app.transfer import compute_pattern, pattern_model

from .responses import failure, success

logger = logging.getLogger(__name__)


def command_handler(args) -> Dict[str, Any]:
    """`group show|pattern ID`: invariants or Artin pattern of a stored group."""
    try:
        if args.file:
            group, name, entry = load_presentation(args.file), args.identifier, None
        else:
            entry = load_catalog().resolve(args.identifier)
            group, name = entry.presentation, entry.id
        logger.info(f"group {args.action} for {name}")

        if group is None:
            # no presentation: answer from the transcribed table row
            return success({"catalog": entry.to_model().model_dump(mode="json"), "computed": None})

        if args.action == "show":
            body = describe_group(group, name).model_dump(mode="json")
        else:
            pattern = compute_pattern(group, second_order=True, with_tau2=args.tau2)
            body = pattern_model(pattern, name).model_dump(mode="json")
        if entry is not None:
            body = {"catalog": entry.to_model().model_dump(mode="json"), "computed": body}
        return success(body)
    except Exception as e:
        return failure(e)
