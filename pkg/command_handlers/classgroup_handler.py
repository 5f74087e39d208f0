import logging
from typing import Any, Dict

from app.quadforms import class_group

from .responses import failure, success

logger = logging.getLogger(__name__)


def command_handler(args) -> Dict[str, Any]:
    """`classgroup D`: class number, structure and 3-part of an imaginary quadratic field."""
    try:
        group = class_group(args.d)
        return success(group.to_model().model_dump(mode="json"))
    except Exception as e:
        return failure(e)
