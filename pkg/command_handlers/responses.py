import json
import logging
from typing import Any, Dict

from app.errors import ArtinError
from app.fields import ErrorResponse

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNRESOLVED = 2


def success(body: Any, exit_code: int = EXIT_OK) -> Dict[str, Any]:
    return {"exitCode": exit_code, "body": json.dumps(body, ensure_ascii=False)}


def failure(error: Exception) -> Dict[str, Any]:
    if isinstance(error, ArtinError):
        logger.error(f"{type(error).__name__}: {error}")
        payload = ErrorResponse(error=type(error).__name__, detail=str(error))
    else:
        logger.error(f"Unexpected error: {str(error)}", exc_info=True)
        payload = ErrorResponse(error="Internal error", detail=str(error))
    return {"exitCode": EXIT_INVALID, "body": payload.model_dump_json()}
