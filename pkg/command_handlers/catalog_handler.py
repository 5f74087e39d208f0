import logging
from pathlib import Path
from typing import Any, Dict

from app.catalog import PRESENTATION_DIR, freeze_presentations, load_catalog
from app.config import get_settings

from .responses import EXIT_OK, EXIT_UNRESOLVED, failure, success

logger = logging.getLogger(__name__)


def command_handler(args) -> Dict[str, Any]:
    """`catalog freeze [--max-lo N] [--output DIR]`: grow and store presentations of tabulated groups."""
    try:
        out_dir = Path(args.output) if args.output else get_settings().fixture_dir / PRESENTATION_DIR
        written, failed = freeze_presentations(load_catalog(), out_dir, args.max_lo)
        body = {"directory": str(out_dir), "written": written, "failed": failed}
        return success(body, EXIT_UNRESOLVED if failed else EXIT_OK)
    except Exception as e:
        return failure(e)
