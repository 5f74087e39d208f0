import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from pydantic import ValidationError

from app.config import get_settings
from app.errors import DatasetError

from .schema import FieldRecord

logger = logging.getLogger(__name__)

FIELDS_FILE = "fields.jsonl"


def parse_records(text: str) -> List[FieldRecord]:
    """Validate JSON-lines text; every problem is reported with its line number."""
    records: List[FieldRecord] = []
    problems: List[Tuple[int, str]] = []
    seen = {}
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = FieldRecord.model_validate(json.loads(line))
        except json.JSONDecodeError as e:
            problems.append((number, f"invalid JSON: {e.msg}"))
            continue
        except ValidationError as e:
            detail = "; ".join(err["msg"] for err in e.errors())
            problems.append((number, detail))
            continue
        if record.d in seen:
            problems.append((number, f"duplicate d={record.d}, first seen on line {seen[record.d]}"))
            continue
        seen[record.d] = number
        records.append(record)
    if problems:
        for number, detail in problems:
            logger.warning(f"line {number}: {detail}")
        summary = "; ".join(f"line {n}: {msg}" for n, msg in problems[:5])
        raise DatasetError(f"{len(problems)} invalid records ({summary})", [n for n, _ in problems])
    return records


def ingest(path: Union[str, Path]) -> List[FieldRecord]:
    path = Path(path)
    records = parse_records(path.read_text(encoding="utf-8"))
    logger.info(f"Ingested {len(records)} field records from {path}")
    return records


def dump(records: Sequence[FieldRecord]) -> str:
    """Canonical JSON lines in the order given, omitting absent fields."""
    lines = [json.dumps(r.model_dump(mode="json", exclude_none=True), ensure_ascii=False) for r in records]
    return "\n".join(lines) + ("\n" if lines else "")


@lru_cache(maxsize=1)
def load_fields() -> Tuple[FieldRecord, ...]:
    """Transcribed field dataset shipped with the fixtures."""
    return tuple(ingest(get_settings().fixture_dir / FIELDS_FILE))
