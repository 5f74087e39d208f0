"""Parsing and rendering of the bracket notation for abelian types.

Types are digit runs: ``32^21^5`` is (3,2,2,1,1,1,1,1) and ``0`` is trivial.
Lists join components with commas, writing repeated components as ``(T)^k``.
An IPAD is ``[t0;t1]``. A second-order row is ``(t0H;t1H[;t2H])`` and may be
repeated as ``[row]^k`` or ``(row)^k``. A multi-layered structure is
``[t0;row,row,...]``. Unicode superscripts are accepted wherever ``^k`` is.
"""
import logging
import re
from typing import List, Sequence, Tuple

from app.errors import NotationError

from .types import AbelianType, accumulate, expand

logger = logging.getLogger(__name__)

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_SUPER_RUN = re.compile(r"[⁰¹²³⁴⁵⁶⁷⁸⁹]+")
_TYPE_TOKEN = re.compile(r"(\d)(?:\^(\d))?")
_MULTIPLICITY = re.compile(r"^(.*)\^(\d+)$", re.S)

Row = Tuple[AbelianType, List[AbelianType], List[AbelianType]]


def normalize_text(text: str) -> str:
    text = _SUPER_RUN.sub(lambda m: "^" + m.group(0).translate(_SUPERSCRIPTS), text)
    return (text.replace(" ", "").replace("−", "-")
            .replace("⟨", "<").replace("⟩", ">"))


def split_top(text: str, seps: str = ",") -> List[str]:
    """Split on separators that are not nested inside brackets."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise NotationError(f"unbalanced brackets in {text!r}")
        elif ch in seps and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise NotationError(f"unbalanced brackets in {text!r}")
    parts.append(text[start:])
    return parts


def _strip_brackets(text: str) -> str:
    if len(text) >= 2 and text[0] in "([" and text[-1] == {"(": ")", "[": "]"}[text[0]]:
        inner = text[1:-1]
        try:
            split_top(inner, "")
        except NotationError:
            return text
        return inner
    return text


def _unwrap_multiplicity(text: str) -> Tuple[str, int]:
    """``(X)^k`` or ``[X]^k`` -> (X, k); anything else -> (text, 1)."""
    m = _MULTIPLICITY.match(text)
    if m and m.group(1) and m.group(1)[-1] in ")]":
        body = m.group(1)
        opener = "(" if body[-1] == ")" else "["
        if body[0] == opener:
            depth = 0
            for i, ch in enumerate(body):
                depth += ch in "(["
                depth -= ch in ")]"
                if depth == 0 and i != len(body) - 1:
                    return text, 1
            return body[1:-1], int(m.group(2))
    return text, 1


def parse_type(text: str, p: int = 3) -> AbelianType:
    text = normalize_text(text)
    if text in ("0", "1^0", ""):
        return AbelianType.trivial(p)
    pos, exps = 0, []
    while pos < len(text):
        m = _TYPE_TOKEN.match(text, pos)
        if not m:
            raise NotationError(f"cannot parse abelian type {text!r} at position {pos}")
        value, count = int(m.group(1)), int(m.group(2) or 1)
        if value == 0 or count == 0:
            # a run is one digit repeated at most 9 times, so 1^10 is unreadable
            raise NotationError(f"zero in digit run {text!r} at position {pos}")
        exps.extend([value] * count)
        pos = m.end()
    return AbelianType(tuple(exps), p)


def render_type(t: AbelianType) -> str:
    if t.is_trivial:
        return "0"
    out, i, exps = [], 0, t.exponents
    while i < len(exps):
        j = i
        while j < len(exps) and exps[j] == exps[i]:
            j += 1
        if exps[i] > 9:
            raise NotationError(f"exponent {exps[i]} cannot be written as a single digit")
        run = j - i
        if run > 9:
            raise NotationError(f"run of {run} equal exponents cannot be written as a digit run")
        out.append(str(exps[i]) if run == 1 else f"{exps[i]}^{run}")
        i = j
    return "".join(out)


def parse_types(text: str, p: int = 3) -> List[AbelianType]:
    """Flat list of types; commas or semicolons separate components."""
    text = normalize_text(text)
    text = _strip_brackets(text) if text.startswith("[") else text
    if text in ("", "0"):
        return []
    out: List[AbelianType] = []
    for item in split_top(text, ",;"):
        body, k = _unwrap_multiplicity(item)
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        out.extend([parse_type(body, p)] * k)
    return out


def render_types(ts: Sequence[AbelianType]) -> str:
    if not ts:
        return "0"
    items = []
    for t, k in accumulate(list(ts)):
        items.append(render_type(t) if k == 1 else f"({render_type(t)})^{k}")
    return ",".join(items)


def parse_ipad(text: str, p: int = 3) -> Tuple[AbelianType, List[AbelianType]]:
    text = normalize_text(text)
    parts = split_top(_strip_brackets(text), ";")
    if len(parts) != 2:
        raise NotationError(f"IPAD needs exactly two layers: {text!r}")
    return parse_type(parts[0], p), parse_types(parts[1], p)


def render_ipad(tau0: AbelianType, tau1: Sequence[AbelianType]) -> str:
    return f"[{render_type(tau0)};{render_types(tau1)}]"


def parse_row(text: str, p: int = 3) -> Row:
    parts = split_top(_strip_brackets(normalize_text(text)), ";")
    if len(parts) not in (2, 3):
        raise NotationError(f"second-order row needs two or three layers: {text!r}")
    tau2 = parse_types(parts[2], p) if len(parts) == 3 else []
    return parse_type(parts[0], p), parse_types(parts[1], p), tau2


def render_row(row: Row, with_tau2: bool = True) -> str:
    tau0, tau1, tau2 = row
    body = f"{render_type(tau0)};{render_types(tau1)}"
    if with_tau2:
        body += f";{render_types(tau2)}"
    return f"({body})"


def parse_rows(text: str, p: int = 3) -> List[Row]:
    text = normalize_text(text)
    if not text:
        return []
    rows: List[Row] = []
    for item in split_top(text, ","):
        body, k = _unwrap_multiplicity(item)
        if ";" not in body:
            raise NotationError(f"not a second-order row: {item!r}")
        rows.extend([parse_row(body, p)] * k)
    return rows


def row_key(row: Row, with_tau2: bool = True) -> str:
    return render_row(row, with_tau2)


def render_rows(rows: Sequence[Row], with_tau2: bool = True) -> str:
    keys = sorted((row_key(r, with_tau2) for r in rows), reverse=True)
    out, i = [], 0
    while i < len(keys):
        j = i
        while j < len(keys) and keys[j] == keys[i]:
            j += 1
        out.append(keys[i] if j - i == 1 else f"{keys[i]}^{j - i}")
        i = j
    return ",".join(out)


def parse_multilayer(text: str, p: int = 3) -> Tuple[AbelianType, List[Row]]:
    text = normalize_text(text)
    parts = split_top(_strip_brackets(text), ";")
    if len(parts) != 2:
        raise NotationError(f"multi-layered pattern needs [t0;rows]: {text!r}")
    return parse_type(parts[0], p), parse_rows(parts[1], p)


def render_multilayer(tau0: AbelianType, rows: Sequence[Row], with_tau2: bool = True) -> str:
    return f"[{render_type(tau0)};{render_rows(rows, with_tau2)}]"


def canonical_types(text: str, p: int = 3) -> str:
    return render_types(parse_types(text, p))


def canonical_rows(text: str, with_tau2: bool = True, p: int = 3) -> str:
    return render_rows(parse_rows(text, p), with_tau2)


__all__ = [
    "parse_type", "render_type", "parse_types", "render_types", "parse_ipad", "render_ipad",
    "parse_row", "render_row", "parse_rows", "render_rows", "parse_multilayer",
    "render_multilayer", "canonical_types", "canonical_rows", "split_top", "normalize_text",
    "expand", "Row",
]
