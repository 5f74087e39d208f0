"""Text format for pc presentations.

    3 3
    1 1 2
    [g2,g1] = g3

The header gives p and n, the second line the weights. Each further line is a
nontrivial relation ``gi^p = word`` or ``[gj,gi] = word``. Words juxtapose
tokens ``g<k>`` or ``g<k>^<e>`` in increasing generator order. Omitted relations
are trivial. ``#`` starts a comment.
"""
import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from app.errors import PresentationError

from .presentation import Element, PcPresentation

logger = logging.getLogger(__name__)

_POWER = re.compile(r"^g(\d+)\^(\d+)=(.*)$")
_COMM = re.compile(r"^\[g(\d+),g(\d+)\]=(.*)$")
_TOKEN = re.compile(r"g(\d+)(?:\^(\d+))?")


def _parse_word(text: str, n: int, p: int, line_no: int) -> Element:
    vec = [0] * n
    if text in ("", "1"):
        return tuple(vec)
    pos, last = 0, -1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PresentationError(f"line {line_no}: cannot parse word {text!r}")
        k, e = int(m.group(1)) - 1, int(m.group(2) or 1)
        if not 0 <= k < n or k <= last or not 0 < e < p:
            raise PresentationError(f"line {line_no}: word {text!r} is not in normal form")
        vec[k], last, pos = e, k, m.end()
    return tuple(vec)


def _format_word(vec: Element) -> str:
    return "".join(f"g{k + 1}" if e == 1 else f"g{k + 1}^{e}" for k, e in enumerate(vec) if e)


def parse_presentation(text: str, name: Optional[str] = None) -> PcPresentation:
    lines: List[Tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((line_no, line))
    if len(lines) < 2:
        raise PresentationError("presentation needs a header line and a weights line")

    try:
        p, n = (int(x) for x in lines[0][1].split())
        weights = [int(x) for x in lines[1][1].split()] if n else []
    except ValueError as e:
        raise PresentationError(f"bad header or weights line: {e}")
    if len(weights) != n:
        raise PresentationError(f"line {lines[1][0]}: expected {n} weights, got {len(weights)}")

    powers: Dict[int, Element] = {}
    comms: Dict[Tuple[int, int], Element] = {}
    for line_no, line in lines[2:]:
        compact = line.replace(" ", "")
        m = _POWER.match(compact)
        if m:
            i = int(m.group(1)) - 1
            if int(m.group(2)) != p or not 0 <= i < n:
                raise PresentationError(f"line {line_no}: bad power relation {line!r}")
            powers[i] = _parse_word(m.group(3), n, p, line_no)
            continue
        m = _COMM.match(compact)
        if m:
            j, i = int(m.group(1)) - 1, int(m.group(2)) - 1
            if not 0 <= i < j < n:
                raise PresentationError(f"line {line_no}: bad commutator relation {line!r}")
            comms[(j, i)] = _parse_word(m.group(3), n, p, line_no)
            continue
        raise PresentationError(f"line {line_no}: unrecognized relation {line!r}")
    return PcPresentation(p, n, powers, comms, weights=weights, name=name)


def format_presentation(pc: PcPresentation) -> str:
    weights = pc.weights
    if weights is None:
        from .subgroups import lower_exponent_p_weights

        weights = lower_exponent_p_weights(pc)
    out = [f"{pc.p} {pc.n}", " ".join(str(w) for w in weights)]
    for i in sorted(pc.power_rhs):
        out.append(f"g{i + 1}^{pc.p} = {_format_word(pc.power_rhs[i])}")
    for j, i in sorted(pc.comm_rhs):
        out.append(f"[g{j + 1},g{i + 1}] = {_format_word(pc.comm_rhs[(j, i)])}")
    return "\n".join(out) + "\n"


def load_presentation(path: Union[str, Path], name: Optional[str] = None) -> PcPresentation:
    path = Path(path)
    logger.debug(f"Reading presentation from {path}")
    return parse_presentation(path.read_text(encoding="utf-8"), name=name or path.stem)
