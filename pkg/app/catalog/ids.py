"""Group identifiers ``<order,counter>`` and relative chains ``G-#s;i``.

Counters may name a batch of siblings: ``<2187,289|290>``, ``<2187,289/290>``
or ``<6561,625..630>``. Relative chains append ``-#s;i`` steps to an absolute
head or to an alias such as ``W`` or ``Z2``.
"""
import logging
import re
from dataclasses import dataclass, replace
from typing import Dict, Mapping, Optional, Tuple

from app.abelian.notation import normalize_text
from app.errors import CatalogError

logger = logging.getLogger(__name__)

_GREEK = {"Φ": "Phi", "Ψ": "Psi", "₁": "1", "₂": "2", "…": ".."}
_HEAD = re.compile(r"^<(\d+)(?:\^(\d+))?,([0-9|/.]+)>")
_ALIAS = re.compile(r"^([A-Za-z]+\d?)(?=-#|$)")
_STEP = re.compile(r"-#(\d+);([0-9|/.]+)")


@dataclass(frozen=True)
class Identifier:
    order: int
    counters: Tuple[int, ...]
    steps: Tuple[Tuple[int, Tuple[int, ...]], ...] = ()

    @property
    def is_relative(self) -> bool:
        return bool(self.steps)

    @property
    def is_batch(self) -> bool:
        if self.steps:
            return len(self.steps[-1][1]) > 1
        return len(self.counters) > 1

    @property
    def head(self) -> "Identifier":
        return replace(self, steps=())

    @property
    def parent(self) -> Optional["Identifier"]:
        if not self.steps:
            return None
        return replace(self, steps=self.steps[:-1])

    @property
    def lo(self) -> int:
        """Logarithmic order of the head plus the step sizes along the chain."""
        lo, n = 0, self.order
        while n > 1 and n % 3 == 0:
            n //= 3
            lo += 1
        return lo + sum(s for s, _ in self.steps)

    def child(self, step: int, ordinals: Tuple[int, ...]) -> "Identifier":
        return replace(self, steps=self.steps + ((step, tuple(ordinals)),))

    def members(self):
        """Split a batch into its single identifiers."""
        if self.steps:
            s, ordinals = self.steps[-1]
            return [replace(self, steps=self.steps[:-1] + ((s, (i,)),)) for i in ordinals]
        return [replace(self, counters=(c,)) for c in self.counters]

    def __str__(self) -> str:
        text = f"<{self.order},{'|'.join(map(str, self.counters))}>"
        for s, ordinals in self.steps:
            text += f"-#{s};{'|'.join(map(str, ordinals))}"
        return text


def _counter_list(text: str, original: str) -> Tuple[int, ...]:
    out = []
    for part in re.split(r"[|/]", text):
        if ".." in part:
            lo, _, hi = part.partition("..")
            if not lo.isdigit() or not hi.isdigit() or int(hi) < int(lo):
                raise CatalogError("malformed counter range", [original])
            out.extend(range(int(lo), int(hi) + 1))
        elif part.isdigit():
            out.append(int(part))
        else:
            raise CatalogError("malformed counter", [original])
    return tuple(out)


def _normalize(text: str) -> str:
    for k, v in _GREEK.items():
        text = text.replace(k, v)
    return normalize_text(text)


def parse_identifier(text: str, aliases: Optional[Mapping[str, str]] = None,
                     _seen: Tuple[str, ...] = ()) -> Identifier:
    """Parse an absolute or relative identifier, expanding alias heads recursively."""
    raw = _normalize(text)
    aliases = aliases or {}
    m = _HEAD.match(raw)
    if m:
        base, exp = int(m.group(1)), m.group(2)
        order = base ** int(exp) if exp else base
        ident = Identifier(order=order, counters=_counter_list(m.group(3), text))
        rest = raw[m.end():]
    else:
        a = _ALIAS.match(raw)
        if not a or a.group(1) not in aliases:
            raise CatalogError("unknown identifier", [text])
        name = a.group(1)
        if name in _seen:
            raise CatalogError("cyclic alias", list(_seen) + [name])
        ident = parse_identifier(aliases[name], aliases, _seen + (name,))
        rest = raw[a.end():]

    pos = 0
    while pos < len(rest):
        s = _STEP.match(rest, pos)
        if not s:
            raise CatalogError("malformed relative identifier", [text])
        ident = ident.child(int(s.group(1)), _counter_list(s.group(2), text))
        pos = s.end()
    return ident


def canonical_id(text: str, aliases: Optional[Mapping[str, str]] = None) -> str:
    return str(parse_identifier(text, aliases))


def expand_aliases(aliases: Mapping[str, str]) -> Dict[str, str]:
    """Alias name -> canonical identifier text."""
    return {name: canonical_id(target, aliases) for name, target in aliases.items()}
