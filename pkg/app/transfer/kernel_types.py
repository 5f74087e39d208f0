import itertools
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from app.config import get_settings

logger = logging.getLogger(__name__)

UNNAMED = "unnamed"


@dataclass(frozen=True)
class KernelCode:
    """Transfer kernel as a layer position.

    ``value`` is 0 for a total kernel, otherwise the 1-based position in
    ``layer`` of the subgroup whose image in G/G' is the kernel. ``subgroup``
    keeps the kernel itself as an echelon basis of a subspace of G/G'.
    """

    value: int
    layer: int
    subgroup: Tuple[Tuple[int, ...], ...] = ()

    @property
    def is_total(self) -> bool:
        return self.value == 0


@dataclass(frozen=True)
class NamedType:
    representative: str
    name: str


def _relabel(kappa: str, perm: Tuple[int, ...]) -> str:
    out = ["0"] * len(kappa)
    for i, ch in enumerate(kappa):
        v = int(ch)
        out[perm[i]] = "0" if v == 0 else str(perm[v - 1] + 1)
    return "".join(out)


def orbit(kappa: str) -> List[str]:
    return sorted({_relabel(kappa, perm) for perm in itertools.permutations(range(len(kappa)))})


def orbit_representative(kappa: str) -> str:
    return orbit(kappa)[0]


@lru_cache(maxsize=1)
def named_types() -> Dict[str, str]:
    """Orbit representative -> type name, from the fixture table."""
    path = get_settings().fixture_dir / "types.json"
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    table = {}
    for name, rep in data["representatives"].items():
        table[orbit_representative(rep)] = name
    logger.debug(f"Loaded {len(table)} named principalization types from {path}")
    return table


@lru_cache(maxsize=1)
def type_names() -> List[str]:
    with open(get_settings().fixture_dir / "types.json", encoding="utf-8") as fh:
        return list(json.load(fh)["names"])


def canonical_tkt(kappa: str) -> NamedType:
    if not kappa.isdigit() or any(int(ch) > len(kappa) for ch in kappa):
        raise ValueError(f"not a kernel digit string: {kappa!r}")
    rep = orbit_representative(kappa)
    return NamedType(representative=rep, name=named_types().get(rep, UNNAMED))


def representative_of(name: str) -> Optional[str]:
    for rep, known in named_types().items():
        if known == name:
            return rep
    return None


def same_orbit(a: str, b: str) -> bool:
    return len(a) == len(b) and orbit_representative(a) == orbit_representative(b)


def total_kernel_count(kappa: str) -> int:
    return kappa.count("0")
