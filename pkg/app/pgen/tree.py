import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence

import networkx as nx

from app.abelian import AbelianType, render_rows, render_types
from app.abelian.notation import Row
from app.config import get_settings
from app.errors import ArtinError
from app.transfer import orbit_representative, total_kernel_count

from .descendants import TreeNode, descendants

logger = logging.getLogger(__name__)


@dataclass
class TargetPattern:
    """Restricted Artin pattern to search for; empty fields match anything."""

    tau1: Optional[List[AbelianType]] = None
    kappa: Optional[str] = None
    second_order: Optional[List[Row]] = None

    @property
    def is_empty(self) -> bool:
        return self.tau1 is None and self.kappa is None and self.second_order is None

    def matches(self, node: TreeNode) -> bool:
        if self.is_empty:
            return True
        pattern = node.pattern
        if pattern is None:
            return False
        if self.tau1 is not None and render_types(pattern.tau1) != render_types(self.tau1):
            return False
        if self.kappa is not None and orbit_representative(pattern.kappa) != orbit_representative(self.kappa):
            return False
        if self.second_order is not None and (
                render_rows(pattern.rows, with_tau2=False) != render_rows(self.second_order, with_tau2=False)):
            return False
        return True

    def compatible(self, node: TreeNode) -> bool:
        """False when no descendant of node can carry the target pattern."""
        if self.is_empty:
            return True
        pattern = node.pattern
        if pattern is None:
            return False
        if self.kappa is not None and total_kernel_count(pattern.kappa) < total_kernel_count(self.kappa):
            return False
        if self.tau1 is not None:
            mine = sorted((t.lo for t in pattern.tau1), reverse=True)
            theirs = sorted((t.lo for t in self.tau1), reverse=True)
            if len(mine) != len(theirs) or any(a > b for a, b in zip(mine, theirs)):
                return False
        return True


@dataclass
class GrowthPolicy:
    max_lo: int = 0
    target: TargetPattern = field(default_factory=TargetPattern)
    step_filter: Optional[FrozenSet[int]] = None
    max_coclass: Optional[int] = None

    def __post_init__(self):
        if not self.max_lo:
            self.max_lo = get_settings().max_lo

    def steps_for(self, node: TreeNode) -> List[int]:
        room = min(node.nuclear_rank, self.max_lo - node.lo)
        return [s for s in range(1, room + 1) if self.step_filter is None or s in self.step_filter]


@dataclass
class GrowthReport:
    root: TreeNode
    graph: nx.DiGraph
    matches: List[TreeNode] = field(default_factory=list)
    bound_hit: bool = False
    frontier: List[TreeNode] = field(default_factory=list)
    pruned: int = 0
    iso_budget_exhausted: bool = False

    @property
    def nodes(self) -> List[TreeNode]:
        return [self.graph.nodes[name]["node"] for name in nx.topological_sort(self.graph)]

    def node(self, name: str) -> TreeNode:
        return self.graph.nodes[name]["node"]


def grow_tree(root, policy: Optional[GrowthPolicy] = None) -> GrowthReport:
    """Breadth-first descendant tree below root, pruned by the target pattern."""
    policy = policy or GrowthPolicy()
    start = root if isinstance(root, TreeNode) else TreeNode.root(root)
    graph = nx.DiGraph()
    graph.add_node(start.name, node=start)
    report = GrowthReport(root=start, graph=graph)
    logger.info(f"Growing tree from {start.name} to order {start.group.p}^{policy.max_lo}")

    queue = deque([start])
    while queue:
        node = queue.popleft()
        if policy.target.matches(node):
            report.matches.append(node)
        if node.lo >= policy.max_lo:
            if node.is_capable and policy.target.compatible(node):
                report.frontier.append(node)
            continue
        # step sizes past the bound are cut, so the node stays live
        if node.nuclear_rank > policy.max_lo - node.lo and policy.target.compatible(node):
            report.frontier.append(node)
        for s in policy.steps_for(node):
            for child in descendants(node, s):
                if policy.max_coclass is not None and child.fingerprint.coclass > policy.max_coclass:
                    continue
                if not policy.target.compatible(child):
                    report.pruned += 1
                    continue
                report.iso_budget_exhausted |= child.iso_unresolved
                graph.add_node(child.name, node=child)
                graph.add_edge(node.name, child.name, step=s)
                queue.append(child)

    report.bound_hit = bool(report.frontier)
    if report.bound_hit:
        logger.warning(f"Order bound {start.group.p}^{policy.max_lo} reached with "
                       f"{len(report.frontier)} capable vertices left")
    logger.info(f"Tree from {start.name}: {graph.number_of_nodes()} vertices, "
                f"{len(report.matches)} matches, {report.pruned} pruned")
    return report


def _coclass_children(node: TreeNode, cache: Dict[str, List[TreeNode]]) -> List[TreeNode]:
    cached = cache.get(node.name)
    if cached is None:
        cached = []
        if node.is_capable:
            cached = [c for c in descendants(node, 1)
                      if c.fingerprint.coclass == node.fingerprint.coclass]
        cache[node.name] = cached
    return cached


def _has_coclass_line(node: TreeNode, depth: int, cache: Dict[str, List[TreeNode]]) -> bool:
    if depth == 0:
        return True
    return any(_has_coclass_line(c, depth - 1, cache) for c in _coclass_children(node, cache))


def mainline_of(root, depth: int, lookahead: int = 2) -> List[TreeNode]:
    """Mainline path of the coclass tree below root, ``depth`` levels deep.

    At each level the child of step size 1 keeping the coclass is chosen; when
    several qualify, only those with coclass-preserving descendants
    ``lookahead`` levels further down survive.
    """
    node = root if isinstance(root, TreeNode) else TreeNode.root(root)
    cache: Dict[str, List[TreeNode]] = {}
    path = [node]
    for level in range(depth):
        options = _coclass_children(node, cache)
        for ahead in range(1, lookahead + 1):
            if len(options) <= 1:
                break
            options = [c for c in options if _has_coclass_line(c, ahead, cache)]
        if len(options) != 1:
            raise ArtinError(f"mainline below {node.name} at level {level + 1} is "
                             f"{'ambiguous' if options else 'missing'}: {[c.name for c in options]}")
        node = options[0]
        path.append(node)
    return path


def path_names(nodes: Sequence[TreeNode]) -> List[str]:
    return [n.name for n in nodes]
