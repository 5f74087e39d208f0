from .cover import PCover, p_cover, relation_rank, nuclear_rank
from .isomorphism import IsomorphismResult, WordProgram, find_isomorphism, word_program
from .descendants import (Fingerprint, NodePattern, TreeNode, node_pattern, fingerprint,
                          allowable_subgroups, descendants, sibling_batches)
from .tree import TargetPattern, GrowthPolicy, GrowthReport, grow_tree, mainline_of, path_names
from .schema import TreeNodeRecord
from .export import node_records, tree_json_lines, tree_dot

__all__ = [
    "PCover",
    "p_cover",
    "relation_rank",
    "nuclear_rank",
    "IsomorphismResult",
    "WordProgram",
    "find_isomorphism",
    "word_program",
    "Fingerprint",
    "NodePattern",
    "TreeNode",
    "node_pattern",
    "fingerprint",
    "allowable_subgroups",
    "descendants",
    "sibling_batches",
    "TargetPattern",
    "GrowthPolicy",
    "GrowthReport",
    "grow_tree",
    "mainline_of",
    "path_names",
    "TreeNodeRecord",
    "node_records",
    "tree_json_lines",
    "tree_dot",
]
