from .schema import (FieldKind, FieldRecord, DistributionLevel, VertexStatistics, DistributionReport,
                     ErrorResponse)
from .dataset import parse_records, ingest, dump, load_fields
from .identify import identify, identify_all
from .statistics import (FigureLabel, canonical_vertex, distributions, census_frequencies, census_shares,
                         corrigenda, figure_labels, labels_for)
from .report import verdict_table, verdict_json, report_verdicts, report_tree, tree_labels

__all__ = [
    "FieldKind",
    "FieldRecord",
    "DistributionLevel",
    "VertexStatistics",
    "DistributionReport",
    "ErrorResponse",
    "parse_records",
    "ingest",
    "dump",
    "load_fields",
    "identify",
    "identify_all",
    "FigureLabel",
    "canonical_vertex",
    "distributions",
    "census_frequencies",
    "census_shares",
    "corrigenda",
    "figure_labels",
    "labels_for",
    "verdict_table",
    "verdict_json",
    "report_verdicts",
    "report_tree",
    "tree_labels",
]
