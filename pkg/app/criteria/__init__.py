from .schema import VerdictStatus, Certificate, Verdict, COVER_SINGLETON, SECOND_ORDER_MATCH
from .classify import (IpadReading, Anomaly, IpadClassification, classify_ipad, load_anomalies,
                       TREE_COCLASS1, TREE_U, TREE_Q, TREE_3, TREE_HIGHER)
from .contestants import (ContestantSet, contestants, shafarevich_filter, unknown_relation_rank,
                          admissible_branch)
from .rules import SporadicRule, TypeERule, RuleBook, load_rules
from .tower import type_a_verdict, type_e_verdict, as_rows, as_types, E_TYPES
from .sporadic import sporadic_verdict, SPORADIC_TYPES
from .parametrized import parametrized_ipad2
from .bounds import OrderBound, Occupation, order_bounds, ipod_occupation

__all__ = [
    "VerdictStatus",
    "Certificate",
    "Verdict",
    "COVER_SINGLETON",
    "SECOND_ORDER_MATCH",
    "IpadReading",
    "Anomaly",
    "IpadClassification",
    "classify_ipad",
    "load_anomalies",
    "TREE_COCLASS1",
    "TREE_U",
    "TREE_Q",
    "TREE_3",
    "TREE_HIGHER",
    "ContestantSet",
    "contestants",
    "shafarevich_filter",
    "unknown_relation_rank",
    "admissible_branch",
    "SporadicRule",
    "TypeERule",
    "RuleBook",
    "load_rules",
    "type_a_verdict",
    "type_e_verdict",
    "as_rows",
    "as_types",
    "E_TYPES",
    "sporadic_verdict",
    "SPORADIC_TYPES",
    "parametrized_ipad2",
    "OrderBound",
    "Occupation",
    "order_bounds",
    "ipod_occupation",
]
