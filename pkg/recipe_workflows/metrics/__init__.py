__all__ = [
    "MetricsReport",
    "evaluate",
    "f1",
    "pair_accuracy",
    "cohens_kappa",
    "graph_agreement",
    "VISIBILITY_CLASSES",
    "save_visibility",
    "load_visibility",
    "sidecar_path",
    "recall_by_visibility"
]

from recipe_workflows.metrics.MetricsReport import MetricsReport, f1
from recipe_workflows.metrics.edge_metrics import evaluate, pair_accuracy
from recipe_workflows.metrics.agreement import cohens_kappa, graph_agreement
from recipe_workflows.metrics.visibility import VISIBILITY_CLASSES, save_visibility, load_visibility, \
    sidecar_path, recall_by_visibility
