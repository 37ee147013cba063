__all__ = [
    "EdgeProbMatrix",
    "has_path",
    "transitive_closure",
    "transitive_reduce",
    "candidate_edges",
    "build_workflow",
    "export_dot"
]

from recipe_workflows.graphkit.EdgeProbMatrix import EdgeProbMatrix
from recipe_workflows.graphkit.graph_algos import has_path, transitive_closure, transitive_reduce, \
    candidate_edges, build_workflow
from recipe_workflows.graphkit.export_dot import export_dot
