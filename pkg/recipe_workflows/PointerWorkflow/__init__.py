__all__ = [
    "PointerWorkflow",
    "PointerWorkflow_NN",
    "PointerWorkflow_NNParam",
    "ModelConfig",
    "StepEmbeddings",
    "evaluate",
    "train"
]

from recipe_workflows.PointerWorkflow.PointerWorkflow import PointerWorkflow
from recipe_workflows.PointerWorkflow.PointerWorkflow_NN import PointerWorkflow_NN, StepEmbeddings
from recipe_workflows.PointerWorkflow.PointerWorkflow_NNParam import PointerWorkflow_NNParam, ModelConfig
from recipe_workflows.PointerWorkflow.evaluate import evaluate
from recipe_workflows.PointerWorkflow.train import train
