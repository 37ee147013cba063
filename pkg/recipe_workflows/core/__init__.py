__all__ = [
    "CookingStep",
    "Recipe",
    "WorkflowGraph",
    "Dataset",
    "tokenize",
    "build_vocab",
    "encode_tokens",
    "load_dataset",
    "save_dataset",
    "read_recipes",
    "recipe_to_json",
    "recipe_from_json",
    "PAD_ID",
    "UNK_ID"
]

from recipe_workflows.core.CookingStep import CookingStep
from recipe_workflows.core.Recipe import Recipe
from recipe_workflows.core.WorkflowGraph import WorkflowGraph
from recipe_workflows.core.Dataset import Dataset
from recipe_workflows.core.tokenize import tokenize
from recipe_workflows.core.vocab import build_vocab, encode_tokens, PAD_ID, UNK_ID
from recipe_workflows.core.dataset_io import load_dataset, save_dataset, read_recipes, recipe_to_json, \
    recipe_from_json
