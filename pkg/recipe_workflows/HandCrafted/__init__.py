__all__ = [
    "HandCrafted",
    "HandCraftedMM",
    "evaluate",
    "train"
]

from recipe_workflows.HandCrafted.HandCrafted import HandCrafted
from recipe_workflows.HandCrafted.HandCraftedMM import HandCraftedMM
from recipe_workflows.HandCrafted.evaluate import evaluate
from recipe_workflows.HandCrafted.train import train
