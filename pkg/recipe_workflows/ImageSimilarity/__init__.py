__all__ = [
    "ImageSimilarity",
    "evaluate",
    "train"
]

from recipe_workflows.ImageSimilarity.ImageSimilarity import ImageSimilarity
from recipe_workflows.ImageSimilarity.evaluate import evaluate
from recipe_workflows.ImageSimilarity.train import train
