__all__ = [
    "FeedForwardPair",
    "FeedForwardPair_NN",
    "FeedForwardPair_NNParam",
    "feedforward_pair_detector",
    "evaluate",
    "train"
]

from recipe_workflows.FeedForwardPair.FeedForwardPair import FeedForwardPair, feedforward_pair_detector
from recipe_workflows.FeedForwardPair.FeedForwardPair_NN import FeedForwardPair_NN
from recipe_workflows.FeedForwardPair.FeedForwardPair_NNParam import FeedForwardPair_NNParam
from recipe_workflows.FeedForwardPair.evaluate import evaluate
from recipe_workflows.FeedForwardPair.train import train
