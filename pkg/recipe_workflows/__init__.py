__all__ = [
    "core",
    "graphkit",
    "metrics",
    "tensor",
    "PointerWorkflow",
    "HandCrafted",
    "ImageSimilarity",
    "FeedForwardPair",
    "synthgen",
    "cli",
    # utilitary scripts
    "utils"
]

__version__ = "0.1.0"
