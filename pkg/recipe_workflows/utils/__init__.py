__all__ = [
    "cli_eval",
    "cli_train",
    "cli_generate",
    "cli_predict",
    "str2bool",
    "train_generic",
    "eval_generic",
    "split_indices",
    "split_dataset",
    "BaseParam",
    "TrainingParam",
    "NNParam",
    "BaseWorkflowBuilder",
    "LinearDetector",
    "train_linear_detector",
    "PairwiseBuilder",
    "baseline_predict",
    "sample_balanced_pairs",
    "text_pair_features",
    "image_pair_similarities",
    "image_pair_features",
    "multimodal_pair_features",
    "STOPWORDS",
    "MODES",
    "FUSION_MODES",
    "BASELINE_MODES",
    "DEFAULT_MODE"
]

from recipe_workflows.utils.cli_eval import cli_eval
from recipe_workflows.utils.cli_train import cli_train
from recipe_workflows.utils.cli_generate import cli_generate
from recipe_workflows.utils.cli_predict import cli_predict
from recipe_workflows.utils.str2bool import str2bool
from recipe_workflows.utils.train_generic import train_generic
from recipe_workflows.utils.eval_generic import eval_generic
from recipe_workflows.utils.splits import split_indices, split_dataset
from recipe_workflows.utils.modes import MODES, FUSION_MODES, BASELINE_MODES, DEFAULT_MODE
from recipe_workflows.utils.stopwords import STOPWORDS

from recipe_workflows.utils.BaseParam import BaseParam
from recipe_workflows.utils.TrainingParam import TrainingParam
from recipe_workflows.utils.NNParam import NNParam
from recipe_workflows.utils.BaseWorkflowBuilder import BaseWorkflowBuilder
from recipe_workflows.utils.LinearDetector import LinearDetector, train_linear_detector
from recipe_workflows.utils.PairwiseBuilder import PairwiseBuilder, baseline_predict, sample_balanced_pairs
from recipe_workflows.utils.pair_features import text_pair_features, image_pair_similarities, \
    image_pair_features, multimodal_pair_features
