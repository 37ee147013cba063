__all__ = [
    "main",
    "RunConfig",
    "cmd_generate",
    "cmd_train",
    "cmd_eval",
    "cmd_predict"
]

from recipe_workflows.cli.RunConfig import RunConfig
from recipe_workflows.cli.cmd_generate import cmd_generate
from recipe_workflows.cli.cmd_train import cmd_train
from recipe_workflows.cli.cmd_eval import cmd_eval
from recipe_workflows.cli.cmd_predict import cmd_predict
from recipe_workflows.cli.main import main
