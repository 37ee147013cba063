__all__ = [
    "GenConfig",
    "generate",
    "generate_recipe",
    "plant_workflow",
    "dataset_stats",
    "dedup_frames",
    "dedup_step_images"
]

from recipe_workflows.synthgen.GenConfig import GenConfig
from recipe_workflows.synthgen.generate import generate, generate_recipe, plant_workflow, dataset_stats
from recipe_workflows.synthgen.dedup_frames import dedup_frames, dedup_step_images
