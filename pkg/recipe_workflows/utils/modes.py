# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

"""names of the systems, as given to the ``--mode`` flag"""

FUSION_MODES = ("text_only", "image_only", "concat", "joint_transformer")
BASELINE_MODES = ("handcrafted", "handcrafted_mm", "imgsim", "ffpair")
MODES = FUSION_MODES + BASELINE_MODES
DEFAULT_MODE = "concat"
