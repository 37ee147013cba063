# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from recipe_workflows.Exceptions import ConfigError
from recipe_workflows.utils.NNParam import NNParam
from recipe_workflows.utils.modes import FUSION_MODES
from recipe_workflows.PointerWorkflow.PointerWorkflow_NN import PointerWorkflow_NN


class PointerWorkflow_NNParam(NNParam):
    """
    Architecture of the pointer network that predicts workflows (also known as the model configuration).

    Attributes
    ----------
    d_img: ``int``
        Dimension of the image feature vectors

    d_model: ``int``
        Size of the step embeddings shared by every part of the network

    lstm_hidden: ``int``
        Hidden size of each direction of the instruction BiLSTM

    n_heads: ``int``
        Number of attention heads, it must divide ``d_model``

    n_enc_layers: ``int``
        Number of layers of the recipe encoder

    n_dec_layers: ``int``
        Number of layers of the relation decoder

    fusion_mode: ``str``
        How a step embedding is computed from its images and its text, one of ``"text_only"``, ``"image_only"``,
        ``"concat"`` and ``"joint_transformer"``

    vocab_size: ``int``
        Number of words known by the word embedding (set from the training vocabulary)

    dropout: ``float``
        Dropout rate on the attention weights and the feed forward outputs

    theta: ``float``
        Default decision threshold of the predicted edges

    d_word: ``int``
        Size of the word embeddings

    n_fusion_layers: ``int``
        Number of transformer layers of the ``"joint_transformer"`` fusion

    max_len: ``int``
        Size of the positional encoding table: maximum number of steps of a recipe and of words of a step

    """
    _int_attr = ["d_img", "d_model", "lstm_hidden", "n_heads", "n_enc_layers", "n_dec_layers", "vocab_size",
                 "d_word", "n_fusion_layers", "max_len"]
    _float_attr = ["dropout", "theta"]
    _str_attr = ["fusion_mode"]
    nn_class = PointerWorkflow_NN

    def __init__(self,
                 d_img=32,
                 d_model=64,
                 lstm_hidden=32,
                 n_heads=4,
                 n_enc_layers=2,
                 n_dec_layers=2,
                 fusion_mode="concat",
                 vocab_size=2,
                 dropout=0.1,
                 theta=0.5,
                 d_word=32,
                 n_fusion_layers=2,
                 max_len=512):
        self.d_img = int(d_img)
        self.d_model = int(d_model)
        self.lstm_hidden = int(lstm_hidden)
        self.n_heads = int(n_heads)
        self.n_enc_layers = int(n_enc_layers)
        self.n_dec_layers = int(n_dec_layers)
        self.fusion_mode = str(fusion_mode)
        self.vocab_size = int(vocab_size)
        self.dropout = float(dropout)
        self.theta = float(theta)
        self.d_word = int(d_word)
        self.n_fusion_layers = int(n_fusion_layers)
        self.max_len = int(max_len)
        self.check()

    def check(self):
        if self.fusion_mode not in FUSION_MODES:
            raise ConfigError("unknown fusion mode \"{}\", it should be one of {}"
                              "".format(self.fusion_mode, ", ".join(FUSION_MODES)))
        for nm in ["d_model", "lstm_hidden", "n_heads", "d_word", "max_len", "vocab_size"]:
            if getattr(self, nm) < 1:
                raise ConfigError("\"{}\" should be >= 1, found \"{}\"".format(nm, getattr(self, nm)))
        for nm in ["d_img", "n_enc_layers", "n_dec_layers", "n_fusion_layers"]:
            if getattr(self, nm) < 0:
                raise ConfigError("\"{}\" should be >= 0, found \"{}\"".format(nm, getattr(self, nm)))
        if self.d_model % self.n_heads != 0:
            raise ConfigError("the number of heads ({}) should divide d_model ({})".format(self.n_heads, self.d_model))
        if not 0. <= self.theta <= 1.:
            raise ConfigError("theta should be in [0, 1], found \"{}\"".format(self.theta))
        if not 0. <= self.dropout < 1.:
            raise ConfigError("dropout should be in [0, 1), found \"{}\"".format(self.dropout))


ModelConfig = PointerWorkflow_NNParam
