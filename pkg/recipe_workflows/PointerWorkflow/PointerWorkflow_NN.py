# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
from collections import namedtuple

import numpy as np

from recipe_workflows.Exceptions import ArgumentError, ShapeError
from recipe_workflows.core.vocab import PAD_ID, encode_tokens
from recipe_workflows.graphkit.EdgeProbMatrix import EdgeProbMatrix
from recipe_workflows.tensor import functional as F
from recipe_workflows.tensor.Tensor import no_grad
from recipe_workflows.tensor.Module import Module
from recipe_workflows.tensor.layers import Linear, Embedding, BiLSTM, GatedAttentionLayer, \
    TransformerEncoderLayer, sinusoidal_encoding

# T: fused step embeddings, E: contextualized step embeddings, O: decoder outputs, all (n, d_model)
StepEmbeddings = namedtuple("StepEmbeddings", ["T", "E", "O"])

SEGMENT_CLS = 0
SEGMENT_IMAGE = 1
SEGMENT_TEXT = 2


class PointerWorkflow_NN(Module):
    """
    Network that scores every candidate edge ``(j, i)``, ``j < i``, of a recipe.

    1. Step encoder: the images of a step are averaged and projected (``F_i``), its words go through an embedding,
       a BiLSTM and an attention pooling with a learned query (``C_i``); both are fused into ``T_i`` depending on
       the fusion mode.
    2. Recipe encoder: sinusoidal positions are added to ``T`` and a stack of gated self attention layers gives the
       contextualized embeddings ``E``.
    3. Relation decoder: the query of step ``t`` is ``T_t`` plus its position, a stack of gated cross attention
       layers over ``E`` gives ``O_t``.
    4. Pointer layer: ``P[t, k] = sigmoid(relu(O_t W_Q) . relu(E_k W_K) / sqrt(d_model))`` for ``k < t``.

    Gated layers compute ``a = attention(x, memory)``, ``g = sigmoid([x; a] W_g + b_g)`` and
    ``layer_norm(g * x + (1 - g) * a)``.
    """
    def __init__(self, nn_params, training_param=None, seed=0):
        Module.__init__(self)
        self._nn_archi = nn_params
        self._training_param = training_param
        rng = np.random.default_rng(seed)
        cfg = nn_params
        d = cfg.d_model
        self.d_model = d
        self.fusion_mode = cfg.fusion_mode
        self.d_img = cfg.d_img
        self.max_len = cfg.max_len
        self.dropout = cfg.dropout
        self.last_text_attention = None
        self._pe = sinusoidal_encoding(cfg.max_len, d)

        mode = self.fusion_mode
        if mode in ("image_only", "concat"):
            self.image_proj = self.add_module("image_proj", Linear(cfg.d_img, d, rng))
        if mode in ("text_only", "concat", "joint_transformer"):
            self.word_emb = self.add_module("word_emb", Embedding(cfg.vocab_size, cfg.d_word, rng))
        if mode in ("text_only", "concat"):
            self.bilstm = self.add_module("bilstm", BiLSTM(cfg.d_word, cfg.lstm_hidden, rng))
            self.text_query = self.add_param("text_query",
                                             rng.uniform(-0.1, 0.1, size=(2 * cfg.lstm_hidden, 1)))
            self.text_proj = self.add_module("text_proj", Linear(2 * cfg.lstm_hidden, d, rng))
        if mode == "concat":
            self.fuse_img = self.add_module("fuse_img", Linear(d, d, rng))
            self.fuse_txt = self.add_module("fuse_txt", Linear(d, d, rng))
            self.fuse_ff1 = self.add_module("fuse_ff1", Linear(2 * d, d, rng))
            self.fuse_ff2 = self.add_module("fuse_ff2", Linear(d, d, rng))
        if mode == "joint_transformer":
            self.cls = self.add_param("cls", rng.normal(0., 0.02, size=d))
            self.joint_img = self.add_module("joint_img", Linear(cfg.d_img, d, rng))
            self.joint_word = self.add_module("joint_word", Linear(cfg.d_word, d, rng))
            self.segment = self.add_module("segment", Embedding(3, d, rng))
            self.fusion_layers = [self.add_module("fusion{}".format(k),
                                                  TransformerEncoderLayer(d, cfg.n_heads, 4 * d, rng,
                                                                          dropout=cfg.dropout))
                                  for k in range(cfg.n_fusion_layers)]

        self.encoder_layers = [self.add_module("encoder{}".format(k),
                                               GatedAttentionLayer(d, cfg.n_heads, rng, dropout=cfg.dropout))
                               for k in range(cfg.n_enc_layers)]
        self.decoder_layers = [self.add_module("decoder{}".format(k),
                                               GatedAttentionLayer(d, cfg.n_heads, rng, dropout=cfg.dropout))
                               for k in range(cfg.n_dec_layers)]
        self.w_q = self.add_module("w_q", Linear(d, d, rng, bias=False))
        self.w_k = self.add_module("w_k", Linear(d, d, rng, bias=False))

    def _positions(self, length):
        if length > self.max_len:
            raise ArgumentError("sequence of length {} is longer than max_len ({})".format(length, self.max_len))
        return self._pe[:length]

    def _check_images(self, recipe):
        for step in recipe.steps:
            if step.d_img is not None and step.d_img != self.d_img:
                raise ShapeError("step {} of recipe \"{}\" has images of dimension {}, the model expects {}"
                                 "".format(step.index, recipe.id, step.d_img, self.d_img))

    def _word_batch(self, recipe, vocab):
        lengths = [len(step.text) for step in recipe.steps]
        if min(lengths) == 0:
            raise ArgumentError("recipe \"{}\" has a step without text".format(recipe.id))
        length = max(lengths)
        self._positions(length)
        ids = np.full((recipe.n, length), PAD_ID, dtype=np.int64)
        mask = np.zeros((recipe.n, length), dtype=bool)
        for k, step in enumerate(recipe.steps):
            ids[k, :lengths[k]] = encode_tokens(step.text, vocab)
            mask[k, :lengths[k]] = True
        return ids, mask

    # step encoder
    def encode_images(self, recipe):
        """``F``, shape ``(n, d_model)``: projection of the average image of each step (zero vector if none)"""
        self._check_images(recipe)
        means = np.stack([step.mean_image(self.d_img) for step in recipe.steps])
        return self.image_proj(means)

    def encode_instructions(self, recipe, vocab):
        """``C``, shape ``(n, d_model)``: attention pooling of the BiLSTM states of the words of each step"""
        ids, mask = self._word_batch(recipe, vocab)
        states = self.bilstm(self.word_emb(ids), mask)
        n, length, h2 = states.shape
        scores = F.reshape(F.matmul(states, self.text_query), (n, length))
        scores = F.masked_scores(F.div(scores, np.sqrt(h2)), mask)
        alpha = F.softmax(scores, axis=-1)
        self.last_text_attention = alpha.data
        pooled = F.sum_(F.mul(states, F.reshape(alpha, (n, length, 1))), axis=1)
        return self.text_proj(pooled)

    def _joint_fusion(self, recipe, vocab, rng):
        self._check_images(recipe)
        n = recipe.n
        d = self.d_model
        ids, word_mask = self._word_batch(recipe, vocab)
        nb_img = max(step.nb_images for step in recipe.steps)
        tokens = [F.add(np.zeros((n, 1, d)), self.cls)]
        masks = [np.ones((n, 1), dtype=bool)]
        segments = [SEGMENT_CLS]
        if nb_img:
            images = np.zeros((n, nb_img, self.d_img), dtype=np.float64)
            img_mask = np.zeros((n, nb_img), dtype=bool)
            for k, step in enumerate(recipe.steps):
                images[k, :step.nb_images] = step.images
                img_mask[k, :step.nb_images] = True
            tokens.append(self.joint_img(images))
            masks.append(img_mask)
            segments += [SEGMENT_IMAGE] * nb_img
        tokens.append(F.add(self.joint_word(self.word_emb(ids)), self._positions(ids.shape[1])))
        masks.append(word_mask)
        segments += [SEGMENT_TEXT] * ids.shape[1]

        seq = F.add(F.concat(tokens, axis=1), self.segment(np.array(segments, dtype=np.int64)))
        key_mask = np.concatenate(masks, axis=1)[:, None, :]
        for layer in self.fusion_layers:
            seq = layer(seq, mask=key_mask, rng=rng)
        return seq[:, 0, :]

    def fuse(self, recipe, vocab, rng=None):
        """``T``, shape ``(n, d_model)``: one embedding per step, computed according to the fusion mode"""
        mode = self.fusion_mode
        if mode == "text_only":
            return self.encode_instructions(recipe, vocab)
        if mode == "image_only":
            return self.encode_images(recipe)
        if mode == "concat":
            img = self.fuse_img(self.encode_images(recipe))
            txt = self.fuse_txt(self.encode_instructions(recipe, vocab))
            hidden = F.relu(self.fuse_ff1(F.concat([img, txt], axis=-1)))
            hidden = F.dropout(hidden, self.dropout, self.training, rng)
            return self.fuse_ff2(hidden)
        return self._joint_fusion(recipe, vocab, rng)

    # recipe encoder, decoder and pointer
    def encode_recipe(self, steps_emb, rng=None):
        """``E``: gated self attention over all the steps, with sinusoidal positions"""
        x = F.add(steps_emb, self._positions(steps_emb.shape[0]))
        for layer in self.encoder_layers:
            x = layer(x, rng=rng)
        return x

    def decode(self, steps_emb, context, rng=None):
        """``O``: the query of step ``t`` is ``T_t`` plus its position, it attends every ``E_k``"""
        y = F.add(steps_emb, self._positions(steps_emb.shape[0]))
        for layer in self.decoder_layers:
            y = layer(y, memory=context, rng=rng)
        return y

    def pointer(self, outputs, context):
        """full ``(n, n)`` matrix of sigmoid scores, only its strictly lower triangle is meaningful"""
        queries = F.relu(self.w_q(outputs))
        keys = F.relu(self.w_k(context))
        logits = F.div(F.matmul(queries, F.transpose(keys)), np.sqrt(self.d_model))
        return F.sigmoid(logits)

    def embed(self, recipe, vocab, rng=None):
        steps_emb = self.fuse(recipe, vocab, rng)
        context = self.encode_recipe(steps_emb, rng)
        outputs = self.decode(steps_emb, context, rng)
        return StepEmbeddings(steps_emb, context, outputs)

    def forward(self, recipe, vocab, rng=None):
        emb = self.embed(recipe, vocab, rng)
        return self.pointer(emb.O, emb.E)

    def edge_probs(self, recipe, vocab):
        """the :class:`recipe_workflows.graphkit.EdgeProbMatrix` of ``recipe``, without recording gradients"""
        with no_grad():
            probs = self.forward(recipe, vocab)
        return EdgeProbMatrix(recipe.n, probs.data)

    @staticmethod
    def loss(probs, gold):
        """
        Cross entropy of the scores against the gold workflow, averaged over the ``n (n - 1) / 2`` candidate pairs
        (probabilities clamped to ``[1e-7, 1 - 1e-7]``).
        """
        n = probs.shape[0]
        if gold.n != n:
            raise ArgumentError("scores for {} steps but the gold workflow has {} nodes".format(n, gold.n))
        if n < 2:
            raise ArgumentError("the loss needs at least one candidate pair, the recipe has {} step".format(n))
        targets = gold.adjacency().T.astype(np.float64)
        weights = np.tril(np.ones((n, n)), k=-1)
        return F.binary_cross_entropy(probs, targets, weights=weights, eps=1e-7)
