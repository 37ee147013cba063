# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

"""
Neural building blocks made of :mod:`recipe_workflows.tensor.functional` operations.

Matrices are initialized with Xavier uniform, biases with zeros and the forget gate bias of the LSTM with ones.
"""

import numpy as np

from recipe_workflows.Exceptions import ConfigError, ShapeError
from recipe_workflows.tensor.Tensor import Tensor, as_tensor
from recipe_workflows.tensor.Module import Module
from recipe_workflows.tensor import functional as F


def xavier_uniform(rng, fan_in, fan_out, shape=None):
    limit = np.sqrt(6. / (fan_in + fan_out))
    if shape is None:
        shape = (fan_in, fan_out)
    return rng.uniform(-limit, limit, size=shape)


def sinusoidal_encoding(n, d):
    """fixed ``(n, d)`` positional encodings: sines on even dimensions, cosines on odd ones"""
    pos = np.arange(n, dtype=np.float64)[:, None]
    div = np.exp(np.arange(0, d, 2, dtype=np.float64) * (-np.log(10000.) / d))
    res = np.zeros((n, d), dtype=np.float64)
    res[:, 0::2] = np.sin(pos * div)
    res[:, 1::2] = np.cos(pos * div)[:, :d // 2]
    return res


class Linear(Module):
    """``y = x W + b`` applied on the last axis of ``x``"""
    def __init__(self, in_dim, out_dim, rng, bias=True):
        Module.__init__(self)
        self.in_dim = int(in_dim)
        self.out_dim = int(out_dim)
        self.weight = self.add_param("weight", xavier_uniform(rng, self.in_dim, self.out_dim))
        self.bias = self.add_param("bias", np.zeros(self.out_dim)) if bias else None

    def forward(self, x):
        x = as_tensor(x)
        if x.shape[-1] != self.in_dim:
            raise ShapeError("linear: expected last dimension {}, found shape {}".format(self.in_dim, x.shape))
        if x.ndim == 1:
            res = F.reshape(F.matmul(F.reshape(x, (1, self.in_dim)), self.weight), (self.out_dim,))
        else:
            res = F.matmul(x, self.weight)
        if self.bias is not None:
            res = F.add(res, self.bias)
        return res


class Embedding(Module):
    def __init__(self, nb_embeddings, dim, rng):
        Module.__init__(self)
        self.nb_embeddings = int(nb_embeddings)
        self.dim = int(dim)
        self.weight = self.add_param("weight", xavier_uniform(rng, self.nb_embeddings, self.dim))

    def forward(self, ids):
        return F.embedding_lookup(self.weight, ids)


class LayerNorm(Module):
    """layer normalization followed by a learnable scale (ones at init) and shift (zeros at init)"""
    def __init__(self, dim, eps=1e-12):
        Module.__init__(self)
        self.eps = float(eps)
        self.gamma = self.add_param("gamma", np.ones(int(dim)))
        self.beta = self.add_param("beta", np.zeros(int(dim)))

    def forward(self, x):
        return F.add(F.mul(F.layer_norm(x, self.eps), self.gamma), self.beta)


def lstm_cell(x, h_prev, c_prev, w_x, w_h, b):
    """
    One step of a LSTM, gates in the order input, forget, candidate, output.

    Parameters
    ----------
    x: :class:`Tensor`
        Input, shape ``(batch, in_dim)``
    h_prev, c_prev: :class:`Tensor`
        Previous hidden and cell states, shape ``(batch, hidden)``
    w_x, w_h, b:
        Weights of shape ``(in_dim, 4 hidden)``, ``(hidden, 4 hidden)`` and ``(4 hidden,)``

    Returns
    -------
    h, c: :class:`Tensor`
        The new hidden and cell states

    """
    hidden = w_h.shape[0]
    if x.shape[-1] != w_x.shape[0] or h_prev.shape[-1] != hidden or c_prev.shape[-1] != hidden:
        raise ShapeError("lstm_cell: input {}, hidden {}, cell {} do not match weights {} and {}"
                         "".format(x.shape, h_prev.shape, c_prev.shape, w_x.shape, w_h.shape))
    z = F.add(F.add(F.matmul(x, w_x), F.matmul(h_prev, w_h)), b)
    i_gate = F.sigmoid(z[..., :hidden])
    f_gate = F.sigmoid(z[..., hidden:2 * hidden])
    g_cand = F.tanh(z[..., 2 * hidden:3 * hidden])
    o_gate = F.sigmoid(z[..., 3 * hidden:])
    c = F.add(F.mul(f_gate, c_prev), F.mul(i_gate, g_cand))
    h = F.mul(o_gate, F.tanh(c))
    return h, c


class LSTMCell(Module):
    def __init__(self, in_dim, hidden, rng):
        Module.__init__(self)
        self.in_dim = int(in_dim)
        self.hidden = int(hidden)
        self.w_x = self.add_param("w_x", xavier_uniform(rng, self.in_dim, 4 * self.hidden))
        self.w_h = self.add_param("w_h", xavier_uniform(rng, self.hidden, 4 * self.hidden))
        bias = np.zeros(4 * self.hidden)
        bias[self.hidden:2 * self.hidden] = 1.
        self.b = self.add_param("b", bias)

    def forward(self, x, h_prev, c_prev):
        return lstm_cell(x, h_prev, c_prev, self.w_x, self.w_h, self.b)


class BiLSTM(Module):
    """
    Bidirectional LSTM over a batch of padded sequences.

    The input has shape ``(batch, length, in_dim)`` (or ``(length, in_dim)`` for a single sequence) and the
    output ``(batch, length, 2 hidden)``: at each position the forward state followed by the backward state.
    Positions where ``mask`` is false (padding at the end of the sequences) leave the states unchanged.
    """
    def __init__(self, in_dim, hidden, rng):
        Module.__init__(self)
        self.hidden = int(hidden)
        self.fwd = self.add_module("fwd", LSTMCell(in_dim, hidden, rng))
        self.bwd = self.add_module("bwd", LSTMCell(in_dim, hidden, rng))

    def _run(self, cell, seq, mask, order):
        batch = seq.shape[0]
        h = Tensor(np.zeros((batch, self.hidden)))
        c = Tensor(np.zeros((batch, self.hidden)))
        states = [None] * seq.shape[1]
        for t in order:
            h_new, c_new = cell(seq[:, t, :], h, c)
            if mask is None or mask[:, t].all():
                h, c = h_new, c_new
            else:
                m = mask[:, t].astype(np.float64)[:, None]
                h = F.add(F.mul(h_new, m), F.mul(h, 1. - m))
                c = F.add(F.mul(c_new, m), F.mul(c, 1. - m))
            states[t] = h
        return F.stack(states, axis=1)

    def forward(self, seq, mask=None):
        seq = as_tensor(seq)
        single = seq.ndim == 2
        if single:
            seq = F.reshape(seq, (1,) + seq.shape)
        if mask is not None:
            mask = np.asarray(mask, dtype=bool).reshape(seq.shape[0], seq.shape[1])
        length = seq.shape[1]
        fwd = self._run(self.fwd, seq, mask, range(length))
        bwd = self._run(self.bwd, seq, mask, reversed(range(length)))
        res = F.concat([fwd, bwd], axis=-1)
        if single:
            res = F.reshape(res, res.shape[1:])
        return res


def bilstm(seq, module, mask=None):
    """list of the concatenated forward / backward states of a single sequence"""
    out = module(seq, mask)
    return [out[t] for t in range(out.shape[0])]


class MultiHeadAttention(Module):
    """
    Scaled dot product attention with ``n_heads`` heads, followed by an output projection.

    ``mask`` is a boolean array broadcastable to ``(batch, n_queries, n_keys)``, true where a query may attend
    a key; it is applied additively before the softmax. A query that may attend no key gets a zero output.
    """
    def __init__(self, d_model, n_heads, rng, dropout=0.):
        Module.__init__(self)
        if n_heads <= 0 or d_model % n_heads != 0:
            raise ConfigError("the number of heads ({}) should divide the model dimension ({})"
                              "".format(n_heads, d_model))
        self.d_model = int(d_model)
        self.n_heads = int(n_heads)
        self.d_head = self.d_model // self.n_heads
        self.dropout = float(dropout)
        self.wq = self.add_module("wq", Linear(d_model, d_model, rng))
        self.wk = self.add_module("wk", Linear(d_model, d_model, rng))
        self.wv = self.add_module("wv", Linear(d_model, d_model, rng))
        self.wo = self.add_module("wo", Linear(d_model, d_model, rng))
        self.last_weights = None

    def _split_heads(self, x):
        batch, length, _ = x.shape
        return F.transpose(F.reshape(x, (batch, length, self.n_heads, self.d_head)), (0, 2, 1, 3))

    def forward(self, queries, keys, values, mask=None, rng=None):
        queries, keys, values = as_tensor(queries), as_tensor(keys), as_tensor(values)
        single = queries.ndim == 2
        if single:
            queries = F.reshape(queries, (1,) + queries.shape)
            keys = F.reshape(keys, (1,) + keys.shape)
            values = F.reshape(values, (1,) + values.shape)
        if keys.shape[1] != values.shape[1]:
            raise ShapeError("attention: {} keys but {} values".format(keys.shape[1], values.shape[1]))
        batch, n_q, _ = queries.shape
        n_k = keys.shape[1]

        q = self._split_heads(self.wq(queries))
        k = self._split_heads(self.wk(keys))
        v = self._split_heads(self.wv(values))
        scores = F.div(F.matmul(q, F.transpose(k, (0, 1, 3, 2))), np.sqrt(self.d_head))
        row_ok = None
        if mask is not None:
            try:
                mask = np.broadcast_to(np.asarray(mask, dtype=bool), (batch, n_q, n_k))
            except ValueError:
                raise ShapeError("attention: mask of shape {} for {} queries and {} keys"
                                 "".format(np.shape(mask), n_q, n_k))
            scores = F.masked_scores(scores, mask[:, None, :, :])
            row_ok = mask.any(axis=-1).astype(np.float64)
        weights = F.softmax(scores, axis=-1)
        if row_ok is not None:
            weights = F.mul(weights, row_ok[:, None, :, None])
        self.last_weights = weights.data
        weights = F.dropout(weights, self.dropout, self.training, rng)

        ctx = F.reshape(F.transpose(F.matmul(weights, v), (0, 2, 1, 3)), (batch, n_q, self.d_model))
        res = self.wo(ctx)
        if row_ok is not None:
            res = F.mul(res, row_ok[:, :, None])
        if single:
            res = F.reshape(res, res.shape[1:])
        return res


def multi_head_attention(queries, keys, values, mask, module, rng=None):
    return module(queries, keys, values, mask=mask, rng=rng)


class GatedAttentionLayer(Module):
    """
    Attention sub layer, fusion gate and layer normalization.

    ``a = attention(x, memory)``, ``g = sigmoid([x; a] W_g + b_g)``, output ``layer_norm(g * x + (1 - g) * a)``.
    With ``memory`` set to ``x`` it is a self attention layer (recipe encoder), otherwise a cross attention layer
    (decoder).
    """
    def __init__(self, d_model, n_heads, rng, dropout=0.):
        Module.__init__(self)
        self.attn = self.add_module("attn", MultiHeadAttention(d_model, n_heads, rng, dropout=dropout))
        self.gate = self.add_module("gate", Linear(2 * d_model, d_model, rng))
        self.norm = self.add_module("norm", LayerNorm(d_model))

    def forward(self, x, memory=None, mask=None, rng=None):
        if memory is None:
            memory = x
        a = self.attn(x, memory, memory, mask=mask, rng=rng)
        g = F.sigmoid(self.gate(F.concat([x, a], axis=-1)))
        mixed = F.add(F.mul(g, x), F.mul(F.sub(1., g), a))
        return self.norm(mixed)


class TransformerEncoderLayer(Module):
    """post-norm transformer layer: self attention then a ReLU feed forward, each with residual and layer norm"""
    def __init__(self, d_model, n_heads, d_ff, rng, dropout=0.):
        Module.__init__(self)
        self.dropout = float(dropout)
        self.attn = self.add_module("attn", MultiHeadAttention(d_model, n_heads, rng, dropout=dropout))
        self.norm1 = self.add_module("norm1", LayerNorm(d_model))
        self.ff1 = self.add_module("ff1", Linear(d_model, d_ff, rng))
        self.ff2 = self.add_module("ff2", Linear(d_ff, d_model, rng))
        self.norm2 = self.add_module("norm2", LayerNorm(d_model))

    def forward(self, x, mask=None, rng=None):
        a = self.attn(x, x, x, mask=mask, rng=rng)
        x = self.norm1(F.add(x, a))
        ff = self.ff2(F.relu(self.ff1(x)))
        ff = F.dropout(ff, self.dropout, self.training, rng)
        return self.norm2(F.add(x, ff))
