# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.

import unittest

import numpy as np

from recipe_workflows.Exceptions import ConfigError, ShapeError
from recipe_workflows.tensor import Tensor, Linear, Embedding, LayerNorm, LSTMCell, BiLSTM, MultiHeadAttention, \
    GatedAttentionLayer, TransformerEncoderLayer, lstm_cell, bilstm, sinusoidal_encoding, check_gradients, \
    no_grad, functional as F


class TestLinear(unittest.TestCase):
    def test_shapes(self):
        lin = Linear(3, 2, np.random.default_rng(0))
        assert lin(np.ones(3)).shape == (2,)
        assert lin(np.ones((4, 3))).shape == (4, 2)
        with self.assertRaises(ShapeError):
            lin(np.ones(4))

    def test_names(self):
        lin = Linear(3, 2, np.random.default_rng(0))
        assert [nm for nm, _ in lin.named_parameters()] == ["weight", "bias"]
        assert lin.nb_parameters() == 8

    def test_embedding(self):
        emb = Embedding(5, 3, np.random.default_rng(0))
        res = emb(np.array([1, 1, 4]))
        assert res.shape == (3, 3)
        assert np.array_equal(res.data[0], res.data[1])


class TestLSTM(unittest.TestCase):
    def test_zero_weights(self):
        x = Tensor(np.zeros((1, 3)))
        h0 = Tensor(np.zeros((1, 2)))
        h, c = lstm_cell(x, h0, h0, Tensor(np.zeros((3, 8))), Tensor(np.zeros((2, 8))), Tensor(np.zeros(8)))
        assert np.array_equal(h.data, np.zeros((1, 2)))
        assert np.array_equal(c.data, np.zeros((1, 2)))

    def test_shape_error(self):
        cell = LSTMCell(3, 2, np.random.default_rng(0))
        with self.assertRaises(ShapeError):
            cell(Tensor(np.zeros((1, 4))), Tensor(np.zeros((1, 2))), Tensor(np.zeros((1, 2))))

    def test_single_step(self):
        module = BiLSTM(3, 2, np.random.default_rng(0))
        x = np.random.default_rng(1).normal(size=(1, 3))
        out = module(x)
        assert out.shape == (1, 4)
        zeros = Tensor(np.zeros((1, 2)))
        h_fwd, _ = module.fwd(Tensor(x), zeros, zeros)
        h_bwd, _ = module.bwd(Tensor(x), zeros, zeros)
        assert np.allclose(out.data[0, :2], h_fwd.data[0])
        assert np.allclose(out.data[0, 2:], h_bwd.data[0])

    def test_bilstm_list(self):
        module = BiLSTM(3, 2, np.random.default_rng(0))
        states = bilstm(np.random.default_rng(1).normal(size=(5, 3)), module)
        assert len(states) == 5
        assert all(el.shape == (4,) for el in states)

    def test_padding(self):
        rng = np.random.default_rng(2)
        module = BiLSTM(3, 2, np.random.default_rng(0))
        seq = rng.normal(size=(4, 3))
        batch = np.zeros((2, 6, 3))
        batch[0] = rng.normal(size=(6, 3))
        batch[1, :4] = seq
        mask = np.zeros((2, 6), dtype=bool)
        mask[0] = True
        mask[1, :4] = True
        out = module(batch, mask)
        alone = module(seq)
        assert np.allclose(out.data[1, :4], alone.data)

    def test_gradients(self):
        rng = np.random.default_rng(3)
        module = BiLSTM(2, 2, rng)
        seq = rng.normal(size=(3, 2))
        c = rng.normal(size=(3, 4))
        ok, max_err = check_gradients(lambda: F.sum_(F.mul(module(seq), c)), module.parameters())
        assert ok, "max relative error {}".format(max_err)


class TestAttention(unittest.TestCase):
    def test_heads_divide(self):
        with self.assertRaises(ConfigError):
            MultiHeadAttention(6, 4, np.random.default_rng(0))

    def test_single_key(self):
        attn = MultiHeadAttention(4, 1, np.random.default_rng(0))
        rng = np.random.default_rng(1)
        q = rng.normal(size=(1, 4))
        v = rng.normal(size=(1, 4))
        res = attn(q, rng.normal(size=(1, 4)), v)
        assert np.allclose(res.data, attn.wo(attn.wv(v)).data)

    def test_weights_sum_to_one(self):
        attn = MultiHeadAttention(4, 2, np.random.default_rng(0))
        rng = np.random.default_rng(1)
        x = rng.normal(size=(5, 4))
        mask = np.ones((5, 5), dtype=bool)
        mask[:, 3:] = False
        attn(x, x, x, mask=mask)
        weights = attn.last_weights
        assert weights.shape == (1, 2, 5, 5)
        assert np.allclose(weights.sum(axis=-1), 1.)
        assert np.allclose(weights[..., 3:], 0.)

    def test_fully_masked(self):
        attn = MultiHeadAttention(4, 2, np.random.default_rng(0))
        x = np.random.default_rng(1).normal(size=(3, 4))
        mask = np.ones((3, 3), dtype=bool)
        mask[1] = False
        res = attn(x, x, x, mask=mask)
        assert np.array_equal(res.data[1], np.zeros(4))
        assert np.any(res.data[0] != 0.)

    def test_gradients(self):
        rng = np.random.default_rng(4)
        attn = MultiHeadAttention(4, 2, rng)
        x = rng.normal(size=(3, 4))
        mem = rng.normal(size=(2, 4))
        c = rng.normal(size=(3, 4))
        ok, max_err = check_gradients(lambda: F.sum_(F.mul(attn(x, mem, mem), c)), attn.parameters())
        assert ok, "max relative error {}".format(max_err)


class TestGatedLayers(unittest.TestCase):
    def test_gate_bypass(self):
        layer = GatedAttentionLayer(4, 2, np.random.default_rng(0))
        layer.gate.weight.data = np.zeros_like(layer.gate.weight.data)
        layer.gate.bias.data = np.full(4, 50.)
        x = np.random.default_rng(1).normal(size=(3, 4))
        with no_grad():
            res = layer(x)
        assert np.allclose(res.data, F.layer_norm(x).data, atol=1e-6)

    def test_layer_norm_module(self):
        norm = LayerNorm(3)
        x = np.array([[1., 2., 6.]])
        assert np.allclose(norm(x).data, F.layer_norm(x).data)

    def test_gated_gradients(self):
        rng = np.random.default_rng(5)
        layer = GatedAttentionLayer(4, 2, rng)
        x = rng.normal(size=(3, 4))
        c = rng.normal(size=(3, 4))
        ok, max_err = check_gradients(lambda: F.sum_(F.mul(layer(x), c)), layer.parameters())
        assert ok, "max relative error {}".format(max_err)

    def test_transformer_layer(self):
        layer = TransformerEncoderLayer(4, 2, 8, np.random.default_rng(0), dropout=0.1)
        x = np.random.default_rng(1).normal(size=(5, 4))
        layer.eval()
        res1 = layer(x, rng=np.random.default_rng(2))
        res2 = layer(x, rng=np.random.default_rng(3))
        assert res1.shape == (5, 4)
        assert np.array_equal(res1.data, res2.data)
        layer.train()
        res3 = layer(x, rng=np.random.default_rng(2))
        assert not np.array_equal(res1.data, res3.data)


class TestPositional(unittest.TestCase):
    def test_encoding(self):
        res = sinusoidal_encoding(5, 6)
        assert res.shape == (5, 6)
        assert np.allclose(res[0], [0., 1., 0., 1., 0., 1.])
        assert abs(res[1, 0] - np.sin(1.)) <= 1e-12
        assert sinusoidal_encoding(3, 5).shape == (3, 5)
        assert np.all(np.abs(res) <= 1.)


if __name__ == "__main__":
    unittest.main()
