__all__ = [
    "Tensor",
    "backward",
    "no_grad",
    "is_grad_enabled",
    "as_tensor",
    "functional",
    "Parameter",
    "Module",
    "Linear",
    "Embedding",
    "LayerNorm",
    "LSTMCell",
    "BiLSTM",
    "MultiHeadAttention",
    "GatedAttentionLayer",
    "TransformerEncoderLayer",
    "lstm_cell",
    "bilstm",
    "multi_head_attention",
    "sinusoidal_encoding",
    "xavier_uniform",
    "Adam",
    "adam_step",
    "init_adam_state",
    "clip_by_global_norm",
    "save_checkpoint",
    "load_checkpoint",
    "check_gradients",
    "numerical_grad",
    "relative_error"
]

from recipe_workflows.tensor.Tensor import Tensor, backward, no_grad, is_grad_enabled, as_tensor
from recipe_workflows.tensor import functional
from recipe_workflows.tensor.Module import Parameter, Module
from recipe_workflows.tensor.layers import Linear, Embedding, LayerNorm, LSTMCell, BiLSTM, MultiHeadAttention, \
    GatedAttentionLayer, TransformerEncoderLayer, lstm_cell, bilstm, multi_head_attention, sinusoidal_encoding, \
    xavier_uniform
from recipe_workflows.tensor.Adam import Adam, adam_step, init_adam_state, clip_by_global_norm
from recipe_workflows.tensor.checkpoint import save_checkpoint, load_checkpoint
from recipe_workflows.tensor.gradient_check import check_gradients, numerical_grad, relative_error
