"""Multi-head graph attention over neighborhood subgraphs, Siamese-shared.

One attention head per subgraph kind (K = 5). For centre feature x_c and
neighbor features x_j of one subgraph:

    e_j   = LeakyReLU(a . [W x_c || W x_j])
    alpha = softmax(e)                      (stable: max subtracted)
    h     = act(sum_j alpha_j W x_j)        (zero vector when the subgraph
                                             is empty)

The five head outputs concatenate, are prepended with the centre feature,
and a linear dense layer down-samples to the output dimension. Both branches
of a pair share every parameter. Gradients are derived by hand for exactly
this architecture (no autograd); tests/check via finite differences live in
gradcheck.py.
"""

from __future__ import annotations

import json
import struct
from dataclasses import asdict, dataclass, field

import numpy as np

from .embeddings import EmbeddingTable
from .neighborhood import SUBGRAPH_KINDS, NeighborhoodGraph

NUM_HEADS = len(SUBGRAPH_KINDS)

_CHECKPOINT_MAGIC = b"OGAT"
_CHECKPOINT_VERSION = 1


class NonFiniteError(ArithmeticError):
    """Raised when a parameter block or intermediate value goes non-finite."""


@dataclass
class GatConfig:
    feature_dim: int = 512
    hidden_dim: int = 64
    output_dim: int = 256
    leaky_slope: float = 0.2
    activation: str = "elu"
    # init std = init_scale / sqrt(fan_in); cosine output is scale-invariant,
    # so this only sets how fast SGD moves parameters relative to their size
    init_scale: float = 0.4

    def __post_init__(self):
        if self.feature_dim < 1 or self.hidden_dim < 1 or self.output_dim < 1:
            raise ValueError("dimensions must be positive")
        if not 0.0 < self.leaky_slope < 1.0:
            raise ValueError("leaky_slope must lie in (0, 1)")
        if self.activation not in _ACTIVATIONS:
            raise ValueError(f"unknown activation {self.activation!r}")
        if self.init_scale <= 0:
            raise ValueError("init_scale must be positive")


def _elu(u):
    return np.where(u > 0, u, np.expm1(u))


def _elu_grad(u):
    return np.where(u > 0, 1.0, np.exp(u))


def _identity(u):
    return u


def _identity_grad(u):
    return np.ones_like(u)


def _sigmoid(u):
    return 1.0 / (1.0 + np.exp(-u))


def _sigmoid_grad(u):
    s = _sigmoid(u)
    return s * (1.0 - s)


_ACTIVATIONS = {
    "elu": (_elu, _elu_grad),
    "identity": (_identity, _identity_grad),
    "sigmoid": (_sigmoid, _sigmoid_grad),
}


@dataclass
class AttentionHead:
    """One (W, a) pair: W is (hidden_dim, feature_dim), a has length 2*hidden_dim."""

    W: np.ndarray
    a: np.ndarray
    leaky_slope: float = 0.2

    @property
    def hidden_dim(self) -> int:
        return self.W.shape[0]


def leaky_relu(s: np.ndarray, slope: float) -> np.ndarray:
    return np.where(s > 0, s, slope * s)


def _leaky_relu_grad(s: np.ndarray, slope: float) -> np.ndarray:
    return np.where(s > 0, 1.0, slope)


def softmax(e: np.ndarray) -> np.ndarray:
    shifted = e - np.max(e)
    exp = np.exp(shifted)
    return exp / np.sum(exp)


def attention_coefficients(
    head: AttentionHead, centre: np.ndarray, neighbors: list[np.ndarray]
) -> np.ndarray:
    """Attention distribution of the centre over its neighbors (sums to 1)."""
    if not neighbors:
        raise ValueError("attention over an empty neighbor list")
    f_out = head.hidden_dim
    z_c = head.W @ centre
    Z = np.stack(neighbors) @ head.W.T
    s = head.a[:f_out] @ z_c + Z @ head.a[f_out:]
    return softmax(leaky_relu(s, head.leaky_slope))


def head_output(
    head: AttentionHead,
    centre: np.ndarray,
    neighbors: list[np.ndarray],
    activation: str = "elu",
) -> np.ndarray:
    """act(sum_j alpha_j W x_j); the zero vector for an empty subgraph."""
    act, _ = _ACTIVATIONS[activation]
    if not neighbors:
        return np.zeros(head.hidden_dim)
    alpha = attention_coefficients(head, centre, neighbors)
    Z = np.stack(neighbors) @ head.W.T
    return act(alpha @ Z)


def cosine_similarity(u: np.ndarray, v: np.ndarray) -> float:
    """u.v / (|u||v|); 0 when either norm is below 1e-12."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu < 1e-12 or nv < 1e-12:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


@dataclass
class _BranchCache:
    """Forward intermediates of one Siamese branch, kept for backprop."""

    x_c: np.ndarray
    inp: np.ndarray
    v: np.ndarray
    heads: list[dict | None] = field(default_factory=list)


class SiameseModel:
    """Shared-parameter encoder: 5 attention heads + linear dense layer."""

    def __init__(
        self,
        config: GatConfig,
        heads: list[AttentionHead],
        w_out: np.ndarray,
        b: np.ndarray,
    ):
        if len(heads) != NUM_HEADS:
            raise ValueError(f"expected {NUM_HEADS} heads, got {len(heads)}")
        self.config = config
        self.heads = heads
        self.w_out = w_out
        self.b = b

    @classmethod
    def init(cls, config: GatConfig, seed: int = 0) -> "SiameseModel":
        """Seeded Gaussian init, scaled by fan-in; bias starts at zero."""
        rng = np.random.default_rng(seed)
        f_in, f_out = config.feature_dim, config.hidden_dim
        heads = []
        for _ in range(NUM_HEADS):
            W = rng.normal(0.0, config.init_scale / np.sqrt(f_in), size=(f_out, f_in))
            a = rng.normal(0.0, config.init_scale / np.sqrt(2 * f_out), size=2 * f_out)
            heads.append(AttentionHead(W=W, a=a, leaky_slope=config.leaky_slope))
        dense_in = f_in + NUM_HEADS * f_out
        w_out = rng.normal(
            0.0, config.init_scale / np.sqrt(dense_in), size=(config.output_dim, dense_in)
        )
        b = np.zeros(config.output_dim)
        return cls(config, heads, w_out, b)

    def parameters(self) -> dict[str, np.ndarray]:
        """Named parameter blocks; arrays are live views, not copies."""
        params: dict[str, np.ndarray] = {}
        for k, head in enumerate(self.heads):
            params[f"head{k}.W"] = head.W
            params[f"head{k}.a"] = head.a
        params["dense.W"] = self.w_out
        params["dense.b"] = self.b
        return params

    def check_finite(self) -> None:
        for name, block in self.parameters().items():
            if not np.all(np.isfinite(block)):
                raise NonFiniteError(f"non-finite values in parameter block {name}")

    def zero_gradients(self) -> dict[str, np.ndarray]:
        return {name: np.zeros_like(block) for name, block in self.parameters().items()}

    # -- forward ---------------------------------------------------------

    def _forward_branch(
        self, graph: NeighborhoodGraph, features: EmbeddingTable
    ) -> _BranchCache:
        cfg = self.config
        act, _ = _ACTIVATIONS[cfg.activation]
        x_c = features.lookup(graph.centre)
        blocks = []
        head_caches: list[dict | None] = []
        for head, sub in zip(self.heads, graph.subgraphs):
            members = sub.members
            if not members:
                blocks.append(np.zeros(cfg.hidden_dim))
                head_caches.append(None)
                continue
            X = np.stack([features.lookup(m) for m in members])
            z_c = head.W @ x_c
            Z = X @ head.W.T
            f_out = cfg.hidden_dim
            s = head.a[:f_out] @ z_c + Z @ head.a[f_out:]
            e = leaky_relu(s, head.leaky_slope)
            alpha = softmax(e)
            u = alpha @ Z
            blocks.append(act(u))
            head_caches.append(
                {"X": X, "z_c": z_c, "Z": Z, "s": s, "alpha": alpha, "u": u}
            )
        inp = np.concatenate([x_c] + blocks)
        v = self.w_out @ inp + self.b
        return _BranchCache(x_c=x_c, inp=inp, v=v, heads=head_caches)

    def gat_forward(
        self, graph: NeighborhoodGraph, features: EmbeddingTable
    ) -> np.ndarray:
        """Concatenated head outputs (length 5 * hidden_dim), kind order fixed."""
        cache = self._forward_branch(graph, features)
        return cache.inp[self.config.feature_dim :]

    def encode(self, graph: NeighborhoodGraph, features: EmbeddingTable) -> np.ndarray:
        """Dense down-sampling of [centre_feature || gat_forward]; linear head."""
        return self._forward_branch(graph, features).v

    def score(
        self,
        graph_a: NeighborhoodGraph,
        graph_b: NeighborhoodGraph,
        features: EmbeddingTable,
    ) -> float:
        return cosine_similarity(self.encode(graph_a, features), self.encode(graph_b, features))

    def pair_loss(
        self,
        graph_a: NeighborhoodGraph,
        graph_b: NeighborhoodGraph,
        label: float,
        features: EmbeddingTable,
        weight_decay: float = 0.0,
    ) -> float:
        """Forward-only loss (no gradients); what loss_and_gradients returns."""
        c = self.score(graph_a, graph_b, features)
        loss = (c - label) ** 2
        if weight_decay:
            for block in self.parameters().values():
                loss += weight_decay * float(np.sum(block * block))
        return float(loss)

    # -- backward --------------------------------------------------------

    def _backward_branch(
        self, cache: _BranchCache, dv: np.ndarray, grads: dict[str, np.ndarray]
    ) -> None:
        cfg = self.config
        _, act_grad = _ACTIVATIONS[cfg.activation]
        grads["dense.W"] += np.outer(dv, cache.inp)
        grads["dense.b"] += dv
        dinp = self.w_out.T @ dv
        dg = dinp[cfg.feature_dim :]
        f_out = cfg.hidden_dim
        for k, (head, hc) in enumerate(zip(self.heads, cache.heads)):
            if hc is None:
                continue
            dh = dg[k * f_out : (k + 1) * f_out]
            du = dh * act_grad(hc["u"])
            alpha, Z, s = hc["alpha"], hc["Z"], hc["s"]
            dalpha = Z @ du
            dZ = np.outer(alpha, du)
            de = alpha * (dalpha - float(alpha @ dalpha))
            ds = de * _leaky_relu_grad(s, head.leaky_slope)
            ds_sum = float(np.sum(ds))
            grads[f"head{k}.a"][:f_out] += ds_sum * hc["z_c"]
            grads[f"head{k}.a"][f_out:] += Z.T @ ds
            dz_c = ds_sum * head.a[:f_out]
            dZ += np.outer(ds, head.a[f_out:])
            grads[f"head{k}.W"] += np.outer(dz_c, cache.x_c) + dZ.T @ hc["X"]

    def loss_and_gradients(
        self,
        graph_a: NeighborhoodGraph,
        graph_b: NeighborhoodGraph,
        label: float,
        features: EmbeddingTable,
        weight_decay: float = 0.0,
        grads: dict[str, np.ndarray] | None = None,
    ) -> tuple[float, dict[str, np.ndarray]]:
        """Squared error of the cosine against the label, plus L2 decay.

        Returns (loss, gradients); gradients share the parameter block names
        and shapes. Pass `grads` to accumulate into an existing dict.
        """
        self.check_finite()
        if grads is None:
            grads = self.zero_gradients()

        cache_a = self._forward_branch(graph_a, features)
        cache_b = self._forward_branch(graph_b, features)
        v1, v2 = cache_a.v, cache_b.v
        if not (np.all(np.isfinite(v1)) and np.all(np.isfinite(v2))):
            raise NonFiniteError("non-finite encoding in dense output block")

        n1 = float(np.linalg.norm(v1))
        n2 = float(np.linalg.norm(v2))
        if n1 < 1e-12 or n2 < 1e-12:
            c = 0.0
            dv1 = np.zeros_like(v1)
            dv2 = np.zeros_like(v2)
        else:
            c = float(np.dot(v1, v2) / (n1 * n2))
            dc = 2.0 * (c - label)
            dv1 = dc * (v2 / (n1 * n2) - c * v1 / (n1 * n1))
            dv2 = dc * (v1 / (n1 * n2) - c * v2 / (n2 * n2))

        loss = (c - label) ** 2
        self._backward_branch(cache_a, dv1, grads)
        self._backward_branch(cache_b, dv2, grads)

        if weight_decay:
            for name, block in self.parameters().items():
                loss += weight_decay * float(np.sum(block * block))
                grads[name] += 2.0 * weight_decay * block

        if not np.isfinite(loss):
            raise NonFiniteError("non-finite loss value")
        return float(loss), grads

    def apply_gradients(self, grads: dict[str, np.ndarray], learning_rate: float) -> None:
        for name, block in self.parameters().items():
            block -= learning_rate * grads[name]

    # -- checkpoint ------------------------------------------------------

    def save(self, path: str) -> None:
        """Versioned little-endian binary; byte-identical for equal models.

        Layout: magic "OGAT", u32 version, u32-length-prefixed config JSON,
        u32 tensor count, then per tensor: u32-length-prefixed name, u32 ndim,
        u32 dims, raw float64 row-major data.
        """
        with open(path, "wb") as fh:
            fh.write(_CHECKPOINT_MAGIC)
            fh.write(struct.pack("<I", _CHECKPOINT_VERSION))
            config_bytes = json.dumps(asdict(self.config), sort_keys=True).encode("utf-8")
            fh.write(struct.pack("<I", len(config_bytes)))
            fh.write(config_bytes)
            params = self.parameters()
            fh.write(struct.pack("<I", len(params)))
            for name, block in params.items():
                name_bytes = name.encode("utf-8")
                fh.write(struct.pack("<I", len(name_bytes)))
                fh.write(name_bytes)
                fh.write(struct.pack("<I", block.ndim))
                fh.write(struct.pack(f"<{block.ndim}I", *block.shape))
                fh.write(np.ascontiguousarray(block, dtype="<f8").tobytes())

    @classmethod
    def load(cls, path: str) -> "SiameseModel":
        with open(path, "rb") as fh:
            if fh.read(4) != _CHECKPOINT_MAGIC:
                raise ValueError(f"{path}: not an ontogat checkpoint")
            (version,) = struct.unpack("<I", fh.read(4))
            if version != _CHECKPOINT_VERSION:
                raise ValueError(f"{path}: unsupported checkpoint version {version}")
            (config_len,) = struct.unpack("<I", fh.read(4))
            config = GatConfig(**json.loads(fh.read(config_len).decode("utf-8")))
            (n_tensors,) = struct.unpack("<I", fh.read(4))
            tensors: dict[str, np.ndarray] = {}
            for _ in range(n_tensors):
                (name_len,) = struct.unpack("<I", fh.read(4))
                name = fh.read(name_len).decode("utf-8")
                (ndim,) = struct.unpack("<I", fh.read(4))
                shape = struct.unpack(f"<{ndim}I", fh.read(4 * ndim))
                count = int(np.prod(shape)) if shape else 1
                data = np.frombuffer(fh.read(8 * count), dtype="<f8").astype(np.float64)
                tensors[name] = data.reshape(shape)
        heads = [
            AttentionHead(
                W=tensors[f"head{k}.W"],
                a=tensors[f"head{k}.a"],
                leaky_slope=config.leaky_slope,
            )
            for k in range(NUM_HEADS)
        ]
        model = cls(config, heads, tensors["dense.W"], tensors["dense.b"])
        model.check_finite()
        return model
