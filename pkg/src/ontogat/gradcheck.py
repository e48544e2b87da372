"""Finite-difference verification of the hand-derived gradients.

For each parameter component, the analytic gradient is compared against the
central difference (loss(theta+eps) - loss(theta-eps)) / (2*eps). Relative
error per component is |ga - gn| / max(|ga| + |gn|, 1e-3); the floor keeps
finite-difference truncation noise from dominating near-zero components
while still exposing any real gradient bug. Random cases whose LeakyReLU
pre-activations fall within 1e-3 of the kink are deterministically resampled
(central differences are meaningless across a non-differentiable point).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embeddings import EmbeddingTable
from .gat import GatConfig, SiameseModel
from .neighborhood import SUBGRAPH_KINDS, HomogeneousSubgraph, NeighborhoodGraph

DEFAULT_EPS = 1e-4
DEFAULT_TOLERANCE = 1e-3
_ERROR_FLOOR = 1e-3
_KINK_MARGIN = 1e-3


@dataclass
class GradCheckCase:
    model: SiameseModel
    graph_a: NeighborhoodGraph
    graph_b: NeighborhoodGraph
    label: float
    features: EmbeddingTable
    weight_decay: float


@dataclass
class GradCheckResult:
    seed: int
    block_errors: dict[str, float]
    tolerance: float

    @property
    def max_error(self) -> float:
        return max(self.block_errors.values())

    @property
    def passed(self) -> bool:
        return self.max_error < self.tolerance


def _random_graph(rng: np.random.Generator, centre: str, pool: list[str], n_max: int):
    subgraphs = []
    for kind in SUBGRAPH_KINDS:
        count = int(rng.integers(0, n_max + 1))
        members = (
            tuple(sorted(str(m) for m in rng.choice(pool, size=count, replace=False)))
            if count
            else ()
        )
        subgraphs.append(HomogeneousSubgraph(kind=kind, centre=centre, members=members))
    return NeighborhoodGraph(centre=centre, subgraphs=subgraphs)


def _pre_activations(case: GradCheckCase) -> list[np.ndarray]:
    values = []
    for graph in (case.graph_a, case.graph_b):
        x_c = case.features.lookup(graph.centre)
        for head, sub in zip(case.model.heads, graph.subgraphs):
            if not sub.members:
                continue
            X = np.stack([case.features.lookup(m) for m in sub.members])
            f_out = head.hidden_dim
            s = head.a[:f_out] @ (head.W @ x_c) + (X @ head.W.T) @ head.a[f_out:]
            values.append(s)
    return values


def make_case(
    seed: int,
    max_nodes: int = 8,
    max_feature_dim: int = 16,
    weight_decay: float = 1e-3,
) -> GradCheckCase:
    """Deterministic random toy case, resampled away from LeakyReLU kinks."""
    for attempt in range(64):
        rng = np.random.default_rng((seed, attempt))
        f_in = int(rng.integers(2, max_feature_dim + 1))
        f_out = int(rng.integers(1, 9))
        d_out = int(rng.integers(2, 9))
        config = GatConfig(
            feature_dim=f_in,
            hidden_dim=f_out,
            output_dim=d_out,
            activation=str(rng.choice(["elu", "identity", "sigmoid"])),
        )
        model = SiameseModel.init(config, seed=int(rng.integers(0, 2**31)))

        # node budget: 2 centres + shared neighbor pool, <= max_nodes total
        pool_size = max_nodes - 2
        pool = [f"n{i}" for i in range(pool_size)]
        vectors = {name: rng.normal(size=f_in) for name in ["ca", "cb"] + pool}
        features = EmbeddingTable(f_in, vectors)
        per_side = max(1, pool_size // 3)
        graph_a = _random_graph(rng, "ca", pool, per_side)
        graph_b = _random_graph(rng, "cb", pool, per_side)
        label = float(rng.integers(0, 2))
        case = GradCheckCase(model, graph_a, graph_b, label, features, weight_decay)

        near_kink = any(
            np.any(np.abs(s) < _KINK_MARGIN) for s in _pre_activations(case)
        )
        norms_ok = all(
            float(np.linalg.norm(model.encode(g, features))) > 1e-6
            for g in (graph_a, graph_b)
        )
        if not near_kink and norms_ok:
            return case
    raise RuntimeError(f"could not build a kink-free case for seed {seed}")


def _loss(case: GradCheckCase) -> float:
    return case.model.pair_loss(
        case.graph_a, case.graph_b, case.label, case.features, case.weight_decay
    )


def finite_difference_gradients(
    case: GradCheckCase, eps: float = DEFAULT_EPS
) -> dict[str, np.ndarray]:
    """Central differences of the pair loss w.r.t. every parameter component."""
    grads = {}
    for name, block in case.model.parameters().items():
        grad = np.zeros_like(block)
        flat_param = block.reshape(-1)
        flat_grad = grad.reshape(-1)
        for i in range(flat_param.size):
            original = flat_param[i]
            flat_param[i] = original + eps
            plus = _loss(case)
            flat_param[i] = original - eps
            minus = _loss(case)
            flat_param[i] = original
            flat_grad[i] = (plus - minus) / (2.0 * eps)
        grads[name] = grad
    return grads


def check_case(
    case: GradCheckCase,
    seed: int = 0,
    eps: float = DEFAULT_EPS,
    tolerance: float = DEFAULT_TOLERANCE,
    corrupt_block: str | None = None,
) -> GradCheckResult:
    """Compare analytic vs finite-difference gradients for one case.

    `corrupt_block` is a self-test hook: it perturbs that analytic block so
    the check must fail (negative control).
    """
    _, analytic = case.model.loss_and_gradients(
        case.graph_a, case.graph_b, case.label, case.features, case.weight_decay
    )
    if corrupt_block is not None:
        if corrupt_block not in analytic:
            raise KeyError(f"unknown parameter block {corrupt_block!r}")
        analytic[corrupt_block] = analytic[corrupt_block] + 0.1
    numeric = finite_difference_gradients(case, eps)
    block_errors = {}
    for name, ga in analytic.items():
        gn = numeric[name]
        denom = np.maximum(np.abs(ga) + np.abs(gn), _ERROR_FLOOR)
        block_errors[name] = float(np.max(np.abs(ga - gn) / denom))
    return GradCheckResult(seed=seed, block_errors=block_errors, tolerance=tolerance)


def run_gradcheck(
    seeds: list[int],
    max_nodes: int = 8,
    max_feature_dim: int = 16,
    eps: float = DEFAULT_EPS,
    tolerance: float = DEFAULT_TOLERANCE,
    corrupt_block: str | None = None,
) -> list[GradCheckResult]:
    results = []
    for seed in seeds:
        case = make_case(seed, max_nodes=max_nodes, max_feature_dim=max_feature_dim)
        results.append(
            check_case(case, seed=seed, eps=eps, tolerance=tolerance, corrupt_block=corrupt_block)
        )
    return results
