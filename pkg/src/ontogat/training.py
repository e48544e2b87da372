"""Dataset construction, SGD training loop, validation threshold selection.

Positives come from the reference alignment; negatives are oversampled
(seeded, without replacement) from the kind-compatible cross product minus
the positives. Training is plain SGD with L2 weight decay and the run seed
driving both shuffling and sampling, so runs are bit-reproducible.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .embeddings import EmbeddingTable
from .gat import NonFiniteError, SiameseModel
from .matching import score_class_pair, score_property_pair
from .neighborhood import NeighborhoodGraph
from .ontology import ENTITY_KINDS, Ontology

logger = logging.getLogger(__name__)


class TrainingDiverged(RuntimeError):
    pass


@dataclass
class TrainConfig:
    learning_rate: float = 0.01
    epochs: int = 5
    weight_decay: float = 0.001
    batch_size: int = 16
    negative_ratio: int = 5
    seed: int = 0
    validation_fraction: float = 0.2

    def __post_init__(self):
        if self.learning_rate < 0:
            raise ValueError("learning_rate must be >= 0")
        if self.epochs < 1:
            raise ValueError("epochs must be positive")
        if self.weight_decay < 0:
            raise ValueError("weight_decay must be >= 0")
        if self.batch_size < 1:
            raise ValueError("batch_size must be positive")
        if self.negative_ratio < 1:
            raise ValueError("negative_ratio must be positive")
        if not 0.0 < self.validation_fraction < 0.5:
            raise ValueError("validation_fraction must lie in (0, 0.5)")


@dataclass(frozen=True)
class LabeledPair:
    left: str
    right: str
    label: int


def _split_counts(n: int, fraction: float) -> int:
    """Validation share: floor(n * fraction), at least 1 once n >= 2."""
    if n < 2:
        return 0
    return max(1, int(n * fraction))


def build_dataset(
    onto_a: Ontology,
    onto_b: Ontology,
    reference: list[dict],
    cfg: TrainConfig,
) -> tuple[list[LabeledPair], list[LabeledPair]]:
    """Labeled pairs from reference positives plus sampled negatives,
    stratified into train/validation. Deterministic for a fixed seed.
    """
    if not reference:
        raise ValueError("reference alignment is empty")
    rng = np.random.default_rng(cfg.seed)

    positives: list[LabeledPair] = []
    positive_keys = set()
    for cell in reference:
        left, right = cell["entity1"], cell["entity2"]
        if left not in onto_a or right not in onto_b:
            logger.warning("reference cell %s = %s not in ontologies, skipped", left, right)
            continue
        if onto_a.entity(left).kind != onto_b.entity(right).kind:
            logger.warning("reference cell %s = %s mixes kinds, skipped", left, right)
            continue
        if (left, right) in positive_keys:
            continue
        positive_keys.add((left, right))
        positives.append(LabeledPair(left, right, 1))
    if not positives:
        raise ValueError("no usable positives in the reference alignment")

    candidates = [
        (left, right)
        for kind in ENTITY_KINDS
        for left in onto_a.iris(kind)
        for right in onto_b.iris(kind)
        if (left, right) not in positive_keys
    ]
    wanted = cfg.negative_ratio * len(positives)
    if wanted > len(candidates):
        logger.warning(
            "only %d negative candidates available, %d requested; using all",
            len(candidates),
            wanted,
        )
        chosen = list(range(len(candidates)))
    else:
        chosen = sorted(rng.choice(len(candidates), size=wanted, replace=False))
    negatives = [LabeledPair(candidates[i][0], candidates[i][1], 0) for i in chosen]

    def stratified_split(pairs: list[LabeledPair]):
        order = rng.permutation(len(pairs))
        n_val = _split_counts(len(pairs), cfg.validation_fraction)
        val = [pairs[i] for i in order[:n_val]]
        tr = [pairs[i] for i in order[n_val:]]
        return tr, val

    pos_train, pos_val = stratified_split(positives)
    neg_train, neg_val = stratified_split(negatives)
    return pos_train + neg_train, pos_val + neg_val


def train(
    model: SiameseModel,
    pairs: list[LabeledPair],
    cfg: TrainConfig,
    graphs: dict[str, NeighborhoodGraph],
    features: EmbeddingTable,
) -> list[float]:
    """SGD over shuffled mini-batches; returns the per-epoch mean loss trace.

    Only pairs with neighborhood graphs on both sides (class pairs) carry a
    trainable path; others are skipped with a warning. The model is updated
    in place.
    """
    if not pairs:
        raise ValueError("empty training set")
    trainable = [p for p in pairs if p.left in graphs and p.right in graphs]
    skipped = len(pairs) - len(trainable)
    if skipped:
        logger.warning("%d pairs without neighborhood graphs skipped in training", skipped)
    if not trainable:
        raise ValueError("no trainable (class) pairs in the training set")

    trace: list[float] = []
    for epoch in range(cfg.epochs):
        rng = np.random.default_rng((cfg.seed, epoch))
        order = rng.permutation(len(trainable))
        batch_losses: list[float] = []
        for batch_index, start in enumerate(range(0, len(order), cfg.batch_size)):
            batch = [trainable[i] for i in order[start : start + cfg.batch_size]]
            grads = model.zero_gradients()
            data_loss = 0.0
            try:
                for pair in batch:
                    loss, _ = model.loss_and_gradients(
                        graphs[pair.left], graphs[pair.right], float(pair.label), features, 0.0, grads
                    )
                    data_loss += loss
            except NonFiniteError as exc:
                raise TrainingDiverged(
                    f"loss diverged at epoch {epoch}, batch {batch_index}: {exc}"
                ) from exc
            n = len(batch)
            batch_loss = data_loss / n
            for name, block in model.parameters().items():
                grads[name] /= n
                if cfg.weight_decay:
                    batch_loss += cfg.weight_decay * float(np.sum(block * block))
                    grads[name] += 2.0 * cfg.weight_decay * block
            if not np.isfinite(batch_loss):
                raise TrainingDiverged(f"loss diverged at epoch {epoch}, batch {batch_index}")
            model.apply_gradients(grads, cfg.learning_rate)
            batch_losses.append(batch_loss)
        trace.append(float(np.mean(batch_losses)))
    return trace


def write_loss_trace(path: str, trace: list[float]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("epoch,mean_loss\n")
        for epoch, loss in enumerate(trace, start=1):
            fh.write(f"{epoch},{loss!r}\n")


def _validation_scores(
    model: SiameseModel,
    validation: list[LabeledPair],
    graphs: dict[str, NeighborhoodGraph],
    features: EmbeddingTable,
) -> list[tuple[float, int]]:
    scored = []
    for pair in validation:
        if pair.left in graphs and pair.right in graphs:
            score = score_class_pair(model, pair.left, pair.right, graphs, features)
        else:
            score = score_property_pair(pair.left, pair.right, features)
        scored.append((score, pair.label))
    return scored


def threshold_from_scores(scored: list[tuple[float, int]]) -> float:
    """Observed score maximizing F1 (predict aligned iff score >= t), ties
    resolved toward the largest threshold (fewest false positives).
    """
    candidates = sorted({score for score, _ in scored})
    if len(candidates) == 1:
        logger.warning("all validation scores identical (%r)", candidates[0])
        return candidates[0]

    best_threshold, best_f1 = None, -1.0
    for t in candidates:
        tp = sum(1 for s, y in scored if y == 1 and s >= t)
        fp = sum(1 for s, y in scored if y == 0 and s >= t)
        fn = sum(1 for s, y in scored if y == 1 and s < t)
        precision = tp / (tp + fp) if tp + fp else 1.0
        recall = tp / (tp + fn) if tp + fn else 1.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        if f1 > best_f1 or (f1 == best_f1 and t > best_threshold):
            best_threshold, best_f1 = t, f1
    return float(best_threshold)


def select_threshold(
    model: SiameseModel,
    validation: list[LabeledPair],
    graphs: dict[str, NeighborhoodGraph],
    features: EmbeddingTable,
) -> float:
    """Threshold from validation scores: class pairs go through the model,
    property pairs through the embedding cosine, matching what match() does.
    """
    labels = {pair.label for pair in validation}
    if labels != {0, 1}:
        raise ValueError("validation needs at least one positive and one negative pair")
    return threshold_from_scores(_validation_scores(model, validation, graphs, features))
