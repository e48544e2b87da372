"""Command line entry point: train, match, eval, gradcheck.

Exit codes: 0 success, 1 verification failure, 2 IO/config error. The
ONTOGAT_LOG environment variable (debug/info/warning/error) controls
verbosity. All randomness flows from the run config seed, so reruns
produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import alignio, metrics
from .embeddings import EmbeddingFileError
from .gat import NonFiniteError, SiameseModel
from .gradcheck import run_gradcheck
from .matching import MatchError, match
from .ontology import OntologyError, read_ontology
from .pipeline import (
    ConfigError,
    RunConfig,
    check_dimensions,
    load_pair,
    read_threshold,
    write_threshold,
)
from .training import TrainingDiverged, build_dataset, select_threshold, train, write_loss_trace

logger = logging.getLogger(__name__)

_INPUT_ERRORS = (
    ConfigError,
    OntologyError,
    EmbeddingFileError,
    MatchError,
    OSError,
    ValueError,
)


def _setup_logging() -> None:
    level = os.environ.get("ONTOGAT_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)


def cmd_train(args: argparse.Namespace) -> int:
    config = RunConfig.from_file(args.config)
    train_config = config.train_config()
    config.require_inputs(
        ["ontology_a", "ontology_b", "embeddings_a", "embeddings_b", "reference"]
    )
    pair = load_pair(config)
    reference = alignio.read_reference_json(config.reference)
    train_set, validation = build_dataset(pair.onto_a, pair.onto_b, reference, train_config)
    model = SiameseModel.init(config.gat_config(pair.features.dim), seed=config.seed)
    trace = train(model, train_set, train_config, pair.graphs, pair.features)
    threshold = select_threshold(model, validation, pair.graphs, pair.features)
    model.save(config.model)
    write_threshold(config.threshold_file, threshold)
    write_loss_trace(config.loss_csv, trace)
    print(
        f"trained {train_config.epochs} epochs on {len(train_set)} pairs; "
        f"loss {trace[0]:.4f} -> {trace[-1]:.4f}; threshold {threshold:.4f}"
    )
    print(f"checkpoint: {config.model}")
    return 0


def cmd_match(args: argparse.Namespace) -> int:
    config = RunConfig.from_file(args.config)
    config.require_inputs(["ontology_a", "ontology_b", "embeddings_a", "embeddings_b", "model"])
    if args.threshold is None:
        config.require_inputs(["threshold_file"])
        threshold = read_threshold(config.threshold_file)
    else:
        threshold = args.threshold
    pair = load_pair(config)
    model = SiameseModel.load(config.model)
    check_dimensions(model, pair.features)
    alignment = match(
        pair.onto_a, pair.onto_b, model, threshold, pair.features, graphs=pair.graphs
    )
    alignio.write_tsv(config.alignment_tsv, alignment)
    alignio.write_rdf(config.alignment_rdf, alignment, pair.onto_a.iri, pair.onto_b.iri)
    print(f"{len(alignment)} cells at threshold {threshold:.4f}")
    print(f"wrote {config.alignment_tsv} and {config.alignment_rdf}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    system = alignio.load_alignment(args.system)
    reference = alignio.load_alignment(args.reference)
    onto_a = read_ontology(args.ontologies[0])
    onto_b = read_ontology(args.ontologies[1])
    report = metrics.evaluate(system, reference, args.variant, onto_a, onto_b)
    case = os.path.splitext(os.path.basename(args.system))[0]
    for line in metrics.report_rows([(case, report)]):
        print(line)
    return 0


def cmd_gradcheck(args: argparse.Namespace) -> int:
    seeds = list(range(args.seed, args.seed + args.seeds))
    results = run_gradcheck(
        seeds,
        max_nodes=args.max_nodes,
        max_feature_dim=args.max_feature_dim,
        corrupt_block=args.corrupt,
    )
    worst: dict[str, float] = {}
    for result in results:
        for block, err in result.block_errors.items():
            worst[block] = max(worst.get(block, 0.0), err)
        status = "pass" if result.passed else "FAIL"
        print(f"seed {result.seed}: {status} (max rel err {result.max_error:.3e})")
    print("max relative error per parameter block:")
    for block, err in worst.items():
        print(f"  {block}: {err:.3e}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ontogat",
        description="Ontology alignment with graph attention over neighborhood subgraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a model and select the threshold")
    p_train.add_argument("--config", required=True, help="run config JSON")
    p_train.set_defaults(func=cmd_train)

    p_match = sub.add_parser("match", help="align two ontologies with a trained model")
    p_match.add_argument("--config", required=True, help="run config JSON")
    p_match.add_argument("--threshold", type=float, help="override the stored threshold")
    p_match.set_defaults(func=cmd_match)

    p_eval = sub.add_parser("eval", help="score a system alignment against a reference")
    p_eval.add_argument("--system", required=True)
    p_eval.add_argument("--reference", required=True)
    p_eval.add_argument("--variant", required=True, choices=list(metrics.VARIANTS))
    p_eval.add_argument(
        "--ontologies", nargs=2, required=True, metavar=("A_JSON", "B_JSON")
    )
    p_eval.set_defaults(func=cmd_eval)

    p_grad = sub.add_parser("gradcheck", help="verify gradients against finite differences")
    p_grad.add_argument("--seed", type=int, default=0, help="first seed")
    p_grad.add_argument("--seeds", type=int, default=1, help="number of seeds")
    p_grad.add_argument("--max-nodes", type=int, default=8)
    p_grad.add_argument("--max-feature-dim", type=int, default=16)
    p_grad.add_argument("--corrupt", help="corrupt this block first (self-test)")
    p_grad.set_defaults(func=cmd_gradcheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TrainingDiverged, NonFiniteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
