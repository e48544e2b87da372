"""corpus-prep: batch conversion of ontologies, reference alignments, and
term embeddings into the interchange formats.

Exit codes: 0 success, 2 on parse/IO errors (the offending location is
printed to standard error).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .convert import convert_ontology
from .embed import EmbedError, export_embeddings, read_terms
from .reference import convert_reference
from .triples import ParseFailure

logger = logging.getLogger(__name__)


def _write_json(path: str, payload) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


def cmd_ontology(args: argparse.Namespace) -> int:
    document = convert_ontology(args.input, args.format)
    _write_json(args.output, document)
    print(
        f"{args.output}: {len(document['entities'])} entities, "
        f"{len(document['edges'])} edges"
    )
    return 0


def cmd_reference(args: argparse.Namespace) -> int:
    cells = convert_reference(args.input)
    _write_json(args.output, cells)
    print(f"{args.output}: {len(cells)} cells")
    return 0


def cmd_embed(args: argparse.Namespace) -> int:
    terms = read_terms(args.terms)
    count = export_embeddings(terms, args.output, args.dim, args.encoder, args.seed)
    print(f"{args.output}: dim {args.dim}, {count} rows")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corpus-prep",
        description="Convert OWL/RDF ontologies and reference alignments to interchange JSON",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_onto = sub.add_parser("ontology", help="OWL/RDF file -> interchange JSON")
    p_onto.add_argument("input")
    p_onto.add_argument("output")
    p_onto.add_argument("--format", choices=["rdf-xml", "turtle"],
                        help="override extension-based detection")
    p_onto.set_defaults(func=cmd_ontology)

    p_ref = sub.add_parser("reference", help="Alignment-format RDF -> reference JSON")
    p_ref.add_argument("input")
    p_ref.add_argument("output")
    p_ref.set_defaults(func=cmd_reference)

    p_emb = sub.add_parser("embed", help="id<TAB>text terms -> embedding file")
    p_emb.add_argument("--dim", type=int, required=True)
    p_emb.add_argument("--encoder", default="hash",
                       help="'hash' (default, deterministic) or 'sbert:<model>'")
    p_emb.add_argument("--seed", type=int, default=0, help="seed for the hash encoder")
    p_emb.add_argument("terms")
    p_emb.add_argument("output")
    p_emb.set_defaults(func=cmd_embed)
    return parser


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("CORPUS_PREP_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseFailure, EmbedError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
