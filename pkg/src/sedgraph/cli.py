"""Command line front end.

Exit codes are uniform across subcommands: 0 for clean runs, 1 for
domain findings (validation issues, unknown head, unknown language),
2 for I/O problems, uninterpretable input, or an occupied port.  Data
goes to stdout, diagnostics to stderr, and repeated runs over the same
input produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ingest
from .chains import ExpansionConfig
from .classify import PAIR_CLASS_ORDER, catalog
from .entry import PAIR_GLYPH, Profile, assemble, render_text
from .model import UnknownHead, UnknownLanguage, lookup_lemma, nfc


def _load(path: str):
    """Read and build a lexicon, or exit 2 on anything unreadable."""
    try:
        return ingest.load_lexicon(path)
    except OSError as exc:
        print(f"cannot read {path}: {exc.strerror or exc}", file=sys.stderr)
        raise SystemExit(2)
    except ingest.FatalFormat as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def cmd_build(args: argparse.Namespace) -> int:
    graph, report = _load(args.lexicon)
    for issue in report:
        print(str(issue), file=sys.stderr)
    if args.output:
        try:
            ingest.save_lexicon(graph, args.output)
        except OSError as exc:
            print(f"cannot write {args.output}: {exc.strerror or exc}", file=sys.stderr)
            return 2
    print(f"{graph.lexeme_count} lexemes, {graph.sense_count} senses, "
          f"{graph.edge_count} edges", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_entry(args: argparse.Namespace) -> int:
    graph, report = _load(args.lexicon)
    for issue in report:
        print(f"warning: {issue}", file=sys.stderr)
    try:
        config = ExpansionConfig(max_depth=args.depth, max_branch=args.branch)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    try:
        entry = assemble(graph, args.head, config, Profile(args.profile))
    except UnknownHead:
        print(f"unknown head: {args.head}", file=sys.stderr)
        return 1
    sys.stdout.write(render_text(entry))
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    graph, report = _load(args.lexicon)
    for issue in report:
        print(f"warning: {issue}", file=sys.stderr)
    cat = catalog(graph)
    if args.format == "text":
        print(f"pairs: {cat.total_pairs}")
        for cls in PAIR_CLASS_ORDER:
            print(f"  {cls.value:<22} {cat.counts[cls]}")
        print("lacunae:")
        for lang in sorted(cat.lacunae):
            listed = ", ".join(cat.lacunae[lang]) or "-"
            print(f"  {lang}: {listed}")
        print("exemplars:")
        for cls in PAIR_CLASS_ORDER:
            for source, target in cat.exemplars[cls]:
                print(f"  {cls.value}: {source} {PAIR_GLYPH} {target}")
    else:
        def emit(obj: dict) -> None:
            print(json.dumps(obj, ensure_ascii=False, separators=(",", ":")))
        for cls in PAIR_CLASS_ORDER:
            emit({"kind": "class_count", "class": cls.value, "count": cat.counts[cls]})
        for lang in sorted(cat.lacunae):
            for sense_id in cat.lacunae[lang]:
                emit({"kind": "lacuna", "lang": lang, "sense": sense_id})
        for cls in PAIR_CLASS_ORDER:
            for source, target in cat.exemplars[cls]:
                emit({"kind": "exemplar", "class": cls.value,
                      "from": source, "to": target})
    if args.figure:
        from .figures import render_catalog_figure
        try:
            render_catalog_figure(cat, args.figure)
        except OSError as exc:
            print(f"cannot write {args.figure}: {exc.strerror or exc}", file=sys.stderr)
            return 2
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    graph, report = _load(args.lexicon)
    for issue in report:
        print(f"warning: {issue}", file=sys.stderr)
    prefix = nfc(args.q)
    if not prefix:
        return 0
    try:
        lookup_lemma(graph, args.lang, prefix)   # language check only
    except UnknownLanguage as exc:
        print(str(exc), file=sys.stderr)
        return 1
    index = graph.lemma_index.get(args.lang, {})
    for lemma in sorted(index):
        if lemma.startswith(prefix):
            for lexeme_id in index[lemma]:
                lexeme = graph.lexemes[lexeme_id]
                print(f"{lexeme.id}\t{lexeme.lemma}\t{lexeme.pos}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import run_server
    return run_server(args.lexicon, port=args.port, bind=args.bind,
                      feedback_path=args.feedback_log,
                      cors_permissive=args.cors_permissive)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sedgraph",
        description="comparative bilingual dictionary engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="validate a lexicon, optionally re-export it")
    p.add_argument("lexicon", help="input .sedl file")
    p.add_argument("-o", "--output", help="write the canonical export here")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("entry", help="render one dictionary entry as text")
    p.add_argument("lexicon", help="input .sedl file")
    p.add_argument("--head", required=True, help="sense or lexeme id")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--branch", type=int, default=8)
    p.add_argument("--profile", choices=[p.value for p in Profile],
                   default=Profile.STANDARD.value)
    p.set_defaults(func=cmd_entry)

    p = sub.add_parser("catalog", help="correspondence classes and lacunae")
    p.add_argument("lexicon", help="input .sedl file")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.add_argument("--figure", help="also render the distribution to this image file")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("search", help="prefix search over lemmas")
    p.add_argument("lexicon", help="input .sedl file")
    p.add_argument("--lang", required=True)
    p.add_argument("--q", required=True, help="lemma prefix")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("serve", help="serve the lexicon over HTTP")
    p.add_argument("lexicon", nargs="?",
                   help="input .sedl file (SEDGRAPH_LEXICON overrides)")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--feedback-log", help="feedback file (default: beside the lexicon)")
    p.add_argument("--cors-permissive", action="store_true",
                   help="allow cross-origin POST (development UI)")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    # output must not depend on the caller's locale
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
