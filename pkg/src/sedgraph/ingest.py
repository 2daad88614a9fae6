"""Line-delimited interchange format (.sedl) and graph (de)serialization.

A .sedl stream is UTF-8 text, LF line endings, no BOM.  Every non-blank
line is either a comment starting with ``#`` or a single JSON object
with a ``kind`` discriminator:

    {"kind":"lexeme","lang":"bg","lemma":"заблуждавам","pos":"verb"}
    {"kind":"sense","lexeme":"bg:заблуждавам:verb:1","gloss":"мамя"}
    {"kind":"equiv","from":"bg:заблуждавам:verb:1#1","to":"ru:обманывать:verb:1#1","rank":1}

Record order is free across kinds; declarations and references are
resolved in a second pass.  Unknown payload fields are preserved
opaquely and re-emitted on export, so streams produced by newer
writers survive a round trip through this reader.

Exports are canonical: lexemes ordered by (lang, lemma, homonym_index),
then senses, then equivalences by (source, rank), then synonyms,
phrases and citations.  Exporting the same graph twice yields the same
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .model import (
    FatalFormat,
    GraphBuilder,
    LexicalGraph,
    LexiconError,
    ValidationReport,
)

__all__ = [
    "Record", "ParseError", "FatalFormat",
    "parse_record", "iter_records", "build_graph",
    "export_graph", "format_record", "export_lines",
    "dumps", "loads", "load_lexicon", "save_lexicon",
]

RECORD_KINDS = ("lexeme", "sense", "equiv", "synonym", "phrase", "citation")

# (field, type, required) per kind; everything else rides along in `extra`
_SCHEMAS: dict[str, tuple[tuple[str, type, bool], ...]] = {
    "lexeme": (("lang", str, True), ("lemma", str, True), ("pos", str, True),
               ("homonym_index", int, False)),
    "sense": (("lexeme", str, True), ("sense_no", int, False),
              ("gloss", str, False), ("domain_tag", str, False)),
    "equiv": (("from", str, True), ("to", str, True),
              ("rank", int, False), ("note", str, False)),
    "synonym": (("sense", str, True), ("target", str, True)),
    "phrase": (("sense", str, True), ("text", str, True), ("gloss", str, False)),
    "citation": (("sense", str, True), ("quote", str, True), ("source", str, True)),
}


class ParseError(LexiconError):
    """One malformed line.  Carries the 1-based line number."""

    def __init__(self, locus: int, reason: str):
        super().__init__(f"line {locus}: {reason}")
        self.locus = locus
        self.reason = reason


@dataclass(frozen=True)
class Record:
    kind: str
    payload: dict   # schema fields only
    extra: dict     # unrecognized fields, preserved verbatim
    locus: int      # 1-based line number in the source stream


def parse_record(line: str, locus: int) -> Record:
    """Parse one non-comment line into a typed record.

    Validates the kind and the presence and primitive type of every
    schema field; domain rules (dangling ids, rank density, language
    count) are checked later, at build time.
    """
    try:
        data = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(locus, f"invalid JSON: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError(locus, "record is not a JSON object")
    kind = data.pop("kind", None)
    if kind is None:
        raise ParseError(locus, "missing field: kind")
    if kind not in _SCHEMAS:
        raise ParseError(locus, f"unknown kind: {kind!r}")

    payload: dict = {}
    for name, typ, required in _SCHEMAS[kind]:
        if name in data:
            value = data.pop(name)
            # bool is an int subclass; a rank of `true` is still malformed
            if not isinstance(value, typ) or isinstance(value, bool):
                raise ParseError(locus, f"field {name!r} must be {typ.__name__}")
            payload[name] = value
        elif required:
            raise ParseError(locus, f"missing field: {name!r}")
    return Record(kind, payload, data, locus)


def iter_records(lines: Iterable[str],
                 report: ValidationReport | None = None) -> Iterator[Record]:
    """Yield records from raw lines, skipping comments and blanks.

    No malformed line stops the stream: with a report, parse failures
    become findings; without one they raise.
    """
    for locus, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            yield parse_record(line, locus)
        except ParseError as exc:
            if report is None:
                raise
            report.add("parse-error", f"line {locus}", exc.reason)


def build_graph(records: Iterable[Record]) -> tuple[LexicalGraph, ValidationReport]:
    """Resolve a record stream into a graph plus an integrity report.

    Reference errors never abort the build; the offending records are
    dropped and reported.  The single fatal condition is a third
    language tag, which makes the stream uninterpretable as a
    two-language lexicon.
    """
    builder = GraphBuilder()
    for record in records:
        p, locus = record.payload, f"line {record.locus}"
        if record.kind == "lexeme":
            builder.add_lexeme(p["lang"], p["lemma"], p["pos"],
                               p.get("homonym_index", 1), record.extra, locus)
        elif record.kind == "sense":
            builder.add_sense(p["lexeme"], p.get("sense_no"), p.get("gloss", ""),
                              p.get("domain_tag"), record.extra, locus)
        elif record.kind == "equiv":
            builder.add_edge(p["from"], p["to"], p.get("rank"), p.get("note"),
                             record.extra, locus)
        elif record.kind == "synonym":
            builder.add_synonym(p["sense"], p["target"], record.extra, locus)
        elif record.kind == "phrase":
            builder.add_phrase(p["sense"], p["text"], p.get("gloss"),
                               record.extra, locus)
        elif record.kind == "citation":
            builder.add_citation(p["sense"], p["quote"], p["source"],
                                 record.extra, locus)
    return builder.build()


# --- export ---------------------------------------------------------------

def export_graph(graph: LexicalGraph) -> list[Record]:
    """The graph as records in canonical order.

    Order-carrying fields (homonym_index, sense_no, rank) are always
    explicit so that rebuilding a shuffled export still reproduces the
    same graph; empty optional fields are left out.
    """
    records: list[Record] = []

    def emit(kind: str, payload: dict, extra: dict) -> None:
        records.append(Record(kind, payload, extra, len(records) + 1))

    lexemes = list(graph.iter_lexemes())
    for lexeme in lexemes:
        emit("lexeme",
             {"lang": lexeme.lang, "lemma": lexeme.lemma, "pos": lexeme.pos,
              "homonym_index": lexeme.homonym_index},
             lexeme.extra)
    for lexeme in lexemes:
        for sid in lexeme.senses:
            sense = graph.senses[sid]
            payload = {"lexeme": sense.lexeme_id, "sense_no": sense.sense_no}
            if sense.gloss:
                payload["gloss"] = sense.gloss
            if sense.domain_tag is not None:
                payload["domain_tag"] = sense.domain_tag
            emit("sense", payload, sense.extra)
    for edge in graph.iter_edges():
        payload = {"from": edge.source, "to": edge.target, "rank": edge.rank}
        if edge.note is not None:
            payload["note"] = edge.note
        emit("equiv", payload, edge.extra)
    for sense in graph.iter_senses():
        for link in sense.synonyms:
            emit("synonym", {"sense": sense.id, "target": link.target}, link.extra)
    for sense in graph.iter_senses():
        for phrase in sense.phrases:
            payload = {"sense": sense.id, "text": phrase.text}
            if phrase.gloss is not None:
                payload["gloss"] = phrase.gloss
            emit("phrase", payload, phrase.extra)
    for sense in graph.iter_senses():
        for citation in sense.citations:
            emit("citation",
                 {"sense": sense.id, "quote": citation.quote, "source": citation.source},
                 citation.extra)
    return records


def format_record(record: Record) -> str:
    """One record as its canonical JSON line (no trailing newline).

    Field order is fixed: kind, schema fields in schema order, then
    unknown fields sorted by name.
    """
    out: dict = {"kind": record.kind}
    for name, _typ, _req in _SCHEMAS[record.kind]:
        if name in record.payload:
            out[name] = record.payload[name]
    for name in sorted(record.extra):
        out[name] = record.extra[name]
    return json.dumps(out, ensure_ascii=False, separators=(",", ":"))


def export_lines(graph: LexicalGraph) -> Iterator[str]:
    for record in export_graph(graph):
        yield format_record(record)


def dumps(graph: LexicalGraph) -> str:
    """Canonical text of the whole graph, one record per line."""
    return "".join(line + "\n" for line in export_lines(graph))


def loads(text: str) -> tuple[LexicalGraph, ValidationReport]:
    """Parse and build from a string.  Parse findings and build findings
    land in one report, in that order."""
    # LF is the only record separator; splitlines() would also break on
    # U+0085/U+2028/U+2029, which are legal raw inside JSON strings
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    report = ValidationReport()
    graph, build_report = build_graph(iter_records(lines, report))
    report.extend(build_report)
    return graph, report


def load_lexicon(path: str | Path) -> tuple[LexicalGraph, ValidationReport]:
    return loads(Path(path).read_text(encoding="utf-8"))


def save_lexicon(graph: LexicalGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(graph), encoding="utf-8", newline="\n")
