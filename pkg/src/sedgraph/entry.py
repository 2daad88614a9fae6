"""Dictionary entries: a head with its expanded chain, ready to render.

An entry is assembled at one of three profiles.  minimal is the bare
pair skeleton, standard adds glosses and correspondence classes, full
adds synonyms, phrases, citations and explicit lacuna annotations.
Profiles are strictly monotone: everything a smaller profile shows is
present, byte for byte, in the bigger ones.  Nothing in an entry is
invented at render time; every field comes straight off the graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .chains import ExpansionConfig, expand, linearize
from .classify import PAIR_CLASS_ORDER, classify_pair
from .model import (
    Citation,
    LexicalGraph,
    PhraseUnit,
    UnknownHead,
    nfc,
    parse_lexeme_id,
)

PAIR_GLYPH = "≡"      # joins the two members of a pair
CLOSURE_GLYPH = "↩"   # the chain has bent back onto its own path
LACUNA_GLYPH = "∅"    # the target (or sense) has no equivalents


class Profile(str, Enum):
    MINIMAL = "minimal"
    STANDARD = "standard"
    FULL = "full"

    @property
    def rank(self) -> int:
        return ("minimal", "standard", "full").index(self.value)


@dataclass(frozen=True)
class DecoratedPair:
    """One chain pair plus whatever the profile reveals about it.

    Lemmas and the lacuna flag are carried for rendering at every
    profile; gloss, class and attachment fields are None below the
    profile that introduces them.  Attachments always describe the
    target sense: the source sense was decorated when it first appeared.
    """
    source: str
    target: str
    rank: int
    depth: int
    closure: bool
    lemma_source: str
    lemma_target: str
    target_is_lacuna: bool
    label: str | None = None
    fan: str | None = None
    gloss_source: str | None = None
    gloss_target: str | None = None
    synonyms: tuple[str, ...] | None = None
    phrases: tuple[PhraseUnit, ...] | None = None
    citations: tuple[Citation, ...] | None = None


@dataclass(frozen=True)
class SenseEntry:
    """One head sense with its chain."""
    sense_id: str
    sense_no: int
    lacuna: bool
    gloss: str | None = None
    synonyms: tuple[str, ...] | None = None
    phrases: tuple[PhraseUnit, ...] | None = None
    citations: tuple[Citation, ...] | None = None
    pairs: tuple[DecoratedPair, ...] = ()
    truncated: tuple[str, ...] = ()


@dataclass(frozen=True)
class Entry:
    head: str            # LexemeId; a sense head keeps only that sense below
    lemma: str
    lang: str
    pos: str
    profile: Profile
    config: ExpansionConfig
    senses: tuple[SenseEntry, ...]
    catalog_excerpt: tuple[tuple[str, int], ...]   # (class, count), fixed class order

    @property
    def pairs(self) -> list[DecoratedPair]:
        return [pair for sense in self.senses for pair in sense.pairs]

    @property
    def truncated(self) -> list[str]:
        return [sid for sense in self.senses for sid in sense.truncated]


def assemble(graph: LexicalGraph, head: str,
             config: ExpansionConfig | None = None,
             profile: Profile = Profile.STANDARD) -> Entry:
    """Build the entry for a sense or lexeme head.

    A lexeme head produces one sub-entry per sense, in sense order.  The
    head string is NFC-normalized before resolution; anything that is
    neither a sense nor a lexeme of the graph is an UnknownHead.
    """
    config = config or ExpansionConfig()
    head = nfc(head)
    if head in graph.senses:
        lexeme = graph.sense_lexeme(head)
        sense_ids = [head]
    elif head in graph.lexemes:
        lexeme = graph.lexemes[head]
        sense_ids = list(lexeme.senses)
    else:
        raise UnknownHead(f"head resolves to neither sense nor lexeme: {head}")

    at_standard = profile.rank >= Profile.STANDARD.rank
    at_full = profile.rank >= Profile.FULL.rank

    def lemma_of(sense_id: str) -> str:
        return graph.lexemes[graph.senses[sense_id].lexeme_id].lemma

    def decorate(pair) -> DecoratedPair:
        extras: dict = {}
        if at_standard:
            source_sense = graph.senses[pair.source]
            target_sense = graph.senses[pair.target]
            pc = classify_pair(graph, graph.find_edge(pair.source, pair.target))
            extras["label"] = pc.label.value
            extras["fan"] = pc.fan.value if pc.fan is not None else None
            extras["gloss_source"] = source_sense.gloss or None
            extras["gloss_target"] = target_sense.gloss or None
        if at_full:
            target_sense = graph.senses[pair.target]
            extras["synonyms"] = tuple(s.target for s in target_sense.synonyms)
            extras["phrases"] = target_sense.phrases
            extras["citations"] = target_sense.citations
        return DecoratedPair(
            source=pair.source, target=pair.target, rank=pair.edge_rank,
            depth=pair.depth, closure=pair.closure,
            lemma_source=lemma_of(pair.source), lemma_target=lemma_of(pair.target),
            target_is_lacuna=not pair.closure and not graph.edges_out.get(pair.target, ()),
            **extras)

    sense_entries = []
    for sid in sense_ids:
        sense = graph.senses[sid]
        tree = expand(graph, sid, config)
        pairs = tuple(decorate(p) for p in linearize(tree))
        truncated = tuple(sorted(tree.truncated, key=graph.sense_sort_key))
        fields: dict = {}
        if at_standard:
            fields["gloss"] = sense.gloss
        if at_full:
            fields["synonyms"] = tuple(s.target for s in sense.synonyms)
            fields["phrases"] = sense.phrases
            fields["citations"] = sense.citations
        sense_entries.append(SenseEntry(
            sense_id=sid, sense_no=sense.sense_no,
            lacuna=not graph.edges_out.get(sid, ()),
            pairs=pairs, truncated=truncated, **fields))

    excerpt: tuple[tuple[str, int], ...] = ()
    if at_standard:
        seen: dict[str, int] = {}
        for sense_entry in sense_entries:
            for pair in sense_entry.pairs:
                seen[pair.label] = seen.get(pair.label, 0) + 1
        excerpt = tuple((cls.value, seen[cls.value])
                        for cls in PAIR_CLASS_ORDER if cls.value in seen)

    return Entry(head=lexeme.id, lemma=lexeme.lemma, lang=lexeme.lang,
                 pos=lexeme.pos, profile=profile, config=config,
                 senses=tuple(sense_entries), catalog_excerpt=excerpt)


# --- serialization ---------------------------------------------------------

def entry_payload(entry: Entry) -> dict:
    """Entry as plain JSON-ready data.  Field presence follows the
    profile; key order is fixed so two serializations of the same entry
    are byte-identical."""
    senses = []
    for sense in entry.senses:
        item: dict = {"id": sense.sense_id}
        if sense.gloss:
            item["gloss"] = sense.gloss
        if sense.synonyms is not None:
            item["lacuna"] = sense.lacuna
            item["synonyms"] = list(sense.synonyms)
            item["phrases"] = [_phrase_payload(p) for p in sense.phrases]
            item["citations"] = [_citation_payload(c) for c in sense.citations]
        senses.append(item)

    pairs = []
    for pair in entry.pairs:
        item = {"source": pair.source, "target": pair.target,
                "rank": pair.rank, "depth": pair.depth, "closure": pair.closure}
        if pair.label is not None:
            item["class"] = pair.label
        if pair.gloss_source:
            item["gloss_source"] = pair.gloss_source
        if pair.gloss_target:
            item["gloss_target"] = pair.gloss_target
        if pair.synonyms is not None:
            item["synonyms"] = list(pair.synonyms)
            item["phrases"] = [_phrase_payload(p) for p in pair.phrases]
            item["citations"] = [_citation_payload(c) for c in pair.citations]
        pairs.append(item)

    return {
        "head": entry.head,
        "senses": senses,
        "pairs": pairs,
        "truncated": list(entry.truncated),
        "catalog_excerpt": {label: count for label, count in entry.catalog_excerpt},
    }


def _phrase_payload(phrase: PhraseUnit) -> dict:
    item = {"text": phrase.text}
    if phrase.gloss is not None:
        item["gloss"] = phrase.gloss
    return item


def _citation_payload(citation: Citation) -> dict:
    return {"quote": citation.quote, "source": citation.source}


def entry_json(entry: Entry) -> str:
    return json.dumps(entry_payload(entry), ensure_ascii=False,
                      separators=(",", ":"))


# --- text rendering --------------------------------------------------------

def render_text(entry: Entry) -> str:
    """Deterministic plain-text form of an entry.

    One line per pair; indentation tracks depth, so the entry reads from
    the head outward.  ≡ joins the pair, ↩ marks closures, ∅ marks
    targets with no equivalents of their own.
    """
    lines = [f"{entry.lemma} ({entry.lang}, {entry.pos})"]
    probed = entry.config.max_depth > 0

    for sense in entry.senses:
        marker = f"#{sense.sense_no}"
        if sense.gloss:
            marker += f" · {sense.gloss}"
        if sense.lacuna and probed:
            marker += f" {LACUNA_GLYPH}"
        block: list[str] = []
        if sense.synonyms:
            block.extend(f"  syn: {parse_lexeme_id(t)[1]}" for t in sense.synonyms)
        if sense.phrases:
            block.extend(_phrase_line(p, "  ") for p in sense.phrases)
        if sense.citations:
            block.extend(_citation_line(c, "  ") for c in sense.citations)
        for pair in sense.pairs:
            block.extend(_pair_lines(pair))
        if block or marker != f"#{sense.sense_no}":
            lines.append(marker)
            lines.extend(block)
            if sense.truncated:
                lines.append("  … truncated: " + ", ".join(sense.truncated))

    if entry.catalog_excerpt:
        lines.append("classes: " + " ".join(f"{label}×{count}"
                                            for label, count in entry.catalog_excerpt))
    return "".join(line + "\n" for line in lines)


def _pair_lines(pair: DecoratedPair) -> list[str]:
    indent = "  " * pair.depth
    line = f"{indent}{pair.lemma_source} {PAIR_GLYPH} {pair.lemma_target}"
    if pair.closure:
        line += f" {CLOSURE_GLYPH}"
    if pair.target_is_lacuna:
        line += f" {LACUNA_GLYPH}"
    if pair.label is not None:
        tag = pair.label
        if pair.fan is not None and pair.fan != pair.label:
            tag += "/" + pair.fan
        line += f"  [{tag}]"
    lines = [line]
    if not pair.closure:
        sub = indent + "  "
        if pair.gloss_target:
            lines.append(f"{sub}· {pair.gloss_target}")
        if pair.synonyms:
            lines.extend(f"{sub}syn: {parse_lexeme_id(t)[1]}" for t in pair.synonyms)
        if pair.phrases:
            lines.extend(_phrase_line(p, sub) for p in pair.phrases)
        if pair.citations:
            lines.extend(_citation_line(c, sub) for c in pair.citations)
    return lines


def _phrase_line(phrase: PhraseUnit, indent: str) -> str:
    line = f"{indent}phr: {phrase.text}"
    if phrase.gloss:
        line += f" ({phrase.gloss})"
    return line


def _citation_line(citation: Citation, indent: str) -> str:
    return f"{indent}cit: {citation.quote} [{citation.source}]"
