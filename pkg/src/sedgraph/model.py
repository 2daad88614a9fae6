"""Core model: two-language lexical graphs of sense-level equivalences.

A graph holds lexemes for exactly two languages, their numbered senses,
and directed cross-language equivalence edges ordered by rank.  Graphs
are immutable once built; construction goes through :class:`GraphBuilder`
which resolves references in a second pass and reports every integrity
problem instead of failing on the first one.
"""

from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass, field, replace
from typing import Iterator

POS_TAGS = ("verb", "noun", "adj", "adv", "phrase", "other")

_LANG_RE = re.compile(r"^[a-z]{2}$")


class LexiconError(Exception):
    """Base class for all domain errors raised by this package."""


class UnknownLanguage(LexiconError):
    """Language tag is not one of the graph's two languages."""


class UnknownSense(LexiconError):
    """Sense identifier does not resolve in the graph."""


class UnknownEdge(LexiconError):
    """No equivalence edge exists between the given senses."""


class UnknownHead(LexiconError):
    """Entry head resolves to neither a sense nor a lexeme."""


class FatalFormat(LexiconError):
    """Input cannot be interpreted at all (more than two languages)."""


def nfc(text: str) -> str:
    """NFC-normalize a string.  All lemma comparison is codepoint-exact
    after this normalization; there is no case folding."""
    return unicodedata.normalize("NFC", text)


def is_language_tag(tag: str) -> bool:
    return isinstance(tag, str) and bool(_LANG_RE.match(tag))


# --- identifiers ---------------------------------------------------------
#
# LexemeId:  "<lang>:<lemma>:<pos>:<homonym_index>"
# SenseId:   "<LexemeId>#<sense_no>"
#
# Lemmas may contain spaces (multiword units are ordinary lexemes with
# pos "phrase") and are stored NFC-normalized.

def make_lexeme_id(lang: str, lemma: str, pos: str, homonym_index: int = 1) -> str:
    return f"{lang}:{lemma}:{pos}:{homonym_index}"


def make_sense_id(lexeme_id: str, sense_no: int) -> str:
    return f"{lexeme_id}#{sense_no}"


def parse_lexeme_id(lexeme_id: str) -> tuple[str, str, str, int]:
    """Split a LexemeId into (lang, lemma, pos, homonym_index).

    The lemma is the middle of the string, so it may itself contain
    colons; lang and the two trailing fields cannot.
    """
    parts = lexeme_id.split(":")
    if len(parts) < 4:
        raise ValueError(f"not a lexeme id: {lexeme_id!r}")
    lang, pos, index = parts[0], parts[-2], parts[-1]
    lemma = ":".join(parts[1:-2])
    if not is_language_tag(lang):
        raise ValueError(f"bad language tag in lexeme id: {lexeme_id!r}")
    if not index.isdigit() or int(index) < 1:
        raise ValueError(f"bad homonym index in lexeme id: {lexeme_id!r}")
    if not lemma:
        raise ValueError(f"empty lemma in lexeme id: {lexeme_id!r}")
    return lang, lemma, pos, int(index)


def parse_sense_id(sense_id: str) -> tuple[str, int]:
    """Split a SenseId into (lexeme_id, sense_no)."""
    base, sep, number = sense_id.rpartition("#")
    if not sep or not number.isdigit() or int(number) < 1:
        raise ValueError(f"not a sense id: {sense_id!r}")
    parse_lexeme_id(base)
    return base, int(number)


# --- data types ----------------------------------------------------------

@dataclass(frozen=True)
class SynonymLink:
    """Same-language pointer from a sense to a related lexeme."""
    target: str                               # LexemeId
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class PhraseUnit:
    """Set phrase or periphrasis attached to a sense."""
    text: str
    gloss: str | None = None
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Citation:
    """Corpus quotation attached to a sense."""
    quote: str
    source: str
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Sense:
    id: str                                   # SenseId
    lexeme_id: str
    sense_no: int
    gloss: str = ""                           # may be empty only for monosemous lexemes
    domain_tag: str | None = None
    synonyms: tuple[SynonymLink, ...] = ()
    phrases: tuple[PhraseUnit, ...] = ()
    citations: tuple[Citation, ...] = ()
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Lexeme:
    id: str                                   # LexemeId
    lang: str
    lemma: str
    pos: str
    homonym_index: int = 1
    senses: tuple[str, ...] = ()              # SenseIds in sense_no order
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class EquivalenceEdge:
    """Directed claim that `target` renders `source` in the other language.

    Reciprocity is never assumed: the reverse claim is a separate edge.
    Ranks order the equivalents of one source sense from primary to
    peripheral and are dense (1..k) within that sense.
    """
    source: str                               # SenseId
    target: str                               # SenseId, other language
    rank: int
    note: str | None = None
    extra: dict = field(default_factory=dict)


def lexeme_sort_key(lexeme: Lexeme) -> tuple:
    """Canonical lexeme order: (lang, lemma, homonym_index, pos).

    Lemma collation is plain codepoint order of the NFC form, which keeps
    every ordering in the package locale-independent.
    """
    return (lexeme.lang, lexeme.lemma, lexeme.homonym_index, lexeme.pos)


# --- validation report ---------------------------------------------------

@dataclass(frozen=True)
class ValidationIssue:
    code: str
    locus: str      # "line N" for stream findings, an identifier otherwise
    message: str

    def __str__(self) -> str:
        return f"{self.locus}: {self.code}: {self.message}"


@dataclass
class ValidationReport:
    """Ordered list of integrity findings.  Empty report == well-formed."""
    issues: list[ValidationIssue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, code: str, locus: str, message: str) -> None:
        self.issues.append(ValidationIssue(code, locus, message))

    def extend(self, other: "ValidationReport") -> None:
        self.issues.extend(other.issues)

    def __len__(self) -> int:
        return len(self.issues)

    def __iter__(self) -> Iterator[ValidationIssue]:
        return iter(self.issues)


# --- the graph -----------------------------------------------------------

@dataclass(frozen=True)
class LexicalGraph:
    """Immutable lexical graph over at most two languages.

    `edges_out` maps every sense to its equivalents in rank order;
    `edges_in` is the transpose, ordered by (source lemma, rank).  Both
    indexes cover every sense, with empty tuples for isolated ones.
    """
    langs: tuple[str, ...] = ()
    lexemes: dict[str, Lexeme] = field(default_factory=dict)
    senses: dict[str, Sense] = field(default_factory=dict)
    edges_out: dict[str, tuple[EquivalenceEdge, ...]] = field(default_factory=dict)
    edges_in: dict[str, tuple[EquivalenceEdge, ...]] = field(default_factory=dict)
    lemma_index: dict[str, dict[str, tuple[str, ...]]] = field(default_factory=dict)

    @classmethod
    def assemble(cls,
                 lexemes: dict[str, Lexeme],
                 senses: dict[str, Sense],
                 edges: list[EquivalenceEdge]) -> "LexicalGraph":
        """Build the derived indexes from primary content.

        Assumes referential integrity; callers that cannot guarantee it
        should go through :class:`GraphBuilder` instead.
        """
        langs = tuple(sorted({lx.lang for lx in lexemes.values()}))

        edges_out: dict[str, list[EquivalenceEdge]] = {sid: [] for sid in senses}
        edges_in: dict[str, list[EquivalenceEdge]] = {sid: [] for sid in senses}
        for edge in edges:
            edges_out[edge.source].append(edge)
            edges_in[edge.target].append(edge)
        for sid, out in edges_out.items():
            out.sort(key=lambda e: (e.rank, e.target))
        for sid, incoming in edges_in.items():
            incoming.sort(key=lambda e: (lexemes[senses[e.source].lexeme_id].lemma,
                                         e.rank, e.source))

        lemma_index: dict[str, dict[str, list[str]]] = {lang: {} for lang in langs}
        for lexeme in sorted(lexemes.values(), key=lexeme_sort_key):
            lemma_index[lexeme.lang].setdefault(lexeme.lemma, []).append(lexeme.id)

        return cls(
            langs=langs,
            lexemes=dict(lexemes),
            senses=dict(senses),
            edges_out={sid: tuple(v) for sid, v in edges_out.items()},
            edges_in={sid: tuple(v) for sid, v in edges_in.items()},
            lemma_index={lang: {lemma: tuple(ids) for lemma, ids in by_lemma.items()}
                         for lang, by_lemma in lemma_index.items()},
        )

    # small conveniences used throughout; they keep KeyError out of callers
    def lexeme(self, lexeme_id: str) -> Lexeme:
        try:
            return self.lexemes[lexeme_id]
        except KeyError:
            raise UnknownHead(f"unknown lexeme: {lexeme_id}") from None

    def sense(self, sense_id: str) -> Sense:
        try:
            return self.senses[sense_id]
        except KeyError:
            raise UnknownSense(f"unknown sense: {sense_id}") from None

    def sense_lexeme(self, sense_id: str) -> Lexeme:
        return self.lexemes[self.sense(sense_id).lexeme_id]

    def find_edge(self, source: str, target: str) -> EquivalenceEdge | None:
        for edge in self.edges_out.get(source, ()):
            if edge.target == target:
                return edge
        return None

    def sense_sort_key(self, sense_id: str) -> tuple:
        sense = self.senses[sense_id]
        return lexeme_sort_key(self.lexemes[sense.lexeme_id]) + (sense.sense_no,)

    def iter_lexemes(self) -> Iterator[Lexeme]:
        return iter(sorted(self.lexemes.values(), key=lexeme_sort_key))

    def iter_senses(self) -> Iterator[Sense]:
        for lexeme in self.iter_lexemes():
            for sid in lexeme.senses:
                yield self.senses[sid]

    def iter_edges(self) -> Iterator[EquivalenceEdge]:
        """All edges in canonical order: (source sense, rank)."""
        for sense in self.iter_senses():
            yield from self.edges_out.get(sense.id, ())

    @property
    def lexeme_count(self) -> int:
        return len(self.lexemes)

    @property
    def sense_count(self) -> int:
        return len(self.senses)

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.edges_out.values())


# --- operations ----------------------------------------------------------

def lookup_lemma(graph: LexicalGraph, lang: str, lemma: str) -> list[Lexeme]:
    """All lexemes of `lang` whose lemma equals `lemma` after NFC
    normalization, in homonym_index order.  Missing lemma is just an
    empty list; a language the graph does not hold is an error."""
    if lang not in graph.langs:
        raise UnknownLanguage(f"unknown language: {lang!r}")
    ids = graph.lemma_index[lang].get(nfc(lemma), ())
    return [graph.lexemes[i] for i in ids]


def out_equivalents(graph: LexicalGraph, sense_id: str) -> list[EquivalenceEdge]:
    """Equivalents of a sense in ascending rank order.  An empty list is
    meaningful: the sense is lacunar."""
    graph.sense(sense_id)
    return list(graph.edges_out.get(sense_id, ()))


def in_equivalents(graph: LexicalGraph, sense_id: str) -> list[EquivalenceEdge]:
    """Edges that target the sense, ordered by source lemma, then rank."""
    graph.sense(sense_id)
    return list(graph.edges_in.get(sense_id, ()))


def validate_graph(graph: LexicalGraph) -> ValidationReport:
    """Check every graph invariant and report all violations with a locus.

    The builder never produces a graph that fails these checks, but
    directly constructed graphs (and future readers of other formats)
    get the same scrutiny.
    """
    report = ValidationReport()

    if len(graph.langs) > 2:
        report.add("too-many-languages", ",".join(graph.langs),
                   "a graph holds at most two languages")
    for lang in graph.langs:
        if not is_language_tag(lang):
            report.add("bad-language-tag", lang,
                       "language tags are two ASCII lowercase letters")

    for lexeme_id, lexeme in sorted(graph.lexemes.items()):
        locus = lexeme_id
        if lexeme.id != lexeme_id:
            report.add("id-mismatch", locus, f"keyed {lexeme_id} but id is {lexeme.id}")
        if lexeme.pos not in POS_TAGS:
            report.add("bad-pos", locus, f"pos {lexeme.pos!r} not in {'/'.join(POS_TAGS)}")
        if not lexeme.lemma:
            report.add("empty-text", locus, "lemma must be non-empty")
        elif not unicodedata.is_normalized("NFC", lexeme.lemma):
            report.add("nfc-violation", locus, "lemma is not NFC-normalized")
        if lexeme.homonym_index < 1:
            report.add("bad-index", locus, "homonym_index starts at 1")
        if not lexeme.senses:
            report.add("no-senses", locus, "a lexeme carries at least one sense")
        for sid in lexeme.senses:
            sense = graph.senses.get(sid)
            if sense is None or sense.lexeme_id != lexeme_id:
                report.add("dangling-reference", locus, f"sense list names {sid}")
        if len(lexeme.senses) > 1:
            for sid in lexeme.senses:
                sense = graph.senses.get(sid)
                if sense is not None and not sense.gloss:
                    report.add("missing-gloss", sid,
                               "senses of a polysemous lexeme need glosses")

    for sense_id, sense in sorted(graph.senses.items()):
        locus = sense_id
        if sense.id != sense_id:
            report.add("id-mismatch", locus, f"keyed {sense_id} but id is {sense.id}")
        if sense.sense_no < 1:
            report.add("bad-index", locus, "sense_no starts at 1")
        owner = graph.lexemes.get(sense.lexeme_id)
        if owner is None:
            report.add("dangling-reference", locus, f"owner lexeme {sense.lexeme_id} missing")
        elif sense_id not in owner.senses:
            report.add("dangling-reference", locus, "sense not listed by its lexeme")
        for link in sense.synonyms:
            target = graph.lexemes.get(link.target)
            if target is None:
                report.add("dangling-reference", locus, f"synonym target {link.target} missing")
            elif owner is not None and target.lang != owner.lang:
                report.add("synonym-cross-language", locus,
                           "synonym links stay inside one language")
        for phrase in sense.phrases:
            if not phrase.text:
                report.add("empty-text", locus, "phrase text must be non-empty")
        for citation in sense.citations:
            if not citation.quote:
                report.add("empty-text", locus, "citation quote must be non-empty")

    seen_pairs: set[tuple[str, str]] = set()
    for sense_id in sorted(graph.edges_out):
        if sense_id not in graph.senses:
            report.add("dangling-reference", sense_id, "edge index keyed by unknown sense")
            continue
        owner = graph.lexemes.get(graph.senses[sense_id].lexeme_id)
        source_lang = owner.lang if owner is not None else None
        ranks = []
        for edge in graph.edges_out[sense_id]:
            locus = f"{edge.source} -> {edge.target}"
            if edge.source != sense_id:
                report.add("id-mismatch", locus, "edge filed under the wrong sense")
            target_sense = graph.senses.get(edge.target)
            if target_sense is None:
                report.add("dangling-reference", locus, "edge target missing")
            else:
                target_lexeme = graph.lexemes.get(target_sense.lexeme_id)
                if target_lexeme is not None and source_lang == target_lexeme.lang:
                    report.add("same-language-edge", locus,
                               "equivalence edges cross languages")
            if (edge.source, edge.target) in seen_pairs:
                report.add("duplicate-edge", locus, "only one edge per (source, target)")
            seen_pairs.add((edge.source, edge.target))
            if edge.rank < 1:
                report.add("bad-index", locus, "rank starts at 1")
            ranks.append(edge.rank)
        if ranks and sorted(ranks) != list(range(1, len(ranks) + 1)):
            report.add("rank-gap", sense_id,
                       f"ranks {sorted(ranks)} are not 1..{len(ranks)}")

    # the reverse index must stay the exact transpose of the forward one
    forward = sorted((e.source, e.target, e.rank)
                     for edges in graph.edges_out.values() for e in edges)
    backward = sorted((e.source, e.target, e.rank)
                      for edges in graph.edges_in.values() for e in edges)
    if forward != backward:
        report.add("transpose-mismatch", "edges_in",
                   "reverse adjacency is not the transpose of forward adjacency")

    report.issues.sort(key=lambda i: (i.locus, i.code, i.message))
    return report


# --- construction --------------------------------------------------------

@dataclass
class _PendingSense:
    lexeme_id: str
    sense_no: int | None
    gloss: str
    domain_tag: str | None
    extra: dict
    locus: str


class GraphBuilder:
    """Two-phase graph assembly.

    Declarations (lexemes, senses) and references (edges, attachments)
    may arrive in any order; everything is resolved in :meth:`build`.
    Records that cannot be resolved are dropped with a report entry, so
    the returned graph is always well-formed.  The only unrecoverable
    condition is a third language.
    """

    def __init__(self) -> None:
        self._lexemes: list[tuple[Lexeme, str]] = []
        self._senses: list[_PendingSense] = []
        # (source, target, rank or None, note, extra, locus)
        self._edges: list[tuple[str, str, int | None, str | None, dict, str]] = []
        self._synonyms: list[tuple[str, SynonymLink, str]] = []
        self._phrases: list[tuple[str, PhraseUnit, str]] = []
        self._citations: list[tuple[str, Citation, str]] = []

    # declaration side -----------------------------------------------

    def add_lexeme(self, lang: str, lemma: str, pos: str,
                   homonym_index: int = 1,
                   extra: dict | None = None, locus: str | None = None) -> str:
        lemma = nfc(lemma)
        lexeme = Lexeme(make_lexeme_id(lang, lemma, pos, homonym_index),
                        lang, lemma, pos, homonym_index, (), dict(extra or {}))
        self._lexemes.append((lexeme, locus or lexeme.id))
        return lexeme.id

    def add_sense(self, lexeme_id: str, sense_no: int | None = None,
                  gloss: str = "", domain_tag: str | None = None,
                  extra: dict | None = None, locus: str | None = None) -> None:
        lexeme_id = nfc(lexeme_id)
        self._senses.append(_PendingSense(lexeme_id, sense_no, gloss, domain_tag,
                                          dict(extra or {}), locus or lexeme_id))

    # reference side ---------------------------------------------------

    def add_edge(self, source: str, target: str, rank: int | None = None,
                 note: str | None = None,
                 extra: dict | None = None, locus: str | None = None) -> None:
        source, target = nfc(source), nfc(target)
        self._edges.append((source, target, rank, note, dict(extra or {}),
                            locus or f"{source} -> {target}"))

    def add_synonym(self, sense_id: str, target: str,
                    extra: dict | None = None, locus: str | None = None) -> None:
        sense_id = nfc(sense_id)
        self._synonyms.append((sense_id, SynonymLink(nfc(target), dict(extra or {})),
                               locus or sense_id))

    def add_phrase(self, sense_id: str, text: str, gloss: str | None = None,
                   extra: dict | None = None, locus: str | None = None) -> None:
        sense_id = nfc(sense_id)
        self._phrases.append((sense_id, PhraseUnit(text, gloss, dict(extra or {})),
                              locus or sense_id))

    def add_citation(self, sense_id: str, quote: str, source: str,
                     extra: dict | None = None, locus: str | None = None) -> None:
        sense_id = nfc(sense_id)
        self._citations.append((sense_id, Citation(quote, source, dict(extra or {})),
                                locus or sense_id))

    # resolution ------------------------------------------------------

    def build(self) -> tuple[LexicalGraph, ValidationReport]:
        report = ValidationReport()

        langs = sorted({lx.lang for lx, _ in self._lexemes if is_language_tag(lx.lang)})
        if len(langs) > 2:
            raise FatalFormat(
                "more than two language tags in one lexicon: " + ", ".join(langs))

        lexemes: dict[str, Lexeme] = {}
        for lexeme, locus in self._lexemes:
            if not is_language_tag(lexeme.lang):
                report.add("bad-language-tag", locus,
                           f"language tags are two ASCII lowercase letters, got {lexeme.lang!r}")
                continue
            if lexeme.pos not in POS_TAGS:
                report.add("bad-pos", locus,
                           f"pos {lexeme.pos!r} not in {'/'.join(POS_TAGS)}")
                continue
            if not lexeme.lemma:
                report.add("empty-text", locus, "lemma must be non-empty")
                continue
            if lexeme.homonym_index < 1:
                report.add("bad-index", locus, "homonym_index starts at 1")
                continue
            if lexeme.id in lexemes:
                report.add("duplicate-id", locus, f"lexeme {lexeme.id} declared twice")
                continue
            lexemes[lexeme.id] = lexeme

        # senses: explicit numbers claim their slot, bare ones continue
        # the count in declaration order
        senses: dict[str, Sense] = {}
        by_lexeme: dict[str, list[int]] = {}
        for pending in self._senses:
            owner = lexemes.get(pending.lexeme_id)
            if owner is None:
                report.add("dangling-reference", pending.locus,
                           f"sense declared for unknown lexeme {pending.lexeme_id}")
                continue
            taken = by_lexeme.setdefault(pending.lexeme_id, [])
            number = pending.sense_no
            if number is None:
                number = max(taken, default=0) + 1
            elif number < 1:
                report.add("bad-index", pending.locus, "sense_no starts at 1")
                continue
            sense_id = make_sense_id(pending.lexeme_id, number)
            if sense_id in senses:
                report.add("duplicate-id", pending.locus,
                           f"sense {sense_id} declared twice")
                continue
            taken.append(number)
            senses[sense_id] = Sense(sense_id, pending.lexeme_id, number,
                                     pending.gloss, pending.domain_tag,
                                     extra=pending.extra)

        for lexeme_id, numbers in by_lexeme.items():
            ordered = tuple(make_sense_id(lexeme_id, n) for n in sorted(numbers))
            lexemes[lexeme_id] = replace(lexemes[lexeme_id], senses=ordered)
        for lexeme_id, lexeme in list(lexemes.items()):
            if not lexeme.senses:
                report.add("no-senses", lexeme_id, "a lexeme carries at least one sense")
                del lexemes[lexeme_id]
        for lexeme in lexemes.values():
            if len(lexeme.senses) > 1:
                for sid in lexeme.senses:
                    if not senses[sid].gloss:
                        report.add("missing-gloss", sid,
                                   "senses of a polysemous lexeme need glosses")

        def lang_of(sense_id: str) -> str:
            return lexemes[senses[sense_id].lexeme_id].lang

        edges: list[EquivalenceEdge] = []
        seen_pairs: set[tuple[str, str]] = set()
        next_rank: dict[str, int] = {}
        for source, target, rank, note, extra, locus in self._edges:
            if source not in senses or target not in senses:
                missing = source if source not in senses else target
                report.add("dangling-reference", locus,
                           f"edge endpoint {missing} does not resolve")
                continue
            if lang_of(source) == lang_of(target):
                report.add("same-language-edge", locus,
                           "equivalence edges cross languages")
                continue
            if (source, target) in seen_pairs:
                report.add("duplicate-edge", locus,
                           f"edge {source} -> {target} repeated")
                continue
            if rank is not None and rank < 1:
                report.add("bad-index", locus, "rank starts at 1")
                continue
            seen_pairs.add((source, target))
            if rank is None:
                # absent rank continues the count for that source sense,
                # in stream order
                rank = next_rank.get(source, 0) + 1
            edges.append(EquivalenceEdge(source, target, rank, note, extra))
            next_rank[source] = max(next_rank.get(source, 0), rank)

        by_source: dict[str, list[int]] = {}
        for edge in edges:
            by_source.setdefault(edge.source, []).append(edge.rank)
        for source, ranks in sorted(by_source.items()):
            if sorted(ranks) != list(range(1, len(ranks) + 1)):
                report.add("rank-gap", source,
                           f"ranks {sorted(ranks)} are not 1..{len(ranks)}")

        attachments: dict[str, dict[str, list]] = {
            sid: {"syn": [], "phr": [], "cit": []} for sid in senses}

        for sense_id, link, locus in self._synonyms:
            if sense_id not in senses:
                report.add("dangling-reference", locus,
                           f"synonym attached to unknown sense {sense_id}")
                continue
            target = lexemes.get(link.target)
            if target is None:
                report.add("dangling-reference", locus,
                           f"synonym target {link.target} does not resolve")
                continue
            if target.lang != lang_of(sense_id):
                report.add("synonym-cross-language", locus,
                           "synonym links stay inside one language")
                continue
            attachments[sense_id]["syn"].append(link)

        for sense_id, phrase, locus in self._phrases:
            if sense_id not in senses:
                report.add("dangling-reference", locus,
                           f"phrase attached to unknown sense {sense_id}")
                continue
            if not phrase.text:
                report.add("empty-text", locus, "phrase text must be non-empty")
                continue
            attachments[sense_id]["phr"].append(phrase)

        for sense_id, citation, locus in self._citations:
            if sense_id not in senses:
                report.add("dangling-reference", locus,
                           f"citation attached to unknown sense {sense_id}")
                continue
            if not citation.quote:
                report.add("empty-text", locus, "citation quote must be non-empty")
                continue
            attachments[sense_id]["cit"].append(citation)

        # attachment order is canonical (content order), which keeps the
        # build invariant under any permutation of the record stream
        def _content_key(item) -> tuple:
            extra = json.dumps(item.extra, sort_keys=True, ensure_ascii=False)
            if isinstance(item, SynonymLink):
                return (item.target, extra)
            if isinstance(item, PhraseUnit):
                return (item.text, item.gloss or "", extra)
            return (item.quote, item.source, extra)

        for sense_id, groups in attachments.items():
            senses[sense_id] = replace(
                senses[sense_id],
                synonyms=tuple(sorted(groups["syn"], key=_content_key)),
                phrases=tuple(sorted(groups["phr"], key=_content_key)),
                citations=tuple(sorted(groups["cit"], key=_content_key)),
            )

        graph = LexicalGraph.assemble(lexemes, senses, edges)
        return graph, report
