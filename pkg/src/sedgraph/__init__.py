"""Comparative bilingual dictionary engine.

Two languages, sense-level equivalence edges, and everything the pairs
give rise to: expanded chain entries, a typology of correspondences,
lacuna tracking, a line-based interchange format, an HTTP service and a
CLI.
"""

import importlib.resources
import pathlib

from .chains import ChainTree, ExpansionConfig, NodePair, closures, expand, linearize
from .classify import (
    PAIR_CLASS_ORDER,
    CorrespondenceCatalog,
    CorrespondenceClass,
    PairClass,
    SenseClass,
    catalog,
    catalog_payload,
    classify_pair,
    classify_sense,
)
from .entry import (
    DecoratedPair,
    Entry,
    Profile,
    SenseEntry,
    assemble,
    entry_json,
    entry_payload,
    render_text,
)
from .ingest import (
    FatalFormat,
    ParseError,
    Record,
    build_graph,
    dumps,
    export_graph,
    load_lexicon,
    loads,
    save_lexicon,
)
from .model import (
    Citation,
    EquivalenceEdge,
    GraphBuilder,
    LexicalGraph,
    Lexeme,
    LexiconError,
    PhraseUnit,
    Sense,
    SynonymLink,
    UnknownEdge,
    UnknownHead,
    UnknownLanguage,
    UnknownSense,
    ValidationIssue,
    ValidationReport,
    in_equivalents,
    lookup_lemma,
    out_equivalents,
    validate_graph,
)

__version__ = "0.1.0"


def seed_lexicon_path() -> pathlib.Path:
    """Path of the bundled Bulgarian-Russian seed lexicon."""
    resource = importlib.resources.files(__package__) / "data" / "seed_bg_ru.sedl"
    return pathlib.Path(str(resource))
