"""Correspondence typology: how a pair of equivalents sits among its
neighbours, and where the dictionary has holes.

Every edge gets exactly one catalogue class.  Reciprocal edges are
classed by the symmetry of the relation (exclusive when the two senses
have only each other, non-exclusive otherwise) and additionally tagged
with their fan shape; non-reciprocal edges are classed by the fan shape
itself when it is non-trivial, else as plainly non-reciprocal.  Senses
with no equivalents at all are lacunae; lacunarity is a property of a
single sense, so a polysemous word can be covered in one sense and
lacunar in another.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import EquivalenceEdge, LexicalGraph, UnknownEdge


class CorrespondenceClass(str, Enum):
    SYMMETRIC_EXCLUSIVE = "SYMMETRIC_EXCLUSIVE"
    SYMMETRIC_NONEXCLUSIVE = "SYMMETRIC_NONEXCLUSIVE"
    DIVERGENT = "DIVERGENT"
    CONVERGENT = "CONVERGENT"
    MANY_TO_MANY = "MANY_TO_MANY"
    NON_RECIPROCAL = "NON_RECIPROCAL"
    LACUNA = "LACUNA"

    def __str__(self) -> str:
        return self.value


# catalogue display order for pair classes (lacunae are listed per sense)
PAIR_CLASS_ORDER = (
    CorrespondenceClass.SYMMETRIC_EXCLUSIVE,
    CorrespondenceClass.SYMMETRIC_NONEXCLUSIVE,
    CorrespondenceClass.DIVERGENT,
    CorrespondenceClass.CONVERGENT,
    CorrespondenceClass.MANY_TO_MANY,
    CorrespondenceClass.NON_RECIPROCAL,
)


@dataclass(frozen=True)
class PairClass:
    """Classification result for one edge.

    `label` is the single catalogue class.  `reciprocity` and `fan`
    carry the two underlying readings separately: the symmetric pairs
    keep their fan shape as a secondary tag rather than losing it.
    """
    label: CorrespondenceClass
    reciprocity: CorrespondenceClass            # one of the SYMMETRIC_* or NON_RECIPROCAL
    fan: CorrespondenceClass | None = None      # DIVERGENT / CONVERGENT / MANY_TO_MANY

    def __str__(self) -> str:
        if self.fan is not None and self.fan is not self.label:
            return f"{self.label}+{self.fan}"
        return str(self.label)


@dataclass(frozen=True)
class SenseClass:
    """Out-degree summary of a single sense."""
    sense: str
    out_degree: int

    @property
    def is_lacuna(self) -> bool:
        return self.out_degree == 0

    @property
    def label(self) -> CorrespondenceClass | None:
        return CorrespondenceClass.LACUNA if self.is_lacuna else None

    @property
    def summary(self) -> str:
        if self.out_degree == 0:
            return "∅"
        return "1:1" if self.out_degree == 1 else "1:n"


def classify_pair(graph: LexicalGraph, edge: EquivalenceEdge) -> PairClass:
    """Class of one equivalence edge among its neighbours.

    Degrees are plain counts on the graph: d_out of the source sense,
    fan-in of the target sense.  The edge must belong to the graph.
    """
    stored = graph.find_edge(edge.source, edge.target)
    if stored is None:
        raise UnknownEdge(f"no edge {edge.source} -> {edge.target}")

    out_source = graph.edges_out.get(edge.source, ())
    out_target = graph.edges_out.get(edge.target, ())
    reciprocal = any(e.target == edge.source for e in out_target)

    d_out = len(out_source)
    fan_in = len(graph.edges_in.get(edge.target, ()))

    fan: CorrespondenceClass | None = None
    if d_out > 1 and fan_in > 1:
        fan = CorrespondenceClass.MANY_TO_MANY
    elif d_out > 1:
        fan = CorrespondenceClass.DIVERGENT
    elif fan_in > 1:
        fan = CorrespondenceClass.CONVERGENT

    if not reciprocal:
        reciprocity = CorrespondenceClass.NON_RECIPROCAL
        label = fan if fan is not None else reciprocity
    else:
        exclusive = (d_out == 1 and len(out_target) == 1
                     and out_target[0].target == edge.source)
        reciprocity = (CorrespondenceClass.SYMMETRIC_EXCLUSIVE if exclusive
                       else CorrespondenceClass.SYMMETRIC_NONEXCLUSIVE)
        label = reciprocity
    return PairClass(label, reciprocity, fan)


def classify_sense(graph: LexicalGraph, sense_id: str) -> SenseClass:
    """Lacuna check plus fan summary for one sense."""
    graph.sense(sense_id)
    return SenseClass(sense_id, len(graph.edges_out.get(sense_id, ())))


@dataclass(frozen=True)
class CorrespondenceCatalog:
    """Whole-graph census of correspondence classes.

    counts covers every pair class (zeros included) and sums to the
    number of edges; lacunae lists the uncovered senses per language in
    canonical order; exemplars holds up to `cap` (source, target) pairs
    per class, in canonical edge order.
    """
    counts: dict[CorrespondenceClass, int]
    lacunae: dict[str, tuple[str, ...]]
    exemplars: dict[CorrespondenceClass, tuple[tuple[str, str], ...]]
    total_pairs: int
    cap: int = 20


def catalog(graph: LexicalGraph, cap: int = 20) -> CorrespondenceCatalog:
    """Classify every edge and every sense of the graph."""
    counts = {cls: 0 for cls in PAIR_CLASS_ORDER}
    exemplars: dict[CorrespondenceClass, list[tuple[str, str]]] = \
        {cls: [] for cls in PAIR_CLASS_ORDER}
    total = 0
    for edge in graph.iter_edges():
        label = classify_pair(graph, edge).label
        counts[label] += 1
        total += 1
        if len(exemplars[label]) < cap:
            exemplars[label].append((edge.source, edge.target))

    lacunae: dict[str, list[str]] = {lang: [] for lang in graph.langs}
    for sense in graph.iter_senses():
        if not graph.edges_out.get(sense.id, ()):
            lang = graph.lexemes[sense.lexeme_id].lang
            lacunae[lang].append(sense.id)

    return CorrespondenceCatalog(
        counts=counts,
        lacunae={lang: tuple(ids) for lang, ids in lacunae.items()},
        exemplars={cls: tuple(pairs) for cls, pairs in exemplars.items()},
        total_pairs=total,
        cap=cap,
    )


def catalog_payload(cat: CorrespondenceCatalog) -> dict:
    """Catalogue as JSON-ready data with a fixed key order."""
    return {
        "counts": {cls.value: cat.counts[cls] for cls in PAIR_CLASS_ORDER},
        "total_pairs": cat.total_pairs,
        "lacunae": {lang: list(ids) for lang, ids in sorted(cat.lacunae.items())},
        "exemplars": {cls.value: [{"from": source, "to": target}
                                  for source, target in cat.exemplars[cls]]
                      for cls in PAIR_CLASS_ORDER},
    }
