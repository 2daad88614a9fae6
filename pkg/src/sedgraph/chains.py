"""Chain expansion: the alternating tree of equivalence pairs around a head.

Starting from a head sense, each level crosses to the other language by
following equivalence edges in rank order, so odd depths land in the
opposite language and even depths come back.  A branch stops when it
would revisit a sense already on its own path; that last step is kept
as a closure pair, the loop-back marker.  Revisits across sibling
branches are not cycles and expand in full.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import LexicalGraph


@dataclass(frozen=True)
class ExpansionConfig:
    """Bounds for one expansion.

    max_depth 0 means the head only.  max_branch truncates each sense's
    rank-ordered equivalent list before anything else happens, so
    closure detection never reorders or back-fills branches.
    """
    max_depth: int = 4
    max_branch: int = 8
    include_closures: bool = True

    def __post_init__(self) -> None:
        if self.max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        if self.max_branch < 1:
            raise ValueError("max_branch must be >= 1")


@dataclass(frozen=True)
class NodePair:
    """One directed equivalence step at a given depth of the tree.

    Source and target are always in different languages.  A closure
    pair's target already occurs on the path from the head to here;
    closure pairs never have children.
    """
    source: str      # SenseId
    target: str      # SenseId
    edge_rank: int
    depth: int       # >= 1; the head itself is not a pair
    closure: bool
    children: tuple["NodePair", ...] = ()

    def signature(self) -> tuple:
        """Identity of the pair regardless of its position in the tree."""
        return (self.source, self.target, self.edge_rank, self.depth, self.closure)


@dataclass(frozen=True)
class ChainTree:
    head: str
    roots: tuple[NodePair, ...] = ()
    truncated: frozenset[str] = frozenset()

    def __len__(self) -> int:
        return len(linearize(self))


def expand(graph: LexicalGraph, head: str,
           config: ExpansionConfig | None = None) -> ChainTree:
    """Grow the pair tree around `head` under the given bounds.

    `truncated` collects every sense whose equivalents were cut off,
    whether by depth or by branch width; entry rendering and clients
    use it to distinguish "nothing more" from "more on request".
    """
    config = config or ExpansionConfig()
    graph.sense(head)
    truncated: set[str] = set()

    def grow(sense: str, on_path: frozenset[str], depth: int) -> tuple[NodePair, ...]:
        edges = graph.edges_out.get(sense, ())
        if not edges:
            return ()
        if depth > config.max_depth:
            truncated.add(sense)
            return ()
        if len(edges) > config.max_branch:
            truncated.add(sense)
            edges = edges[:config.max_branch]
        pairs = []
        for edge in edges:
            if edge.target in on_path:
                if config.include_closures:
                    pairs.append(NodePair(sense, edge.target, edge.rank, depth, True))
            else:
                children = grow(edge.target, on_path | {edge.target}, depth + 1)
                pairs.append(NodePair(sense, edge.target, edge.rank, depth, False,
                                      children))
        return tuple(pairs)

    roots = grow(head, frozenset({head}), 1)
    return ChainTree(head, roots, frozenset(truncated))


def linearize(tree: ChainTree) -> list[NodePair]:
    """Reading order of the tree: all depth-1 pairs, then depth-2, and so
    on; inside one depth, pairs keep their pre-order position.  This is
    the top-down, center-outward order entries are rendered in."""
    out: list[NodePair] = []
    level = list(tree.roots)
    while level:
        out.extend(level)
        level = [child for pair in level for child in pair.children]
    return out


def closures(tree: ChainTree) -> list[NodePair]:
    """All loop-back pairs, in linearize order."""
    return [pair for pair in linearize(tree) if pair.closure]
