"""Seeded generators: random record streams and small exhaustive graph families."""

from __future__ import annotations

import random

from sedgraph import GraphBuilder

_CONSONANTS = "бвгдзклмнпрст"
_VOWELS = "аеиоу"
_POS_SINGLE = ("verb", "noun", "adj", "adv", "other")


def _word(rng: random.Random) -> str:
    n = rng.randint(1, 3)
    return "".join(rng.choice(_CONSONANTS) + rng.choice(_VOWELS) for _ in range(n))


def _gloss(rng: random.Random) -> str:
    return " ".join(_word(rng) for _ in range(rng.randint(2, 5)))


def random_records(rng: random.Random, n_lexemes: int = 20,
                   langs: tuple[str, str] = ("bg", "ru"),
                   edge_budget: int | None = None,
                   decorate: bool = True) -> list[dict]:
    """A valid record stream with every order-carrying field explicit.

    The stream is shuffled before returning, so anything built from it
    must not depend on record order.  Returns payload dicts ready to be
    serialized one per line.
    """
    records: list[dict] = []
    used: set[tuple[str, str, str, int]] = set()
    lex_ids: dict[str, list[str]] = {langs[0]: [], langs[1]: []}
    sense_ids: dict[str, list[str]] = {langs[0]: [], langs[1]: []}

    for i in range(n_lexemes):
        lang = langs[i % 2]
        if rng.random() < 0.12:
            lemma = _word(rng) + " " + _word(rng)
            pos = "phrase"
        else:
            lemma = _word(rng)
            pos = rng.choice(_POS_SINGLE)
        hom = 1
        while (lang, lemma, pos, hom) in used:
            hom += 1
        used.add((lang, lemma, pos, hom))
        lex_id = f"{lang}:{lemma}:{pos}:{hom}"
        lex_ids[lang].append(lex_id)
        rec = {"kind": "lexeme", "lang": lang, "lemma": lemma,
               "pos": pos, "homonym_index": hom}
        if decorate and rng.random() < 0.08:
            rec["origin"] = "gen"
        records.append(rec)

        n_senses = rng.choices((1, 2, 3), weights=(6, 3, 1))[0]
        for no in range(1, n_senses + 1):
            sense = {"kind": "sense", "lexeme": lex_id, "sense_no": no}
            if n_senses > 1 or rng.random() < 0.6:
                sense["gloss"] = _gloss(rng)
            if decorate and rng.random() < 0.15:
                sense["domain_tag"] = rng.choice(("бот.", "техн.", "разг."))
            records.append(sense)
            sense_ids[lang].append(f"{lex_id}#{no}")

    # sample target lists per source, then make a slice reciprocal
    targets: dict[str, list[str]] = {}
    for lang, other in (langs, langs[::-1]):
        pool = sense_ids[other]
        for source in sense_ids[lang]:
            if not pool:
                continue
            k = rng.choices((0, 1, 2, 3), weights=(30, 45, 18, 7))[0]
            targets[source] = rng.sample(pool, min(k, len(pool)))
    for source, outs in list(targets.items()):
        for target in outs:
            if rng.random() < 0.35:
                back = targets.setdefault(target, [])
                if source not in back:
                    back.append(source)

    total = 0
    for source in sorted(targets):
        outs = targets[source]
        if edge_budget is not None:
            outs = outs[:max(0, edge_budget - total)]
        total += len(outs)
        for rank, target in enumerate(outs, 1):
            rec = {"kind": "equiv", "from": source, "to": target, "rank": rank}
            if decorate and rng.random() < 0.1:
                rec["note"] = "частичное соответствие"
            records.append(rec)

    if decorate:
        for lang in langs:
            for sid in sense_ids[lang]:
                if rng.random() < 0.15 and len(lex_ids[lang]) > 1:
                    target = rng.choice(lex_ids[lang])
                    if not sid.startswith(target + "#"):
                        records.append({"kind": "synonym", "sense": sid,
                                        "target": target})
                if rng.random() < 0.12:
                    rec = {"kind": "phrase", "sense": sid, "text": _gloss(rng)}
                    if rng.random() < 0.5:
                        rec["gloss"] = _gloss(rng)
                    records.append(rec)
                if rng.random() < 0.08:
                    records.append({"kind": "citation", "sense": sid,
                                    "quote": _gloss(rng),
                                    "source": rng.choice(("БНК", "НКРЯ"))})

    rng.shuffle(records)
    return records


def adjacency_of(triples) -> dict[str, list[tuple[str, int]]]:
    """Rank-sorted adjacency map built from raw (source, target, rank)."""
    adjacency: dict[str, list[tuple[str, int]]] = {}
    for source, target, rank in triples:
        adjacency.setdefault(source, []).append((target, rank))
    for outs in adjacency.values():
        outs.sort(key=lambda pair: pair[1])
    return adjacency


def _build_two_sided(n_a: int, n_b: int, triples):
    builder = GraphBuilder()
    for lang, count, stem in (("aa", n_a, "a"), ("bb", n_b, "b")):
        for i in range(count):
            lex_id = builder.add_lexeme(lang, f"{stem}{i}", "noun")
            builder.add_sense(lex_id, 1, gloss=f"{stem}{i}")
    for source, target, rank in triples:
        builder.add_edge(source, target, rank)
    graph, report = builder.build()
    if not report.ok:
        raise RuntimeError("generator produced findings: %s" % list(report))
    return graph


def random_sense_graph(rng: random.Random, n_senses: int = 20,
                       fan_weights=(30, 45, 18, 7)):
    """One sense per lexeme, random cross edges, plus raw oracle views.

    Returns (graph, adjacency, sense_ids, triples); adjacency and
    triples are built independently of the graph's own indexes.
    """
    n_a = rng.randint(1, max(1, n_senses - 1))
    n_b = max(1, n_senses - n_a)
    a_ids = [f"aa:a{i}:noun:1#1" for i in range(n_a)]
    b_ids = [f"bb:b{i}:noun:1#1" for i in range(n_b)]
    triples = []
    for source_side, pool in ((a_ids, b_ids), (b_ids, a_ids)):
        for source in source_side:
            k = rng.choices((0, 1, 2, 3), weights=fan_weights)[0]
            for rank, target in enumerate(rng.sample(pool, min(k, len(pool))), 1):
                triples.append((source, target, rank))
    graph = _build_two_sided(n_a, n_b, triples)
    return graph, adjacency_of(triples), a_ids + b_ids, triples


def all_bipartite_graphs(n_a: int, n_b: int):
    """Every directed cross-edge subset on an (n_a, n_b) sense grid.

    Yields (graph, adjacency, sense_ids) for all 2**(2*n_a*n_b) graphs;
    ranks run 1..k per source in target index order.
    """
    a_ids = [f"aa:a{i}:noun:1#1" for i in range(n_a)]
    b_ids = [f"bb:b{i}:noun:1#1" for i in range(n_b)]
    cross = [(a, b) for a in a_ids for b in b_ids]
    cross += [(b, a) for a in a_ids for b in b_ids]
    for mask in range(2 ** len(cross)):
        chosen = [cross[k] for k in range(len(cross)) if mask >> k & 1]
        ranks: dict[str, int] = {}
        triples = []
        for source, target in chosen:
            ranks[source] = ranks.get(source, 0) + 1
            triples.append((source, target, ranks[source]))
        graph = _build_two_sided(n_a, n_b, triples)
        yield graph, adjacency_of(triples), a_ids + b_ids


def structured_graph(name: str):
    """Named topologies that exercise one engine behaviour each."""
    shapes = {
        # a0 -> b0 -> a1 -> b1 -> a2: a plain alternating chain
        "chain": (3, 2, [("aa:a0:noun:1#1", "bb:b0:noun:1#1", 1),
                         ("bb:b0:noun:1#1", "aa:a1:noun:1#1", 1),
                         ("aa:a1:noun:1#1", "bb:b1:noun:1#1", 1),
                         ("bb:b1:noun:1#1", "aa:a2:noun:1#1", 1)]),
        # a0 <-> b0: the smallest closure
        "mutual": (1, 1, [("aa:a0:noun:1#1", "bb:b0:noun:1#1", 1),
                          ("bb:b0:noun:1#1", "aa:a0:noun:1#1", 1)]),
        # a0 reaches b2 through b0 and through b1: off-path repeat
        "diamond": (2, 3, [("aa:a0:noun:1#1", "bb:b0:noun:1#1", 1),
                           ("aa:a0:noun:1#1", "bb:b1:noun:1#1", 2),
                           ("bb:b0:noun:1#1", "aa:a1:noun:1#1", 1),
                           ("bb:b1:noun:1#1", "aa:a1:noun:1#1", 1),
                           ("aa:a1:noun:1#1", "bb:b2:noun:1#1", 1)]),
        # a0 -> b0..b3: wide fan for branch caps
        "fan": (1, 4, [("aa:a0:noun:1#1", f"bb:b{j}:noun:1#1", j + 1)
                       for j in range(4)]),
        # 4-cycle a0 -> b0 -> a1 -> b1 -> a0
        "ring": (2, 2, [("aa:a0:noun:1#1", "bb:b0:noun:1#1", 1),
                        ("bb:b0:noun:1#1", "aa:a1:noun:1#1", 1),
                        ("aa:a1:noun:1#1", "bb:b1:noun:1#1", 1),
                        ("bb:b1:noun:1#1", "aa:a0:noun:1#1", 1)]),
    }
    n_a, n_b, triples = shapes[name]
    graph = _build_two_sided(n_a, n_b, triples)
    sense_ids = [f"aa:a{i}:noun:1#1" for i in range(n_a)]
    sense_ids += [f"bb:b{i}:noun:1#1" for i in range(n_b)]
    return graph, adjacency_of(triples), sense_ids


STRUCTURED_NAMES = ("chain", "mutual", "diamond", "fan", "ring")
