from __future__ import annotations

import json
import random

import pytest

import sedgraph as sg

from genlex import random_sense_graph

HEAD = "bg:заблуждавам:verb:1"
DECEIVE = "ru:обманывать:verb:1"
LIE_RU = "ru:лгать:verb:1"

PROFILES = (sg.Profile.MINIMAL, sg.Profile.STANDARD, sg.Profile.FULL)


def _render(graph, head, depth, profile):
    entry = sg.assemble(graph, head, sg.ExpansionConfig(depth), profile)
    return sg.render_text(entry)


# --- golden renderings ----------------------------------------------------

def test_standard_sense_entry_matches_golden(seed_graph, golden_dir):
    want = (golden_dir / "entry_standard_depth3.txt").read_text("utf-8")
    assert _render(seed_graph, HEAD + "#1", 3, sg.Profile.STANDARD) == want


def test_full_lexeme_entry_matches_golden(seed_graph, golden_dir):
    want = (golden_dir / "entry_full_depth4.txt").read_text("utf-8")
    assert _render(seed_graph, HEAD, 4, sg.Profile.FULL) == want


def test_minimal_entry_matches_golden(seed_graph, golden_dir):
    want = (golden_dir / "entry_minimal_depth2.txt").read_text("utf-8")
    assert _render(seed_graph, DECEIVE + "#1", 2, sg.Profile.MINIMAL) == want


def test_polysemous_lexeme_entry_matches_golden(seed_graph, golden_dir):
    want = (golden_dir / "entry_lexeme_full_lacuna.txt").read_text("utf-8")
    assert _render(seed_graph, LIE_RU, 4, sg.Profile.FULL) == want


def test_wire_payload_matches_golden(seed_graph, golden_dir):
    want = (golden_dir / "entry_standard_depth3.json").read_bytes()
    entry = sg.assemble(seed_graph, HEAD + "#1", sg.ExpansionConfig(3))
    assert sg.entry_json(entry).encode("utf-8") + b"\n" == want


# --- assembly shape -------------------------------------------------------

def test_sense_head_covers_one_sense(seed_graph):
    entry = sg.assemble(seed_graph, LIE_RU + "#1", sg.ExpansionConfig(2))
    assert [s.sense_id for s in entry.senses] == [LIE_RU + "#1"]
    assert entry.head == LIE_RU  # head names the owning lexeme


def test_lexeme_head_covers_all_senses_in_order(seed_graph):
    entry = sg.assemble(seed_graph, LIE_RU, sg.ExpansionConfig(2))
    assert [s.sense_id for s in entry.senses] == [LIE_RU + "#1", LIE_RU + "#2"]
    assert entry.senses[1].lacuna


@pytest.mark.parametrize("head", [
    "bg:няма:verb:1",
    "bg:няма:verb:1#1",
    "bg:заблуждавам:verb:1#9",
    "garbage",
    "",
])
def test_unresolvable_heads_raise(seed_graph, head):
    with pytest.raises(sg.UnknownHead):
        sg.assemble(seed_graph, head, sg.ExpansionConfig(1))


def test_depth_zero_minimal_renders_header_only(seed_graph):
    text = _render(seed_graph, HEAD + "#1", 0, sg.Profile.MINIMAL)
    assert text == "заблуждавам (bg, verb)\n"


def test_assembly_is_deterministic(seed_graph):
    first = sg.entry_json(sg.assemble(seed_graph, HEAD, sg.ExpansionConfig(3)))
    second = sg.entry_json(sg.assemble(seed_graph, HEAD, sg.ExpansionConfig(3)))
    assert first == second


def test_entry_json_is_compact_utf8(seed_graph):
    text = sg.entry_json(sg.assemble(seed_graph, HEAD, sg.ExpansionConfig(2)))
    assert '\\u' not in text and '": ' not in text
    assert json.loads(text)["head"] == HEAD


def test_catalog_excerpt_counts_entry_pairs(seed_graph):
    entry = sg.assemble(seed_graph, HEAD + "#1", sg.ExpansionConfig(3))
    assert entry.catalog_excerpt == (
        (sg.CorrespondenceClass.SYMMETRIC_EXCLUSIVE, 1),
        (sg.CorrespondenceClass.SYMMETRIC_NONEXCLUSIVE, 2),
        (sg.CorrespondenceClass.DIVERGENT, 1),
        (sg.CorrespondenceClass.MANY_TO_MANY, 1),
        (sg.CorrespondenceClass.NON_RECIPROCAL, 1),
    )
    assert sum(n for _, n in entry.catalog_excerpt) == len(entry.pairs)


# --- profile monotonicity -------------------------------------------------

def _is_subset(lower, higher) -> bool:
    if isinstance(lower, dict):
        return (isinstance(higher, dict)
                and all(k in higher and _is_subset(v, higher[k])
                        for k, v in lower.items()))
    if isinstance(lower, list):
        return (isinstance(higher, list) and len(lower) == len(higher)
                and all(_is_subset(a, b) for a, b in zip(lower, higher)))
    return lower == higher


def _payload(graph, head, depth, profile):
    return sg.entry_payload(sg.assemble(graph, head, sg.ExpansionConfig(depth),
                                        profile))


def test_profiles_are_monotone_on_seed(seed_graph):
    heads = [s.id for s in seed_graph.iter_senses()]
    heads += [lx.id for lx in seed_graph.iter_lexemes()]
    for head in heads:
        for depth in (0, 1, 3):
            minimal, standard, full = (
                _payload(seed_graph, head, depth, p) for p in PROFILES)
            assert _is_subset(minimal, standard)
            assert _is_subset(standard, full)


def test_profiles_are_monotone_on_random_graphs():
    rng = random.Random(51)
    for _ in range(10):
        graph, _, sense_ids, _ = random_sense_graph(rng, n_senses=12)
        for head in sense_ids[:6]:
            minimal, standard, full = (
                _payload(graph, head, 3, p) for p in PROFILES)
            assert _is_subset(minimal, standard)
            assert _is_subset(standard, full)


# --- decoration integrity -------------------------------------------------

def test_glosses_are_sense_synchronized(seed_graph):
    entry = sg.assemble(seed_graph, HEAD, sg.ExpansionConfig(4), sg.Profile.FULL)
    for pair in entry.pairs:
        if pair.gloss_source:
            assert pair.gloss_source == seed_graph.sense(pair.source).gloss
        if pair.gloss_target:
            assert pair.gloss_target == seed_graph.sense(pair.target).gloss


def test_lemmas_derive_from_pair_ids(seed_graph):
    entry = sg.assemble(seed_graph, HEAD, sg.ExpansionConfig(4))
    for pair in entry.pairs:
        assert pair.lemma_source == seed_graph.sense_lexeme(pair.source).lemma
        assert pair.lemma_target == seed_graph.sense_lexeme(pair.target).lemma


def test_no_phantom_data(seed_graph):
    """Nothing appears in a full entry that the graph does not hold."""
    glosses = {s.gloss for s in seed_graph.iter_senses() if s.gloss}
    synonym_targets = {link.target for s in seed_graph.iter_senses()
                       for link in s.synonyms}
    phrase_texts = {p.text for s in seed_graph.iter_senses() for p in s.phrases}
    quotes = {c.quote for s in seed_graph.iter_senses() for c in s.citations}
    payload = _payload(seed_graph, HEAD, 4, sg.Profile.FULL)
    blocks = payload["senses"] + payload["pairs"]
    for block in blocks:
        for key in ("gloss", "gloss_source", "gloss_target"):
            if block.get(key):
                assert block[key] in glosses
        for link in block.get("synonyms", []):
            assert link in synonym_targets
        for phrase in block.get("phrases", []):
            assert phrase["text"] in phrase_texts
        for citation in block.get("citations", []):
            assert citation["quote"] in quotes


def test_truncated_lists_are_sorted_canonically(seed_graph):
    entry = sg.assemble(seed_graph, HEAD + "#1",
                        sg.ExpansionConfig(2, max_branch=1))
    listed = list(entry.truncated)
    assert listed == sorted(listed, key=seed_graph.sense_sort_key)


def test_lacuna_flag_only_on_dead_end_targets(seed_graph):
    entry = sg.assemble(seed_graph, HEAD, sg.ExpansionConfig(4))
    for pair in entry.pairs:
        expected = (not pair.closure
                    and not sg.out_equivalents(seed_graph, pair.target))
        assert pair.target_is_lacuna == expected
