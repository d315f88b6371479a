import random

import pytest

from treesets.errors import HorizonError
from treesets.extension import (describe_failures, extension_graph,
                                generalized_extension_graph, set_classify)
from treesets.factors import build_factor_set, extension_stats, neutrality_classification
from treesets.graphs import BipartiteGraph, graph_classify
from treesets.words import EMPTY, as_word

from conftest import cached_set


def edges(g):
    return {("".join(l), "".join(r)) for l, r in g.edges}


def W(*ws):
    return tuple(as_word(w) for w in ws)


# -- code generators for the generalized graphs --------------------------------------

def maximal_prefix_codes(S, depth):
    """All S-maximal prefix codes with words of length <= depth."""
    def grow(w):
        if len(w) == depth:
            return [[w]]
        options = [[w]] if w else []
        children = [w + (a,) for a in S.right(w)]
        combos = [[]]
        for c in children:
            combos = [acc + sub for acc in combos for sub in grow(c)]
        return options + combos
    return [frozenset(c) for c in grow(EMPTY)]


def maximal_suffix_codes(S, depth):
    def grow(w):
        if len(w) == depth:
            return [[w]]
        options = [[w]] if w else []
        children = [(a,) + w for a in S.left(w)]
        combos = [[]]
        for c in children:
            combos = [acc + sub for acc in combos for sub in grow(c)]
        return options + combos
    return [frozenset(c) for c in grow(EMPTY)]


def sample(codes, rng, k):
    return codes if len(codes) <= k else rng.sample(codes, k)


# -- extension graphs --------------------------------------------------------------

def test_tribonacci_extension_graphs(trib):
    g = extension_graph(trib, "ab")
    assert g.left == W("a", "b", "c") and g.right == W("a")
    assert edges(g) == {("a", "a"), ("b", "a"), ("c", "a")}
    assert edges(extension_graph(trib, "")) == {
        ("a", "a"), ("a", "b"), ("a", "c"), ("b", "a"), ("c", "a")}


def test_cassaigne_empty_graph(cas_a):
    g = extension_graph(cas_a, "")
    v = graph_classify(g)
    assert len(g.edges) == 6 and v.is_acyclic and v.component_count == 2


def test_generalized_fibonacci_example(fib):
    g = generalized_extension_graph(fib, "a", ["aa", "ba", "b"], ["aa", "ab", "b"])
    assert edges(g) == {("ba", "b"), ("b", "b"), ("b", "ab")}


def test_generalized_letters_match_plain(fib, trib):
    for S in (fib, trib):
        for w in S.words(5):
            assert generalized_extension_graph(S, w, S.letters, S.letters).edges \
                == extension_graph(S, w).edges


def test_generalized_on_empty_word_acyclic(fib):
    g = generalized_extension_graph(fib, "", ["aa", "ab", "ba"], ["aa", "ab", "ba"])
    assert graph_classify(g).is_acyclic


def test_generalized_horizon(fib):
    with pytest.raises(HorizonError):
        generalized_extension_graph(fib, "a" * 1, ["a" * 12], ["b" * 12])


# -- graph verdicts --------------------------------------------------------------------

def test_single_edge_is_tree():
    g = BipartiteGraph(W("a"), W("b"), frozenset({(("a",), ("b",))}))
    assert graph_classify(g).is_tree


def test_four_cycle_witness():
    a, b, x, y = W("a", "b", "x", "y")
    g = BipartiteGraph((a, b), (x, y), frozenset({(a, x), (b, x), (a, y), (b, y)}))
    v = graph_classify(g)
    assert not v.is_acyclic and v.is_connected
    assert v.cycle_witness == ((a, x), (b, x), (b, y), (a, y))


def test_edgeless_graph():
    g = BipartiteGraph(W("a"), W("b"), frozenset())
    v = graph_classify(g)
    assert v.is_acyclic and not v.is_connected and v.component_count == 2


def test_same_label_on_both_sides_is_two_vertices():
    a = as_word("a")
    g = BipartiteGraph((a,), (a,), frozenset({(a, a)}))
    assert graph_classify(g).is_tree and len(g.vertices()) == 2


def test_dot_export_tags_sides(trib):
    dot = extension_graph(trib, "ab").to_dot("E")
    assert '"L_a" -- "R_a"' in dot and dot.count("[label=") == 4


# -- set classification ----------------------------------------------------------------

def test_classifications(fib, trib, cas_a, cas_n):
    assert set_classify(fib).kind == "tree"
    assert set_classify(trib).kind == "tree"
    c = set_classify(cas_a)
    assert c.acyclic and not c.connected
    assert [w for w, _ in c.failing_words] == [EMPTY]
    c = set_classify(cas_n)
    assert not c.acyclic and not c.connected
    assert c.failing_words[0][0] == EMPTY


def test_chacon_failures(chacon):
    c = set_classify(chacon)
    assert c.kind == "none"
    text = describe_failures(c)
    assert "abc: cyclic" in text and "bca: 2 components" in text


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "chacon",
                                  "cassaigne-acyclic", "cassaigne-neutral"])
def test_bispecial_scan_matches_exhaustive(name):
    S = cached_set(name, 14)
    fast, full = set_classify(S), set_classify(S, exhaustive=True)
    assert (fast.acyclic, fast.connected) == (full.acyclic, full.connected)
    assert fast.failing_words == full.failing_words


def test_non_biextendable_set_is_neither():
    S = build_factor_set(["u", "v", "vu", "vv", "vvu"], 3)
    c = set_classify(S)
    assert not c.biextendable and c.kind == "none"


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "cassaigne-acyclic"])
def test_acyclic_multiplicity_counts_components(name):
    S = cached_set(name, 16)
    assert set_classify(S).acyclic
    for w in S.words(S.horizon - 2):
        c = graph_classify(extension_graph(S, w)).component_count
        assert extension_stats(S, w).m == 1 - c


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "chacon",
                                  "cassaigne-acyclic", "cassaigne-neutral"])
def test_acyclic_weak_connected_strong(name):
    S = cached_set(name, 16)
    c = set_classify(S)
    labels = set(neutrality_classification(S).labels.values())
    if c.acyclic:
        assert "strong" not in labels
    if c.connected:
        assert "weak" not in labels


# -- generalized extension graphs over sampled codes --------------------------------------

@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "cassaigne-acyclic"])
def test_generalized_graphs_acyclic(name):
    S = cached_set(name, 14)
    rng = random.Random(7)
    prefix = maximal_prefix_codes(S, 3)
    suffix = maximal_suffix_codes(S, 3)
    checked = 0
    for w in S.words(4):
        for U in sample(suffix, rng, 6):
            for V in sample(prefix, rng, 6):
                # subsets of codes are codes, maximal or not
                U2 = frozenset(u for u in U if rng.random() < 0.7) or U
                V2 = frozenset(v for v in V if rng.random() < 0.7) or V
                g = generalized_extension_graph(S, w, U2, V2)
                assert graph_classify(g).is_acyclic, (w, U2, V2)
                checked += 1
    assert checked > 100


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci"])
def test_generalized_graphs_tree(name):
    S = cached_set(name, 14)
    rng = random.Random(11)
    prefix = maximal_prefix_codes(S, 3)
    suffix = maximal_suffix_codes(S, 3)
    for w in S.words(4):
        for U in sample(suffix, rng, 8):
            for V in sample(prefix, rng, 8):
                g = generalized_extension_graph(S, w, U, V)
                assert graph_classify(g).is_tree, (w, U, V)


def test_generalized_graph_cycle_in_non_acyclic_set(cas_n):
    # sanity check that the sampled property can fail
    g = generalized_extension_graph(cas_n, "", cas_n.letters, cas_n.letters)
    assert not graph_classify(g).is_acyclic
