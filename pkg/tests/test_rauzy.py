import random

import pytest
from hypothesis import given, settings, strategies as st

from treesets.automata import is_rose
from treesets.codes import bifix_decode, coding_morphism
from treesets.errors import HorizonError, InputError, PreconditionError
from treesets.extension import set_classify
from treesets.factors import build_factor_set, neutrality_classification, recurrence_check
from treesets.rauzy import (cycle_code, factorizes_over, quotient_graph, rauzy_graph,
                            rauzy_group, return_words, theta_n_partition,
                            theta_quotient_check, verify_return_theorem)
from treesets.words import EMPTY, as_word

from conftest import cached_set


def W(*ws):
    return {as_word(w) for w in ws}


def decoded_fibonacci(N=24):
    return bifix_decode(cached_set("fibonacci", N),
                        coding_morphism({"u": "aa", "v": "ab", "w": "ba"}))


# -- Rauzy graphs ----------------------------------------------------------------------

def test_fibonacci_g7(fib):
    G = rauzy_graph(fib, 7)
    assert len(G.vertices) == 8 and G.is_strongly_connected()


def test_chacon_g1(chacon):
    G = rauzy_graph(chacon, 1)
    assert len(G.vertices) == 3 and len(G.edges) == 5


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "chacon"])
def test_order_zero_is_rose(name):
    S = cached_set(name, 12)
    G = rauzy_graph(S, 0)
    assert G.vertices == (EMPTY,)
    assert {a for _, a, _ in G.edges} == set(S.alphabet.letters)
    assert rauzy_group(S, 0).describes_free_group


def test_rauzy_order_bounds(fib):
    with pytest.raises(HorizonError):
        rauzy_graph(fib, fib.horizon)
    with pytest.raises(HorizonError):
        theta_n_partition(fib, 0)


def test_rauzy_automaton_base_checked(fib):
    with pytest.raises(InputError):
        rauzy_graph(fib, 2).automaton("bb", "ab")


@pytest.mark.parametrize("name", ["fibonacci", "chacon", "cassaigne-neutral"])
def test_edges_are_factors(name):
    S = cached_set(name, 16)
    for n in range(0, 8):
        G = rauzy_graph(S, n)
        for x, a, y in G.edges:
            assert x + (a,) in S and (x + (a,))[1:] == y
        assert G.is_strongly_connected()


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "chacon"])
def test_path_property_stored_words(name):
    # every stored uw with |u| = n is a path from u to the suffix of uw
    S = cached_set(name, 14)
    for n in (1, 2, 3):
        G = rauzy_graph(S, n)
        A = {(x, a): y for x, a, y in G.edges}
        for y in S.words():
            if len(y) <= n:
                continue
            p = y[:n]
            for a in y[n:]:
                p = A[(p, a)]
            assert p == y[len(y) - n:]


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "chacon"])
def test_path_labels_are_factors(name):
    # labels of paths of length <= n+1 are stored factors
    S = cached_set(name, 14)
    for n in (1, 2, 3):
        G = rauzy_graph(S, n)
        out = G.out_edges()
        for x in G.vertices:
            frontier = [(x, EMPTY)]
            for _ in range(n + 1):
                frontier = [(y, lab + (a,)) for v, lab in frontier for a, y in out.get(v, [])]
                for _, lab in frontier:
                    assert lab in S


# -- Rauzy groups -------------------------------------------------------------------------

def test_fibonacci_g7_folds_to_rose(fib):
    g = rauzy_group(fib, 7, "aababaa")
    assert g.describes_free_group and len(g.automaton) == 1


def test_chacon_g1_not_rose(chacon):
    g = rauzy_group(chacon, 1, "a")
    assert not g.describes_free_group


def test_rauzy_group_needs_strong_connectivity():
    S = build_factor_set(["aab"], 3)
    with pytest.raises(PreconditionError):
        rauzy_group(S, 1)


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci"])
def test_tree_sets_rauzy_groups_are_free(name):
    S = cached_set(name, 16)
    for n in range(6):
        for base in S.of_length(n):
            assert rauzy_group(S, n, base).describes_free_group


def test_cycle_code_factorizes_over_returns(fib):
    code, complete = cycle_code(fib, 7, "aababaa")
    assert complete and code == W("babaa", "baababaa")
    assert factorizes_over(code, return_words(fib, "aa"))


# -- theta_n ---------------------------------------------------------------------------------

def test_decoded_fibonacci_theta2():
    D = decoded_fibonacci()
    classes = set(theta_n_partition(D, 2))
    assert classes == {frozenset(W("wv", "vv")), frozenset(W("vu")), frozenset(W("ww", "uw"))}
    assert theta_quotient_check(D, 2).isomorphic
    assert set_classify(D).kind == "tree"


def test_chacon_theta1_quotient(chacon):
    q = theta_quotient_check(chacon, 1)
    assert len(q.graph.vertices) == 2 and q.isomorphic is False


def test_trivial_partition_keeps_graph(fib):
    G = rauzy_graph(fib, 4)
    q = quotient_graph(G, [frozenset([v]) for v in G.vertices], G)
    assert q.isomorphic


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci"])
def test_theta_quotient_on_connected_sets(name):
    S = cached_set(name, 16)
    assert set_classify(S).connected
    for n in range(1, 10):
        assert theta_quotient_check(S, n).isomorphic


def test_theta_quotient_fails_on_chacon(chacon):
    bad = [n for n in range(1, 8) if not theta_quotient_check(chacon, n).isomorphic]
    assert bad and bad[0] == 1


def test_sturmian_theta1_is_g0(fib):
    assert theta_n_partition(fib, 1) == [frozenset(W("a", "b"))]
    assert theta_quotient_check(fib, 1).isomorphic


# -- return words ----------------------------------------------------------------------------

def test_fibonacci_returns(fib):
    R = return_words(fib, "aa")
    assert R.complete and R.words == W("baa", "babaa")


def test_chacon_returns(chacon):
    assert return_words(chacon, "a").words == W("a", "bca", "bcbca")
    assert return_words(chacon, "ab").words == W("caab", "cbcab")


def test_cassaigne_returns(cas_n):
    assert return_words(cas_n, "1").words == W("2231", "31", "231")


def test_return_side_checked(fib):
    with pytest.raises(InputError):
        return_words(fib, "a", side="up")


def test_incomplete_returns_flagged(fib):
    # long words return only beyond the horizon
    w = fib.of_length(fib.horizon - 2)[0]
    assert not return_words(fib, w).complete


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "chacon", "cassaigne-neutral"])
def test_returns_are_first_returns(name):
    S = cached_set(name, 20)
    for w in S.words(3):
        if not w:
            continue
        for x in return_words(S, w).words:
            wx = w + x
            assert wx in S and wx[len(wx) - len(w):] == w
            assert all(wx[i:i + len(w)] != w for i in range(1, len(x)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["fibonacci", "tribonacci", "chacon", "cassaigne-neutral"]),
       st.integers(0, 10_000))
def test_left_right_cross_identity(name, seed):
    S = cached_set(name, 30)
    w = random.Random(seed).choice([u for u in S.words(3) if u])
    right = return_words(S, w, "right")
    left = return_words(S, w, "left")
    assert right.complete and left.complete
    assert {w + x for x in right.words} == {x + w for x in left.words}


# -- Return Theorem ---------------------------------------------------------------------------

def test_return_theorem_fibonacci(fib):
    c = verify_return_theorem(fib, "aa")
    assert c.cardinality == 2 and c.verdict == "basis"


def test_return_theorem_cassaigne_not_basis(cas_n):
    c = verify_return_theorem(cas_n, "1")
    assert c.cardinality == 3 and c.rank == 2 and c.verdict == "not a basis"
    assert c.card_equals_alphabet


def test_chacon_return_cardinality(chacon):
    c = verify_return_theorem(chacon, "ab")
    assert c.cardinality == 2 and not c.card_equals_alphabet


def test_return_theorem_inconclusive(fib):
    w = fib.of_length(fib.horizon - 2)[0]
    assert verify_return_theorem(fib, w).verdict == "inconclusive"


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci"])
def test_return_sets_are_bases(name):
    S = cached_set(name, 30)
    for w in S.words(4):
        if not w:
            continue
        c = verify_return_theorem(S, w)
        assert c.verdict == "basis", w


@pytest.mark.parametrize("name", ["fibonacci", "tribonacci", "cassaigne-neutral"])
def test_neutral_recurrent_return_cardinality(name):
    S = cached_set(name, 30)
    assert neutrality_classification(S).verdict == "neutral"
    assert recurrence_check(S, 3).uniform
    for w in S.words(3):
        if w:
            R = return_words(S, w)
            assert R.complete and len(R) == len(S.letters)


def test_returns_rose_via_fold(fib):
    assert is_rose(rauzy_group(fib, 3, "aba").automaton, "ab")
