import random

import pytest

from treesets.automata import isomorphic, literal_automaton, predicates, stallings_automaton
from treesets.codes import Code, code_role
from treesets.errors import CodeRoleError, ConsistencyError, ContainmentError, HorizonError
from treesets.graphs import graph_classify
from treesets.subgroups import (coset_automaton, group_words_outside, incidence_graph,
                                is_free, theta_x_compatible, theta_x_partition,
                                verify_saturation, verify_unitary_corollary)
from treesets.words import EMPTY, as_word, height, invert, parse_signed

from conftest import cached_set
from oracles import admissible_product

CAS2 = ["ab", "ac", "bc", "ca", "cd", "da"]
F3 = ["a", "baab", "babaabab", "babaabaabab"]


def W(*ws):
    return {as_word(w) for w in ws}


def class_of(classes, w):
    return next(c for c in classes if as_word(w) in c)


def acyclic_bifix_codes():
    """Bifix codes drawn from sets classified acyclic."""
    fib = cached_set("fibonacci", 24)
    cas = cached_set("cassaigne-acyclic", 24)
    trib = cached_set("tribonacci", 24)
    rng = random.Random(3)
    codes = [F3, CAS2, ["a"], ["aa", "ab", "ba"]]
    for S in (fib, cas, trib):
        for n in (2, 3, 4):
            layer = S.of_length(n)
            codes.append(layer)
            for _ in range(4):
                codes.append(rng.sample(layer, rng.randint(1, len(layer))))
    named = {"fib": fib, "cas": cas, "trib": trib}
    return [pytest.param(c, S, id=f"{tag}-{i}") for i, c in enumerate(codes)
            for tag, S in named.items() if all(as_word(x) in S for x in c)]


CODES = acyclic_bifix_codes()


# -- incidence graph -----------------------------------------------------------------------

def test_incidence_graph_cassaigne_code():
    g = incidence_graph(CAS2)
    assert {("".join(p), "".join(s)) for p, s in g.edges} == {
        ("a", "b"), ("a", "c"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "a")}
    v = graph_classify(g)
    assert v.is_acyclic and v.component_count == 2


def test_incidence_graph_single_letter():
    g = incidence_graph(["a"])
    assert not g.left and not g.right and not g.edges


def test_incidence_graph_three_words():
    g = incidence_graph(["aa", "ab", "ba"])
    assert g.left == (as_word("a"), as_word("b")) and g.right == g.left
    assert len(g.edges) == 3 and graph_classify(g).is_tree


def test_incidence_graph_needs_bifix():
    with pytest.raises(CodeRoleError):
        incidence_graph(["aa", "ab", "b"])


@pytest.mark.parametrize("code,S", CODES)
def test_incidence_graph_acyclic_with_code_components(code, S):
    g = incidence_graph(code)
    assert graph_classify(g).is_acyclic
    for comp in g.components():
        lefts = [w for side, w in comp if side == "L"]
        rights = [w for side, w in comp if side == "R"]
        if lefts:
            assert code_role(lefts).is_suffix
        if rights:
            assert code_role(rights).is_prefix


# -- theta_X -----------------------------------------------------------------------------------

def test_theta_x_degree_three_code():
    classes = theta_x_partition(F3)
    assert classes[0] == frozenset([EMPTY])
    assert class_of(classes, "b") != class_of(classes, "ba")
    assert len(classes) == 3


def test_theta_x_trivial():
    assert theta_x_partition(["a"]) == [frozenset([EMPTY])]


def test_theta_x_cassaigne_code():
    classes = theta_x_partition(CAS2)
    assert set(classes) == {frozenset([EMPTY]), frozenset(W("a", "b")),
                            frozenset(W("c", "d"))}


@pytest.mark.parametrize("code,S", CODES)
def test_theta_x_compatible_on_acyclic_codes(code, S):
    assert theta_x_compatible(code) is None


# -- coset automaton ---------------------------------------------------------------------------

def test_coset_automaton_degree_three_code():
    B = coset_automaton(F3)
    assert len(B) == 3 and predicates(B).is_group_automaton
    for w in ("a", "bb", "baab", "babab"):
        assert B.accepts(w)
    for w in ("b", "ba", "ab"):
        assert not B.accepts(w)
    assert isomorphic(B, stallings_automaton(F3))


def test_coset_automaton_small_codes():
    assert len(coset_automaton(["aa", "ab", "ba"])) == 2
    assert len(coset_automaton(["a"])) == 1


def test_coset_automaton_consistency_witness():
    X = ["baa", "bab", "bb"]
    with pytest.raises(ConsistencyError) as err:
        coset_automaton(X)
    assert err.value.witness == (as_word("b"), as_word("ba"), "a")
    assert theta_x_compatible(X) == err.value.witness


@pytest.mark.parametrize("code,S", CODES)
def test_coset_automaton_is_stallings(code, S):
    B = coset_automaton(code, S.alphabet.letters)
    assert predicates(B).is_reversible
    assert isomorphic(B, stallings_automaton(code, S.alphabet.letters))


@pytest.mark.parametrize("code,S", CODES)
def test_code_inside_return_code(code, S):
    # each x in X is a first return to the base of B_X
    B = coset_automaton(code)
    for x in code:
        p = B.base
        for i, a in enumerate(as_word(x)):
            p = B.step(p, a)
            assert p is not None
            assert (p == B.base) == (i == len(x) - 1)


def test_literal_automaton_star():
    A = literal_automaton(F3)
    assert all(A.accepts(x) for x in F3) and not A.accepts("b")


# -- freeness --------------------------------------------------------------------------------------

def test_freeness_examples():
    r = is_free(CAS2)
    assert r.free and r.rank == 6
    r = is_free(["2231", "31", "231"])
    assert not r.free and r.rank == 2
    r = is_free(["a"])
    assert r.free and r.rank == 1


@pytest.mark.parametrize("code,S", CODES)
def test_bifix_codes_of_acyclic_sets_are_free(code, S):
    assert is_free(code).free


def test_cyclic_extension_graph_breaks_freeness(cas_n):
    # E(ε) has a cycle, so A ε A ∩ S is not free
    X = cas_n.of_length(2)
    r = is_free(X)
    assert r.rank < len(X) and r.rank == 4 and len(X) == 5


# -- saturation ------------------------------------------------------------------------------------

def test_saturation_cassaigne(cas_a):
    X = cas_a.of_length(2)
    rep = verify_saturation(X, cas_a, 6)
    assert rep.saturated and rep.checked > 0
    assert "N=24" in rep.caveat
    assert set(group_words_outside(X, cas_a, 2)) == W("bb", "dd")


def test_saturation_prefix_code_violation(fib):
    rep = verify_saturation(["aa", "ab", "b"], fib, 3)
    assert not rep.saturated and as_word("a") in rep.violations
    assert set(rep.violations) == W("a", "ba", "aba")


def test_saturation_single_letter(fib):
    assert verify_saturation(["a"], fib, 4).saturated


def test_saturation_checks(fib):
    with pytest.raises(ContainmentError):
        verify_saturation(["bb"], fib, 3)
    with pytest.raises(HorizonError):
        verify_saturation(["a"], fib, fib.horizon + 1)


@pytest.mark.parametrize("code,S", CODES)
def test_saturation_on_acyclic_codes(code, S):
    rep = verify_saturation(Code(code), S, 10)
    assert rep.saturated, rep.violations


def test_unitary_corollary(cas_a, fib):
    assert verify_unitary_corollary(cas_a.of_length(2), cas_a, 8) == []
    assert verify_unitary_corollary(["a"], fib, 8) == []
    assert verify_unitary_corollary(["aa", "ab", "b"], fib, 6)


# -- height -------------------------------------------------------------------------------------------

def test_height_of_final_example():
    y = parse_signed("bc") + invert(parse_signed("ac")) + parse_signed("ab")
    assert height(y) == 1


def test_admissible_products_have_height_at_most_one(cas_a):
    X = cas_a.of_length(2)
    rng = random.Random(5)
    seen = set()
    for _ in range(200):
        y = admissible_product(rng, X, rng.randint(1, 6))
        h = height(y)
        assert h <= 1
        seen.add(h)
    assert seen == {0, 1}
