"""Subgroups generated by bifix codes: incidence graphs, the θ_X
equivalence, coset automata, and checks of freeness and saturation."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .automata import Automaton, _alphabet_of, literal_automaton, membership, rank, stallings_automaton
from .codes import CodeLike, as_code, in_star, require_bifix, require_contained
from .errors import ConsistencyError, HorizonError
from .factors import FactorSet
from .graphs import LEFT, BipartiteGraph
from .words import EMPTY, Word, WordLike, as_word, show


def _shortlex(alpha: Sequence[str]):
    index = {a: i for i, a in enumerate(alpha)}
    return lambda w: (len(w), [index[a] for a in w])


def incidence_graph(X: CodeLike, alphabet: Optional[Sequence[str]] = None) -> BipartiteGraph:
    """G(X): nonempty proper prefixes P′ against nonempty proper suffixes S′."""
    X = require_bifix(X)
    key = _shortlex(_alphabet_of(X.words, alphabet))
    left = sorted(X.proper_prefixes - {EMPTY}, key=key)
    right = sorted({x[i:] for x in X.words for i in range(1, len(x))}, key=key)
    edges = frozenset((x[:i], x[i:]) for x in X.words for i in range(1, len(x)))
    return BipartiteGraph(tuple(left), tuple(right), edges, order=key)


def theta_x_partition(X: CodeLike, alphabet: Optional[Sequence[str]] = None
                      ) -> List[FrozenSet[Word]]:
    """Classes of θ_X on P: {ε}, then P′ ∩ each component of G(X)."""
    X = require_bifix(X)
    g = incidence_graph(X, alphabet)
    classes = [frozenset([EMPTY])]
    for comp in g.components():
        part = frozenset(label for side, label in comp if side == LEFT)
        if part:
            classes.append(part)
    key = g.order
    return sorted(classes, key=lambda c: min(key(w) for w in c))


def coset_automaton(X: CodeLike, alphabet: Optional[Sequence[str]] = None) -> Automaton:
    """B_X: the literal automaton of X* modulo θ_X.

    States are named by the shortlex-least member of each class.  Raises
    :class:`ConsistencyError` with a witness (p, q, a) when two equivalent
    prefixes are sent to different classes.
    """
    X = require_bifix(X)
    lit = literal_automaton(X, alphabet)
    key = _shortlex(lit.alphabet)
    classes = theta_x_partition(X, lit.alphabet)
    name: Dict[Word, Word] = {}
    for c in classes:
        least = min(c, key=key)
        for p in c:
            name[p] = least
    delta: Dict[Tuple[Word, str], Word] = {}
    source: Dict[Tuple[Word, str], Word] = {}
    for (p, a), q in sorted(lit.delta.items(), key=lambda t: (key(t[0][0]), t[0][1])):
        k = (name[p], a)
        if k in delta and delta[k] != name[q]:
            raise ConsistencyError(
                f"θ_X is not compatible with the transitions: {show(source[k])} and {show(p)}"
                f" are equivalent but move to different classes on {a}",
                witness=(source[k], p, a))
        delta[k] = name[q]
        source.setdefault(k, p)
    states = sorted(set(name.values()), key=key)
    return Automaton(states, EMPTY, delta, lit.alphabet)


def theta_x_compatible(X: CodeLike) -> Optional[Tuple[Word, Word, str]]:
    """Exhaustive check that p ≡ q implies p·a ≡ q·a; returns a violation or None."""
    X = require_bifix(X)
    lit = literal_automaton(X)
    cls = {p: c for c in theta_x_partition(X, lit.alphabet) for p in c}
    for c in theta_x_partition(X, lit.alphabet):
        members = sorted(c, key=_shortlex(lit.alphabet))
        for p, q in product(members, repeat=2):
            for a in lit.alphabet:
                pa, qa = lit.step(p, a), lit.step(q, a)
                if pa is not None and qa is not None and cls[pa] != cls[qa]:
                    return p, q, a
    return None


@dataclass(frozen=True)
class FreenessReport:
    free: bool
    rank: int
    size: int


def is_free(X: Iterable[WordLike], alphabet: Optional[Sequence[str]] = None) -> FreenessReport:
    """X is free iff the subgroup it generates has rank |X|."""
    words = sorted({as_word(x) for x in X}, key=lambda w: (len(w), w))
    r = rank(stallings_automaton(words, alphabet))
    return FreenessReport(r == len(words), r, len(words))


@dataclass
class SaturationReport:
    saturated: bool
    bound: int
    horizon: int
    violations: List[Word] = field(default_factory=list)
    checked: int = 0

    @property
    def caveat(self) -> str:
        return f"checked stored words of length <= {self.bound} at horizon N={self.horizon}"


def _check_bound(S: FactorSet, L: int) -> None:
    if L > S.horizon:
        raise HorizonError(f"bound {L} exceeds horizon N={S.horizon}")


def verify_saturation(X: CodeLike, S: FactorSet, L: int) -> SaturationReport:
    """Words of S up to length L lying in ⟨X⟩ but not in X*."""
    X = as_code(X)
    require_contained(X, S)
    _check_bound(S, L)
    A = stallings_automaton(X.words, S.alphabet.letters)
    bad = []
    checked = 0
    for w in S.words(L):
        checked += 1
        if membership(A, w) and not in_star(X, w):
            bad.append(w)
    return SaturationReport(not bad, L, S.horizon, bad, checked)


def group_words_outside(X: CodeLike, S: FactorSet, length: int) -> List[Word]:
    """Positive words of the given length in ⟨X⟩ that are not in S."""
    X = as_code(X)
    A = stallings_automaton(X.words, S.alphabet.letters)
    out = []
    for w in product(S.alphabet.letters, repeat=length):
        if w not in S and membership(A, w):
            out.append(w)
    return out


def verify_unitary_corollary(X: CodeLike, S: FactorSet, L: int
                             ) -> List[Tuple[Word, Word, str]]:
    """Pairs in ⟨X⟩ ∩ S breaking unitarity, as (u, v, side).

    ``side`` is "right" when u, uv ∈ ⟨X⟩ ∩ S but v ∉ X*, and "left" when
    v, uv ∈ ⟨X⟩ ∩ S but u ∉ X*.
    """
    X = as_code(X)
    require_contained(X, S)
    _check_bound(S, L)
    A = stallings_automaton(X.words, S.alphabet.letters)
    H = {w for w in S.words(L) if membership(A, w)}
    out = []
    for w in sorted(H, key=S.key):
        for i in range(1, len(w)):
            u, v = w[:i], w[i:]
            if u in H and not in_star(X, v):
                out.append((u, v, "right"))
            if v in H and not in_star(X, u):
                out.append((u, v, "left"))
    return out
