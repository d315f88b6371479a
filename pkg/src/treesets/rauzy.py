"""Rauzy graphs, the θ_n quotient, groups described by Rauzy graphs, and
first return words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .automata import Automaton, first_return_code, fold_graph, is_rose, rank, stallings_automaton
from .codes import in_star
from .errors import HorizonError, InputError, PreconditionError
from .factors import FactorSet
from .graphs import LabeledGraph, labeled_isomorphic, quotient
from .extension import extension_graph
from .words import Word, WordLike, as_word, show


@dataclass(frozen=True)
class RauzyGraph(LabeledGraph):
    """G_n(S): vertices S ∩ A^n, edges (x, a, y) with xa in S ∩ Ay."""

    order: int = 0

    def automaton(self, base: WordLike, alphabet: Sequence[str]) -> Automaton:
        """The simple automaton (Q, base, base) read off the graph."""
        b = as_word(base)
        if b not in self.vertices:
            raise InputError(f"{show(b)} is not a vertex of G_{self.order}")
        delta = {(p, a): q for p, a, q in self.edges}
        return Automaton(self.vertices, b, delta, alphabet)

    def to_dot(self, name: str = "G", fmt=None, base=None) -> str:
        return super().to_dot(name or f"G{self.order}", fmt=fmt or show, base=base)


def rauzy_graph(S: FactorSet, n: int) -> RauzyGraph:
    if n < 0 or n > S.horizon - 1:
        raise HorizonError(f"order {n} needs 0 <= n <= N - 1 = {S.horizon - 1}")
    verts = tuple(S.of_length(n))
    edges = set()
    for x in verts:
        for a in S.right(x):
            xa = x + (a,)
            edges.add((x, a, xa[1:]))
    return RauzyGraph(verts, frozenset(edges), order=n)


def theta_n_partition(S: FactorSet, n: int) -> List[FrozenSet[Word]]:
    """Classes of θ_n: ax ~ bx when a, b are connected in E(x)."""
    if n < 1 or n > S.horizon - 1:
        raise HorizonError(f"order {n} needs 1 <= n <= N - 1 = {S.horizon - 1}")
    classes: List[FrozenSet[Word]] = []
    for x in S.of_length(n - 1):
        g = extension_graph(S, x)
        for comp in g.components():
            lefts = [label for side, label in comp if side == "L"]
            if lefts:
                classes.append(frozenset(label + x for label in lefts))
    classes.sort(key=lambda c: min(S.key(w) for w in c))
    return classes


@dataclass(frozen=True)
class QuotientResult:
    graph: LabeledGraph
    isomorphic: Optional[bool]


def quotient_graph(G: LabeledGraph, partition: Sequence[FrozenSet],
                   compare_with: Optional[LabeledGraph] = None) -> QuotientResult:
    """G / partition, optionally tested for isomorphism with ``compare_with``."""
    q = quotient(G, partition)
    iso = None if compare_with is None else labeled_isomorphic(q, compare_with)
    return QuotientResult(q, iso)


def theta_quotient_check(S: FactorSet, n: int) -> QuotientResult:
    """Whether G_n(S)/θ_n is isomorphic to G_{n-1}(S)."""
    return quotient_graph(rauzy_graph(S, n), theta_n_partition(S, n), rauzy_graph(S, n - 1))


@dataclass
class RauzyGroup:
    automaton: Automaton
    describes_free_group: bool
    base: Word
    order: int


def rauzy_group(S: FactorSet, n: int, base: Optional[WordLike] = None) -> RauzyGroup:
    """Fold G_n(S) based at ``base``; F_A is described iff the fold is the rose on S ∩ A."""
    G = rauzy_graph(S, n)
    if not G.is_strongly_connected():
        raise PreconditionError(f"G_{n} is not strongly connected")
    b = G.vertices[0] if base is None else as_word(base)
    A = G.automaton(b, S.alphabet.letters)
    folded = fold_graph(A.as_graph(), A.base, A.alphabet).automaton
    return RauzyGroup(folded, is_rose(folded, S.letters), b, n)


# -- return words -----------------------------------------------------------------

@dataclass(frozen=True)
class ReturnWordSet:
    """First return words to ``base``; ``complete`` certifies the set within the horizon."""

    base: Word
    side: str
    words: FrozenSet[Word]
    complete: bool

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words, key=lambda w: (len(w), w)))


def return_words(S: FactorSet, word: WordLike, side: str = "right") -> ReturnWordSet:
    w = S.require(word)
    if side not in ("right", "left"):
        raise InputError("side must be 'right' or 'left'")
    k = len(w)
    found = set()
    complete = True
    for y in S.words():
        if len(y) <= k:
            continue
        if side == "right":
            if y[:k] != w:
                continue
            pos = next((p for p in range(1, len(y) - k + 1) if y[p:p + k] == w), None)
            if pos is None:
                if len(y) == S.horizon:
                    complete = False
                continue
            found.add(y[k:pos + k])
        else:
            if y[len(y) - k:] != w:
                continue
            end = len(y) - k
            pos = next((q for q in range(end - 1, -1, -1) if y[q:q + k] == w), None)
            if pos is None:
                if len(y) == S.horizon:
                    complete = False
                continue
            found.add(y[pos:end])
    return ReturnWordSet(w, side, frozenset(found), complete)


@dataclass
class ReturnTheoremCheck:
    base: Word
    cardinality: int
    alphabet_size: int
    complete: bool
    rank: Optional[int] = None
    generates_free_group: Optional[bool] = None

    @property
    def card_equals_alphabet(self) -> Optional[bool]:
        return self.cardinality == self.alphabet_size if self.complete else None

    @property
    def is_basis(self) -> Optional[bool]:
        if not self.complete:
            return None
        return (bool(self.generates_free_group) and self.rank == self.alphabet_size
                and self.cardinality == self.alphabet_size)

    @property
    def verdict(self) -> str:
        if not self.complete:
            return "inconclusive"
        return "basis" if self.is_basis else "not a basis"


def verify_return_theorem(S: FactorSet, word: WordLike) -> ReturnTheoremCheck:
    R = return_words(S, word)
    letters = S.letters
    check = ReturnTheoremCheck(R.base, len(R), len(letters), R.complete)
    if R.complete and R.words:
        A = stallings_automaton(R.words, S.alphabet.letters)
        check.rank = rank(A)
        check.generates_free_group = is_rose(A, letters)
    return check


def cycle_code(S: FactorSet, n: int, base: WordLike, max_len: Optional[int] = None
               ) -> Tuple[FrozenSet[Word], bool]:
    """Prefix code generating the submonoid recognized by G_n(S) based at ``base``."""
    G = rauzy_graph(S, n)
    A = G.automaton(base, S.alphabet.letters)
    return first_return_code(A, max_len or 4 * len(G.vertices))


def factorizes_over(words, R: ReturnWordSet) -> bool:
    return all(in_star(R.words, w) for w in words)
