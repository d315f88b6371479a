"""Deterministic automata, Stallings folding and the subgroups they describe.

An :class:`Automaton` is a partial deterministic automaton with a base
state.  The same type carries literal and minimal automata of X*, folded
(Stallings) automata, automata read off Rauzy graphs, and coset automata.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from .codes import CodeLike, require_prefix
from .errors import InputError, PreconditionError
from .graphs import LabeledGraph
from .words import EMPTY, SignedLetter, Word, WordLike, as_word, reduce, show

State = Hashable


class Automaton:
    """Partial deterministic automaton ``(Q, base, T)`` over ``alphabet``."""

    def __init__(self, states: Iterable[State], base: State,
                 transitions: Dict[Tuple[State, str], State],
                 alphabet: Sequence[str], terminals: Optional[Iterable[State]] = None):
        self.states: Tuple[State, ...] = tuple(dict.fromkeys(states))
        self.base = base
        self.alphabet: Tuple[str, ...] = tuple(alphabet)
        self.terminals: FrozenSet[State] = frozenset([base] if terminals is None else terminals)
        self.delta: Dict[Tuple[State, str], State] = dict(transitions)
        known = set(self.states)
        if base not in known:
            raise InputError(f"base state {base!r} not among states")
        for (p, a), q in self.delta.items():
            if p not in known or q not in known:
                raise InputError(f"transition {(p, a, q)} uses an unknown state")
            if a not in self.alphabet:
                raise InputError(f"transition letter {a!r} not in alphabet")

    def __repr__(self):
        return f"Automaton({len(self.states)} states, {len(self.delta)} transitions)"

    def __len__(self):
        return len(self.states)

    def step(self, p: State, a: str) -> Optional[State]:
        return self.delta.get((p, a))

    def run(self, word: WordLike, start: Optional[State] = None) -> Optional[State]:
        p = self.base if start is None else start
        for a in as_word(word):
            p = self.delta.get((p, a))
            if p is None:
                return None
        return p

    def accepts(self, word: WordLike) -> bool:
        return self.run(word) in self.terminals

    def edges(self) -> List[Tuple[State, str, State]]:
        index = {s: i for i, s in enumerate(self.states)}
        letter = {a: i for i, a in enumerate(self.alphabet)}
        return sorted(((p, a, q) for (p, a), q in self.delta.items()),
                      key=lambda e: (index[e[0]], letter[e[1]], index[e[2]]))

    def preimages(self, q: State, a: str) -> List[State]:
        return [p for (p, b), r in self.delta.items() if b == a and r == q]

    def as_graph(self) -> LabeledGraph:
        return LabeledGraph(self.states, frozenset(self.edges()))

    def to_dot(self, name: str = "A", fmt=None) -> str:
        fmt = fmt or _state_name
        return self.as_graph().to_dot(name, fmt=fmt, base=self.base)

    def to_text(self) -> str:
        lines = [f"base {_state_name(self.base)}"]
        if self.terminals != {self.base}:
            lines.append("terminal " + " ".join(_state_name(t) for t in self.states
                                                if t in self.terminals))
        for p, a, q in self.edges():
            lines.append(f"{_state_name(p)} {a} {_state_name(q)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, alphabet: Optional[Sequence[str]] = None) -> "Automaton":
        """Parse the ``base p`` / ``p a q`` line format written by :meth:`to_text`."""
        base = None
        terminals = None
        states: List[str] = []
        delta = {}
        letters: List[str] = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "base" and len(parts) == 2:
                if base is not None:
                    raise InputError("base state declared twice")
                base = parts[1]
                states.append(base)
                continue
            if base is None:
                raise InputError("the base state must be declared first")
            if parts[0] == "terminal":
                terminals = parts[1:]
                states.extend(parts[1:])
                continue
            if len(parts) != 3:
                raise InputError(f"expected 'p a q', got {line!r}")
            p, a, q = parts
            if (p, a) in delta and delta[(p, a)] != q:
                raise InputError(f"nondeterministic transition on {(p, a)}")
            delta[(p, a)] = q
            states.extend([p, q])
            if a not in letters:
                letters.append(a)
        if base is None:
            raise InputError("no base state declared")
        return cls(states, base, delta, alphabet or letters, terminals)


def _state_name(s: State) -> str:
    if isinstance(s, tuple) and all(isinstance(a, str) for a in s):
        return show(s, empty="1")
    return str(s)


# -- constructions ----------------------------------------------------------

def _alphabet_of(words: Iterable[Word], alphabet: Optional[Sequence[str]]) -> Tuple[str, ...]:
    if alphabet is not None:
        return tuple(alphabet)
    return tuple(sorted({a for w in words for a in w}))


def literal_automaton(X: CodeLike, alphabet: Optional[Sequence[str]] = None) -> Automaton:
    """Literal automaton of X*: states are the proper prefixes of X, base ε."""
    X = require_prefix(X)
    alpha = _alphabet_of(X.words, alphabet)
    P = X.proper_prefixes
    states = sorted(P, key=lambda w: (len(w), [alpha.index(a) for a in w]))
    delta = {}
    for p in states:
        for a in alpha:
            pa = p + (a,)
            if pa in P:
                delta[(p, a)] = pa
            elif pa in X.words:
                delta[(p, a)] = EMPTY
    return Automaton(states, EMPTY, delta, alpha)


def minimal_automaton(X: CodeLike, alphabet: Optional[Sequence[str]] = None) -> Automaton:
    """Minimal automaton of X* for a finite prefix code X.

    Moore refinement of the (trim) literal automaton; each state is named by
    the shortlex-least prefix of its residual class.
    """
    return minimize(literal_automaton(X, alphabet))


def minimize(A: Automaton) -> Automaton:
    """Moore partition refinement of a trim partial automaton."""
    cls = {p: int(p in A.terminals) for p in A.states}
    while True:
        sig = {p: (cls[p],) + tuple(cls.get(A.step(p, a), -1) if A.step(p, a) is not None
                                    else -1 for a in A.alphabet)
               for p in A.states}
        ids: Dict[tuple, int] = {}
        new = {p: ids.setdefault(sig[p], len(ids)) for p in A.states}
        if len(ids) == len(set(cls.values())):
            cls = new
            break
        cls = new
    rep: Dict[int, State] = {}
    for p in _bfs_order(A):
        rep.setdefault(cls[p], p)
    for p in A.states:
        rep.setdefault(cls[p], p)
    states = [rep[cls[p]] for p in _bfs_order(A)]
    delta = {(rep[cls[p]], a): rep[cls[q]] for (p, a), q in A.delta.items()}
    terminals = {rep[cls[t]] for t in A.terminals}
    return Automaton(states, rep[cls[A.base]], delta, A.alphabet, terminals)


def _bfs_order(A: Automaton, inverse: bool = True) -> List[State]:
    """States in breadth-first order from the base.

    Forward transitions are tried in alphabet order, then backward ones
    where the preimage is unique; unreachable states come last in their
    stored order.
    """
    seen = {A.base}
    order = [A.base]
    queue = deque([A.base])
    back: Dict[Tuple[State, str], List[State]] = {}
    if inverse:
        for (p, a), q in A.delta.items():
            back.setdefault((q, a), []).append(p)
    while queue:
        p = queue.popleft()
        nxt = [A.delta.get((p, a)) for a in A.alphabet]
        if inverse:
            for a in A.alphabet:
                pre = back.get((p, a), [])
                nxt.append(pre[0] if len(pre) == 1 else None)
        for q in nxt:
            if q is not None and q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    order.extend(s for s in A.states if s not in seen)
    return order


def canonical(A: Automaton) -> Automaton:
    """Rename states 1..k in breadth-first order from the base."""
    order = _bfs_order(A)
    name = {s: i + 1 for i, s in enumerate(order)}
    delta = {(name[p], a): name[q] for (p, a), q in A.delta.items()}
    return Automaton([name[s] for s in order], 1, delta, A.alphabet,
                     {name[t] for t in A.terminals})


def isomorphic(A: Automaton, B: Automaton) -> bool:
    """Base-preserving isomorphism.

    Exact when every state is reachable from the base by deterministic
    moves (trim deterministic automata, connected reversible automata).
    """
    if set(A.alphabet) != set(B.alphabet) or len(A) != len(B):
        return False
    ca, cb = canonical(A), canonical(B)
    return ca.delta == cb.delta and ca.terminals == cb.terminals


# -- predicates ---------------------------------------------------------------

@dataclass(frozen=True)
class AutomatonFlags:
    is_simple: bool
    is_trim: bool
    is_complete: bool
    is_reversible: bool
    is_group_automaton: bool


def _reachable(A: Automaton, start: Iterable[State], backward: bool = False) -> set:
    adj: Dict[State, List[State]] = {}
    for (p, a), q in A.delta.items():
        src, dst = (q, p) if backward else (p, q)
        adj.setdefault(src, []).append(dst)
    seen = set(start)
    stack = list(seen)
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def is_trim(A: Automaton) -> bool:
    everything = set(A.states)
    return (_reachable(A, [A.base]) == everything
            and _reachable(A, A.terminals, backward=True) == everything)


def is_simple(A: Automaton) -> bool:
    return A.terminals == {A.base} and is_trim(A)


def is_injective(A: Automaton) -> bool:
    """Each letter acts as a partial injection."""
    seen = set()
    for (p, a), q in A.delta.items():
        if (q, a) in seen:
            return False
        seen.add((q, a))
    return True


def is_complete(A: Automaton) -> bool:
    return all((p, a) in A.delta for p in A.states for a in A.alphabet)


def predicates(A: Automaton) -> AutomatonFlags:
    simple = is_simple(A)
    reversible = simple and is_injective(A)
    complete = is_complete(A)
    return AutomatonFlags(simple, is_trim(A), complete, reversible, reversible and complete)


# -- Stallings folding ----------------------------------------------------------

@dataclass
class FoldReport:
    """Merges performed, as ``(p, q, letter)`` in input state names, and the result."""

    merges: List[Tuple[State, State, str]]
    automaton: Automaton
    classes: List[FrozenSet[State]] = field(default_factory=list)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, keep, drop):
        self.parent[self.find(drop)] = self.find(keep)


def _violations(edges, index) -> List[Tuple[State, State, str]]:
    fwd: Dict[Tuple[State, str], List[State]] = {}
    bwd: Dict[Tuple[State, str], List[State]] = {}
    for p, a, q in edges:
        fwd.setdefault((p, a), []).append(q)
        bwd.setdefault((q, a), []).append(p)
    out = []
    for table in (fwd, bwd):
        for (_, a), ends in table.items():
            ends = sorted(set(ends), key=index.__getitem__)
            for other in ends[1:]:
                out.append((ends[0], other, a))
    out.sort(key=lambda v: (index[v[0]], index[v[1]], v[2]))
    return out


def stallings_fold(A: Automaton, rng: Optional[random.Random] = None,
                   rename: bool = True) -> FoldReport:
    """Fold until no two edges with the same label share a source or a target.

    Edges are treated together with their formal inverses, so a letter
    entering one state from two sources forces a merge just as a letter
    leaving one state towards two targets does.  Merges are taken in state
    order, or at random when ``rng`` is given.  With ``rename`` the result's
    states are renumbered 1..k breadth-first from the base; otherwise each
    state is named by the first member of its class.
    """
    return fold_graph(A.as_graph(), A.base, A.alphabet, rng, rename,
                      terminals=A.terminals)


def fold_graph(g: LabeledGraph, base: State, alphabet: Sequence[str],
               rng: Optional[random.Random] = None, rename: bool = True,
               terminals: Optional[Iterable[State]] = None) -> FoldReport:
    """Stallings folding of an arbitrary (possibly nondeterministic) labeled graph."""
    index = {s: i for i, s in enumerate(g.vertices)}
    uf = _UnionFind(g.vertices)
    edges = set(g.edges)
    merges = []
    while True:
        edges = {(uf.find(p), a, uf.find(q)) for p, a, q in edges}
        todo = _violations(edges, index)
        if not todo:
            break
        p, q, a = rng.choice(todo) if rng is not None else todo[0]
        merges.append((p, q, a))
        uf.union(p, q)  # p precedes q in state order
    groups: Dict[State, List[State]] = {}
    for s in g.vertices:
        groups.setdefault(uf.find(s), []).append(s)
    states = [s for s in g.vertices if uf.find(s) == s]
    delta = {(p, a): q for p, a, q in edges}
    terms = {uf.find(t) for t in (terminals if terminals is not None else [base])}
    folded = Automaton(states, uf.find(base), delta, alphabet, terms)
    classes = [frozenset(groups[s]) for s in states]
    return FoldReport(merges, canonical(folded) if rename else folded, classes)


def replay_merges(A: Automaton, merges: Iterable[Tuple[State, State, str]]) -> Automaton:
    """Apply a merge log to ``A`` and return the canonically named quotient."""
    index = {s: i for i, s in enumerate(A.states)}
    uf = _UnionFind(A.states)
    for p, q, _ in merges:
        rp, rq = uf.find(p), uf.find(q)
        if rp != rq:
            keep, drop = (rp, rq) if index[rp] < index[rq] else (rq, rp)
            uf.union(keep, drop)
    states = [s for s in A.states if uf.find(s) == s]
    delta = {(uf.find(p), a): uf.find(q) for (p, a), q in A.delta.items()}
    return canonical(Automaton(states, uf.find(A.base), delta, A.alphabet,
                               {uf.find(t) for t in A.terminals}))


def bouquet(X: Iterable, alphabet: Optional[Sequence[str]] = None
            ) -> Tuple[LabeledGraph, Tuple[str, ...]]:
    """Unfolded bouquet at base 0: one petal cycle per generator.

    Generators may be plain or signed words; an inverse letter is an edge
    traversed backward.  Returns the graph and its alphabet.
    """
    petals = []
    for x in X:
        w = as_word(x) if isinstance(x, str) else tuple(x)
        w = reduce(tuple(a if isinstance(a, SignedLetter) else SignedLetter(a, 1) for a in w))
        if not w:
            raise InputError("generators must be nonempty reduced words")
        petals.append(w)
    if not petals:
        raise InputError("empty generating set")
    alpha = _alphabet_of([[x.base for x in w] for w in petals], alphabet)
    states: List[State] = [0]
    edges = set()
    for i, w in enumerate(petals):
        path = [0] + [(i, j) for j in range(1, len(w))] + [0]
        states.extend(path[1:-1])
        for j, x in enumerate(w):
            p, q = path[j], path[j + 1]
            edges.add((p, x.base, q) if x.sign > 0 else (q, x.base, p))
    return LabeledGraph(tuple(states), frozenset(edges)), alpha


def fold_bouquet(X: Iterable, alphabet: Optional[Sequence[str]] = None,
                 rng: Optional[random.Random] = None) -> FoldReport:
    g, alpha = bouquet(X, alphabet)
    return fold_graph(g, 0, alpha, rng)


def stallings_automaton(X: Iterable, alphabet: Optional[Sequence[str]] = None) -> Automaton:
    """Stallings automaton of the subgroup generated by ``X`` (bouquet fold)."""
    return fold_bouquet(X, alphabet).automaton


# -- described subgroup ---------------------------------------------------------

def _require_reversible(A: Automaton) -> None:
    if not is_injective(A):
        raise PreconditionError("automaton is not folded (some letter acts non-injectively)")


def membership(A: Automaton, g) -> bool:
    """Whether the reduced word ``g`` labels a generalized path base -> base."""
    _require_reversible(A)
    back = {(q, a): p for (p, a), q in A.delta.items()}
    p = A.base
    for x in reduce(g):
        p = A.delta.get((p, x.base)) if x.sign > 0 else back.get((p, x.base))
        if p is None:
            return False
    return p == A.base


def rank(A: Automaton) -> int:
    """Rank of the described subgroup: edges - states + 1."""
    _require_reversible(A)
    if _reachable_undirected(A) != set(A.states):
        raise PreconditionError("automaton is not connected")
    return len(A.delta) - len(A.states) + 1


def _reachable_undirected(A: Automaton) -> set:
    adj: Dict[State, List[State]] = {}
    for (p, _), q in A.delta.items():
        adj.setdefault(p, []).append(q)
        adj.setdefault(q, []).append(p)
    seen = {A.base}
    stack = [A.base]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def subgroup_index(A: Automaton) -> float:
    """Index of the described subgroup: the state count for a group automaton, else inf."""
    _require_reversible(A)
    if is_complete(A):
        return len(A.states)
    return math.inf


def is_rose(A: Automaton, letters: Iterable[str]) -> bool:
    """One state carrying a loop for every letter in ``letters``."""
    letters = set(letters)
    return (len(A.states) == 1
            and {a for (_, a) in A.delta} == letters
            and all(q == A.base for q in A.delta.values()))


def first_return_code(A: Automaton, max_len: int) -> Tuple[FrozenSet[Word], bool]:
    """Labels of paths base -> base not visiting base in between, up to ``max_len``.

    These generate the submonoid recognized by a simple automaton.  The flag
    is True when no path is still open at ``max_len`` (the list is complete).
    """
    out = set()
    frontier = [(A.base, EMPTY)]
    for _ in range(max_len):
        nxt = []
        for p, w in frontier:
            for a in A.alphabet:
                q = A.delta.get((p, a))
                if q is None:
                    continue
                if q == A.base:
                    out.add(w + (a,))
                else:
                    nxt.append((q, w + (a,)))
        frontier = nxt
    return frozenset(out), not frontier
