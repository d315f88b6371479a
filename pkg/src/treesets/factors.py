"""Truncated factor sets and their extension statistics.

A :class:`FactorSet` stores every factor of length at most its horizon
``N``.  Extension data (``L``, ``R``, ``E``, ``m``) is only reported for
words of length at most ``N - 2``: beyond that, edge effects of the
truncation would make words look artificially non-extendable.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import HorizonError, InputError, NotAFactorError
from .morphisms import Morphism, MorphicWord, apply_morphism, iterates
from .words import EMPTY, Alphabet, Word, WordLike, as_word, show

log = logging.getLogger(__name__)

DEFAULT_MARGIN = 2


class FactorSet:
    """A factorial set of words truncated at length ``horizon``."""

    def __init__(self, words: Iterable[Word], horizon: int, alphabet: Alphabet,
                 provenance: str = "", params: Optional[dict] = None):
        by_length: List[set] = [set() for _ in range(horizon + 1)]
        for w in words:
            if len(w) <= horizon:
                by_length[len(w)].add(w)
        by_length[0].add(EMPTY)
        self.horizon = horizon
        self.alphabet = alphabet
        self.provenance = provenance
        self.params = dict(params or {})
        self._by_length: Tuple[FrozenSet[Word], ...] = tuple(
            frozenset(s) for s in by_length)
        self._all = frozenset().union(*self._by_length)

    def __contains__(self, word) -> bool:
        return as_word(word) in self._all

    def __len__(self):
        return len(self._all)

    def __iter__(self):
        return iter(self.words())

    def __repr__(self):
        return f"FactorSet({self.provenance or 'explicit'}, N={self.horizon}, |S|={len(self)})"

    @property
    def letters(self) -> Tuple[str, ...]:
        """Letters of the alphabet that occur in the set, in alphabet order."""
        return tuple(a for a in self.alphabet if (a,) in self._all)

    def key(self, word: Sequence[str]):
        return self.alphabet.key(word)

    def of_length(self, n: int) -> List[Word]:
        """Stored words of length ``n`` in shortlex order."""
        if n < 0 or n > self.horizon:
            return []
        return sorted(self._by_length[n], key=self.key)

    def words(self, max_len: Optional[int] = None) -> List[Word]:
        top = self.horizon if max_len is None else min(max_len, self.horizon)
        out: List[Word] = []
        for n in range(top + 1):
            out.extend(self.of_length(n))
        return out

    def count(self, n: int) -> int:
        return len(self._by_length[n]) if 0 <= n <= self.horizon else 0

    def require(self, word: WordLike, max_len: Optional[int] = None) -> Word:
        w = as_word(word)
        if max_len is not None and len(w) > max_len:
            raise HorizonError(
                f"|{show(w)}| = {len(w)} exceeds {max_len} at horizon N={self.horizon}")
        if w not in self._all:
            raise NotAFactorError(f"{show(w)} is not in {self!r}")
        return w

    def left(self, w: Word) -> Tuple[str, ...]:
        return tuple(a for a in self.alphabet if (a,) + w in self._all)

    def right(self, w: Word) -> Tuple[str, ...]:
        return tuple(a for a in self.alphabet if w + (a,) in self._all)

    def is_biextendable(self, max_len: Optional[int] = None) -> bool:
        """Every word of length <= ``max_len`` (default N - 2) has e(w) > 0."""
        top = self.horizon - 2 if max_len is None else max_len
        return not self.non_biextendable(top)

    def non_biextendable(self, max_len: int) -> List[Word]:
        bad = []
        for w in self.words(min(max_len, self.horizon - 2)):
            if not any((a,) + w + (b,) in self._all
                       for a in self.alphabet for b in self.alphabet):
                bad.append(w)
        return bad


def factors_of(word: Sequence[str], horizon: int) -> set:
    word = tuple(word)
    out = {EMPTY}
    for n in range(1, min(horizon, len(word)) + 1):
        for i in range(len(word) - n + 1):
            out.add(word[i:i + n])
    return out


def factorial_closure(words: Iterable[Word], horizon: int) -> set:
    out = {EMPTY}
    for w in words:
        out |= factors_of(w, horizon)
    return out


def build_factor_set(source, horizon: int, *, margin: int = DEFAULT_MARGIN,
                     alphabet: Optional[Sequence[str]] = None) -> FactorSet:
    """Build the set of factors of length <= ``horizon`` of ``source``.

    ``source`` is a :class:`MorphicWord`, a ``(Morphism, seed)`` pair, a
    single finite word (str or tuple of letters), or a list/set of words
    whose factorial closure is taken.  For morphic sources the iterates
    ``f^k(seed)`` are expanded until two consecutive ones yield the same
    factors of length <= ``horizon``, then ``margin`` more times.
    """
    if horizon < 1:
        raise InputError("horizon must be at least 1")
    if isinstance(source, tuple) and source and isinstance(source[0], Morphism):
        source = MorphicWord(*source)
    if isinstance(source, MorphicWord):
        return _build_morphic(source, horizon, margin)
    if isinstance(source, (str, tuple)):
        w = as_word(source)
        if not w:
            raise InputError("empty source word")
        words = factors_of(w, horizon)
        prov = f"factors of {show(w)}"
    else:
        listed = [as_word(x) for x in source]
        listed = [w for w in listed if w]
        if not listed:
            raise InputError("empty word list")
        words = factorial_closure(listed, horizon)
        prov = "factorial closure of {" + ", ".join(show(w) for w in listed) + "}"
    if alphabet is None:
        alphabet = sorted({a for w in words for a in w})
    alpha = Alphabet(tuple(alphabet))
    for w in words:
        alpha.check(w)
    return FactorSet(words, horizon, alpha, prov, {"horizon": horizon})


def _build_morphic(src: MorphicWord, horizon: int, margin: int) -> FactorSet:
    prev = None
    stable_for = -1
    iterations = 0
    for w in iterates(src.morphism, src.seed):
        iterations += 1
        x = apply_morphism(src.coding, w) if src.coding is not None else w
        current = factors_of(x, horizon)
        if stable_for >= 0:
            stable_for += 1
        elif prev is not None and current == prev:
            stable_for = 0
        prev = current
        if stable_for >= margin:
            break
    log.debug("morphic source stabilized after %d iterations (prefix length %d)",
              iterations, len(x))
    params = {"horizon": horizon, "margin": margin, "iterations": iterations,
              "prefix_length": len(x)}
    return FactorSet(current, horizon, src.alphabet, src.describe(), params)


# -- extension statistics ---------------------------------------------------

@dataclass(frozen=True)
class ExtensionStats:
    word: Word
    left: Tuple[str, ...]
    right: Tuple[str, ...]
    pairs: FrozenSet[Tuple[str, str]]

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.left)

    @property
    def r(self) -> int:
        return len(self.right)

    @property
    def e(self) -> int:
        return len(self.pairs)

    @property
    def m(self) -> int:
        return self.e - self.l - self.r + 1

    @property
    def bispecial(self) -> bool:
        return self.l >= 2 and self.r >= 2


def extension_stats(S: FactorSet, word: WordLike) -> ExtensionStats:
    w = S.require(word, S.horizon - 2)
    left = S.left(w)
    right = S.right(w)
    pairs = frozenset((a, b) for a in left for b in right if (a,) + w + (b,) in S)
    return ExtensionStats(w, left, right, pairs)


def multiplicity(S: FactorSet, word: WordLike) -> int:
    return extension_stats(S, word).m


# -- complexity -------------------------------------------------------------

@dataclass
class ComplexityProfile:
    """Factor complexity ``p`` with first and second differences.

    ``p[n]`` for 0 <= n <= N, ``s[n]`` for n <= N - 1, ``b[n]`` for n <= N - 2.
    ``s_identity`` / ``b_identity`` record whether
    ``s_n = sum(r(w) - 1)`` and ``b_n = sum(m(w))`` hold on the whole range.
    """

    p: List[int]
    s: List[int]
    b: List[int]
    s_identity: bool
    b_identity: bool
    mismatches: List[Tuple[str, int]] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.p[1] - 1


def complexity_profile(S: FactorSet) -> ComplexityProfile:
    N = S.horizon
    p = [S.count(n) for n in range(N + 1)]
    s = [p[n + 1] - p[n] for n in range(N)]
    b = [s[n + 1] - s[n] for n in range(N - 1)]
    mismatches = []
    for n in range(N):
        total = sum(len(S.right(w)) - 1 for w in S.of_length(n))
        if total != s[n]:
            mismatches.append(("s", n))
    for n in range(N - 1):
        total = sum(extension_stats(S, w).m for w in S.of_length(n))
        if total != b[n]:
            mismatches.append(("b", n))
    return ComplexityProfile(
        p, s, b,
        s_identity=not any(kind == "s" for kind, _ in mismatches),
        b_identity=not any(kind == "b" for kind, _ in mismatches),
        mismatches=mismatches)


# -- neutrality ---------------------------------------------------------------

@dataclass
class NeutralityReport:
    labels: Dict[Word, str]
    verdict: str
    max_len: int

    def words(self, label: str) -> List[Word]:
        return [w for w, lab in self.labels.items() if lab == label]


def label_of(m: int) -> str:
    return "strong" if m > 0 else "weak" if m < 0 else "neutral"


def neutrality_classification(S: FactorSet, max_len: Optional[int] = None) -> NeutralityReport:
    """Label words as strong/weak/neutral and give a set verdict.

    The verdict is ``neutral``, ``strong`` (strong or neutral words only),
    ``weak`` (weak or neutral only) or ``mixed`` when both strong and weak
    words occur.
    """
    top = S.horizon - 2 if max_len is None else max_len
    if top > S.horizon - 2:
        raise HorizonError(f"max_len {top} exceeds N - 2 = {S.horizon - 2}")
    labels = {w: label_of(extension_stats(S, w).m) for w in S.words(top)}
    kinds = set(labels.values())
    if kinds <= {"neutral"}:
        verdict = "neutral"
    elif "weak" not in kinds:
        verdict = "strong"
    elif "strong" not in kinds:
        verdict = "weak"
    else:
        verdict = "mixed"
    return NeutralityReport(labels, verdict, top)


# -- recurrence ---------------------------------------------------------------

@dataclass
class RecurrenceReport:
    """Bounded recurrence verdict; never a proof beyond the horizon."""

    recurrent: bool
    probe_len: int
    horizon: int
    failures: List[Tuple[Word, Word]]
    connectors: Dict[Tuple[Word, Word], Word]
    uniform_bounds: Dict[Word, Optional[int]]

    @property
    def uniform(self) -> bool:
        return self.recurrent and all(v is not None for v in self.uniform_bounds.values())

    @property
    def caveat(self) -> str:
        return f"verified up to horizon N={self.horizon} (probe length {self.probe_len})"


def recurrence_check(S: FactorSet, probe_len: int) -> RecurrenceReport:
    """Search, for all u, w of length <= ``probe_len``, a v with uvw in S."""
    if 3 * probe_len > S.horizon:
        raise HorizonError(f"probe length {probe_len} exceeds N/3 at N={S.horizon}")
    probes = [w for w in S.words(probe_len) if w]
    stored = S.words()
    failures: List[Tuple[Word, Word]] = []
    connectors: Dict[Tuple[Word, Word], Word] = {}
    for u in probes:
        starting = [y for y in stored if y[:len(u)] == u]
        for w in probes:
            found = None
            for y in starting:
                if len(y) >= len(u) + len(w) and y[len(y) - len(w):] == w:
                    found = y[len(u):len(y) - len(w)]
                    break
            if found is None:
                failures.append((u, w))
            else:
                connectors[(u, w)] = found
    bounds: Dict[Word, Optional[int]] = {}
    for u in probes:
        bounds[u] = None
        for n in range(len(u), S.horizon + 1):
            layer = S.of_length(n)
            if layer and all(_occurs(u, y) for y in layer):
                bounds[u] = n
                break
    return RecurrenceReport(not failures and bool(probes), probe_len, S.horizon,
                            failures, connectors, bounds)


def _occurs(u: Word, y: Word) -> bool:
    k = len(u)
    return any(y[i:i + k] == u for i in range(len(y) - k + 1))
