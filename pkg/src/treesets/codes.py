"""Prefix, suffix and bifix codes: parses, S-degree, S-maximality, internal
factors and bifix decoding of factor sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from .errors import CodeRoleError, ContainmentError, InputError
from .factors import FactorSet
from .morphisms import CodingMorphism, apply_morphism
from .words import EMPTY, Alphabet, Word, WordLike, as_word, show


class Code:
    """A finite set of nonempty words with cached prefix/suffix roles."""

    def __init__(self, words: Iterable[WordLike]):
        ws = frozenset(as_word(w) for w in words)
        if EMPTY in ws:
            raise InputError("a code cannot contain the empty word")
        if not ws:
            raise InputError("empty code")
        self.words: FrozenSet[Word] = ws

    def __iter__(self):
        return iter(sorted(self.words, key=lambda w: (len(w), w)))

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return as_word(w) in self.words

    def __eq__(self, other):
        return isinstance(other, Code) and other.words == self.words

    def __hash__(self):
        return hash(self.words)

    def __repr__(self):
        return "Code({" + ", ".join(show(w) for w in self) + "})"

    @property
    def max_len(self) -> int:
        return max(len(w) for w in self.words)

    @cached_property
    def is_prefix(self) -> bool:
        return not any(x != y and y[:len(x)] == x for x in self.words for y in self.words)

    @cached_property
    def is_suffix(self) -> bool:
        return not any(x != y and y[len(y) - len(x):] == x
                       for x in self.words for y in self.words)

    @property
    def is_bifix(self) -> bool:
        return self.is_prefix and self.is_suffix

    @cached_property
    def proper_prefixes(self) -> FrozenSet[Word]:
        return frozenset(x[:i] for x in self.words for i in range(len(x)))

    @cached_property
    def proper_suffixes(self) -> FrozenSet[Word]:
        return frozenset(x[i:] for x in self.words for i in range(1, len(x) + 1)) | {EMPTY}

    def has_prefix_in(self, w: Word) -> bool:
        return any(w[:len(x)] == x for x in self.words)

    def has_suffix_in(self, w: Word) -> bool:
        return any(len(x) <= len(w) and w[len(w) - len(x):] == x for x in self.words)


CodeLike = Union[Code, Iterable[WordLike]]


def as_code(X: CodeLike) -> Code:
    return X if isinstance(X, Code) else Code(X)


@dataclass(frozen=True)
class CodeRole:
    is_prefix: bool
    is_suffix: bool

    @property
    def is_bifix(self) -> bool:
        return self.is_prefix and self.is_suffix


def code_role(X: CodeLike) -> CodeRole:
    X = as_code(X)
    return CodeRole(X.is_prefix, X.is_suffix)


def require_bifix(X: CodeLike) -> Code:
    X = as_code(X)
    if not X.is_bifix:
        raise CodeRoleError(f"{X!r} is not a bifix code")
    return X


def require_prefix(X: CodeLike) -> Code:
    X = as_code(X)
    if not X.is_prefix:
        raise CodeRoleError(f"{X!r} is not a prefix code")
    return X


def in_star(X: CodeLike, word: WordLike) -> bool:
    """Membership of ``word`` in the submonoid X*."""
    X = as_code(X)
    w = as_word(word)
    ok = [False] * (len(w) + 1)
    ok[0] = True
    for j in range(1, len(w) + 1):
        ok[j] = any(ok[j - len(x)] and w[j - len(x):j] == x
                    for x in X.words if len(x) <= j)
    return ok[len(w)]


def is_prefix_of_star(X: CodeLike, word: WordLike) -> bool:
    """Whether ``word`` is a prefix of some word of X*."""
    X = as_code(X)
    w = as_word(word)
    reach = [False] * (len(w) + 1)
    reach[0] = True
    for i in range(len(w) + 1):
        if not reach[i]:
            continue
        rest = w[i:]
        for x in X.words:
            if len(x) <= len(rest):
                if rest[:len(x)] == x:
                    reach[i + len(x)] = True
            elif x[:len(rest)] == rest:
                return True
    return reach[len(w)]


def parse_count(X: CodeLike, word: WordLike) -> int:
    """Number of parses d_X(w): suffixes of w with no prefix in X."""
    X = require_bifix(X)
    w = as_word(word)
    return sum(1 for i in range(len(w) + 1) if not X.has_prefix_in(w[i:]))


def parses(X: CodeLike, word: WordLike) -> List[Tuple[Word, Word, Word]]:
    """All parses (v, x, u): w = vxu, v has no suffix in X, u no prefix in X, x in X*."""
    X = as_code(X)
    w = as_word(word)
    out = []
    for i in range(len(w) + 1):
        v = w[:i]
        if X.has_suffix_in(v):
            continue
        for j in range(i, len(w) + 1):
            u = w[j:]
            if not X.has_prefix_in(u) and in_star(X, w[i:j]):
                out.append((v, w[i:j], u))
    return out


@dataclass(frozen=True)
class SDegree:
    """Maximal parse count over stored words.

    ``conclusive`` is False when words of length N have more parses than any
    shorter word: the degree may keep growing beyond the horizon, and
    ``degree`` is then the maximum over words shorter than N.
    """

    degree: int
    conclusive: bool
    max_at_horizon: int
    witness: Word


def s_degree(X: CodeLike, S: FactorSet) -> SDegree:
    X = require_bifix(X)
    require_contained(X, S)
    inner, witness, at_top = 0, EMPTY, 0
    for w in S.words():
        d = parse_count(X, w)
        if len(w) == S.horizon:
            at_top = max(at_top, d)
        elif d > inner:
            inner, witness = d, w
    return SDegree(inner, at_top <= inner, at_top, witness)


def require_contained(X: Code, S: FactorSet) -> None:
    outside = [w for w in X if w not in S]
    if outside:
        raise ContainmentError(f"{', '.join(show(w) for w in outside)} not in {S!r}")


@dataclass(frozen=True)
class MaximalityVerdict:
    maximal: bool
    counterexample: Optional[Word]
    cutoff: int


def is_s_maximal_prefix(X: CodeLike, S: FactorSet) -> MaximalityVerdict:
    """Right S-completeness of a prefix code, checked for |w| <= N - max|X|."""
    X = require_prefix(X)
    require_contained(X, S)
    cutoff = S.horizon - X.max_len
    for w in S.words(cutoff):
        if not is_prefix_of_star(X, w):
            return MaximalityVerdict(False, w, cutoff)
    return MaximalityVerdict(True, None, cutoff)


def is_s_maximal_suffix(X: CodeLike, S: FactorSet) -> MaximalityVerdict:
    """Left S-completeness of a suffix code (mirror of :func:`is_s_maximal_prefix`)."""
    X = as_code(X)
    if not X.is_suffix:
        raise CodeRoleError(f"{X!r} is not a suffix code")
    require_contained(X, S)
    rev = Code(tuple(reversed(x)) for x in X.words)
    cutoff = S.horizon - X.max_len
    for w in S.words(cutoff):
        if not is_prefix_of_star(rev, tuple(reversed(w))):
            return MaximalityVerdict(False, w, cutoff)
    return MaximalityVerdict(True, None, cutoff)


def internal_factors(X: CodeLike) -> FrozenSet[Word]:
    """I(X): words w with uwv in X for some nonempty u, v."""
    words = X.words if isinstance(X, Code) else {as_word(x) for x in X}
    out = set()
    for x in words:
        for i in range(1, len(x)):
            for j in range(i, len(x)):
                out.add(x[i:j])
    return frozenset(out)


def coding_morphism(mapping: Mapping[str, WordLike]) -> CodingMorphism:
    return CodingMorphism(dict(mapping))


def bifix_decode(S: FactorSet, f: CodingMorphism) -> FactorSet:
    """The bifix decoding f⁻¹(S), with horizon floor(N / max|X|)."""
    X = require_bifix(f.images.values())
    require_contained(X, S)
    horizon = S.horizon // X.max_len
    if horizon < 1:
        raise InputError(f"horizon N={S.horizon} too small to decode words of length {X.max_len}")
    B = f.domain
    layer = [EMPTY]
    found = [EMPTY]
    for _ in range(horizon):
        nxt = []
        for u in layer:
            for b in B:
                ub = u + (b,)
                if apply_morphism(f, ub) in S:
                    nxt.append(ub)
        found.extend(nxt)
        layer = nxt
    prov = f"bifix decoding of ({S.provenance}) by {f.dsl()}"
    params = {"horizon": horizon, "source_horizon": S.horizon}
    return FactorSet(found, horizon, Alphabet(tuple(B)), prov, params)
