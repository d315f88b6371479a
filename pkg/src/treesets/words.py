"""Plain words, signed words over A ∪ A⁻¹ and free-group reduction.

A plain word is a tuple of letter tokens.  Letters are arbitrary strings,
so ``('1', '2')`` and ``('x1', 'x2')`` are as valid as ``('a', 'b')``.
A signed word is a tuple of :class:`SignedLetter`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Tuple, Union

from .errors import InputError

Word = Tuple[str, ...]
EMPTY: Word = ()

WordLike = Union[str, Sequence[str]]


def as_word(text: WordLike) -> Word:
    """Coerce ``text`` to a word.

    A string containing whitespace is split into tokens; any other string
    is read one character per letter.  Sequences are taken as-is.
    ``''`` and ``'ε'`` denote the empty word.
    """
    if isinstance(text, str):
        if text in ("", "ε"):
            return EMPTY
        if any(ch.isspace() for ch in text):
            return tuple(text.split())
        return tuple(text)
    return tuple(text)


def show(word: Sequence[str], empty: str = "ε") -> str:
    """Render a word; tokens are joined with spaces only if some is multi-char."""
    if not word:
        return empty
    if all(len(a) == 1 for a in word):
        return "".join(word)
    return " ".join(word)


@dataclass(frozen=True)
class Alphabet:
    """An ordered finite alphabet."""

    letters: Tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise InputError("alphabet must be nonempty")
        if len(set(self.letters)) != len(self.letters):
            raise InputError(f"duplicate letters in {self.letters!r}")
        for a in self.letters:
            if not a or a.endswith("'") or any(ch.isspace() for ch in a):
                raise InputError(f"invalid letter token {a!r}")

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __contains__(self, a):
        return a in self.letters

    def index(self, a: str) -> int:
        return self.letters.index(a)

    def key(self, word: Sequence[str]):
        """Shortlex sort key under this alphabet's order."""
        return (len(word), tuple(self.letters.index(a) for a in word))

    def check(self, word: Sequence[str]) -> None:
        for a in word:
            if a not in self.letters:
                raise InputError(f"letter {a!r} not in alphabet {self.letters!r}")


class SignedLetter(NamedTuple):
    base: str
    sign: int = 1

    def inverse(self) -> "SignedLetter":
        return SignedLetter(self.base, -self.sign)

    def __str__(self):
        return self.base if self.sign > 0 else self.base + "'"


SignedWord = Tuple[SignedLetter, ...]


def positive(word: WordLike) -> SignedWord:
    """Embed a plain word into A ∪ A⁻¹."""
    return tuple(SignedLetter(a, 1) for a in as_word(word))


def parse_signed(text: str, alphabet: Iterable[str] | None = None) -> SignedWord:
    """Parse the signed-word syntax: ``b c a' c' a b`` or ``bca'c'ab``.

    Inverse letters carry a trailing apostrophe.  Without whitespace every
    character is a letter.
    """
    if any(ch.isspace() for ch in text.strip()):
        tokens = text.split()
    else:
        tokens = []
        for ch in text.strip():
            if ch == "'":
                if not tokens:
                    raise InputError(f"dangling inverse mark in {text!r}")
                tokens[-1] += "'"
            else:
                tokens.append(ch)
    out = []
    for tok in tokens:
        if tok.endswith("'"):
            base, sign = tok[:-1], -1
        else:
            base, sign = tok, 1
        if not base or base.endswith("'"):
            raise InputError(f"bad token {tok!r}")
        out.append(SignedLetter(base, sign))
    word = tuple(out)
    if alphabet is not None:
        check_signed(word, alphabet)
    return word


def check_signed(word: Sequence[SignedLetter], alphabet: Iterable[str]) -> None:
    letters = set(alphabet)
    for x in word:
        if x.base not in letters or x.sign not in (1, -1):
            raise InputError(f"symbol {x} outside alphabet {sorted(letters)}")


def show_signed(word: Sequence[SignedLetter], empty: str = "ε") -> str:
    if not word:
        return empty
    toks = [str(x) for x in word]
    if all(len(x.base) == 1 for x in word):
        return "".join(toks)
    return " ".join(toks)


def _signed(word) -> SignedWord:
    if isinstance(word, str):
        return parse_signed(word)
    return tuple(x if isinstance(x, SignedLetter) else SignedLetter(x, 1) for x in word)


def is_reduced(word: Sequence[SignedLetter]) -> bool:
    return all(word[i + 1] != word[i].inverse() for i in range(len(word) - 1))


def reduce(word, alphabet: Iterable[str] | None = None) -> SignedWord:
    """Return the unique reduced word equivalent to ``word`` (one stack pass)."""
    word = _signed(word)
    if alphabet is not None:
        check_signed(word, alphabet)
    stack: list[SignedLetter] = []
    for x in word:
        if stack and stack[-1] == x.inverse():
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def invert(word) -> SignedWord:
    return tuple(x.inverse() for x in reversed(_signed(word)))


def group_concat(u, v) -> SignedWord:
    """Product of two free-group elements."""
    return reduce(_signed(u) + _signed(v))


def height(word) -> int:
    """Height of a word over A ∪ A⁻¹.

    A nonempty word equivalent to 1 has height h when it is a concatenation
    of blocks ``u v u⁻¹`` (``u`` nonempty, ``u⁻¹`` its formal inverse) with
    ``v`` equivalent to 1 of height at most h - 1; the empty word has height
    0.  A general word has the least height h such that it factors as
    ``z0 v1 z1 ... vn zn`` with the ``zi`` trivial of height at most h and
    ``v1...vn`` reduced.  The ``zi`` may be empty.
    """
    w = _signed(word)
    return _height(w)


INF = float("inf")


@lru_cache(maxsize=4096)
def _height(w: SignedWord) -> int:
    n = len(w)
    trivial = _trivial_heights(w)
    target = reduce(w)
    k = len(target)

    @lru_cache(maxsize=None)
    def best(i: int, j: int) -> float:
        # w[i:] must spell target[j:] interleaved with trivial gaps
        if j == k:
            return trivial(i, n)
        out = INF
        for p in range(i, n):
            if w[p] != target[j]:
                continue
            gap = trivial(i, p)
            if gap >= out:
                continue
            out = min(out, max(gap, best(p + 1, j + 1)))
        return out

    h = best(0, 0)
    assert h < INF
    return int(h)


def _trivial_heights(w: SignedWord):
    """Return ``f(i, j)``: height of ``w[i:j]`` as a word equivalent to 1, or inf."""

    @lru_cache(maxsize=None)
    def is_trivial(i: int, j: int) -> bool:
        return not reduce(w[i:j])

    @lru_cache(maxsize=None)
    def block(i: int, j: int) -> float:
        # w[i:j] = u v u^-1 with |u| >= 1
        out = INF
        t = 0
        while i + t < j - 1 - t and w[i + t] == w[j - 1 - t].inverse():
            t += 1
            inner = trivial(i + t, j - t)
            out = min(out, 1 + inner)
        return out

    @lru_cache(maxsize=None)
    def trivial(i: int, j: int) -> float:
        if i == j:
            return 0
        if (j - i) % 2 or not is_trivial(i, j):
            return INF
        out = INF
        for m in range(i + 2, j + 1, 2):
            if not is_trivial(i, m):
                continue
            first = block(i, m)
            if first >= out:
                continue
            out = min(out, max(first, trivial(m, j)))
        return out

    return trivial
