"""Morphisms of free monoids, the ``a->ab; b->a`` DSL and fixpoint prefixes."""

from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from .errors import InputError, NonExpandingError
from .words import Alphabet, Word, WordLike, as_word, show


@dataclass(frozen=True)
class Morphism:
    """A morphism ``f: A* -> B*`` given by nonempty letter images."""

    images: Mapping[str, Word]
    domain: Alphabet = None
    codomain: Alphabet = None

    def __post_init__(self):
        images = {a: as_word(v) for a, v in self.images.items()}
        object.__setattr__(self, "images", images)
        if self.domain is None:
            object.__setattr__(self, "domain", Alphabet(tuple(images)))
        if self.codomain is None:
            object.__setattr__(self, "codomain", Alphabet(_codomain_order(self.domain, images)))
        for a in self.domain:
            if a not in images:
                raise InputError(f"letter {a!r} has no image")
            if not images[a]:
                raise InputError(f"image of {a!r} is empty")
            self.codomain.check(images[a])

    def __call__(self, word: WordLike) -> Word:
        return apply_morphism(self, word)

    def __hash__(self):
        return hash(tuple(sorted(self.images.items())))

    def dsl(self) -> str:
        return "; ".join(f"{_tok(a)}->{_dsl_word(self.images[a])}" for a in self.domain)


def _tok(a: str) -> str:
    return a if len(a) == 1 else f'"{a}"'


def _dsl_word(w: Word) -> str:
    if all(len(a) == 1 for a in w):
        return "".join(w)
    return " ".join(f'"{a}"' for a in w)


def _codomain_order(domain: Alphabet, images: Mapping[str, Word]) -> Tuple[str, ...]:
    seen = {b for w in images.values() for b in w}
    order = [a for a in domain if a in seen]
    for a in domain:
        for b in images[a]:
            if b not in order:
                order.append(b)
    return tuple(order)


class CodingMorphism(Morphism):
    """A morphism mapping its domain bijectively onto a code."""

    def __post_init__(self):
        super().__post_init__()
        imgs = list(self.images.values())
        if len(set(imgs)) != len(imgs):
            raise InputError("coding morphism images must be pairwise distinct")

    @property
    def code(self) -> frozenset:
        return frozenset(self.images.values())


def parse_morphism(text: str, coding: bool = False) -> Morphism:
    """Parse ``a->ab; b->a``.

    Whitespace is ignored except inside quotes; multi-character tokens are
    quoted: ``"x1" -> "x1" "x2"``.
    """
    images: Dict[str, Word] = {}
    for rule in text.split(";"):
        if not rule.strip():
            continue
        if "->" not in rule:
            raise InputError(f"rule {rule.strip()!r} lacks '->'")
        lhs, rhs = rule.split("->", 1)
        left = _tokens(lhs)
        if len(left) != 1:
            raise InputError(f"left side {lhs.strip()!r} must be a single letter")
        a = left[0]
        if a in images:
            raise InputError(f"letter {a!r} defined twice")
        images[a] = _tokens(rhs)
    if not images:
        raise InputError("empty morphism")
    cls = CodingMorphism if coding else Morphism
    return cls(images)


def _tokens(text: str) -> Word:
    if '"' in text or "'" in text:
        try:
            return tuple(shlex.split(text))
        except ValueError as exc:
            raise InputError(f"bad quoting in {text!r}") from exc
    return tuple(ch for ch in text if not ch.isspace())


def apply_morphism(f: Morphism, word: WordLike) -> Word:
    out: list = []
    for a in as_word(word):
        if a not in f.images:
            raise InputError(f"letter {a!r} not in domain of morphism")
        out.extend(f.images[a])
    return tuple(out)


def iterates(f: Morphism, seed: str):
    """Yield ``f^1(seed), f^2(seed), ...``; each is a prefix of the next."""
    _check_seed(f, seed)
    w: Word = (seed,)
    while True:
        w = apply_morphism(f, w)
        yield w


def _check_seed(f: Morphism, seed: str) -> None:
    if seed not in f.images:
        raise InputError(f"seed {seed!r} not in domain")
    img = f.images[seed]
    if img[0] != seed:
        raise NonExpandingError(f"f({seed}) = {show(img)} does not begin with {seed}")
    if len(img) == 1:
        raise NonExpandingError(f"f({seed}) = {seed}: no infinite fixpoint")
    for a in img:
        if a not in f.domain:
            raise NonExpandingError("fixpoints need an endomorphism")


def fixpoint_prefix(f: Morphism, seed: str, target_len: int) -> Word:
    """Prefix of length ``target_len`` of the fixpoint ``f^ω(seed)``."""
    if target_len < 0:
        raise InputError("target length must be nonnegative")
    if target_len == 0:
        _check_seed(f, seed)
        return ()
    for w in iterates(f, seed):
        if len(w) >= target_len:
            return w[:target_len]


@dataclass(frozen=True)
class MorphicWord:
    """The infinite word ``coding(morphism^ω(seed))``; ``coding`` is optional."""

    morphism: Morphism
    seed: str
    coding: Optional[Morphism] = field(default=None)

    def describe(self) -> str:
        text = f"fixpoint of {self.morphism.dsl()} from {self.seed}"
        if self.coding is not None:
            text = f"image under {self.coding.dsl()} of the {text}"
        return text

    @property
    def alphabet(self) -> Alphabet:
        return (self.coding or self.morphism).codomain
