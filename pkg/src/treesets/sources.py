"""Built-in named sources: the morphic words used throughout the examples."""

from __future__ import annotations

from .errors import InputError
from .factors import DEFAULT_MARGIN, FactorSet, build_factor_set
from .morphisms import MorphicWord, parse_morphism

FIBONACCI = MorphicWord(parse_morphism("a->ab; b->a"), "a")
TRIBONACCI = MorphicWord(parse_morphism("a->ab; b->ac; c->a"), "a")
CHACON = MorphicWord(parse_morphism("a->aabc; b->bc; c->abc"), "a")
# acyclic but not a tree set
CASSAIGNE_ACYCLIC = MorphicWord(parse_morphism("a->ab; b->cda; c->cd; d->abc"), "a")
# neutral but not acyclic: image of the previous word under a->12, b->2, c->3, d->13
CASSAIGNE_NEUTRAL = MorphicWord(CASSAIGNE_ACYCLIC.morphism, "a",
                                parse_morphism("a->12; b->2; c->3; d->13"))

SOURCES = {
    "fibonacci": FIBONACCI,
    "tribonacci": TRIBONACCI,
    "chacon": CHACON,
    "cassaigne-acyclic": CASSAIGNE_ACYCLIC,
    "cassaigne-neutral": CASSAIGNE_NEUTRAL,
}


def named_source(name: str) -> MorphicWord:
    try:
        return SOURCES[name]
    except KeyError:
        raise InputError(f"unknown source {name!r}; choose from {', '.join(SOURCES)}") from None


def named_set(name: str, horizon: int, margin: int = DEFAULT_MARGIN) -> FactorSet:
    S = build_factor_set(named_source(name), horizon, margin=margin)
    S.provenance = f"{name}: {S.provenance}"
    return S
