"""Extension graphs E(w), generalized extension graphs E_{U,V}(w), and the
acyclic / connected / tree classification of factor sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from .errors import HorizonError
from .factors import FactorSet, extension_stats
from .graphs import BipartiteGraph, GraphVerdict, graph_classify
from .words import Word, WordLike, as_word, show

ExtensionGraph = BipartiteGraph


def extension_graph(S: FactorSet, word: WordLike) -> ExtensionGraph:
    st = extension_stats(S, word)
    return BipartiteGraph(
        left=tuple((a,) for a in st.left),
        right=tuple((b,) for b in st.right),
        edges=frozenset(((a,), (b,)) for a, b in st.pairs),
        order=S.key)


def generalized_extension_graph(S: FactorSet, word: WordLike,
                                U: Iterable[WordLike], V: Iterable[WordLike]) -> ExtensionGraph:
    """E_{U,V}(w): vertices U(w) ⊔ V(w), edges (l, r) with lwr in S."""
    w = S.require(word)
    U = sorted({as_word(u) for u in U}, key=S.key)
    V = sorted({as_word(v) for v in V}, key=S.key)
    longest = max((len(u) for u in U), default=0) + len(w) + max((len(v) for v in V), default=0)
    if longest > S.horizon:
        raise HorizonError(f"|lwr| can reach {longest} > N={S.horizon}")
    left = tuple(u for u in U if u + w in S)
    right = tuple(v for v in V if w + v in S)
    edges = frozenset((u, v) for u in left for v in right if u + w + v in S)
    return BipartiteGraph(left, right, edges, order=S.key)


@dataclass
class SetClassification:
    acyclic: bool
    connected: bool
    biextendable: bool
    max_len: int
    horizon: int
    failing_words: List[Tuple[Word, GraphVerdict]] = field(default_factory=list)
    inspected: int = 0

    @property
    def tree(self) -> bool:
        return self.acyclic and self.connected

    @property
    def kind(self) -> str:
        if self.tree:
            return "tree"
        if self.acyclic:
            return "acyclic"
        if self.connected:
            return "connected"
        return "none"

    @property
    def caveat(self) -> str:
        return f"verified for words of length <= {self.max_len} at horizon N={self.horizon}"


def set_classify(S: FactorSet, max_len: Optional[int] = None,
                 exhaustive: bool = False) -> SetClassification:
    """Classify S up to ``max_len`` (default N - 2).

    Only bispecial words and ε are inspected unless ``exhaustive``; other
    words have star-shaped extension graphs.  ``acyclic``/``connected``
    also require biextendability, as in the definitions.
    """
    top = S.horizon - 2 if max_len is None else max_len
    if top > S.horizon - 2:
        raise HorizonError(f"max_len {top} exceeds N - 2 = {S.horizon - 2}")
    biext = S.is_biextendable(top)
    acyclic = connected = biext
    failing = []
    inspected = 0
    for w in S.words(top):
        st = extension_stats(S, w)
        if not (exhaustive or not w or st.bispecial):
            continue
        inspected += 1
        verdict = graph_classify(extension_graph(S, w))
        if not verdict.is_acyclic:
            acyclic = False
        if not verdict.is_connected:
            connected = False
        if not verdict.is_tree:
            failing.append((w, verdict))
    return SetClassification(acyclic, connected, biext, top, S.horizon, failing, inspected)


def describe_failures(cls: SetClassification) -> List[str]:
    out = []
    for w, v in cls.failing_words:
        parts = []
        if not v.is_acyclic:
            parts.append("cyclic")
        if not v.is_connected:
            parts.append(f"{v.component_count} components")
        out.append(f"{show(w)}: {', '.join(parts)}")
    return out
