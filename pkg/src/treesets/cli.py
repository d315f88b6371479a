"""Command-line interface: build a factor set, classify it, run bounded
theorem checks and export graphs or automata."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .automata import (Automaton, literal_automaton, minimal_automaton, predicates,
                       rank, stallings_automaton, stallings_fold, subgroup_index)
from .codes import Code, code_role
from .errors import TreesetsError
from .extension import describe_failures, extension_graph, set_classify
from .factors import (DEFAULT_MARGIN, FactorSet, build_factor_set, complexity_profile,
                      neutrality_classification)
from .graphs import BipartiteGraph, LabeledGraph, graph_classify
from .morphisms import MorphicWord, parse_morphism
from .rauzy import (rauzy_graph, rauzy_group, return_words, theta_n_partition,
                    theta_quotient_check, verify_return_theorem)
from .reports import VerificationReport
from .sources import SOURCES, named_set
from .subgroups import (coset_automaton, group_words_outside, incidence_graph, is_free,
                        verify_saturation, verify_unitary_corollary)
from .words import Word, as_word, show

DEFAULT_HORIZON = 20
THEOREMS = ("return", "freeness", "saturation", "rauzy-group", "quotient", "card-return")
OBJECTS = ("extension-graph", "rauzy", "incidence", "automaton", "coset")


class UsageError(TreesetsError):
    pass


# -- inputs -------------------------------------------------------------------

def parse_word_list(text: str) -> List[Word]:
    """Words separated by commas or newlines, optionally inside braces.

    A single item containing spaces is read as a sequence of tokens.
    """
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    items = []
    for line in body.splitlines():
        line = line.split("#", 1)[0]
        for item in line.split(","):
            item = item.strip()
            if item:
                items.append(as_word(item))
    return items


def _read_list(value: str) -> List[Word]:
    """Words from a file, or from ``value`` itself when it is not a path."""
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return parse_word_list(fh.read())
    if os.sep in value or value.endswith(".txt"):
        raise UsageError(f"no such file: {value}")
    return parse_word_list(value)


def load_set(args) -> FactorSet:
    margin = args.margin
    if args.words:
        words = _read_list(args.words)
        if not words:
            raise UsageError(f"no words in {args.words}")
        horizon = args.horizon or max(len(w) for w in words)
        return build_factor_set(words, horizon)
    horizon = args.horizon or DEFAULT_HORIZON
    if args.morphism:
        f = parse_morphism(args.morphism)
        seed = args.seed or f.domain.letters[0]
        return build_factor_set(MorphicWord(f, seed), horizon, margin=margin)
    if args.source:
        return named_set(args.source, horizon, margin)
    raise UsageError("give a source: --source NAME, --morphism DSL or --words FILE")


def load_code(args, S: Optional[FactorSet] = None) -> Code:
    if args.code:
        return Code(_read_list(args.code))
    if args.code_length is not None:
        if S is None:
            S = load_set(args)
        return Code(S.of_length(args.code_length))
    raise UsageError("give a code: --code FILE|LIST or --code-length K")


def _params(S: FactorSet) -> Dict[str, Any]:
    return dict(sorted(S.params.items()))


def _words(ws) -> List[str]:
    return [show(w) for w in ws]


def _sorted(ws, S: Optional[FactorSet] = None) -> List[Word]:
    key = S.key if S is not None else (lambda w: (len(w), w))
    return sorted(ws, key=key)


# -- classify -----------------------------------------------------------------

def cmd_classify(args) -> Dict[str, Any]:
    S = load_set(args)
    cls = set_classify(S)
    neutral = neutrality_classification(S)
    prof = complexity_profile(S)
    warnings = []
    if not cls.biextendable:
        bad = S.non_biextendable(cls.max_len)
        warnings.append("not biextendable: " + ", ".join(_words(bad)))
    return {
        "source": S.provenance,
        "parameters": _params(S),
        "alphabet": list(S.alphabet.letters),
        "classification": {
            "kind": cls.kind,
            "acyclic": cls.acyclic,
            "connected": cls.connected,
            "tree": cls.tree,
            "biextendable": cls.biextendable,
            "failing_words": describe_failures(cls),
            "inspected_words": cls.inspected,
        },
        "neutrality": {
            "verdict": neutral.verdict,
            "strong": _words(_sorted(neutral.words("strong"), S))[:20],
            "weak": _words(_sorted(neutral.words("weak"), S))[:20],
        },
        "complexity": {
            "p": prof.p,
            "s_identity": prof.s_identity,
            "b_identity": prof.b_identity,
        },
        "warnings": warnings,
        "caveats": [cls.caveat],
    }


def _classify_text(rep: Dict[str, Any]) -> str:
    c = rep["classification"]
    lines = [
        f"source: {rep['source']}",
        "parameters: " + ", ".join(f"{k}={v}" for k, v in rep["parameters"].items()),
        f"classification: {c['kind']} (acyclic={c['acyclic']}, connected={c['connected']},"
        f" biextendable={c['biextendable']})",
    ]
    for f in c["failing_words"]:
        lines.append(f"  failing at {f}")
    lines.append(f"neutrality: {rep['neutrality']['verdict']}")
    for label in ("strong", "weak"):
        if rep["neutrality"][label]:
            lines.append(f"  {label}: {', '.join(rep['neutrality'][label])}")
    cx = rep["complexity"]
    lines.append("complexity p_n: " + " ".join(str(x) for x in cx["p"]))
    lines.append(f"difference identities: s={cx['s_identity']} b={cx['b_identity']}")
    lines.extend(f"warning: {w}" for w in rep["warnings"])
    lines.extend(f"note: {c}" for c in rep["caveats"])
    return "\n".join(lines) + "\n"


# -- verify -------------------------------------------------------------------

def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this check")
    return value


def _verify_return(args) -> VerificationReport:
    S = load_set(args)
    w = as_word(_require(args.word, "--word"))
    R = return_words(S, w)
    chk = verify_return_theorem(S, w)
    rep = VerificationReport(
        "return theorem", f"{S.provenance}, w={show(w)}", chk.verdict,
        witnesses={"return_words": _words(R), "cardinality": chk.cardinality,
                   "alphabet_size": chk.alphabet_size, "rank": chk.rank,
                   "generates_free_group": chk.generates_free_group,
                   "basis": chk.is_basis},
        horizon=_params(S))
    if not chk.complete:
        rep.caveats.append(f"return words not certified complete at N={S.horizon}")
    return rep


def _verify_card_return(args) -> VerificationReport:
    S = load_set(args)
    k = len(S.letters)
    if args.word is not None:
        targets = [S.require(args.word)]
    else:
        bound = args.bound if args.bound is not None else 3
        targets = [w for w in S.words(bound) if w]
    wrong, unknown = [], []
    for w in targets:
        R = return_words(S, w)
        if not R.complete:
            unknown.append(show(w))
        elif len(R) != k:
            wrong.append(f"{show(w)}:{len(R)}")
    verdict = "holds" if not wrong and not unknown else "fails" if wrong else "inconclusive"
    rep = VerificationReport(
        "card return", f"{S.provenance}, |A|={k}", verdict,
        witnesses={"checked": len(targets), "counterexamples": wrong, "incomplete": unknown},
        horizon=_params(S))
    rep.caveats.append(f"return sets computed within horizon N={S.horizon}")
    return rep


def _verify_freeness(args) -> VerificationReport:
    X = load_code(args, load_set(args) if args.code is None else None)
    rep = is_free(X.words)
    return VerificationReport(
        "freeness", "X={" + ", ".join(_words(X)) + "}",
        "free" if rep.free else "not free",
        witnesses={"free": rep.free, "rank": rep.rank, "size": rep.size})


def _verify_saturation(args) -> VerificationReport:
    S = load_set(args)
    X = load_code(args, S)
    L = args.bound if args.bound is not None else min(8, S.horizon)
    sat = verify_saturation(X, S, L)
    unit = verify_unitary_corollary(X, S, L)
    role = code_role(X)
    rep = VerificationReport(
        "saturation", f"{S.provenance}, X={{{', '.join(_words(X))}}}",
        "saturated" if sat.saturated else "not saturated",
        witnesses={
            "violations": _words(sat.violations),
            "unitary_violations": [f"{show(u)}|{show(v)} ({side})" for u, v, side in unit],
            "group_words_not_in_S": _words(group_words_outside(X, S, 2)),
            "bifix": role.is_bifix,
            "checked_words": sat.checked,
        },
        horizon={**_params(S), "bound": L})
    rep.caveats.append(sat.caveat)
    if not role.is_bifix:
        rep.caveats.append("X is not a bifix code")
    return rep


def _verify_rauzy_group(args) -> VerificationReport:
    S = load_set(args)
    n = _require(args.order, "--order")
    g = rauzy_group(S, n, args.base)
    A = g.automaton
    return VerificationReport(
        "rauzy group", f"{S.provenance}, n={n}, base={show(g.base)}",
        "free group on A" if g.describes_free_group else "not the free group on A",
        witnesses={"folded_states": len(A.states), "folded_edges": len(A.delta),
                   "rank": rank(A)},
        horizon=_params(S))


def _verify_quotient(args) -> VerificationReport:
    S = load_set(args)
    n = _require(args.order, "--order")
    res = theta_quotient_check(S, n)
    classes = [_words(_sorted(c, S)) for c in theta_n_partition(S, n)]
    return VerificationReport(
        "rauzy quotient", f"{S.provenance}, n={n}",
        "isomorphic" if res.isomorphic else "not isomorphic",
        witnesses={"classes": classes, "quotient_vertices": len(res.graph.vertices),
                   "previous_vertices": S.count(n - 1)},
        horizon=_params(S))


VERIFIERS = {
    "return": _verify_return,
    "card-return": _verify_card_return,
    "freeness": _verify_freeness,
    "saturation": _verify_saturation,
    "rauzy-group": _verify_rauzy_group,
    "quotient": _verify_quotient,
}


def cmd_verify(args) -> VerificationReport:
    rep = VERIFIERS[args.theorem](args)
    N = rep.horizon.get("horizon")
    if N is not None:
        rep.caveats.insert(0, f"verified up to horizon N={N} on stored factors only")
    return rep


# -- export -------------------------------------------------------------------

def _bipartite_text(g: BipartiteGraph) -> str:
    v = graph_classify(g)
    lines = ["left " + " ".join(_words(g.left)), "right " + " ".join(_words(g.right))]
    lines += [f"{show(l)} {show(r)}" for l, r in g.sorted_edges()]
    lines.append(f"# acyclic={v.is_acyclic} connected={v.is_connected}")
    return "\n".join(lines) + "\n"


def _bipartite_json(g: BipartiteGraph) -> Dict[str, Any]:
    v = graph_classify(g)
    return {"left": _words(g.left), "right": _words(g.right),
            "edges": [[show(l), show(r)] for l, r in g.sorted_edges()],
            "acyclic": v.is_acyclic, "connected": v.is_connected}


def _labeled_text(g: LabeledGraph) -> str:
    index = {v: i for i, v in enumerate(g.vertices)}
    edges = sorted(g.edges, key=lambda e: (index[e[0]], e[1], index[e[2]]))
    return "".join(f"{show(p)} {a} {show(q)}\n" for p, a, q in edges)


def _automaton_json(A: Automaton) -> Dict[str, Any]:
    flags = predicates(A)
    name = lambda s: show(s, empty="1") if isinstance(s, tuple) else str(s)  # noqa: E731
    idx = subgroup_index(A) if flags.is_reversible else None
    return {
        "states": [name(s) for s in A.states],
        "base": name(A.base),
        "edges": [[name(p), a, name(q)] for p, a, q in A.edges()],
        "flags": {k: getattr(flags, k) for k in sorted(vars(flags))},
        "index": None if idx is None else ("inf" if math.isinf(idx) else idx),
    }


def _render_bipartite(g: BipartiteGraph, fmt: str, name: str) -> str:
    if fmt == "dot":
        return g.to_dot(name)
    if fmt == "json":
        return json.dumps(_bipartite_json(g), indent=2, ensure_ascii=False) + "\n"
    return _bipartite_text(g)


def _render_automaton(A: Automaton, fmt: str, name: str) -> str:
    if fmt == "dot":
        return A.to_dot(name)
    if fmt == "json":
        return json.dumps(_automaton_json(A), indent=2, ensure_ascii=False) + "\n"
    return A.to_text()


def cmd_export(args) -> str:
    fmt = args.format or "dot"
    obj = args.object
    if obj == "extension-graph":
        S = load_set(args)
        w = as_word(args.word or "")
        return _render_bipartite(extension_graph(S, w), fmt, "E")
    if obj == "rauzy":
        S = load_set(args)
        G = rauzy_graph(S, _require(args.order, "--order"))
        if fmt == "dot":
            return G.to_dot(f"G{G.order}", base=as_word(args.base) if args.base else None)
        if fmt == "json":
            data = {"order": G.order, "vertices": _words(G.vertices),
                    "edges": [l.split() for l in _labeled_text(G).splitlines()]}
            return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
        return _labeled_text(G)
    if obj == "incidence":
        X = load_code(args)
        return _render_bipartite(incidence_graph(X), fmt, "G")
    if obj == "automaton":
        X = load_code(args)
        kind = args.kind
        if kind == "literal":
            A = literal_automaton(X)
        elif kind == "minimal":
            A = minimal_automaton(X)
        elif kind == "folded":
            A = stallings_fold(minimal_automaton(X)).automaton
        else:
            A = stallings_automaton(X.words)
        return _render_automaton(A, fmt, "A")
    if obj == "coset":
        X = load_code(args)
        return _render_automaton(coset_automaton(X), fmt, "B")
    raise UsageError(f"unknown object {obj!r}")


# -- entry point ------------------------------------------------------------------

def _add_source_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("source")
    g.add_argument("--source", choices=sorted(SOURCES), help="built-in morphic source")
    g.add_argument("--morphism", help='morphism such as "a->ab; b->a"')
    g.add_argument("--seed", help="seed letter of the fixed point (default: first letter)")
    g.add_argument("--words", metavar="FILE", help="explicit word list (file or inline)")
    g.add_argument("--horizon", "-N", type=int, help=f"maximal factor length (default {DEFAULT_HORIZON})")
    g.add_argument("--margin", type=int, default=DEFAULT_MARGIN,
                   help="extra iterations after the factor sets stabilize")
    q = p.add_argument_group("parameters")
    q.add_argument("--word", help="base word w")
    q.add_argument("--code", help="code words: a file or an inline list such as {aa,ab,ba}")
    q.add_argument("--code-length", type=int, help="use X = S ∩ A^K as the code")
    q.add_argument("--order", type=int, help="Rauzy graph order n")
    q.add_argument("--bound", type=int, help="length bound L")
    q.add_argument("--base", help="base vertex")
    p.add_argument("--format", choices=("dot", "json", "text"))
    p.add_argument("--out", "-o", help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treesets", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", help="acyclic/connected/tree, neutrality and complexity")
    _add_source_args(p)
    p = sub.add_parser("verify", help="bounded theorem checks")
    p.add_argument("theorem", choices=THEOREMS)
    _add_source_args(p)
    p = sub.add_parser("export", help="DOT, text or JSON export")
    p.add_argument("object", choices=OBJECTS)
    p.add_argument("--kind", choices=("literal", "minimal", "folded", "stallings"),
                   default="minimal", help="automaton to export")
    _add_source_args(p)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> str:
    return render(build_parser().parse_args(argv))


def render(args) -> str:
    fmt = args.format
    if args.command == "classify":
        rep = cmd_classify(args)
        if fmt == "json":
            return json.dumps(rep, indent=2, ensure_ascii=False) + "\n"
        return _classify_text(rep)
    if args.command == "verify":
        rep = cmd_verify(args)
        return rep.to_json() if fmt == "json" else rep.to_text()
    return cmd_export(args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = render(args)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    except (TreesetsError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"treesets: error: {msg}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
