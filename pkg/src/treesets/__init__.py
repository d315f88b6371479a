"""Bounded computational checks for tree sets, acyclic sets and the
subgroups of free groups attached to them."""

from .errors import (CodeRoleError, ConsistencyError, ContainmentError, HorizonError,
                     InputError, NonExpandingError, NotAFactorError, PreconditionError,
                     TreesetsError)
from .words import (EMPTY, Alphabet, SignedLetter, as_word, group_concat, height, invert,
                    parse_signed, reduce, show, show_signed)
from .morphisms import (CodingMorphism, MorphicWord, Morphism, apply_morphism,
                        fixpoint_prefix, parse_morphism)
from .factors import (FactorSet, build_factor_set, complexity_profile, extension_stats,
                      multiplicity, neutrality_classification, recurrence_check)
from .sources import SOURCES, named_set, named_source
from .graphs import BipartiteGraph, LabeledGraph, graph_classify, labeled_isomorphic
from .extension import extension_graph, generalized_extension_graph, set_classify
from .codes import (Code, bifix_decode, code_role, coding_morphism, internal_factors,
                    is_s_maximal_prefix, is_s_maximal_suffix, parse_count, parses, s_degree)
from .automata import (Automaton, canonical, is_rose, isomorphic, literal_automaton,
                       membership, minimal_automaton, predicates, rank, stallings_automaton,
                       stallings_fold, subgroup_index)
from .rauzy import (quotient_graph, rauzy_graph, rauzy_group, return_words,
                    theta_n_partition, theta_quotient_check, verify_return_theorem)
from .subgroups import (coset_automaton, incidence_graph, is_free, theta_x_partition,
                        verify_saturation, verify_unitary_corollary)

__version__ = "0.1.0"

__all__ = [
    "CodeRoleError",
    "ConsistencyError",
    "ContainmentError",
    "HorizonError",
    "InputError",
    "NonExpandingError",
    "NotAFactorError",
    "PreconditionError",
    "TreesetsError",
    "EMPTY",
    "Alphabet",
    "SignedLetter",
    "as_word",
    "group_concat",
    "height",
    "invert",
    "parse_signed",
    "reduce",
    "show",
    "show_signed",
    "CodingMorphism",
    "MorphicWord",
    "Morphism",
    "apply_morphism",
    "fixpoint_prefix",
    "parse_morphism",
    "FactorSet",
    "build_factor_set",
    "complexity_profile",
    "extension_stats",
    "multiplicity",
    "neutrality_classification",
    "recurrence_check",
    "SOURCES",
    "named_set",
    "named_source",
    "BipartiteGraph",
    "LabeledGraph",
    "graph_classify",
    "labeled_isomorphic",
    "extension_graph",
    "generalized_extension_graph",
    "set_classify",
    "Code",
    "bifix_decode",
    "code_role",
    "coding_morphism",
    "internal_factors",
    "is_s_maximal_prefix",
    "is_s_maximal_suffix",
    "parse_count",
    "parses",
    "s_degree",
    "Automaton",
    "canonical",
    "is_rose",
    "isomorphic",
    "literal_automaton",
    "membership",
    "minimal_automaton",
    "predicates",
    "rank",
    "stallings_automaton",
    "stallings_fold",
    "subgroup_index",
    "quotient_graph",
    "rauzy_graph",
    "rauzy_group",
    "return_words",
    "theta_n_partition",
    "theta_quotient_check",
    "verify_return_theorem",
    "coset_automaton",
    "incidence_graph",
    "is_free",
    "theta_x_partition",
    "verify_saturation",
    "verify_unitary_corollary",
]

