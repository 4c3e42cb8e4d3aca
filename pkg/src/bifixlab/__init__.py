"""Descriptive complexity of bifix-free regular languages."""
from .atoms import atom_automaton, atom_bound, atom_complexity, atom_count_bound, atoms
from .automata import (Dfa, Nfa, canonical, determinize, equivalent, is_isomorphic,
                       minimize, quotient_complexities, state_complexity, subset_construction)
from .errors import (BifixError, DomainError, GenerationError, InputError, ParseError,
                     ResourceError)
from .experiments import Measure, Report, run_experiment
from .freeness import (find_empty_state, is_bifix_free, is_non_returning, is_prefix_free,
                       is_suffix_free, standard_form)
from .io import export_dot, parse_dfa, read_dfa, serialize_dfa, write_dfa
from .operations import (boolean, bounds, concat, difference, intersection, reverse,
                         reverse_range, star, star_complexity_predicted,
                         symmetric_difference, union)
from .semigroup import (SemigroupClosure, WbfType, classify_wbf, closure, colliding_pairs,
                        compose, focused_pairs, is_sub_wbf, syntactic_complexity,
                        transition_semigroup, wbf_elements, wbf_size_formula)
from .witnesses import (WitnessSpec, atom_witness, dialect, random_bifix_free, revmagic,
                        ternary_dialect, ternary_witness, unary_free, wstream_witness)

__version__ = "0.1.0"
