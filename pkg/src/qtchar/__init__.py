"""Exact q-characters and q,t-characters of quantum affinizations.

The classical algorithm computes the q-character of a fundamental module from
its highest monomial Y_{i,l}; the t-deformed algorithm does the same for the
q,t-character.  ``checks`` turns the structural statements about these
characters into executable checks, and ``suites`` bundles them with the
shipped F4 golden data.
"""

__version__ = "0.1.0"

from .laurent import LaurentPoly, TPoly, parse_laurent, parse_tpoly
from .cartan import (CartanData, CartanError, build_cartan, check_invertible, minimal_symmetrizer,
                     parse_family, quantized_cartan, sufficient_condition)
from .monomial import (AVector, Monomial, TrackedMonomial, UStats, a_monomial, apply_a_inverse,
                       dominance_compare, expand, format_machine, format_monomial, is_dominant,
                       is_right_negative, parse_machine, parse_monomial, truncate, u_stats)
from .character import Character, CoefficientModeError, IncomparableTerm, height_slices
from .sl2 import F_i, L_i, L_i_monomials, NotDominantError, Segment, segment_decompose, \
    special_position, string_character
from .algorithm import (BudgetExceeded, InconsistentAlgorithm, NonzeroResidue, PreconditionError,
                        classical_algorithm, fundamental_qcharacter, kernel_decompose,
                        restrict_L_J, standard_qcharacter)
from .qt import (F_it, TCharacter, bar_symmetrize, bar_view, fundamental_qt, normalized,
                 qt_standard, specialize_t1, star_t, star_t_exponent, t_algorithm)
from .fixtures import FixtureEntry, FixtureError, emit_fixture, load_appendix, parse_fixture
from .serialize import emit_character, parse_character
from .cache import ResultCache, cache_key
