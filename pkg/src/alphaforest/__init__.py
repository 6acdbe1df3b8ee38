"""Spectral extremal graph theory for the A_alpha matrix and linear forests.

Builds the extremal families S_{n,p}, S+_{n,p} and F_{n,p}, evaluates the
printed closed forms and Turán bounds, computes A_alpha spectral radii
numerically, and scans small graphs exhaustively.
"""

from .closed_forms import (check_formula, largest_real_root, make_poly, rho_S_closed,
                           rho_S_lower_bounds, signless_theorem_value, theorem_value)
from .enumeration import enumerate_nonisomorphic, read_graph6_stream
from .errors import (AlphaForestError, CapacityError, Graph6Error, NumericError, ParameterError,
                     PreconditionError)
from .families import FamilyParams, build_family, quotient_matrix
from .forests import classify_case, contains, make_spec, predicted_extremal
from .graph import (Graph, canonical_form, complement, encode_graph6, join, make_complete,
                    make_matching_graph, make_path, parse_graph6, union)
from .spectral import assemble_alpha, rayleigh_value, spectral_radius
from .turan import brute_force_ex, erdos_gallai_bound, lidicky_bound, lP3_bound

__version__ = "0.1.0"
