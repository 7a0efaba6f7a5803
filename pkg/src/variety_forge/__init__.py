"""variety-forge: computing with Poisson-type nonassociative algebra varieties.

Modules: scalar (exact Q and Q(d) arithmetic), terms (canonical monomials and
elements), exprs (identity expression parsing/printing), linalg (sparse exact
row reduction), engine (T-ideal consequence spaces), algebras
(structure-constant evaluation), operads (Koszul duals and Hilbert series),
catalog (every named identity, variety and example algebra), cli.
"""

from .algebras import (Algebra, AlgebraError, CheckReport, load_algebra,
                       merge_polarization, split_polarization, tensor)
from .catalog import (algebra, identity, identity_catalog, one_op_variety,
                      presentation, variety)
from .engine import (ArityOverflowError, ConsequenceSpace, EngineError,
                     Variety, consequences, depolarize_variety,
                     dim_multilinear, equivalent, is_consequence, load_variety)
from .exprs import format_element, parse_expr
from .linalg import RowBasis, SparseVector, nullspace, rank
from .operads import (FreeBasisReport, KoszulVerdict, QuadraticPresentation,
                      Series, compose, dual_relation_matrix, free_delta_p_basis,
                      hilbert_series, koszul_dual, koszulness_witness)
from .scalar import DELTA, PoleError, RationalFunction, parse_scalar
from .terms import (BRACKET, DOT, Element, Monomial, OpSymbol, Permutation,
                    act, depolarize_expr, enumerate_monomials, multilinearize,
                    multiply_by_var, normalize, polarize_expr, substitute)

__version__ = "0.1.0"
