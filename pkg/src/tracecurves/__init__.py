"""Binary trace codes, quadratic forms in characteristic 2, and curves with many points."""

from .builder import (
    PairSystem,
    build_preset_system,
    build_system,
    even_m_solution_count,
    fiber_structure_check,
    membership_check,
    min_weight_subcode,
    r_from_pairs,
    select_representatives,
)
from .codes import (
    Codeword,
    PolySubcode,
    TraceCode,
    ghw_exhaustive,
    ghw_from_min_subcode,
    is_min_weight_subcode,
    min_weight_exhaustive,
    subcode_weight,
    word_of,
)
from .curves import CurveSummary, affine_point_count_oracle, curve_of, fibre_product, serre_bound, table_row
from .errors import ConsistencyError, CostGuardError
from .f2linalg import F2Matrix, F2Subspace
from .field import FieldElement, FieldError, GF2m, field_new
from .linearized import LinearizedPoly, eval_poly, map_matrix, solve_linearized_system
from .quadratic import FormClassification, QuadraticForm, classify, pair_form, zero_count_exhaustive

__version__ = "0.1.0"
