"""Exact-arithmetic toolkit for p-adic polynomial analysis, same-extension
precision certificates, level/weight prediction for mod-p Galois data, and
Hecke-polynomial attachment checks."""

from .arith import (
    ORD_INFINITY,
    Fp2Elem,
    Fp2Model,
    FpElem,
    cube_root_of_unity,
    fp2_make,
    frobenius_conjugate,
    ord_p,
)
from .errors import (
    EvidenceError,
    GoldenMismatch,
    InconsistencyError,
    PadicSerreError,
    SchemaError,
)
from .galois_local import (
    FIXED_DIM_TABLE,
    LevelDatum,
    RamFiltration,
    filtration_from_distances,
    level,
    level_exponent,
    lifting_obstruction_vanishes,
    solve_break_equation,
)
from .hecke import AttachmentVerdict, EigenvalueRecord, check_attached, hecke_poly, solve_record
from .krasner import (
    Certificate,
    PrecisionReport,
    certify_same_extension,
    is_eisenstein,
    lambda_exact,
    lambda_upper_bound,
    precision_k,
    precision_report,
    resultant_margin,
    weighted_resultant_margin,
)
from .polynomial import (
    IntPoly,
    NewtonPolygon,
    cycle_type_mod_ell,
    discriminant,
    newton_polygon,
    resolvent_cubic,
    resultant,
    root_diff_poly,
    shift,
)
from .rep3a6 import (
    CoarseClassA6,
    a6_mod3_class_polys,
    central_twist,
    char_value,
    coarse_from_cycle_type,
    frob_charpoly,
    frobenius_class,
    inverse_class,
    sym_square_charpoly,
)
from .weights import (
    DirichletCharacter,
    InertiaProfile,
    Triple,
    char_eval,
    nebentype_factor,
    p_restrict,
    predicted_weights,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
