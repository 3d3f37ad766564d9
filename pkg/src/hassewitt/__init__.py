"""Exact computation of quadratic form invariants over Q, trace forms of
number fields, embedding-problem obstructions, and middle-cohomology
invariants of complete intersections."""

from .arith import Factorization, factor, is_prime, legendre, squarefree_part
from .cohomology import (
    INF,
    CohClass2,
    Place,
    SquareClass,
    TotalWittClass,
    add2,
    cup,
    cup_sum,
    hilbert_symbol,
    localize,
    witt_mul,
)
from .errors import DomainError, EffortExceededError, InternalError
from .forms import (
    DiagonalForm,
    FormInvariants,
    QuadraticForm,
    diagonal_form,
    diagonalize,
    invariants,
    isometric,
    orthogonal_sum,
    scale,
    standard_form,
)
from .motives import (
    CompleteIntersectionSpec,
    MotiveReport,
    SymbolicClass,
    betti_middle,
    betti_w_invariants,
    binary_divided_disc,
    cubic_surface_form,
    cubic_surface_refinement,
    delta_expressions,
    euler_characteristic,
    hypersurface_w,
    motive_report,
    tau_mod8,
)
from .numberfield import (
    EtaleAlgebra,
    Poly,
    TraceFormReport,
    count_real_roots,
    discriminant,
    factor_pattern_mod_p,
    power_sums,
    real_signature,
    resultant,
    trace_form_report,
    trace_gram,
)
from .obstructions import (
    CharacterSum,
    DecompositionType,
    DeltaPair,
    LiftReport,
    delta_comparison,
    jehanne_local,
    lifting_decisions,
    real_place_sp2,
    real_place_sw2,
    sp2_permutation,
    sw2_character_sum,
    sw2_permutation,
)

__version__ = "0.1.0"
