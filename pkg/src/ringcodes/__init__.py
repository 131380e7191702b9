"""Linear and cyclic codes over R_{s,p} = Z_p[u]/((u^p - u)/(u - s))."""
from .cyclic import (
    CyclicSpec,
    FactorList,
    RingPolynomial,
    compose_cyclic_generator,
    cyclic_code,
    cyclic_generator_matrix,
    cyclic_shift,
    decompose_ring_polynomial,
    divides_xn_minus_1,
    factor_xn_minus_1,
    is_cyclic,
)
from .linalg import ZpMatrix, component_rank, row_reduce
from .linear import (
    ComponentCode,
    RingLinearCode,
    RingMatrix,
    cardinality,
    component_min_distance,
    compose_generator,
    decompose_generator,
    dual_code,
    dual_matrix,
    encode,
    hamming_weight,
    is_mds,
    min_distance,
    parity_check,
    ring_dot,
    systematic_form,
)
from .polytext import format_poly, parse_poly
from .ring import (
    ComponentVector,
    RingElement,
    RingParams,
    from_components,
    idempotent,
    invert,
    is_unit,
    make_ring,
    q_sr,
    to_components,
)
from .zp import ZpPoly

__version__ = "0.1.0"
