"""Goppa codes from genus-0 level structures, with exact arithmetic.

The package builds generalized Reed-Solomon codes from canonical level
structures on the projective line, computes their duals and Plücker
coordinates, and audits the Goppa map by exhaustive enumeration over small
finite fields.
"""

from .codes import LinearCode, dual, from_generator, subfield_subcode, trace_code
from .errors import GoppaError, MathematicalFailure, NotInFiber
from .exact_linalg import Matrix, det, kernel_basis, rank, rref
from .fields import (
    enumerate_elements,
    make_field,
    parse_field,
    trace_to_prime,
)
from .level_structures import (
    LevelStructure,
    RawLevelStructure,
    canonical_differential_structure,
    classical_to_canonical,
    code,
    dual_structure,
    encode,
    generator_matrix,
    inverse,
    is_equivalent,
    is_self_dual,
    make_raw,
    make_structure,
    parity_check_matrix,
    tensor,
    unit,
)
from .moduli_analytics import cut_points, parameter_report, unsafe_degrees, xi
from .pluecker import PlueckerVector, fiber_residual, pluecker_closed_form, pluecker_of_code, recover_scalars

__version__ = "0.1.0"

# bumped on any change to the JSON the CLI reads or writes
SCHEMA_VERSION = "1"
