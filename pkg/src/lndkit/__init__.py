"""Exact symbolic computation with locally nilpotent derivations on
finitely presented commutative rings over Q.

All arithmetic is exact rational; results obtained here are valid over
any extension field of characteristic zero, since derivations, kernels,
and spans are stable under base field extension.  Field-specific facts
(primality, factoriality) are out of scope and appear only as unchecked
fixture annotations.
"""

from .derivations import (
    Derivation,
    Inconclusive,
    NilpotencyCertificate,
    NotWellDefined,
    apply,
    certify_lnd,
    extend_with_new_variable,
    make_derivation,
    nilpotency_index,
)
from .dixmier import (
    KernelPresentation,
    NotASlice,
    NotLocalSlice,
    SliceReport,
    UncertifiedDerivation,
    dixmier_apply,
    find_slices,
    kernel_via_slice,
)
from .groebner import groebner_basis, is_groebner_basis, normal_form, s_polynomial
from .parser import ExprSyntaxError, parse_expression
from .poly import ContextMismatchError, Monomial, Polynomial, TermOrder
from .rings import (
    LocalizedElement,
    PresentationError,
    RingElement,
    RingPresentation,
    embed,
    make_ring,
)
from .spans import (
    Distinct,
    NotRefuted,
    ResourceBound,
    SpanBasis,
    intersect_spans,
    kernel_basis_bounded,
    kernels_distinct_bounded,
    membership_in_span,
    ml_star_estimate_bounded,
    monomial_frame,
    subalgebra_span_bounded,
)

__version__ = "0.1.0"
