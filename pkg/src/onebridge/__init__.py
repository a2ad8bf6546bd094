"""Exact invariants of 1-bridge torus knots in the 3-sphere and lens spaces.

A 1-bridge torus knot sits inside a genus one splitting of its ambient
space as one trivial arc in each solid torus.  Two normal forms describe
such a knot: a Schubert form S(r, s, t, rho)+/- recording how the arc's
endpoints interleave on the splitting torus, and a Conway form
C[(a, b, ...), ...] recording the gluing as a word in puncture slides.
Everything computed here is exact integer or word arithmetic: component
counts, knot group presentations, homology of the exterior and of cyclic
covers, Alexander polynomials, and the homology of double branched
covers.  Wherever two independent computations of the same quantity
exist, both are implemented and tested against each other.
"""

__version__ = "0.1.0"

from .exactalg import (
    AbelianGroupInvariants,
    IntMatrix,
    LaurentPoly,
    evaluate,
    laurent_gcd,
    smith_normal_form,
)
from .words import FreeWord
from .schubert import (
    SchubertForm,
    count_components_fast,
    count_components_oracle,
    format_schubert,
    from_satellite,
    from_torus_knot,
    from_two_bridge,
    is_knot,
    mirror,
    normalize,
    parse_schubert,
    swap_st,
    trace_triples,
)
from .knotgroup import (
    S3,
    LensSpace,
    Presentation,
    h1_exterior,
    kfold_cover_exists,
    parse_lens,
    presentation,
)
from .alexander import alexander_poly, fox_derivative
from .mcg import (
    ConwayForm,
    conway_equal,
    conway_to_hword,
    format_conway,
    hword_to_conway,
    in_H,
    parse_conway,
    rewrite_to_H,
    two_bridge_to_conway,
)
from .doublecover import (
    ZData,
    h1_double_cover,
    heegaard_matrix,
    s3_determinant,
    triviality_tests,
    z_sequence,
)
