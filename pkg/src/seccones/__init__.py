"""seccones: exact computer algebra for partial elimination ideals,
secant cones and projection fibres of projective schemes.

The package is organized bottom-up:

* ``poly_core``   -- fields, term orders, sparse polynomials, coordinate
                     transforms, closed points;
* ``groebner``    -- reduced Groebner bases (Buchberger) and the Ideal type;
* ``ideal_ops``   -- elimination, intersection, quotient, saturation,
                     subring contraction and extension;
* ``hilbert``     -- Hilbert series, dimension and multiplicity;
* ``radical``     -- radicals and radical membership;
* ``pei_secant``  -- graded chains of projection invariants, secant cones
                     and loci, fibre lengths, double-projection tools;
* ``cli``         -- the ``seccones`` command-line interface.
"""

from .poly_core import (
    QQ,
    PrimeField,
    PolyRing,
    Polynomial,
    TermOrder,
    LEX,
    DEGREVLEX,
    elim_order,
    compare_monomials,
    parse_polynomial,
    format_polynomial,
    LinearMap,
    apply_linear_map,
    ClosedPoint,
    point_from_forms,
    build_point_transform,
    leading_data_in_var,
    ParseError,
)
from .groebner import (
    Ideal,
    GroebnerBasis,
    buchberger_reduced,
    normal_form,
    initial_ideal,
    ideal_membership,
)
from .ideal_ops import (
    SubringEmbedding,
    map_polynomial,
    extend,
    eliminate,
    intersect,
    intersect_many,
    quotient,
    saturate,
    saturate_by_poly,
    saturate_by_variable,
    saturate_homogeneous,
    radical_membership,
    ideal_equal,
)
from .hilbert import (
    HilbertData,
    hilbert_data,
    hilbert_numerator,
    dimension,
    multiplicity,
    intersection_length,
)
from .radical import radical
from .pei_secant import (
    PEIChain,
    SecantResult,
    PreconditionError,
    InternalConsistencyError,
    pei_chain,
    pei_oracle_degree,
    secant_cone,
    secant_locus,
    fibre_length,
    is_isomorphic_projection,
    pei_relative_chain,
    clever_decomposition_check,
    double_projection_fibre_length,
    minors_ideal,
    scroll_ideal,
)

__version__ = "0.1.0"
