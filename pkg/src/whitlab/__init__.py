"""whitlab: exact Whitney numbers and code counts of restriction geometries.

The package computes, with exact arbitrary-precision arithmetic, the Moebius
function, Whitney numbers of the first kind, characteristic polynomials,
subspace distributions, and agreement numbers attached to sublattices of the
subspace lattice of F_q^n, with the higher-weight Dowling family as the main
specialization.  Every closed formula is paired with an independent
brute-force oracle at desk scale; the `whitlab verify` CLI runs the suites.
"""

from .exactmath import (
    UniPolyQ,
    bernoulli,
    binom,
    deflate_roots,
    expand_linear_factors,
    lagrange_interpolate,
    power_sum,
    qbinom,
)
from .gfq import FieldSpec, field_new
from .subspaces import (
    AtomSet,
    Subspace,
    canonicalize,
    enumerate_subspaces,
    explicit_atoms,
    hwdl_atoms,
    odd_weight_atoms,
)
from .lattice import (
    RestrictionGeometry,
    build_geometry,
    critical_exponent,
    mobius_table,
    mobius_via_distribution,
    whitney_and_charpoly,
)

__version__ = "0.1.0"
