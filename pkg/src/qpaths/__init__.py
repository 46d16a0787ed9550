"""Exact lattice-path area partitions, Gaussian binomials and cyclic path maps."""
from qpaths.cyclic import (
    Orbit,
    catalan_restrict_step,
    orbit_of,
    orbit_partition,
    phi_sequence,
    phi_square,
    phi_word,
    rotate_step,
)
from qpaths.distributions import (
    ResidueDistribution,
    Verdict,
    area_distribution,
    maj_distribution,
    subset_product_distribution,
    subset_sum_distribution,
    verify_theorem,
)
from qpaths.errors import InvalidArgumentError, NotDivisibleError, PreconditionError, ResourceLimitError
from qpaths.gaussian import gauss_binom, gauss_binom_product, q_catalan, verify_q_identities
from qpaths.intpoly import Polynomial, content_sums, has_equal_content, poly_exact_div, poly_mul, q_analogue
from qpaths.numbertheory import binomial, catalan, discrete_log, primitive_root, verify_eq1
from qpaths.paths import (
    LatticePath,
    area,
    column_partition,
    enumerate_paths,
    exceedance,
    inversions,
    is_dyck,
    major_index,
    transpose,
)

__version__ = "0.1.0"
