"""Exact Atiyah-Singer class computations for Z/p actions with isolated fixed points.

Arithmetic is exact throughout: values live in Q(zeta_p) with rational
coordinates in the power basis, and power series are truncated at a fixed
cohomological weight.
"""

from .asclass import (
    BundleError,
    EigenbundleData,
    GBundleChernData,
    a_factor,
    as_character,
    chern_character,
    eigen_m_class,
    euler_class,
    is_exponential,
    is_vanishing,
    l_genus,
    pontryagin_classes,
    theorem_conditions,
    total_m_class,
)
from .builder import build_vanishing_family, c2_filter, exponential_chern_data, finiteness_demo
from .cohring import CohomologyRing, RingElement, RingError, builtin_ring, ring_from_table
from .cyclotomic import CyclotomicNumber, FieldMismatch, galois_apply, to_complex, zeta
from .numthy import find_relation, prime_profile, tau_rank
from .series import TruncatedSeries, as_generating_series, l_generating_series
from .symfun import m_to_e, partitions, tau, tau_table

__version__ = "0.1.0"
