"""Exact computations with Frobenius splittings of graded polynomial rings over F_p."""

from fsplit.algebra import (
    Grading,
    Polynomial,
    PrimeField,
    Ring,
    frobenius,
    graded_piece_basis,
    homogeneous_component,
    poly_add,
    poly_mul,
)
from fsplit.groebner import MonomialOrder, buchberger
from fsplit.hilbert import HilbertPolynomial, hilbert_function, hilbert_polynomial
from fsplit.ideal import (
    Ideal,
    bracket_power,
    ideal_intersection,
    ideal_quotient,
    ideal_sum,
    normal_form,
    saturate,
    syzygies,
)
from fsplit.lattice import (
    IdealLattice,
    brute_force_toric,
    enumerate_closure,
    filter_by_hilbert,
    minimal_primes_monomial,
)
from fsplit.rigidity import (
    RigidityReport,
    hom_degree_zero,
    intertwining_constraints,
    phi_membership,
    rigidity_report,
)
from fsplit.splitting import (
    CompatibilityCertificate,
    Splitting,
    apply,
    graded_part,
    is_compatible,
    is_graded,
    is_splitting,
    standard_splitting,
    trace,
)

__version__ = "0.1.0"
