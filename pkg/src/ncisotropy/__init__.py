"""Exact arithmetic in the quantum Weyl algebra, the Jordanian plane and the
first Weyl algebra, with gcd-based classification of derivation isotropy
groups and a brute-force commutator oracle to check it."""

from .isotropy import (
    CaseA,
    CaseB,
    Inner,
    IsotropyGroup,
    JordanDerivationSpec,
    QWDerivationSpec,
    classify,
    classify_case_b,
    classify_inner,
    classify_jordan,
    classify_qw,
    construct_delta_r,
    intersect,
    support_differences,
)
from .maps import (
    DiagAuto,
    Endo,
    JordanAuto,
    SkewDerivation,
    ad_sigma,
    apply_endo,
    case_a_derivation,
    case_b_derivation,
    compose,
    conjugate,
    derivation_is_consistent,
    endo_is_valid,
    inverse,
    jordan_derivation,
)
from .oracle import CyclicCertificate, ProbeReport, probe_jordan_g, verify_cyclic_claim, verify_membership
from .ore import NcPoly, Presentation, h_element, rewrite_yx
from .parsing import ParseError, parse_element, parse_scalar
from .scalars import CycloContext, Scalar, cyclotomic_poly

__version__ = "0.1.0"
