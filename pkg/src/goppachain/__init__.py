"""Chain of separable binary Goppa codes over GF(2^(2l)): construction,
equivalence checks, exact distances and quasi-cyclic automorphisms."""

from .analysis import (
    DistanceResult,
    QCWitness,
    analysis_checks,
    lemma10_witness,
    min_distance,
    min_even_weight,
    verify_quasicyclic,
    verify_scale_invariance_of_goppa_poly,
)
from .chain import Chain, ChainParams, CheckResult, build_chain, chain_checks, sample_params
from .gf2linalg import BitMatrix, enumerate_codewords, nullspace_basis, rank, rref, row_space_equal
from .gf2m import FieldSpec, field_new
from .goppa import GoppaCode, code_new, location_set, shorten, syndrome_is_zero, verify_redundant_row
from .poly2m import Poly, goppa_polynomial
from .report import Report, chain_report

__all__ = [
    "BitMatrix", "Chain", "ChainParams", "CheckResult", "DistanceResult", "FieldSpec",
    "GoppaCode", "Poly", "QCWitness", "Report", "analysis_checks", "build_chain",
    "chain_checks", "chain_report", "code_new", "enumerate_codewords", "field_new",
    "goppa_polynomial", "lemma10_witness", "location_set", "min_distance",
    "min_even_weight", "nullspace_basis", "rank", "rref", "row_space_equal",
    "sample_params", "shorten", "syndrome_is_zero", "verify_quasicyclic",
    "verify_redundant_row", "verify_scale_invariance_of_goppa_poly",
]
