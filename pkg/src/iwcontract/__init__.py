"""Exact toolkit for contractions of low-dimensional Lie algebras.

Computes contraction limits in exact arithmetic, decides generalized
Inonu-Wigner realizability for integer signatures at desk scale, and emits
machine-checkable feasibility witnesses and infeasibility certificates.
"""

from .catalog import catalog_get, catalog_names, catalog_tensor, match_catalog
from .contraction import (
    ContractionResult,
    IWSpec,
    NoLimit,
    contract_with_matrix,
    iw_limit_diagonal,
    verify_iw,
)
from .derivations import (
    DerivationBasis,
    admissible_signatures,
    derivation_basis,
    diagonal_lattice,
    is_derivation,
    normalize_signature,
)
from .epsilon import EpsMatrix, EpsPoly, EpsRational, eps_matrix_inverse, limit_at_zero, ord_at_zero
from .scalars import GAUSSIAN, RATIONAL, Scalar, scalar_arith
from .signatures import enumerate_signatures, signature_less
from .tensor import Fingerprint, StructureTensor, change_basis, fingerprint, validate

__version__ = "0.1.0"
