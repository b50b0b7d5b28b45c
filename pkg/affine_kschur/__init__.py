"""
affine_kschur
k-Schur elements of affine nilCoxeter algebras for affine types A/B/C/D:
- Cartan data, coweights and the invariant form
- affine Weyl group elements, alcoves, length and Bruhat order
- pseudo-translations and Dynkin automorphisms
- orbit / algebraic / combinatorial (type C) expansions
- symmetric 2k-cores for type C
"""

from .cartan import CartanDatum, build_cartan_datum
from .cores import SymmetricCore, core_of, grassmannian_of
from .errors import (
    ConfigurationError,
    DomainError,
    InternalConsistencyError,
    KSchurError,
    UnsupportedFormulaError,
    VerificationFailure,
)
from .kschur import ExpansionReport, expand, verify_commutation
from .nilcoxeter import NilCoxeterElement, nc_basis, nc_equal, nc_multiply
from .weyl import (
    AffineWeylElement,
    automorphism_of_coweight,
    bruhat_leq,
    canonical_reduced_word,
    element_from_word,
    length,
    pseudo_translation,
)
