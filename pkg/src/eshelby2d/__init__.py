"""Irreducible decomposition and isotropic invariants of 2D Eshelby tensors."""

from .algebra import (
    IDENTITY,
    EshelbyTensor,
    GroupElement,
    SymmetryViolation,
    group_apply,
    random_eshelby,
    validate_minor_symmetry,
)
from .decomp import Decomposition, complex_rep, decompose, reconstruct
from .harmonic import ComplexRep, complex_action
from .invariants import (
    InvariantVector,
    PolarConfig,
    derived_invariants,
    invariant_basis,
    invariant_basis_complex,
    tensor_invariants,
)
from .orbit import align, brute_force_align, check_equivalence, equivalent

__version__ = "0.1.0"
