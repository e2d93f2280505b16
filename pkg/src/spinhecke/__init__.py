"""Exact symbolic kernel for degenerate affine Hecke-Clifford algebras,
their spin counterparts, and the covering algebras tying the two together,
for Weyl groups of types A, B, D.  All arithmetic is exact over the ring
Q(zeta_8)[u, v]."""

from .affine_hc import AHCElt, ahc_algebra, ahc_mul
from .clifford import CliffordElt, beta, beta_braid_defect, cliff_mul
from .covering import (
    CoverElt,
    LusztigElt,
    cover_algebra,
    cover_mul,
    lusztig_mul,
    upsilon_minus,
    upsilon_plus,
)
from .parser import Context, ParseError, eval_text, parse, render, specialize_element
from .scalars import Cyc8, Scalar, named_constant
from .spin_affine import (
    SpinAHElt,
    TensorSpinElt,
    phi_affine,
    psi_affine,
    sah_algebra,
    sah_mul,
    tensor_spin_algebra,
)
from .spin_weyl import SpinWeylAlgebra, spin_algebra, spin_mul
from .suites import SUITES, list_suites, run_suite
from .weyl import WeylGroup, weyl_group

__version__ = "1.0.0"

__all__ = [
    "AHCElt", "ahc_algebra", "ahc_mul",
    "CliffordElt", "beta", "beta_braid_defect", "cliff_mul",
    "CoverElt", "LusztigElt", "cover_algebra", "cover_mul", "lusztig_mul",
    "upsilon_minus", "upsilon_plus",
    "Context", "ParseError", "eval_text", "parse", "render", "specialize_element",
    "Cyc8", "Scalar", "named_constant",
    "SpinAHElt", "TensorSpinElt", "phi_affine", "psi_affine",
    "sah_algebra", "sah_mul", "tensor_spin_algebra",
    "SpinWeylAlgebra", "spin_algebra", "spin_mul",
    "SUITES", "list_suites", "run_suite",
    "WeylGroup", "weyl_group",
    "__version__",
]
