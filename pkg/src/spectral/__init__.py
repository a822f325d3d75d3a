"""
Spectral Classification
Kernels, core/nut status, main-ness of 0, multiplicities of +1/-1, Parter test
"""

from .kernel import KernelBasis, kernel, full_kernel_vector, combine_full, shifted_nullity
from .profile import SpectralProfile, classify, nullity, is_nut_by_adjugate, is_parter

__all__ = [
    "KernelBasis",
    "kernel",
    "full_kernel_vector",
    "combine_full",
    "shifted_nullity",
    "SpectralProfile",
    "classify",
    "nullity",
    "is_nut_by_adjugate",
    "is_parter",
]
