"""Exact verification of power identities for rescaled Chebyshev sequences.

The package builds every identity instance as an exact object -- a sparse
integer-coefficient polynomial or an exact rational -- and compares
canonical forms, so a reported pass is a machine-checked equality, not a
numerical coincidence.
"""

from .hypergeom import (
    PoleError,
    chu_vandermonde_rhs,
    hyp2f1_terminating,
    lemma_lhs,
    lemma_rhs,
    pochhammer,
    pochhammer_reflect,
    pochhammer_split_even,
    pochhammer_split_odd,
)
from .multipoly import MultiPoly
from .partitions import PartitionM, enumerate_partitions, waring_coefficient
from .sequences import omega, seq_u, seq_v, seq_w
from .symfun import SymExpansion, power_sum_newton, power_sum_waring, specialize_two_letters
from .theta import theta_by_source, theta_general, theta_gp, theta_m1, theta_m2
from .verify import (
    SuiteConfig,
    VerificationReport,
    run_suite,
    verify_chu,
    verify_corollaries,
    verify_fundamental,
    verify_lemma,
    verify_pochhammer_transforms,
    verify_theorem1,
    verify_waring,
)

__version__ = "0.1.0"

__all__ = [
    "MultiPoly",
    "PartitionM",
    "PoleError",
    "SuiteConfig",
    "SymExpansion",
    "VerificationReport",
    "chu_vandermonde_rhs",
    "enumerate_partitions",
    "hyp2f1_terminating",
    "lemma_lhs",
    "lemma_rhs",
    "omega",
    "pochhammer",
    "pochhammer_reflect",
    "pochhammer_split_even",
    "pochhammer_split_odd",
    "power_sum_newton",
    "power_sum_waring",
    "run_suite",
    "seq_u",
    "seq_v",
    "seq_w",
    "specialize_two_letters",
    "theta_by_source",
    "theta_general",
    "theta_gp",
    "theta_m1",
    "theta_m2",
    "verify_chu",
    "verify_corollaries",
    "verify_fundamental",
    "verify_lemma",
    "verify_pochhammer_transforms",
    "verify_theorem1",
    "verify_waring",
    "waring_coefficient",
]
