"""Exact computations with group-cograded Hopf systems.

A system is a family of finite-dimensional algebras ``A_p`` indexed by a
finite group, with coproduct blocks ``Delta_{p,q}: A_pq -> A_p (x) A_q``, a
counit on ``A_e`` and antipodes ``S_p: A_p -> A_{p^-1}``.  Everything is
rational and checked with exact equality.
"""

__version__ = "0.1.0"

from .cograded import (  # noqa: E402
    CogradedHopf,
    ComponentAlgebra,
    GradedElement,
    Report,
    assemble,
    gamma_embedding,
    solve_antipode,
    solve_counit,
    verify_antipode_antihom,
    verify_axioms,
    verify_grading_laws,
)
from .dual import GradedFunctional, bidual_pairing_check, build_dual, convolve  # noqa: E402
from .errors import HopfError  # noqa: E402
from .group import FiniteGroup  # noqa: E402
from .integrals import (  # noqa: E402
    IntegralData,
    find_left_integral,
    integral_data,
    invariant_functional_space,
    verify_dual_basis_identities,
)

__all__ = [
    "CogradedHopf",
    "ComponentAlgebra",
    "FiniteGroup",
    "GradedElement",
    "GradedFunctional",
    "HopfError",
    "IntegralData",
    "Report",
    "assemble",
    "bidual_pairing_check",
    "build_dual",
    "convolve",
    "find_left_integral",
    "gamma_embedding",
    "integral_data",
    "invariant_functional_space",
    "solve_antipode",
    "solve_counit",
    "verify_antipode_antihom",
    "verify_axioms",
    "verify_dual_basis_identities",
    "verify_grading_laws",
]
