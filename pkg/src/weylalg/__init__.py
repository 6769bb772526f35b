"""Exact arithmetic in the first Weyl algebra over Q.

The algebra is presented as a generalized Weyl algebra over Q[H] with
Y X = H, X Y = H - 1 and the shift sigma(H) = H - 1.  The package computes
graded normal forms, commutators, centralizers of homogeneous elements in
the skew Laurent localization, and constructive tame-automorphism
certificates for commuting pairs of small mass.
"""

from .centralizer import (
    CentralizerResult,
    InfeasibilityCertificate,
    Orbit,
    PowerDecomposition,
    centralizer_generator,
    centralizer_rational,
    in_rational_centralizer,
    power_decompose,
    positive_divisors,
    shift_orbit_partition,
    solve_twisted_root,
    twisted_product,
)
from .certify import (
    SweepCell,
    SweepReport,
    certify_pair,
    delta_balance_check,
    impossibility_sweep,
)
from .errors import DomainError, OutOfScopeError, ParseError, TwistedRootInfeasible
from .factor import FactoredPoly, factor_poly, factor_ratfunc, is_irreducible
from .parser import format_pretty, normalize, normalize_text, parse, print_canonical
from .polynomials import (
    NEG_INF,
    Poly,
    Rat,
    RatFunc,
    delta_op,
    monic_split,
    rat_deg,
    sigma_pow,
)
from .tame import (
    AutoWord,
    PhiX,
    PhiY,
    Torus,
    Translate,
    Xi,
    affine_decompose,
    apply_auto,
    auto_images,
    invert_auto,
    random_tame,
)
from .weyl import (
    BElement,
    GradedElement,
    HomogeneousElement,
    WeylElement,
    commutator,
    components,
    in_skew_subalgebra,
    mass,
    mul,
    structure_constant,
    structure_constant_right,
    total_degree,
    xi_apply,
    xi_inverse_apply,
)
from .weyl import H, ONE, X, Y, ZERO

__all__ = [
    "AutoWord", "BElement", "CentralizerResult", "DomainError", "FactoredPoly",
    "GradedElement", "H", "HomogeneousElement", "InfeasibilityCertificate",
    "NEG_INF", "ONE", "Orbit", "OutOfScopeError", "ParseError", "PhiX", "PhiY",
    "Poly", "PowerDecomposition", "Rat", "RatFunc", "SweepCell", "SweepReport",
    "Torus", "Translate", "TwistedRootInfeasible", "WeylElement", "X", "Xi", "Y",
    "ZERO", "affine_decompose", "apply_auto", "auto_images",
    "centralizer_generator", "centralizer_rational", "certify_pair",
    "commutator", "components", "delta_balance_check", "delta_op",
    "factor_poly", "factor_ratfunc", "format_pretty", "impossibility_sweep",
    "in_rational_centralizer", "in_skew_subalgebra", "invert_auto",
    "is_irreducible", "mass", "monic_split", "mul", "normalize",
    "normalize_text", "parse", "positive_divisors", "power_decompose",
    "print_canonical", "random_tame", "rat_deg", "shift_orbit_partition",
    "sigma_pow", "solve_twisted_root", "structure_constant",
    "structure_constant_right", "total_degree", "twisted_product", "xi_apply",
    "xi_inverse_apply",
]
