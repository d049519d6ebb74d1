"""Symbolic engine for the algebra of Steenrod operations on Hopf-algebra
cohomology at odd primes: Adem-type normal forms, bigraded bases, the
Koszul-signed tensor square, and checks of coproduct schemes."""
from .modular import adem_coeff, adem_coeff_beta, binom_mod_p, check_prime
from .terms import (
    BETA,
    Element,
    FuelExhausted,
    Grading,
    InvalidGrading,
    admissible_basis,
    bidegree_of,
    concat,
    counit,
    element_add,
    element_scale,
    is_admissible,
    multiply,
    normalize,
    rewrite_step,
)
from .tensor import TensorElement, normalize_tensor, tensor_multiply
from .coalgebra import (
    CheckReport,
    CoproductScheme,
    check_beta_squared,
    check_coassociativity,
    check_counit,
    check_relations,
    coproduct,
    cp_square_check,
    geometric_obstruction,
    geometric_scheme,
    obstruction_report,
    singer_scheme,
)
from .parse import ParseError, parse_expression

__version__ = "0.1.0"
