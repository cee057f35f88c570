"""Exact consistency checks for systems of star-Sylvester equations.

``A_i X - X^* B_i = C_i`` over Q, Q(i) or GF(p), where ``*`` is the
transpose or (over Q(i)) the conjugate transpose.
"""

from .errors import *  # noqa: F401,F403
from .exactmat import (
    ExactMatrix,
    StarMode,
    block_compose,
    block_extract,
    format_matrix,
    inverse,
    nullspace,
    parse_matrix,
    rank,
    rref,
    solve_affine,
    star,
)
from .field import GF, Q, QI, GaussianRational, Scalar, conj, field_from_spec, scalar_arith
from .model import (
    SolutionSet,
    StarSylvesterSystem,
    gen_consistent,
    gen_perturbed,
    is_solution,
    parse_system,
    residual,
    serialize_system,
)
from .oracle import brute_force_consistency, probe_char2
from .roth import (
    blockM,
    blockN,
    check_claims,
    extract_solution,
    pair_space,
    project_phi,
    verify_congruence,
    witness_from_solution,
)
from .vecsolve import assemble, solution_count_gf, solve

__version__ = "0.1.0"
