"""Congruence witnesses and the pair-space machinery behind them.

With ``M_i = [[C_i, -A_i], [B_i, 0]]`` and ``N_i = [[0, -A_i], [B_i, 0]]``
(both ``(m+n) x (m+n)``), the system is consistent exactly when one
invertible ``S`` gives ``S M_i S^* = N_i`` for every ``i``.

Pairs ``(U, W)`` of ``(m+n) x (m+n)`` matrices live in

* ``Gamma_i``: ``N_i U + W M_i = 0``
* ``Delta_i``: ``U^* N_i + M_i W^* = 0``

and ``D`` is the intersection over all ``i`` of both; ``D0`` is the same
with every ``C_i = 0``.  Applying ``*`` to the ``Delta_i`` equation gives
the equivalent ``N_i^* U + W M_i^* = 0``, which is linear over the base
field even when ``*`` is the conjugate transpose.  So all pair spaces are
computed over the system's own field, no realification.

Pair coordinates are row-major: ``U[r, c]`` at ``r*k + c`` and ``W[r, c]``
at ``k*k + r*k + c`` with ``k = m + n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    Char2Unsupported,
    FieldMismatch,
    IndexOutOfRange,
    InvalidWitness,
    NotASolution,
    ShapeMismatch,
)
from .exactmat import (
    ExactMatrix,
    StarMode,
    kernel_from_pivots,
    block_compose,
    block_extract,
    eliminate,
    inverse,
    solve_sparse,
)
from .model import is_solution

__all__ = [
    "blockM",
    "blockN",
    "CongruenceWitness",
    "witness_from_solution",
    "verify_congruence",
    "PairVector",
    "PairSpaceBasis",
    "constraint_rows",
    "pair_space",
    "in_gamma",
    "in_delta",
    "in_pair_space",
    "block_constraints",
    "project_phi",
    "truncate",
    "ClaimReport",
    "check_claims",
    "target_pair",
    "extract_solution",
]


def _check_index(sys, i):
    if not 1 <= i <= sys.ell:
        raise IndexOutOfRange(f"equation index {i} outside 1..{sys.ell}")


def blockM(sys, i, homogeneous=False):
    """``[[C_i, -A_i], [B_i, 0]]``; ``i`` is 1-based."""
    _check_index(sys, i)
    A, B, C = sys.triples[i - 1]
    if homogeneous:
        C = ExactMatrix.zeros(sys.field, sys.m, sys.m)
    return block_compose([[C, -A], [B, ExactMatrix.zeros(sys.field, sys.n, sys.n)]])


def blockN(sys, i):
    """``[[0, -A_i], [B_i, 0]]``; ``i`` is 1-based."""
    return blockM(sys, i, homogeneous=True)


# witnesses

@dataclass(frozen=True)
class CongruenceWitness:
    S: ExactMatrix
    invertible: bool
    per_equation_ok: tuple

    @property
    def accepted(self):
        return self.invertible and all(self.per_equation_ok)


def verify_congruence(sys, S):
    """Check ``S M_i S^* == N_i`` for every equation, and invertibility of ``S``."""
    k = sys.size
    if S.shape != (k, k):
        raise ShapeMismatch(f"S must be {k}x{k}, got {S.rows}x{S.cols}")
    if S.field != sys.field:
        raise FieldMismatch(f"S is over {S.field}, system over {sys.field}")
    Ss = sys.star(S)
    ok = tuple(S @ blockM(sys, i) @ Ss == blockN(sys, i) for i in range(1, sys.ell + 1))
    return CongruenceWitness(S, inverse(S) is not None, ok)


def witness_from_solution(sys, X):
    """``S = [[I_m, X^*], [0, I_n]]`` built from a solution ``X``."""
    if X.shape != (sys.n, sys.m) or not is_solution(sys, X):
        raise NotASolution("X does not solve the system")
    f, m, n = sys.field, sys.m, sys.n
    S = block_compose([[ExactMatrix.identity(f, m), sys.star(X)],
                       [ExactMatrix.zeros(f, n, m), ExactMatrix.identity(f, n)]])
    return verify_congruence(sys, S)


# pair spaces

@dataclass(frozen=True)
class PairVector:
    U: ExactMatrix
    W: ExactMatrix
    m: int
    n: int

    def _blocks(self, M):
        return block_extract(M, self.m, self.m)

    @property
    def U_blocks(self):
        return self._blocks(self.U)

    @property
    def W_blocks(self):
        return self._blocks(self.W)

    def __getattr__(self, name):
        # U11 .. W22
        if len(name) == 3 and name[0] in "UW" and name[1] in "12" and name[2] in "12":
            blocks = self._blocks(self.U if name[0] == "U" else self.W)
            return blocks[int(name[1]) - 1][int(name[2]) - 1]
        raise AttributeError(name)

    def to_vector(self):
        return list(self.U.entries) + list(self.W.entries)

    @classmethod
    def from_vector(cls, field, m, n, v):
        k = m + n
        kk = k * k
        return cls(ExactMatrix(field, k, k, tuple(v[:kk])),
                   ExactMatrix(field, k, k, tuple(v[kk:2 * kk])), m, n)


@dataclass(frozen=True)
class PairSpaceBasis:
    """Basis of one pair space.  ``realified`` is always false, see module notes."""

    which: str
    basis: tuple
    dim: int
    realified: bool = False


def _gamma_rows(sys, i, homogeneous):
    k = sys.size
    kk = k * k
    N, M = blockN(sys, i), blockM(sys, i, homogeneous)
    iz = sys.field.is_zero
    rows = []
    for r in range(k):
        for c in range(k):
            row = {}
            for j in range(k):
                a = N[r, j]
                if not iz(a):
                    row[j * k + c] = a
                b = M[j, c]
                if not iz(b):
                    row[kk + r * k + j] = b
            rows.append(row)
    return rows


def _delta_rows(sys, i, homogeneous):
    # N^* U + W M^* = 0, the starred form of U^* N + M W^* = 0
    k = sys.size
    kk = k * k
    N, M = blockN(sys, i), blockM(sys, i, homogeneous)
    iz = sys.field.is_zero
    conj = sys.field.conj if sys.mode is StarMode.CONJUGATE_TRANSPOSE else (lambda x: x)
    rows = []
    for r in range(k):
        for c in range(k):
            row = {}
            for j in range(k):
                a = N[j, r]
                if not iz(a):
                    row[j * k + c] = conj(a)
                b = M[c, j]
                if not iz(b):
                    row[kk + r * k + j] = conj(b)
            rows.append(row)
    return rows


_WHICH = ("D", "D0", "Gamma", "Delta")


def constraint_rows(sys, homogeneous=False, which="D", index=None):
    """Sparse linear constraints over the ``2(m+n)^2`` pair coordinates.

    ``which`` selects ``"Gamma"``, ``"Delta"`` or both (``"D"``); ``index``
    restricts to one equation (1-based), otherwise all are intersected.
    """
    if which == "D0":
        which, homogeneous = "D", True
    if which not in _WHICH:
        raise ValueError(f"unknown pair space {which!r}")
    indices = [index] if index is not None else range(1, sys.ell + 1)
    rows = []
    for i in indices:
        _check_index(sys, i)
        if which in ("D", "Gamma"):
            rows.extend(_gamma_rows(sys, i, homogeneous))
        if which in ("D", "Delta"):
            rows.extend(_delta_rows(sys, i, homogeneous))
    return rows


def pair_space(sys, homogeneous=False, which="D", index=None):
    """Basis of ``D`` (or ``D0`` with ``homogeneous``), or of a single ``Gamma``/``Delta``."""
    k = sys.size
    rows = constraint_rows(sys, homogeneous, which, index)
    basis = tuple(PairVector.from_vector(sys.field, sys.m, sys.n, v)
                  for v in kernel_from_pivots(sys.field, eliminate(sys.field, rows, 2 * k * k),
                                                   2 * k * k))
    label = which
    if which == "D" and homogeneous:
        label = "D0"
    if index is not None:
        label = f"{label}_{index}"
    return PairSpaceBasis(label, basis, len(basis))


def in_gamma(sys, i, U, W, homogeneous=False):
    return (blockN(sys, i) @ U + W @ blockM(sys, i, homogeneous)).is_zero()


def in_delta(sys, i, U, W, homogeneous=False):
    return (sys.star(U) @ blockN(sys, i) + blockM(sys, i, homogeneous) @ sys.star(W)).is_zero()


def in_pair_space(sys, pair, homogeneous=False):
    """Membership in ``D`` (or ``D0``) straight from the defining products."""
    U, W = pair.U, pair.W
    return all(in_gamma(sys, i, U, W, homogeneous) and in_delta(sys, i, U, W, homogeneous)
               for i in range(1, sys.ell + 1))


def block_constraints(sys, i, pair, homogeneous=False):
    """The eight block equations of ``Gamma_i`` and ``Delta_i`` as residual matrices.

    All eight vanish exactly when the pair lies in ``Gamma_i`` and ``Delta_i``.
    """
    _check_index(sys, i)
    A, B, C = sys.triples[i - 1]
    if homogeneous:
        C = ExactMatrix.zeros(sys.field, sys.m, sys.m)
    s = sys.star
    p = pair
    U11, U12, U21, U22 = p.U11, p.U12, p.U21, p.U22
    W11, W12, W21, W22 = p.W11, p.W12, p.W21, p.W22
    gamma = [
        A @ U21 - W12 @ B - W11 @ C,
        B @ U11 + W22 @ B + W21 @ C,
        A @ U22 + W11 @ A,
        B @ U12 - W21 @ A,
    ]
    delta = [
        A @ s(W12) - s(U21) @ B - C @ s(W11),
        s(U11) @ A + A @ s(W22) - C @ s(W21),
        s(U22) @ B + B @ s(W11),
        s(U12) @ A - B @ s(W21),
    ]
    return gamma + delta


def project_phi(pair):
    """``[W11; W21]``, an ``(m+n) x m`` matrix."""
    k = pair.m + pair.n
    return pair.W.submatrix(0, k, 0, pair.m)


def truncate(pair):
    """``([[0, U12], [0, U22]], [[W11, 0], [W21, 0]])``."""
    k, m = pair.m + pair.n, pair.m
    U, W = pair.U, pair.W
    zero = U.field.zero
    Ut = ExactMatrix.from_function(U.field, k, k, lambda r, c: U[r, c] if c >= m else zero)
    Wt = ExactMatrix.from_function(W.field, k, k, lambda r, c: W[r, c] if c < m else zero)
    return PairVector(Ut, Wt, pair.m, pair.n)


def _span_rank(field, vectors):
    iz = field.is_zero
    rows = [{j: x for j, x in enumerate(v) if not iz(x)} for v in vectors]
    ncols = len(vectors[0]) if vectors else 0
    return len(eliminate(field, rows, ncols))


def _phi_columns(k, m):
    kk = k * k
    return {kk + r * k + c for r in range(k) for c in range(m)}


def _restricted_rref(sys, homogeneous):
    """RREF of the constraints with the phi coordinates forced to zero."""
    k, m = sys.size, sys.m
    drop = _phi_columns(k, m)
    rows = [{c: v for c, v in row.items() if c not in drop}
            for row in constraint_rows(sys, homogeneous)]
    return eliminate(sys.field, rows, 2 * k * k)


@dataclass(frozen=True)
class ClaimReport:
    dim_D: int
    dim_D0: int
    dim_ker_D: int
    dim_ker_D0: int
    dim_im_D: int
    dim_im_D0: int
    rank_nullity_ok: bool
    claim_i: bool | None
    claim_ii: bool
    claim_iii: bool
    claim_iv: bool
    s_twist: bool | None
    target_in_image: bool

    def as_dict(self):
        return dict(self.__dict__)


def check_claims(sys, S=None):
    """Evaluate the four structural claims on ``sys``.

    Claims (ii)-(iv) are checked unconditionally.  Claim (i) and the
    ``S``-twist bijection are only meaningful under a congruence witness,
    so they are ``None`` unless an accepted ``S`` is supplied.
    """
    fld, m, n, k = sys.field, sys.m, sys.n, sys.size
    if S is not None and not verify_congruence(sys, S).accepted:
        raise InvalidWitness("S does not satisfy the simultaneous congruence")

    D = pair_space(sys)
    D0 = pair_space(sys, homogeneous=True)

    # (ii): the constraints restricted to W11 = 0, W21 = 0 have identical RREFs
    ker_D = _restricted_rref(sys, False)
    ker_D0 = _restricted_rref(sys, True)
    claim_ii = ker_D == ker_D0
    nvars = 2 * k * k - k * m
    dim_ker_D = nvars - len(ker_D)
    dim_ker_D0 = nvars - len(ker_D0)

    im_D = [list(project_phi(p).entries) for p in D.basis]
    im_D0 = [list(project_phi(p).entries) for p in D0.basis]
    dim_im_D = _span_rank(fld, im_D)
    dim_im_D0 = _span_rank(fld, im_D0)
    rank_nullity_ok = (dim_ker_D + dim_im_D == D.dim) and (dim_ker_D0 + dim_im_D0 == D0.dim)

    # (iii): truncations land in D0, hence Im phi(D) lies in Im phi(D0)
    truncations_ok = all(in_pair_space(sys, truncate(p), homogeneous=True) for p in D.basis)
    inclusion_ok = _span_rank(fld, im_D0 + im_D) == dim_im_D0
    claim_iii = truncations_ok and inclusion_ok

    # (iv): (-I, I) lies in D0 and maps to [I_m; 0]
    I = ExactMatrix.identity(fld, k)
    minus_one = PairVector(-I, I, m, n)
    target = ExactMatrix.from_function(fld, k, m, lambda r, c: fld.one if r == c else fld.zero)
    claim_iv = in_pair_space(sys, minus_one, homogeneous=True) and project_phi(minus_one) == target

    claim_i = s_twist = None
    if S is not None:
        claim_i = D.dim == D0.dim
        Ss = sys.star(S)
        S_inv = inverse(S)
        Ss_inv = inverse(Ss)
        fwd = [PairVector(p.U @ Ss, p.W @ S_inv, m, n) for p in D.basis]
        back = [PairVector(p.U @ Ss_inv, p.W @ S, m, n) for p in D0.basis]
        s_twist = (all(in_pair_space(sys, q, homogeneous=True) for q in fwd)
                   and all(in_pair_space(sys, q) for q in back)
                   and (not fwd or _span_rank(fld, [q.to_vector() for q in fwd]) == D.dim)
                   and (not back or _span_rank(fld, [q.to_vector() for q in back]) == D0.dim))

    return ClaimReport(
        dim_D=D.dim, dim_D0=D0.dim,
        dim_ker_D=dim_ker_D, dim_ker_D0=dim_ker_D0,
        dim_im_D=dim_im_D, dim_im_D0=dim_im_D0,
        rank_nullity_ok=rank_nullity_ok,
        claim_i=claim_i, claim_ii=claim_ii, claim_iii=claim_iii, claim_iv=claim_iv,
        s_twist=s_twist,
        target_in_image=target_pair(sys) is not None,
    )


# extraction

def target_pair(sys):
    """A pair in ``D`` with ``W11 = I_m`` and ``W21 = 0``, or ``None``."""
    fld, m, k = sys.field, sys.m, sys.size
    kk = k * k
    rows, rhs = [], []
    for r in range(k):
        for c in range(m):
            rows.append({kk + r * k + c: fld.one})
            rhs.append(fld.one if r == c else fld.zero)
    d_rows = constraint_rows(sys)
    rows.extend(d_rows)
    rhs.extend([fld.zero] * len(d_rows))
    sol = solve_sparse(fld, rows, rhs, 2 * kk)
    if not sol.consistent:
        return None
    return PairVector.from_vector(fld, sys.m, sys.n, sol.particular)


def extract_solution(sys):
    """``X = (U21 + W12^*) / 2`` from :func:`target_pair`, or ``None`` if no such pair."""
    if sys.field.characteristic == 2:
        raise Char2Unsupported("extraction divides by 2")
    pair = target_pair(sys)
    if pair is None:
        return None
    X = (pair.U21 + sys.star(pair.W12)).scale(sys.field.half)
    assert is_solution(sys, X)
    return X
