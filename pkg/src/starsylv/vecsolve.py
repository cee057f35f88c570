"""Direct solver: vectorise the whole system into one exact linear solve.

Coordinates of ``X`` (an ``n x m`` matrix) follow the column-major ``vec``
order, ``X[r, c]`` at index ``c*n + r``.  Output rows follow the same order
for each residual block ``A_i X - X^* B_i`` (``m x m``), equation after
equation.

For ``(QI, H)`` the map ``X -> A X - X^H B`` is only Q-linear, so the
system is realified: each coordinate ``x`` becomes the pair
``(Re x, Im x)`` at indices ``2k, 2k+1`` and each output entry becomes
the two rows ``(Re, Im)``; the solve then runs over Q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeMismatch
from .exactmat import ExactMatrix, StarMode, solve_affine
from .field import Q, GaussianRational
from .model import SolutionSet, residual

__all__ = [
    "AssembledOperator",
    "Consistent",
    "Inconsistent",
    "assemble",
    "apply_map",
    "coords",
    "from_coords",
    "solve",
    "solution_count_gf",
]


def _realified(sys):
    return sys.mode is StarMode.CONJUGATE_TRANSPOSE


def apply_map(sys, X):
    """``[A_i X - X^* B_i]``: the left-hand sides of the system."""
    Xs = sys.star(X)
    return [A @ X - Xs @ B for A, B, _ in sys.triples]


def _vec(field, M, realify):
    out = []
    for c in range(M.cols):
        for r in range(M.rows):
            x = M[r, c]
            if realify:
                out.extend((x.re, x.im))
            else:
                out.append(x)
    return out


def coords(sys, X):
    """Coordinate vector of ``X`` (realified under H)."""
    return _vec(sys.field, X, _realified(sys))


def from_coords(sys, v):
    """Inverse of :func:`coords`."""
    n, m = sys.n, sys.m
    if _realified(sys):
        vals = [GaussianRational(v[2 * k], v[2 * k + 1]) for k in range(n * m)]
    else:
        vals = list(v)
    if len(vals) != n * m:
        raise ShapeMismatch(f"{len(v)} coordinates for a {n}x{m} unknown")
    return ExactMatrix.from_function(sys.field, n, m, lambda r, c: vals[c * n + r])


@dataclass(frozen=True)
class AssembledOperator:
    """``M @ coords(X) == stack_i vec(A_i X - X^* B_i)`` and ``rhs == stack_i vec(C_i)``.

    ``coord_map[j]`` is ``(row, col, part)`` locating coordinate ``j`` in
    ``X``; ``part`` is ``"entry"``, or ``"re"``/``"im"`` when realified.
    """

    M: ExactMatrix
    rhs: tuple
    coord_map: tuple
    realified: bool


def assemble(sys):
    n, m = sys.n, sys.m
    realify = _realified(sys)
    fld = sys.field
    solve_field = Q if realify else fld
    coord_map = []
    columns = []
    for c in range(m):
        for r in range(n):
            units = [("re", fld.one), ("im", fld.i)] if realify else [("entry", fld.one)]
            for part, unit in units:
                E = ExactMatrix.from_function(
                    fld, n, m, lambda i, j: unit if (i, j) == (r, c) else fld.zero)
                col = []
                for img in apply_map(sys, E):
                    col.extend(_vec(fld, img, realify))
                columns.append(col)
                coord_map.append((r, c, part))
    nrows = (2 if realify else 1) * sys.ell * m * m
    ncols = len(columns)
    M = ExactMatrix(solve_field, nrows, ncols,
                    tuple(columns[j][i] for i in range(nrows) for j in range(ncols)))
    rhs = []
    for _, _, C in sys.triples:
        rhs.extend(_vec(fld, C, realify))
    return AssembledOperator(M, tuple(rhs), tuple(coord_map), realify)


@dataclass(frozen=True)
class Consistent:
    solutions: SolutionSet

    consistent = True


@dataclass(frozen=True)
class Inconsistent:
    rank: int
    rank_augmented: int

    consistent = False


def solve(sys):
    """Decide consistency; return :class:`Consistent` or :class:`Inconsistent`."""
    op = assemble(sys)
    sol = solve_affine(op.M, op.rhs)
    if not sol.consistent:
        return Inconsistent(sol.rank, sol.rank_augmented)
    X = from_coords(sys, sol.particular)
    basis = tuple(from_coords(sys, v) for v in sol.basis)
    # exactness is the whole contract; a failure here is a bug, not bad input
    assert all(R.is_zero() for R in residual(sys, X))
    return Consistent(SolutionSet(X, basis, len(basis)))


def solution_count_gf(sys, solutions):
    """Number of solutions of a consistent GF(p) system: ``p ** dim``."""
    p = sys.field.characteristic
    if not p:
        raise ValueError("solution counting needs a finite field")
    return p ** solutions.dim
