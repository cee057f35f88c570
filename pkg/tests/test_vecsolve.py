import random

import pytest
from hypothesis import given, settings, strategies as st

from starsylv import (
    GF, Q, QI, ExactMatrix, StarMode, StarSylvesterSystem, gen_consistent, gen_perturbed, rank,
)
from starsylv.model import SolutionSet, random_matrix, residual
from starsylv.oracle import brute_force_consistency
from starsylv.vecsolve import apply_map, assemble, coords, from_coords, solution_count_gf, solve

from conftest import mat

T, H = StarMode.TRANSPOSE, StarMode.CONJUGATE_TRANSPOSE


def kron(P, R):
    f = P.field
    return ExactMatrix.from_function(
        f, P.rows * R.rows, P.cols * R.cols,
        lambda i, j: f.mul(P[i // R.rows, j // R.cols], R[i % R.rows, j % R.cols]))


def commutation(field, n, m):
    """K with vec(X^T) = K vec(X) for X of shape n x m."""
    return ExactMatrix.from_function(
        field, n * m, n * m,
        lambda i, j: field.one if (i % m) * n + i // m == j else field.zero)


def kron_operator(sys):
    m, n, f = sys.m, sys.n, sys.field
    Im = ExactMatrix.identity(f, m)
    K = commutation(f, n, m)
    blocks = [kron(Im, A) - kron(B.T, Im) @ K for A, B, _ in sys.triples]
    return ExactMatrix(f, sum(b.rows for b in blocks), n * m,
                       tuple(x for b in blocks for x in b.entries))


def matvec(M, v):
    f = M.field
    out = []
    for i in range(M.rows):
        acc = f.zero
        for j, x in enumerate(M.row(i)):
            acc = f.add(acc, f.mul(x, v[j]))
        out.append(acc)
    return out


def vec_block(sys, M):
    """Column-major vec, split into (Re, Im) pairs under H."""
    out = []
    for c in range(M.cols):
        for r in range(M.rows):
            x = M[r, c]
            out.extend((x.re, x.im) if sys.mode is H else (x,))
    return out


def scalar_system(field, mode, a, b, c):
    return StarSylvesterSystem(field, mode, 1, 1, [(mat(field, [[a]]), mat(field, [[b]]), mat(field, [[c]]))])


def test_assemble_fixture(fixture_1x1):
    op = assemble(fixture_1x1)
    assert op.M == mat(Q, [[2]]) and op.rhs == (4,)


def test_assemble_homogeneous():
    sys, _ = gen_consistent(Q, T, 2, 3, 2, seed=1)
    assert all(x == 0 for x in assemble(sys.homogeneous()).rhs)


def test_assemble_realified_scalar():
    # x - conj(x) = 2i Im x: Re x contributes nothing, Im x contributes 2 to Im
    op = assemble(scalar_system(QI, H, 1, 1, "2i"))
    assert op.realified
    assert op.M == mat(Q, [[0, 0], [0, 2]])
    assert op.rhs == (0, 2)
    assert op.coord_map == ((0, 0, "re"), (0, 0, "im"))
    v = solve(scalar_system(QI, H, 1, 1, "2i"))
    assert v.consistent and v.solutions.dim == 1
    assert v.solutions.particular == mat(QI, [["i"]])
    (h,) = v.solutions.homogeneous_basis
    assert h == mat(QI, [[1]])


def test_solve_examples(fixture_1x1):
    v = solve(fixture_1x1)
    assert v.consistent and v.solutions.particular == mat(Q, [[2]]) and v.solutions.dim == 0
    v = solve(scalar_system(QI, H, 1, 1, 1))
    assert not v.consistent and (v.rank, v.rank_augmented) == (1, 2)


@pytest.mark.parametrize("field,mode", [(Q, T), (QI, T), (QI, H), (GF(5), T)])
@pytest.mark.parametrize("seed", range(6))
def test_solve_planted(field, mode, seed):
    rng = random.Random(seed)
    m, n, ell = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
    sys, X = gen_consistent(field, mode, m, n, ell, seed)
    v = solve(sys)
    assert v.consistent
    sol = v.solutions
    assert all(R.is_zero() for R in residual(sys, sol.particular))
    hom = sys.homogeneous()
    for Hm in sol.homogeneous_basis:
        assert all(R.is_zero() for R in residual(hom, Hm))
    op = assemble(sys)
    assert sol.dim == op.M.cols - rank(op.M)
    # the planted X differs from the particular solution by a homogeneous solution
    assert all(R.is_zero() for R in residual(hom, X - sol.particular))


@pytest.mark.parametrize("seed", range(10))
def test_operator_matches_kronecker_route(seed):
    rng = random.Random(seed)
    for field in (Q, GF(7), QI):
        sys, _ = gen_consistent(field, T, rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3), seed)
        assert assemble(sys).M == kron_operator(sys)


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6))
def test_operator_columns_reproduce_map(seed):
    rng = random.Random(seed)
    field, mode = rng.choice([(Q, T), (QI, H), (GF(3), T)])
    sys, _ = gen_consistent(field, mode, rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 2), seed)
    op = assemble(sys)
    X = random_matrix(field, sys.n, sys.m, rng, 5)
    assert from_coords(sys, coords(sys, X)) == X
    lhs = matvec(op.M, coords(sys, X))
    expected = []
    for img in apply_map(sys, X):
        expected.extend(vec_block(sys, img))
    assert lhs == expected


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6))
def test_linearity_transpose_modes(seed):
    rng = random.Random(seed)
    field = rng.choice([Q, QI, GF(5)])
    sys, _ = gen_consistent(field, T, rng.randint(1, 3), rng.randint(1, 3), 2, seed)
    M = assemble(sys).M
    X1, X2 = (random_matrix(field, sys.n, sys.m, rng, 4) for _ in range(2))
    alpha = field.random_element(rng, 4)
    lhs = matvec(M, coords(sys, X1.scale(alpha) + X2))
    a, b = matvec(M, coords(sys, X1)), matvec(M, coords(sys, X2))
    assert lhs == [field.add(field.mul(alpha, x), y) for x, y in zip(a, b)]


@pytest.mark.parametrize("seed", range(30))
def test_rank_evidence_and_gf_counts(seed):
    rng = random.Random(seed)
    sys, _ = gen_consistent(GF(3), T, rng.randint(1, 2), rng.randint(1, 2), rng.randint(1, 2), seed)
    if seed % 2:
        sys = gen_perturbed(sys, seed)
    v = solve(sys)
    ref = brute_force_consistency(sys)
    assert v.consistent == ref.consistent
    if v.consistent:
        assert solution_count_gf(sys, v.solutions) == ref.solutions
    else:
        assert v.rank_augmented == v.rank + 1


def test_solution_count_examples():
    sys = scalar_system(GF(3), T, 1, 1, 0)
    v = solve(sys)
    assert v.solutions.dim == 1 and solution_count_gf(sys, v.solutions) == 3
    sys = scalar_system(GF(3), T, 2, 1, 1)
    assert solution_count_gf(sys, solve(sys).solutions) == 1
    assert solution_count_gf(sys, SolutionSet(None, (), 2)) == 9
