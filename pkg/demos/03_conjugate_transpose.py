# %% [markdown]
# # Conjugate transpose over the Gaussian rationals
#
# With `*` the conjugate transpose, `X -> A X - X^H B` is not linear over
# Q(i), only over Q, so the direct solver splits every unknown into real
# and imaginary parts.  The pair spaces stay linear over Q(i).

# %%
from starsylv import QI, ExactMatrix, StarMode, StarSylvesterSystem, gen_consistent
from starsylv.roth import check_claims, extract_solution, witness_from_solution
from starsylv.vecsolve import assemble, solve

H = StarMode.CONJUGATE_TRANSPOSE


def scalar(c):
    one = ExactMatrix.from_rows(QI, [[1]])
    return StarSylvesterSystem(QI, H, 1, 1, [(one, one, ExactMatrix.from_rows(QI, [[c]]))])


# x - conj(x) = 2i Im(x): purely imaginary right-hand sides only
for c in ["2i", "1"]:
    sys = scalar(c)
    op = assemble(sys)
    print(f"C = {c}: realified operator {op.M}, rhs {[str(x) for x in op.rhs]}")
    print("   ", solve(sys))

# %%
sys, X = gen_consistent(QI, H, 2, 3, 2, seed=7)
v = solve(sys)
print("consistent:", v.consistent, " real dimension of solutions:", v.solutions.dim)
print("extracted:", extract_solution(sys))
r = check_claims(sys, witness_from_solution(sys, X).S)
print("dim D =", r.dim_D, " dim D0 =", r.dim_D0, " twist ok:", r.s_twist)
