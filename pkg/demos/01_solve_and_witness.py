# %% [markdown]
# # Solving a star-Sylvester system and certifying it by congruence
#
# The scalar system `3x - x*1 = 4` is the smallest interesting case.  We
# solve it directly, build the congruence witness `S`, and check
# `S M S^T = N` by hand.

# %%
from starsylv import (
    Q, ExactMatrix, StarMode, StarSylvesterSystem, blockM, blockN, gen_consistent,
    parse_system, serialize_system, solve, verify_congruence, witness_from_solution,
)

text = """\
field Q
star T
dims 1 1 1
A 1
3
B 1
1
C 1
4
"""
sys = parse_system(text)
verdict = solve(sys)
print("consistent:", verdict.consistent)
print("X =", verdict.solutions.particular, " homogeneous dim =", verdict.solutions.dim)

# %% [markdown]
# A solution gives the unitriangular witness `[[I, X^T], [0, I]]`.

# %%
w = witness_from_solution(sys, verdict.solutions.particular)
print("S =", w.S)
print("M =", blockM(sys, 1), " N =", blockN(sys, 1))
print("S M S^T =", w.S @ blockM(sys, 1) @ w.S.T, " accepted:", w.accepted)

# %% [markdown]
# The identity matrix is not a witness when `C` is nonzero.

# %%
print(verify_congruence(sys, ExactMatrix.identity(Q, 2)))

# %% [markdown]
# A larger planted system: three equations, `m = 2`, `n = 3`.

# %%
big, X = gen_consistent(Q, StarMode.TRANSPOSE, 2, 3, 3, seed=42)
print(serialize_system(big))
v = solve(big)
print("dim of solution space:", v.solutions.dim)
print("witness accepted:", witness_from_solution(big, v.solutions.particular).accepted)

# %% [markdown]
# Perturbing `C_1` usually destroys consistency; the solver reports rank evidence.

# %%
from starsylv import gen_perturbed

bad = gen_perturbed(big, seed=1)
print(solve(bad))
