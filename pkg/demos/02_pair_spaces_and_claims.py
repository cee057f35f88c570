# %% [markdown]
# # Pair spaces, the projection phi, and extraction
#
# For a system we build the spaces `D` (from the actual `C_i`) and `D0`
# (all `C_i = 0`) of matrix pairs `(U, W)`, project them with
# `phi(U, W) = [W11; W21]`, and recover a solution from any pair with
# `phi = [I; 0]` as `X = (U21 + W12^T) / 2`.

# %%
from starsylv import Q, StarMode, gen_consistent, gen_perturbed, solve
from starsylv.roth import (
    check_claims, extract_solution, pair_space, project_phi, target_pair, witness_from_solution,
)

sys, X = gen_consistent(Q, StarMode.TRANSPOSE, 2, 2, 2, seed=3)
D = pair_space(sys)
D0 = pair_space(sys, homogeneous=True)
print("dim D =", D.dim, " dim D0 =", D0.dim)
for p in D.basis:
    print("phi of basis pair:", project_phi(p))

# %% [markdown]
# Extraction solves one affine system (the `D` constraints plus
# `W11 = I`, `W21 = 0`) and never looks at the planted `X`.

# %%
pair = target_pair(sys)
print("W11 =", pair.W11, " W21 =", pair.W21)
X_extracted = extract_solution(sys)
print("extracted X =", X_extracted)
print("direct solver X =", solve(sys).solutions.particular)

# %% [markdown]
# The structural claims.  Kernel equality, image inclusion and
# membership of `(-I, I)` in `D0` hold for every system; equal
# dimensions and the `S`-twist need a witness.

# %%
S = witness_from_solution(sys, X).S
for key, value in check_claims(sys, S).as_dict().items():
    print(f"{key:>16}: {value}")

# %%
bad = gen_perturbed(sys, seed=5)
print("perturbed consistent:", solve(bad).consistent)
r = check_claims(bad)
print("dim D =", r.dim_D, " dim D0 =", r.dim_D0, " target in image:", r.target_in_image)
print("claims ii-iv:", r.claim_ii, r.claim_iii, r.claim_iv)
