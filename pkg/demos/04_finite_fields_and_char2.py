# %% [markdown]
# # Finite fields: brute-force referee and the characteristic-2 probe
#
# Over GF(3) every `X` can be enumerated for small sizes, which gives an
# oracle independent of all elimination code.

# %%
from collections import Counter

from starsylv import GF, StarMode, gen_consistent, gen_perturbed
from starsylv.oracle import brute_force_consistency, probe_char2
from starsylv.roth import extract_solution
from starsylv.vecsolve import solution_count_gf, solve

T = StarMode.TRANSPOSE
gf3 = GF(3)
tally = Counter()
for seed in range(30):
    sys, _ = gen_consistent(gf3, T, 2, 2, 2, seed)
    sys = gen_perturbed(sys, seed)
    ref = brute_force_consistency(sys)
    v = solve(sys)
    agree = ref.consistent == v.consistent == (extract_solution(sys) is not None)
    if v.consistent:
        agree = agree and solution_count_gf(sys, v.solutions) == ref.solutions
    tally["consistent" if ref.consistent else "inconsistent"] += 1
    tally["agree"] += agree
print(dict(tally))

# %% [markdown]
# GF(2) is outside the theorem's hypothesis and is refused unless the
# probe is enabled.  The probe decides solvability by enumerating `X` and
# simultaneous congruence by enumerating all of GL(m+n, 2).

# %%
try:
    GF(2)
except Exception as exc:
    print(type(exc).__name__, exc)

report = probe_char2(max_total_dim=3, seed=0, sample_count=60, enabled=True)
print(report.to_text().splitlines()[0])
print(Counter((r.a_holds, r.b_holds) for r in report.instances))
