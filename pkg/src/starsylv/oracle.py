"""Brute-force referees over small prime fields.

Nothing here uses the elimination kernels: consistency is decided by
trying every ``X`` and congruence by trying every invertible ``S``.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field as dc_field

from .errors import ProbeDisabled, SearchSpaceTooLarge
from .exactmat import ExactMatrix, StarMode
from .field import GF
from .model import StarSylvesterSystem, is_solution, random_matrix, serialize_system
from .roth import blockM, blockN

__all__ = [
    "OracleVerdict",
    "brute_force_consistency",
    "invertible_matrices",
    "has_congruence_witness",
    "ProbeInstance",
    "ProbeReport",
    "probe_char2",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 3 ** 8


@dataclass(frozen=True)
class OracleVerdict:
    consistent: bool
    solutions: int


def _all_matrices(fld, rows, cols):
    p = fld.characteristic
    for values in itertools.product(range(p), repeat=rows * cols):
        yield ExactMatrix(fld, rows, cols, values)


def brute_force_consistency(sys, cap=DEFAULT_CAP):
    """Count every ``X`` over GF(p) with an exactly zero residual."""
    p = sys.field.characteristic
    if not p:
        raise ValueError("brute force needs a prime field")
    space = p ** (sys.n * sys.m)
    if space > cap:
        raise SearchSpaceTooLarge(f"{space} candidates exceed the cap of {cap}")
    count = sum(1 for X in _all_matrices(sys.field, sys.n, sys.m) if is_solution(sys, X))
    return OracleVerdict(count > 0, count)


def _det_nonzero(fld, M):
    # independent of exactmat.eliminate on purpose
    k = M.rows
    a = [list(M.row(i)) for i in range(k)]
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c]), None)
        if piv is None:
            return False
        a[c], a[piv] = a[piv], a[c]
        inv = fld.inv(a[c][c])
        for r in range(c + 1, k):
            f = fld.mul(a[r][c], inv)
            a[r] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(a[r], a[c])]
    return True


def invertible_matrices(fld, k):
    """All of GL(k, p), in lexicographic order of the row-major entries."""
    return [S for S in _all_matrices(fld, k, k) if _det_nonzero(fld, S)]


def has_congruence_witness(sys, group=None):
    """Exhaustive search for ``S`` with ``S M_i S^* = N_i`` for every ``i``."""
    if group is None:
        group = invertible_matrices(sys.field, sys.size)
    pairs = [(blockM(sys, i), blockN(sys, i)) for i in range(1, sys.ell + 1)]
    for S in group:
        St = sys.star(S)
        if all(S @ M @ St == N for M, N in pairs):
            return True
    return False


@dataclass(frozen=True)
class ProbeInstance:
    seed: int
    m: int
    n: int
    ell: int
    a_holds: bool
    b_holds: bool
    system: StarSylvesterSystem = dc_field(repr=False, compare=False)

    @property
    def anomaly(self):
        return self.a_holds != self.b_holds


@dataclass
class ProbeReport:
    instances: list
    dumped: list

    @property
    def anomalies(self):
        return [r for r in self.instances if r.anomaly]

    def to_text(self):
        lines = [f"probe-char2 instances={len(self.instances)} anomalies={len(self.anomalies)}"]
        for r in self.instances:
            flag = "  ANOMALY" if r.anomaly else ""
            lines.append(f"seed={r.seed} m={r.m} n={r.n} ell={r.ell} "
                         f"a_holds={int(r.a_holds)} b_holds={int(r.b_holds)}{flag}")
        for path in self.dumped:
            lines.append(f"dumped {path}")
        return "\n".join(lines) + "\n"


def probe_char2(max_total_dim=3, seed=0, sample_count=50, enabled=False,
                max_ell=2, dump_dir=None):
    """Compare solvability and simultaneous congruence on random GF(2) systems.

    Only gathers data.  Instance ``j`` uses seed ``seed + j`` for its
    sizes and entries; both conditions are decided exhaustively.
    Instances with ``b_holds and not a_holds`` are written to ``dump_dir``.
    """
    if not enabled:
        raise ProbeDisabled("pass enabled=True (--probe-char2-enable) to explore GF(2)")
    if max_total_dim < 2:
        raise ValueError("max_total_dim must be at least 2")
    fld = GF(2, allow_char2=True)
    groups = {}
    instances, dumped = [], []
    for j in range(sample_count):
        s = seed + j
        rng = random.Random(s)
        m = rng.randint(1, max_total_dim - 1)
        n = rng.randint(1, max_total_dim - m)
        ell = rng.randint(1, max_ell)
        triples = [(random_matrix(fld, m, n, rng), random_matrix(fld, n, m, rng),
                    random_matrix(fld, m, m, rng)) for _ in range(ell)]
        sys = StarSylvesterSystem(fld, StarMode.TRANSPOSE, m, n, tuple(triples),
                                  allow_char2=True)
        if sys.size not in groups:
            groups[sys.size] = invertible_matrices(fld, sys.size)
        a = brute_force_consistency(sys).consistent
        b = has_congruence_witness(sys, groups[sys.size])
        inst = ProbeInstance(s, m, n, ell, a, b, sys)
        instances.append(inst)
        if dump_dir is not None and b and not a:
            os.makedirs(dump_dir, exist_ok=True)
            path = os.path.join(dump_dir, f"char2_seed{s}.ssys")
            with open(path, "w") as fh:
                fh.write(f"# b holds, a fails; probe seed {s}\n")
                fh.write(serialize_system(sys))
            dumped.append(path)
    return ProbeReport(instances, dumped)
