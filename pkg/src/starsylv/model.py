"""Systems ``A_i X - X^* B_i = C_i``: data model, ``.ssys`` files, generators.

``.ssys`` grammar (line oriented, ``#`` starts a comment)::

    field Q | QI | GF <p>
    star T | H
    dims <m> <n> <ell>
    A 1
    <m rows of n literals>
    B 1
    <n rows of m literals>
    C 1
    <m rows of m literals>
    ... up to A ell / B ell / C ell

A matrix with zero columns has no row lines.

Generators use :class:`random.Random` (Mersenne Twister) seeded with the
given integer, and draw entries in a fixed order: ``X``, then for each
equation ``A_i`` and ``B_i`` row by row.  Rational entries are
``randint(-b, b) / randint(1, b)``; Gaussian entries draw the real part
then the imaginary part that way; GF(p) entries are ``randrange(p)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field, replace

from .errors import Char2Rejected, ParseError, ShapeMismatch
from .exactmat import (
    ExactMatrix,
    StarMode,
    content_lines,
    format_rows,
    read_matrix_rows,
    star,
)
from .field import field_from_spec

__all__ = [
    "StarSylvesterSystem",
    "SolutionSet",
    "parse_system",
    "serialize_system",
    "residual",
    "is_solution",
    "gen_consistent",
    "gen_perturbed",
    "random_matrix",
]


@dataclass(frozen=True)
class StarSylvesterSystem:
    field: object
    mode: StarMode
    m: int
    n: int
    triples: tuple
    allow_char2: bool = dc_field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "triples", tuple(tuple(t) for t in self.triples))
        if self.field.characteristic == 2 and not self.allow_char2:
            raise Char2Rejected("characteristic 2 systems need the char-2 probe flag")
        self.mode.check(self.field)
        if self.m < 0 or self.n < 0:
            raise ShapeMismatch("negative dimensions")
        if not self.triples:
            raise ShapeMismatch("a system needs at least one equation")
        m, n = self.m, self.n
        for i, (A, B, C) in enumerate(self.triples, 1):
            for name, M, shape in (("A", A, (m, n)), ("B", B, (n, m)), ("C", C, (m, m))):
                if M.shape != shape:
                    raise ShapeMismatch(f"{name} {i} is {M.shape[0]}x{M.shape[1]}, "
                                        f"expected {shape[0]}x{shape[1]}")
                if M.field != self.field:
                    raise ShapeMismatch(f"{name} {i} is over {M.field}, not {self.field}")

    @property
    def ell(self):
        return len(self.triples)

    @property
    def size(self):
        return self.m + self.n

    def homogeneous(self):
        """The same system with every ``C_i`` replaced by zero."""
        Z = ExactMatrix.zeros(self.field, self.m, self.m)
        return replace(self, triples=tuple((A, B, Z) for A, B, _ in self.triples))

    def star(self, M):
        return star(M, self.mode)


@dataclass(frozen=True)
class SolutionSet:
    """Particular solution plus a basis of the homogeneous solution space.

    For ``(QI, H)`` systems the basis spans over Q, and ``dim`` is the
    dimension over Q.
    """

    particular: ExactMatrix
    homogeneous_basis: tuple
    dim: int


def residual(sys, X):
    """``[A_i X - X^* B_i - C_i for each i]``."""
    if X.shape != (sys.n, sys.m):
        raise ShapeMismatch(f"X must be {sys.n}x{sys.m}, got {X.rows}x{X.cols}")
    if X.field != sys.field:
        raise ShapeMismatch(f"X is over {X.field}, system over {sys.field}")
    Xs = sys.star(X)
    return [A @ X - Xs @ B - C for A, B, C in sys.triples]


def is_solution(sys, X):
    return all(R.is_zero() for R in residual(sys, X))


# text format

def parse_system(text, allow_char2=False):
    lines = content_lines(text)

    def header(keyword):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise ParseError(f"missing '{keyword}' line") from None
        if toks[0][0] != keyword:
            raise ParseError(f"expected '{keyword}', got {toks[0][0]!r}", lineno, toks[0][1])
        return lineno, toks

    lineno, toks = header("field")
    try:
        fld = field_from_spec([t for t, _ in toks[1:]], allow_char2=allow_char2)
    except Char2Rejected:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), lineno, toks[1][1] if len(toks) > 1 else toks[0][1]) from None

    lineno, toks = header("star")
    if len(toks) != 2:
        raise ParseError("expected 'star T' or 'star H'", lineno, toks[0][1])
    mode = StarMode.from_str(toks[1][0])
    mode.check(fld)

    lineno, toks = header("dims")
    if len(toks) != 4:
        raise ParseError("expected 'dims <m> <n> <ell>'", lineno, toks[0][1])
    dims = []
    for (text_, col), what in zip(toks[1:], ("m", "n", "ell")):
        try:
            v = int(text_)
        except ValueError:
            raise ParseError(f"{what} must be an integer, got {text_!r}", lineno, col) from None
        if v < 0 or (what == "ell" and v < 1):
            raise ParseError(f"{what} out of range: {v}", lineno, col)
        dims.append(v)
    m, n, ell = dims

    shapes = {"A": (m, n), "B": (n, m), "C": (m, m)}
    found = {}
    for lineno, toks in lines:
        if len(toks) != 2 or toks[0][0] not in shapes:
            raise ParseError("expected a section header 'A <i>', 'B <i>' or 'C <i>'",
                             lineno, toks[0][1])
        name = toks[0][0]
        try:
            idx = int(toks[1][0])
        except ValueError:
            raise ParseError(f"bad equation index {toks[1][0]!r}", lineno, toks[1][1]) from None
        if not 1 <= idx <= ell:
            raise ParseError(f"equation index {idx} outside 1..{ell}", lineno, toks[1][1])
        if (name, idx) in found:
            raise ParseError(f"duplicate section {name} {idx}", lineno, toks[0][1])
        r, c = shapes[name]
        found[name, idx] = read_matrix_rows(fld, lines, r, c, what=f"{name} {idx}")
    missing = [f"{k} {i}" for i in range(1, ell + 1) for k in "ABC" if (k, i) not in found]
    if missing:
        raise ParseError(f"missing sections: {', '.join(missing)}")
    triples = [(found["A", i], found["B", i], found["C", i]) for i in range(1, ell + 1)]
    return StarSylvesterSystem(fld, mode, m, n, tuple(triples), allow_char2=allow_char2)


def serialize_system(sys):
    out = [f"field {sys.field.spec()}", f"star {sys.mode.value}", f"dims {sys.m} {sys.n} {sys.ell}"]
    for i, (A, B, C) in enumerate(sys.triples, 1):
        for name, M in (("A", A), ("B", B), ("C", C)):
            out.append(f"{name} {i}")
            out.extend(format_rows(M))
    return "\n".join(out) + "\n"


# generators

def random_matrix(fld, rows, cols, rng, entry_bound=9):
    return ExactMatrix(fld, rows, cols,
                       tuple(fld.random_element(rng, entry_bound) for _ in range(rows * cols)))


def gen_consistent(fld, mode, m, n, ell, seed, entry_bound=9):
    """Random system with a planted solution; returns ``(system, X)``."""
    if isinstance(mode, str):
        mode = StarMode.from_str(mode)
    mode.check(fld)
    rng = random.Random(seed)
    X = random_matrix(fld, n, m, rng, entry_bound)
    Xs = star(X, mode)
    triples = []
    for _ in range(ell):
        A = random_matrix(fld, m, n, rng, entry_bound)
        B = random_matrix(fld, n, m, rng, entry_bound)
        triples.append((A, B, A @ X - Xs @ B))
    sys = StarSylvesterSystem(fld, mode, m, n, tuple(triples),
                              allow_char2=fld.characteristic == 2)
    return sys, X


def gen_perturbed(sys, seed, entry_bound=9):
    """Add a random nonzero matrix to ``C_1``.

    The result may or may not be consistent; no claim is made either way.
    """
    if sys.m == 0:
        raise ShapeMismatch("m = 0 leaves nothing to perturb")
    rng = random.Random(seed)
    while True:
        P = random_matrix(sys.field, sys.m, sys.m, rng, entry_bound)
        if not P.is_zero():
            break
    (A, B, C), *rest = sys.triples
    return replace(sys, triples=((A, B, C + P), *rest))
