"""Dense exact matrices and the elimination kernels built on them.

All linear algebra goes through one sparse Gauss-Jordan routine
(:func:`eliminate`): rows are dicts ``{column: value}``, pivots are
normalised to one and kept fully reduced, so the final pivot set *is* the
reduced row echelon form.  The constraint systems assembled elsewhere in
the package are very sparse, which is why the kernel is sparse even though
:class:`ExactMatrix` itself is dense.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    FieldMismatch,
    InvalidStarMode,
    NonConformalBlocks,
    NotSquare,
    ParseError,
    ShapeMismatch,
)

__all__ = [
    "StarMode",
    "ExactMatrix",
    "star",
    "eliminate",
    "kernel_from_pivots",
    "rref",
    "rank",
    "nullspace",
    "solve_affine",
    "AffineSolution",
    "inverse",
    "block_compose",
    "block_extract",
    "parse_matrix",
    "format_matrix",
]


class StarMode(enum.Enum):
    TRANSPOSE = "T"
    CONJUGATE_TRANSPOSE = "H"

    @classmethod
    def from_str(cls, text):
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise InvalidStarMode(f"star mode must be T or H, got {text!r}") from None

    def check(self, field):
        """Reject ``H`` over a field whose involution is the identity."""
        if self is StarMode.CONJUGATE_TRANSPOSE and not field.has_involution:
            raise InvalidStarMode(f"star mode H needs QI, not {field}")
        return self


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    """Immutable dense matrix; ``entries`` is row-major raw field values."""

    field: object
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    # construction

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeMismatch("ragged rows")
        return cls(field, len(rows), cols, tuple(field.coerce(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field, n):
        zero, one = field.zero, field.one
        return cls(field, n, n, tuple(one if i == j else zero
                                      for i in range(n) for j in range(n)))

    @classmethod
    def from_function(cls, field, rows, cols, fn):
        return cls(field, rows, cols, tuple(fn(i, j) for i in range(rows) for j in range(cols)))

    # access

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, r0, r1, c0, c1):
        return ExactMatrix(self.field, r1 - r0, c1 - c0,
                           tuple(self.entries[i * self.cols + j]
                                 for i in range(r0, r1) for j in range(c0, c1)))

    def is_zero(self):
        iz = self.field.is_zero
        return all(iz(x) for x in self.entries)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in self.row(i))
                         for i in range(self.rows))
        return f"ExactMatrix({self.field}, {self.rows}x{self.cols}, [{body}])"

    # arithmetic

    def _same_field(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        add = self.field.add
        return ExactMatrix(self.field, self.rows, self.cols,
                           tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} - {other.shape}")
        sub = self.field.sub
        return ExactMatrix(self.field, self.rows, self.cols,
                           tuple(sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        neg = self.field.neg
        return ExactMatrix(self.field, self.rows, self.cols, tuple(neg(a) for a in self.entries))

    def scale(self, c):
        c = self.field.coerce(c)
        mul = self.field.mul
        return ExactMatrix(self.field, self.rows, self.cols, tuple(mul(c, a) for a in self.entries))

    def __matmul__(self, other):
        self._same_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        f = self.field
        add, mul, iz = f.add, f.mul, f.is_zero
        n, k, p = self.rows, self.cols, other.cols
        out = [f.zero] * (n * p)
        a, b = self.entries, other.entries
        for i in range(n):
            base = i * p
            for t in range(k):
                x = a[i * k + t]
                if iz(x):
                    continue
                brow = t * p
                for j in range(p):
                    y = b[brow + j]
                    if not iz(y):
                        out[base + j] = add(out[base + j], mul(x, y))
        return ExactMatrix(f, n, p, tuple(out))

    def transpose(self):
        return ExactMatrix(self.field, self.cols, self.rows,
                           tuple(self.entries[i * self.cols + j]
                                 for j in range(self.cols) for i in range(self.rows)))

    @property
    def T(self):
        return self.transpose()

    def conj(self):
        c = self.field.conj
        return ExactMatrix(self.field, self.rows, self.cols, tuple(c(a) for a in self.entries))

    def star(self, mode):
        return star(self, mode)


def star(M, mode):
    """Transpose (``T``) or conjugate transpose (``H``) of ``M``."""
    if isinstance(mode, str):
        mode = StarMode.from_str(mode)
    mode.check(M.field)
    if mode is StarMode.CONJUGATE_TRANSPOSE:
        return M.transpose().conj()
    return M.transpose()


# elimination kernel

def eliminate(field, rows, ncols):
    """Sparse Gauss-Jordan elimination.

    ``rows`` is an iterable of ``{col: value}`` dicts with columns in
    ``range(ncols)`` (an augmented column may use index ``ncols - 1`` like
    any other).  Returns ``{pivot_col: row}`` where every row has a one at
    its pivot and no entries in any other pivot column.
    """
    iz, sub, mul, div = field.is_zero, field.sub, field.mul, field.div
    zero = field.zero
    pivots = {}
    for src in rows:
        row = {c: v for c, v in src.items() if not iz(v)}
        hits = [c for c in row if c in pivots]
        for c in hits:
            factor = row.pop(c, zero)
            if iz(factor):
                continue
            for cc, v in pivots[c].items():
                if cc == c:
                    continue
                nv = sub(row.get(cc, zero), mul(factor, v))
                if iz(nv):
                    row.pop(cc, None)
                else:
                    row[cc] = nv
        if not row:
            continue
        p = min(row)
        lead = row[p]
        if lead != field.one:
            row = {c: div(v, lead) for c, v in row.items()}
        for other in pivots.values():
            factor = other.get(p)
            if factor is None:
                continue
            del other[p]
            for cc, v in row.items():
                if cc == p:
                    continue
                nv = sub(other.get(cc, zero), mul(factor, v))
                if iz(nv):
                    other.pop(cc, None)
                else:
                    other[cc] = nv
        pivots[p] = row
    return pivots


def _sparse_rows(M):
    iz = M.field.is_zero
    return [{j: x for j, x in enumerate(M.row(i)) if not iz(x)} for i in range(M.rows)]


def rref(M):
    """Return ``(R, rank, pivot_cols)`` with ``R`` the reduced row echelon form."""
    pivots = eliminate(M.field, _sparse_rows(M), M.cols)
    order = sorted(pivots)
    zero = M.field.zero
    dense = []
    for p in order:
        r = pivots[p]
        dense.extend(r.get(j, zero) for j in range(M.cols))
    dense.extend([zero] * ((M.rows - len(order)) * M.cols))
    return ExactMatrix(M.field, M.rows, M.cols, tuple(dense)), len(order), order


def rank(M):
    return len(eliminate(M.field, _sparse_rows(M), M.cols))


def kernel_from_pivots(field, pivots, ncols):
    """Standard free-column basis of the solution space of the pivot rows."""
    basis = []
    neg = field.neg
    for f in range(ncols):
        if f in pivots:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for p, row in pivots.items():
            x = row.get(f)
            if x is not None:
                v[p] = neg(x)
        basis.append(v)
    return basis


def nullspace(M):
    """Basis of ``{v : M v = 0}`` as lists, one per free column of the RREF."""
    pivots = eliminate(M.field, _sparse_rows(M), M.cols)
    return kernel_from_pivots(M.field, pivots, M.cols)


@dataclass(frozen=True)
class AffineSolution:
    """Outcome of :func:`solve_affine`.

    When ``consistent`` is false, ``particular`` is ``None`` and the rank
    pair is the evidence: ``rank_augmented == rank + 1``.
    """

    consistent: bool
    particular: list | None
    basis: list
    rank: int
    rank_augmented: int


def solve_sparse(field, rows, rhs, ncols):
    """Solve sparse rows ``rows`` against ``rhs``; see :func:`solve_affine`."""
    aug = []
    for r, b in zip(rows, rhs):
        row = dict(r)
        if not field.is_zero(b):
            row[ncols] = b
        aug.append(row)
    pivots = eliminate(field, aug, ncols + 1)
    if ncols in pivots:
        del pivots[ncols]
        r = len(pivots)
        return AffineSolution(False, None, [], r, r + 1)
    x = [field.zero] * ncols
    for p, row in pivots.items():
        x[p] = row.get(ncols, field.zero)
    stripped = {p: {c: v for c, v in row.items() if c != ncols} for p, row in pivots.items()}
    basis = kernel_from_pivots(field, stripped, ncols)
    return AffineSolution(True, x, basis, len(pivots), len(pivots))


def solve_affine(M, b):
    """All solutions of ``M x = b``: a particular one plus a nullspace basis.

    Free variables of the particular solution are set to zero.
    """
    b = [M.field.coerce(x) for x in b]
    if len(b) != M.rows:
        raise ShapeMismatch(f"rhs length {len(b)} for {M.rows} rows")
    return solve_sparse(M.field, _sparse_rows(M), b, M.cols)


def inverse(M):
    """Exact inverse, or ``None`` when ``M`` is singular."""
    if M.rows != M.cols:
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no inverse")
    n = M.rows
    f = M.field
    rows = _sparse_rows(M)
    for i, r in enumerate(rows):
        r[n + i] = f.one
    pivots = eliminate(f, rows, 2 * n)
    if any(p not in pivots for p in range(n)):
        return None
    zero = f.zero
    return ExactMatrix(f, n, n, tuple(pivots[i].get(n + j, zero)
                                      for i in range(n) for j in range(n)))


def block_compose(blocks):
    """Assemble a 2x2 grid ``[[P, Q], [R, S]]`` of matrices into one matrix."""
    (a, b), (c, d) = blocks
    f = a.field
    for x in (b, c, d):
        if x.field != f:
            raise FieldMismatch(f"{x.field} vs {f}")
    if a.rows != b.rows or c.rows != d.rows or a.cols != c.cols or b.cols != d.cols:
        raise NonConformalBlocks(
            f"blocks {a.shape} {b.shape} / {c.shape} {d.shape} are not conformal")
    entries = []
    for top_left, top_right in ((a, b), (c, d)):
        for i in range(top_left.rows):
            entries.extend(top_left.row(i))
            entries.extend(top_right.row(i))
    return ExactMatrix(f, a.rows + c.rows, a.cols + b.cols, tuple(entries))


def block_extract(M, row_split, col_split):
    """Split ``M`` into ``[[M11, M12], [M21, M22]]`` after the given row/column."""
    if not (0 <= row_split <= M.rows and 0 <= col_split <= M.cols):
        raise NonConformalBlocks(f"split ({row_split}, {col_split}) outside {M.shape}")
    r, c = row_split, col_split
    return [[M.submatrix(0, r, 0, c), M.submatrix(0, r, c, M.cols)],
            [M.submatrix(r, M.rows, 0, c), M.submatrix(r, M.rows, c, M.cols)]]


# text format

def _strip_comment(line):
    return line.split("#", 1)[0]


def _tokens(line):
    """Whitespace-separated tokens with their 1-based column."""
    out = []
    i = 0
    n = len(line)
    while i < n:
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def read_matrix_rows(field, lines, rows, cols, what="matrix"):
    """Consume ``rows`` non-empty lines from an iterator of ``(lineno, text)``."""
    entries = []
    if cols == 0:
        return ExactMatrix(field, rows, 0, ())
    for r in range(rows):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise ParseError(f"{what}: expected {rows} rows, got {r}") from None
        if len(toks) != cols:
            raise ParseError(f"{what}: expected {cols} entries, got {len(toks)}",
                             lineno, toks[0][1] if toks else 1)
        for tok, col in toks:
            try:
                entries.append(field.parse(tok))
            except ParseError as exc:
                raise ParseError(exc.message, lineno, col) from None
    return ExactMatrix(field, rows, cols, tuple(entries))


def content_lines(text):
    """Yield ``(lineno, tokens)`` for lines that are not blank after comment removal."""
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(_strip_comment(line))
        if toks:
            yield lineno, toks


def _parse_count(tok, lineno, what):
    text, col = tok
    try:
        v = int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}", lineno, col) from None
    if v < 0:
        raise ParseError(f"{what} must be non-negative", lineno, col)
    return v


def parse_matrix(text, field):
    """Parse ``matrix <rows> <cols>`` followed by the rows."""
    lines = content_lines(text)
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError("empty matrix file") from None
    if toks[0][0] != "matrix" or len(toks) != 3:
        raise ParseError("expected header 'matrix <rows> <cols>'", lineno, toks[0][1])
    rows = _parse_count(toks[1], lineno, "rows")
    cols = _parse_count(toks[2], lineno, "cols")
    M = read_matrix_rows(field, lines, rows, cols)
    for lineno, toks in lines:
        raise ParseError("trailing content after matrix", lineno, toks[0][1])
    return M


def format_rows(M):
    return [" ".join(M.field.format(x) for x in M.row(i)) for i in range(M.rows)] if M.cols else []


def format_matrix(M):
    return "\n".join([f"matrix {M.rows} {M.cols}", *format_rows(M)]) + "\n"
