"""Exact scalar fields: the rationals, the Gaussian rationals and GF(p).

A field object does the arithmetic on *raw* values, which are

* ``fractions.Fraction`` for ``Q``,
* :class:`GaussianRational` for ``QI`` (always, even for real values),
* ``int`` in ``range(p)`` for ``GF(p)``.

Matrices store raw values and call the field methods.  :class:`Scalar` is
the tagged wrapper for user-facing scalar arithmetic; mixing two fields
raises :class:`FieldMismatch`.

Each field also carries the involution used by the star operator: the
identity on ``Q`` and ``GF(p)``, complex conjugation on ``QI``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import Char2Rejected, DivisionByZero, FieldMismatch, ParseError

__all__ = [
    "GaussianRational",
    "Field",
    "RationalField",
    "GaussianRationalField",
    "PrimeField",
    "Q",
    "QI",
    "GF",
    "Scalar",
    "scalar_arith",
    "conj",
    "field_from_spec",
]


class GaussianRational:
    """``re + im*i`` with both parts stored as reduced fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    def __truediv__(self, other):
        c, d = other.re, other.im
        norm = c * c + d * d
        if not norm:
            raise DivisionByZero("division by zero in QI")
        a, b = self.re, self.im
        return GaussianRational((a * c + b * d) / norm, (b * c - a * d) / norm)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"


_NUM = r"\d+(?:/\d+)?"
_INT_RE = re.compile(r"[+-]?\d+")
_FRAC_RE = re.compile(rf"[+-]?{_NUM}")
_IMAG_RE = re.compile(rf"([+-]?)({_NUM})?i")
_BOTH_RE = re.compile(rf"([+-]?{_NUM})([+-])({_NUM})?i")


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad number {text!r}: {exc}") from None


class Field:
    """Common interface of the three scalar fields."""

    name: str
    characteristic: int
    has_involution = False

    def __call__(self, value):
        return Scalar(self, self.coerce(value))

    # arithmetic on raw values

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if self.is_zero(b):
            raise DivisionByZero(f"division by zero in {self.name}")
        return a / b

    def inv(self, a):
        return self.div(self.one, a)

    def conj(self, a):
        return a

    def is_zero(self, a):
        return not a

    @property
    def half(self):
        return self.div(self.one, self.add(self.one, self.one))

    def spec(self):
        """Header form used by the ``.ssys`` format, e.g. ``GF 3``."""
        return self.name


@dataclass(frozen=True)
class RationalField(Field):
    name = "Q"
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} value used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, GaussianRational):
            if value.im:
                raise FieldMismatch(f"{value!r} is not rational")
            return value.re
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} to Q")

    def parse(self, text):
        text = text.strip()
        if not _FRAC_RE.fullmatch(text):
            raise ParseError(f"bad rational literal {text!r}")
        return _fraction(text)

    def format(self, a):
        return str(a)

    def random_element(self, rng, bound=9):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class GaussianRationalField(Field):
    name = "QI"
    characteristic = 0
    has_involution = True

    @property
    def zero(self):
        return GaussianRational(0, 0)

    @property
    def one(self):
        return GaussianRational(1, 0)

    @property
    def i(self):
        return GaussianRational(0, 1)

    def conj(self, a):
        return a.conjugate()

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} value used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, GaussianRational):
            return GaussianRational(value.re, value.im)
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value, 0)
        if isinstance(value, tuple) and len(value) == 2:
            return GaussianRational(*value)
        raise TypeError(f"cannot coerce {value!r} to QI")

    def parse(self, text):
        text = text.strip()
        if _FRAC_RE.fullmatch(text):
            return GaussianRational(_fraction(text), 0)
        m = _IMAG_RE.fullmatch(text)
        if m:
            b = _fraction(m.group(2)) if m.group(2) else Fraction(1)
            return GaussianRational(0, -b if m.group(1) == "-" else b)
        m = _BOTH_RE.fullmatch(text)
        if m:
            b = _fraction(m.group(3)) if m.group(3) else Fraction(1)
            return GaussianRational(_fraction(m.group(1)), -b if m.group(2) == "-" else b)
        raise ParseError(f"bad Gaussian rational literal {text!r}")

    def format(self, a):
        re_, im = a.re, a.im
        if not im:
            return str(re_)
        mag = abs(im)
        coef = "" if mag == 1 else str(mag)
        if not re_:
            return ("-" if im < 0 else "") + coef + "i"
        return f"{re_}{'-' if im < 0 else '+'}{coef}i"

    def random_element(self, rng, bound=9):
        return GaussianRational(
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
        )

    def __str__(self):
        return "QI"


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField(Field):
    """GF(p).  Construct through :func:`GF`, which enforces the char-2 gate."""

    p: int
    name = "GF"

    @property
    def characteristic(self):
        return self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        if not b:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return a * pow(b, -1, self.p) % self.p

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} value used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool) or not isinstance(value, int):
            if isinstance(value, Fraction) and value.denominator == 1:
                return int(value) % self.p
            raise TypeError(f"cannot coerce {value!r} to GF({self.p})")
        return value % self.p

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.fullmatch(text):
            raise ParseError(f"bad GF({self.p}) literal {text!r}")
        return int(text) % self.p

    def format(self, a):
        return str(a)

    def random_element(self, rng, bound=None):
        return rng.randrange(self.p)

    def spec(self):
        return f"GF {self.p}"

    def __str__(self):
        return f"GF({self.p})"


Q = RationalField()
QI = GaussianRationalField()


def GF(p, allow_char2=False):
    """Return GF(p).  ``p == 2`` needs ``allow_char2=True`` (probe use only)."""
    p = int(p)
    if not _is_prime(p):
        raise ValueError(f"GF modulus must be prime, got {p}")
    if p == 2 and not allow_char2:
        raise Char2Rejected("characteristic 2 is excluded; enable the char-2 probe to use GF(2)")
    return PrimeField(p)


def field_from_spec(words, allow_char2=False):
    """Build a field from header tokens: ``["Q"]``, ``["QI"]`` or ``["GF", "5"]``."""
    if isinstance(words, str):
        words = words.split()
    if not words:
        raise ValueError("empty field specification")
    kind = words[0].upper()
    if kind == "Q" and len(words) == 1:
        return Q
    if kind == "QI" and len(words) == 1:
        return QI
    if kind == "GF" and len(words) == 2:
        try:
            p = int(words[1])
        except ValueError:
            raise ValueError(f"bad GF modulus {words[1]!r}") from None
        return GF(p, allow_char2=allow_char2)
    raise ValueError(f"unknown field {' '.join(words)!r}")


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field."""

    field: Field
    value: object

    def _check(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._check(other)))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._check(other)))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._check(other)))

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._check(other)))

    def __radd__(self, other):
        return Scalar(self.field, self.field.add(self._check(other), self.value))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._check(other), self.value))

    def __rmul__(self, other):
        return Scalar(self.field, self.field.mul(self._check(other), self.value))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._check(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def conj(self):
        return Scalar(self.field, self.field.conj(self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self})"


_OPS = {"add": "add", "sub": "sub", "mul": "mul", "div": "div"}


def scalar_arith(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two scalars of one field."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    try:
        method = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return Scalar(a.field, getattr(a.field, method)(a.value, b.value))


def conj(a):
    return a.conj()
