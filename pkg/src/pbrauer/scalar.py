"""Exact coefficients in Z[d, dp, dp^-1].

``d`` is the loop parameter, ``dp`` the open-string parameter.  A
:class:`Scalar` is a sparse map ``(a, b) -> int`` standing for
``sum c * d^a * dp^b`` with ``a >= 0`` and ``b`` any integer.  Rational
parameter values are plain :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


class Scalar:
    """Immutable Laurent polynomial in ``dp`` with polynomial ``d``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0:
                    raise ValueError("negative power of d is not in the ring")
                c = int(c)
                if c:
                    clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int) -> "Scalar":
        return cls({(0, 0): c}) if c else ZERO

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 1) -> "Scalar":
        return cls({(a, b): c})

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls.const(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            return cls.const(x.numerator)
        raise TypeError(f"cannot convert {x!r} to Scalar")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # ring operations
    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return _raw({k: c * other for k, c in self._terms.items()})
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            ((a2, b2), c2), = other._terms.items()
            return _raw({(a + a2, b + b2): c * c2 for (a, b), c in self._terms.items()})
        out: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return _raw(out)

    __rmul__ = __mul__

    def shift(self, a: int = 0, b: int = 0) -> "Scalar":
        """Multiply by the monomial ``d^a dp^b``."""
        if not (a or b):
            return self
        return _raw({(x + a, y + b): c for (x, y), c in self._terms.items()})

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials with d-exponent 0 are invertible")
            ((a, b), c), = self._terms.items()
            if a != 0 or c not in (1, -1):
                raise ValueError("only +-dp^b is invertible in this ring")
            return _raw({(0, b * e): c ** (-e)})
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation
    def evaluate(self, delta: Number, delta_prime: Number) -> Fraction:
        return evaluate(self, delta, delta_prime)

    def at_dp_zero(self) -> "Scalar":
        """Specialise ``dp = 0`` keeping ``d`` symbolic."""
        if any(b < 0 for (_, b) in self._terms):
            raise ZeroDivisionError("requires δ′ invertible")
        return _raw({(a, 0): c for (a, b), c in self._terms.items() if b == 0})

    def substitute_d(self, delta: Number) -> "Scalar":
        """Specialise ``d`` to an integer, keeping ``dp`` symbolic."""
        delta = Fraction(delta)
        if delta.denominator != 1:
            raise ValueError("d must specialise to an integer to stay in the ring")
        v = delta.numerator
        out: dict = {}
        for (a, b), c in self._terms.items():
            out[(0, b)] = out.get((0, b), 0) + c * v ** a
        return Scalar(out)

    def min_dp_power(self) -> int:
        return min((b for _, b in self._terms), default=0)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _raw(terms: dict) -> Scalar:
    s = Scalar.__new__(Scalar)
    s._terms = terms
    s._hash = None
    return s


ZERO = _raw({})
ONE = _raw({(0, 0): 1})
DELTA = _raw({(1, 0): 1})
DELTA_PRIME = _raw({(0, 1): 1})
DELTA_PRIME_INV = _raw({(0, -1): 1})


def evaluate(x: Scalar, delta: Number, delta_prime: Number) -> Fraction:
    """Substitute rational values for ``d`` and ``dp``."""
    delta = Fraction(delta)
    delta_prime = Fraction(delta_prime)
    total = Fraction(0)
    for (a, b), c in x.items():
        if b < 0 and delta_prime == 0:
            raise ZeroDivisionError("requires δ′ invertible")
        total += c * delta ** a * delta_prime ** b
    return total


def ssum(values: Iterable[Scalar]) -> Scalar:
    out: dict = {}
    for s in values:
        for key, c in s.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return _raw(out)


# -- text form ----------------------------------------------------------


def _monomial_text(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("d" if a == 1 else f"d^{a}")
    if b:
        parts.append("dp" if b == 1 else f"dp^{b}")
    return "*".join(parts)


def format_scalar(x: Scalar) -> str:
    if not x._terms:
        return "0"
    out = []
    for (a, b) in sorted(x._terms, key=lambda t: (-t[0], -t[1])):
        c = x._terms[(a, b)]
        mono = _monomial_text(a, b)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


_FACTOR = re.compile(r"^(dp|d)(?:\^(-?\d+))?$")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3*d^2*dp^-1 - 1"`` style sums of monomials."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    # split into signed terms; a '-' right after '^' belongs to an exponent
    terms = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] != "^":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    out: dict = {}
    for term in terms:
        if not term or term in "+-":
            raise ValueError(f"bad scalar {text!r}")
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        coeff = 1
        a = b = 0
        for factor in term.split("*"):
            if not factor:
                raise ValueError(f"bad scalar {text!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            e = int(m.group(2)) if m.group(2) is not None else 1
            if m.group(1) == "d":
                a += e
            else:
                b += e
        key = (a, b)
        out[key] = out.get(key, 0) + sign * coeff
    return Scalar(out)


def parse_rational(text: str) -> Fraction:
    """``"p/q"`` or an integer/decimal literal."""
    return Fraction(text.strip())


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))
