"""
Exact arithmetic in Q(q), the field of rational functions of one formal
parameter ``q`` with integer coefficients.

Two value types live here:

``QPoly``
    an immutable polynomial in ``q`` with arbitrary-precision integer
    coefficients.
``QRat``
    a ratio of two ``QPoly`` kept in canonical reduced form, so that
    structural equality is semantic equality.

Canonical form of ``num/den``: ``gcd(num, den) = 1`` over Q, the joint
integer content of ``(num, den)`` is 1 and ``den`` has a positive leading
coefficient.  Negative powers of ``q`` are carried as monomial factors of
the denominator, never as negative exponents.

    >>> q_int(3, 1)
    QRat('1 + q + q^2')
    >>> q_int(3, -1)
    QRat('1 + q + q^2', 'q^2')
    >>> eval_at(q_factorial(4, 1), 1)
    Fraction(24, 1)
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "QFieldError",
    "InvalidBaseError",
    "PoleError",
    "QPoly",
    "QRat",
    "ONE",
    "ZERO",
    "Q",
    "q_power",
    "q_int",
    "q_factorial",
    "eval_at",
    "add",
    "subtract",
    "multiply",
    "divide",
    "negate",
]


class QFieldError(ArithmeticError):
    """Base class for errors raised by the coefficient field."""


class InvalidBaseError(QFieldError, ValueError):
    """A q-number was requested for the base ``q**0``."""


class PoleError(QFieldError, ZeroDivisionError):
    """A reduced rational function was evaluated at a root of its denominator."""


# ---------------------------------------------------------------------------
# dense integer polynomial kernel; a polynomial is a tuple of ints,
# lowest degree first, with no trailing zeros (the zero polynomial is ()).

_Dense = tuple


def _trim(c: list) -> tuple:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, v in enumerate(b):
        c[i] += v
    return _trim(c)


def _pneg(a: tuple) -> tuple:
    return tuple(-v for v in a)


def _psub(a: tuple, b: tuple) -> tuple:
    return _padd(a, _pneg(b))


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) == 1:
        s = a[0]
        return tuple(s * v for v in b)
    if len(b) == 1:
        s = b[0]
        return tuple(s * v for v in a)
    c = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                c[i + j] += u * v
    return tuple(c)


def _pscale(a: tuple, s: int) -> tuple:
    if s == 0:
        return ()
    return tuple(s * v for v in a)


def _shift(a: tuple, k: int) -> tuple:
    """Multiply by ``q**k`` (``k >= 0``)."""
    if not a or k == 0:
        return a
    return (0,) * k + a


def _content(a: tuple) -> int:
    g = 0
    for v in a:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _primitive(a: tuple) -> tuple:
    if not a:
        return a
    g = _content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a
    return tuple(v // g for v in a)


def _prem(a: tuple, b: tuple) -> tuple:
    """Pseudo-remainder of ``a`` by ``b`` over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for i, v in enumerate(b):
            r[i + shift] -= lr * v
        r = list(_trim(r))
    return tuple(r)


def _exact_div(a: tuple, b: tuple) -> tuple:
    """``a / b`` over Z, assuming ``b`` divides ``a`` exactly."""
    if len(b) == 1:
        s = b[0]
        return tuple(v // s for v in a)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    quo = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            qk, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            quo[k] = qk
            for i, v in enumerate(b):
                r[k + i] -= qk * v
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return _trim(quo)


def _low_order(a: tuple) -> int:
    k = 0
    while a[k] == 0:
        k += 1
    return k


def _pgcd(a: tuple, b: tuple) -> tuple:
    """Primitive gcd over Z[q] with positive leading coefficient."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    # split off the common power of q first; it is the common case
    ka, kb = _low_order(a), _low_order(b)
    k = min(ka, kb)
    a, b = a[ka:], b[kb:]
    if len(a) == 1 or len(b) == 1:
        return _shift((1,), k)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
        if len(b) == 1:
            return _shift((1,), k)
    return _shift(_primitive(a), k)


@lru_cache(maxsize=1 << 16)
def _reduce(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return (), (1,)
    if len(den) > 1 or den[0] != 1:
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _exact_div(num, g)
            den = _exact_div(den, g)
        c = gcd(_content(num), _content(den))
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = tuple(v // c for v in num)
            den = tuple(v // c for v in den)
    return num, den


# ---------------------------------------------------------------------------
# formatting / parsing of polynomial strings: "1 - q + 3*q^2"

_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*q(?:\^(\d+))?)?")


def _format_dense(a: tuple) -> str:
    if not a:
        return "0"
    parts = []
    for k, c in enumerate(a):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "q" if k == 1 else f"q^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def _parse_dense(text: str) -> tuple:
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ()
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign, digits, mono, exp = m.groups()
        if not digits and not mono:
            raise ValueError(f"cannot parse polynomial {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        k = 0 if not mono else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    if not coeffs:
        return ()
    c = [0] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        c[k] = v
    return _trim(c)


# ---------------------------------------------------------------------------


class QPoly:
    """Immutable polynomial in ``q`` with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[str, Sequence[int], int] = ()):
        if isinstance(coeffs, str):
            self._c = _parse_dense(coeffs)
        elif isinstance(coeffs, int):
            self._c = _trim([coeffs])
        else:
            self._c = _trim([int(v) for v in coeffs])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> "QPoly":
        """Build from sparse ``(exponent, coefficient)`` pairs."""
        acc: dict[int, int] = {}
        for k, c in terms:
            if k < 0:
                raise ValueError("negative exponent in QPoly")
            acc[k] = acc.get(k, 0) + c
        if not acc:
            return cls()
        c = [0] * (max(acc) + 1)
        for k, v in acc.items():
            c[k] = v
        return cls(c)

    @classmethod
    def _raw(cls, c: tuple) -> "QPoly":
        p = object.__new__(cls)
        p._c = c
        return p

    @property
    def coeffs(self) -> tuple:
        """Dense coefficients, lowest degree first."""
        return self._c

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """Sparse ``(exponent, coefficient)`` pairs, exponents increasing."""
        return tuple((k, c) for k, c in enumerate(self._c) if c)

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __add__(self, other: "QPoly") -> "QPoly":
        return QPoly._raw(_padd(self._c, other._c))

    def __sub__(self, other: "QPoly") -> "QPoly":
        return QPoly._raw(_psub(self._c, other._c))

    def __mul__(self, other: "QPoly") -> "QPoly":
        return QPoly._raw(_pmul(self._c, other._c))

    def __neg__(self) -> "QPoly":
        return QPoly._raw(_pneg(self._c))

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("QPoly", self._c))

    def __str__(self) -> str:
        return _format_dense(self._c)

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"


Scalar = Union["QRat", int, Fraction]


class QRat:
    """Element of Q(q) in canonical reduced form.

    Construct from strings, integers, fractions or two ``QPoly``::

        >>> QRat("1 - q^2", "1 - q")
        QRat('1 + q')
        >>> QRat(Fraction(1, 2))
        QRat('1', '2')
    """

    __slots__ = ("_n", "_d", "_h")

    def __init__(self, num: Union[str, int, Rational, QPoly, Sequence[int]] = 0,
                 den: Union[str, int, QPoly, Sequence[int]] = 1):
        n = _as_dense(num)
        d = _as_dense(den)
        if isinstance(num, Rational) and not isinstance(num, int):
            n = (num.numerator,) if num.numerator else ()
            d = _pmul(d, (num.denominator,))
        if not d:
            raise ZeroDivisionError("QRat with zero denominator")
        self._n, self._d = _reduce(n, d)
        self._h = None

    @classmethod
    def _raw(cls, n: tuple, d: tuple) -> "QRat":
        r = object.__new__(cls)
        r._n, r._d = _reduce(n, d)
        r._h = None
        return r

    @classmethod
    def coerce(cls, value) -> "QRat":
        if isinstance(value, QRat):
            return value
        if isinstance(value, (int, Fraction, QPoly)):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to QRat")

    @property
    def num(self) -> QPoly:
        return QPoly._raw(self._n)

    @property
    def den(self) -> QPoly:
        return QPoly._raw(self._d)

    def is_zero(self) -> bool:
        return not self._n

    def is_constant(self) -> bool:
        return len(self._n) <= 1 and len(self._d) == 1

    def __bool__(self) -> bool:
        return bool(self._n)

    # field operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, (int, Fraction)):
                other = QRat(other)
            else:
                return NotImplemented
        if not other._n:
            return self
        if not self._n:
            return other
        if self._d == other._d:
            return QRat._raw(_padd(self._n, other._n), self._d)
        return QRat._raw(
            _padd(_pmul(self._n, other._d), _pmul(other._n, self._d)),
            _pmul(self._d, other._d),
        )

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(QRat)
        r._n, r._d, r._h = _pneg(self._n), self._d, None
        return r

    def __sub__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, (int, Fraction)):
                other = QRat(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, (int, Fraction)):
                other = QRat(other)
            else:
                return NotImplemented
        if not self._n or not other._n:
            return ZERO
        return QRat._raw(_pmul(self._n, other._n), _pmul(self._d, other._d))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, (int, Fraction)):
                other = QRat(other)
            else:
                return NotImplemented
        if not other._n:
            raise ZeroDivisionError("division by the zero rational function")
        return QRat._raw(_pmul(self._n, other._d), _pmul(self._d, other._n))

    def __rtruediv__(self, other):
        return QRat.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return (ONE / self) ** (-k)
        n, d = (1,), (1,)
        bn, bd = self._n, self._d
        while k:
            if k & 1:
                n, d = _pmul(n, bn), _pmul(d, bd)
            bn, bd = _pmul(bn, bn), _pmul(bd, bd)
            k >>= 1
        return QRat._raw(n, d)

    def inverse(self) -> "QRat":
        return ONE / self

    def invert_base(self) -> "QRat":
        """Substitute ``q -> 1/q``."""
        dn, dd = len(self._n) - 1, len(self._d) - 1
        n = _trim(list(reversed(self._n)))
        d = _trim(list(reversed(self._d)))
        if dd >= dn:
            n = _shift(n, dd - dn)
        else:
            d = _shift(d, dn - dd)
        return QRat._raw(n, d)

    def __eq__(self, other) -> bool:
        if isinstance(other, QRat):
            return self._n == other._n and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self == QRat(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash((self._n, self._d))
        return self._h

    def __call__(self, q0):
        return eval_at(self, q0)

    def __str__(self) -> str:
        n = _format_dense(self._n)
        if self._d == (1,):
            return n
        d = _format_dense(self._d)
        if len(self._n) > 1 and sum(1 for v in self._n if v) > 1:
            n = f"({n})"
        if sum(1 for v in self._d if v) > 1 or (len(self._d) > 1 and self._d[-1] != 1):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self) -> str:
        if self._d == (1,):
            return f"QRat({_format_dense(self._n)!r})"
        return f"QRat({_format_dense(self._n)!r}, {_format_dense(self._d)!r})"

    def strings(self) -> tuple[str, str]:
        """Canonical ``(numerator, denominator)`` strings."""
        return _format_dense(self._n), _format_dense(self._d)

    @classmethod
    def from_strings(cls, num: str, den: str = "1") -> "QRat":
        return cls(num, den)


def _as_dense(v) -> tuple:
    if isinstance(v, QPoly):
        return v.coeffs
    if isinstance(v, str):
        return _parse_dense(v)
    if isinstance(v, int):
        return (v,) if v else ()
    if isinstance(v, Rational):
        return (1,)  # handled by caller
    return _trim([int(x) for x in v])


ZERO = QRat(0)
ONE = QRat(1)
Q = QRat("q")


def q_power(k: int) -> QRat:
    """``q**k`` for any integer ``k``."""
    if k >= 0:
        return QRat._raw(_shift((1,), k), (1,))
    return QRat._raw((1,), _shift((1,), -k))


@lru_cache(maxsize=None)
def q_int(n: int, k: int = 1) -> QRat:
    """The q-number ``[n]`` in base ``q**k``, i.e. ``(1 - q**(k n)) / (1 - q**k)``."""
    if k == 0:
        raise InvalidBaseError("q-number requested for base q**0")
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    if n == 0:
        return ZERO
    if k > 0:
        # 1 + q^k + ... + q^{k(n-1)}
        c = [0] * (k * (n - 1) + 1)
        for j in range(n):
            c[k * j] = 1
        return QRat._raw(tuple(c), (1,))
    # base q^{-|k|}: q^{|k|(1-n)} [n]_{q^{|k|}}
    return q_int(n, -k) * q_power(k * (n - 1))


@lru_cache(maxsize=None)
def q_factorial(n: int, k: int = 1) -> QRat:
    """``[n]! = [n][n-1]...[1]`` in base ``q**k``; ``[0]! = 1``."""
    if k == 0:
        raise InvalidBaseError("q-factorial requested for base q**0")
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1, k) * q_int(n, k)


def eval_at(r: QRat, q0) -> Fraction:
    """Evaluate a reduced rational function at ``q0``.

    Exact rationals give an exact ``Fraction``; floats and complex numbers
    are evaluated in floating point.  A root of the reduced denominator
    raises :class:`PoleError`, so removable singularities such as ``[n]``
    at ``q = 1`` evaluate to their limit.
    """
    if isinstance(q0, (int, Fraction)):
        q0 = Fraction(q0)
    r = QRat.coerce(r)
    d = QPoly._raw(r._d)(q0)
    if d == 0:
        raise PoleError(f"{r} has a pole at q = {q0}")
    n = QPoly._raw(r._n)(q0)
    if isinstance(d, Fraction):
        return Fraction(n) / d
    return n / d


# functional spellings of the field operations
def add(a: Scalar, b: Scalar) -> QRat:
    return QRat.coerce(a) + QRat.coerce(b)


def subtract(a: Scalar, b: Scalar) -> QRat:
    return QRat.coerce(a) - QRat.coerce(b)


def multiply(a: Scalar, b: Scalar) -> QRat:
    return QRat.coerce(a) * QRat.coerce(b)


def divide(a: Scalar, b: Scalar) -> QRat:
    return QRat.coerce(a) / QRat.coerce(b)


def negate(a: Scalar) -> QRat:
    return -QRat.coerce(a)
