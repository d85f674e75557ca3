"""
Free noncommutative algebra Q(q)<A, B>.

Words are plain strings over the alphabet ``"AB"``; the empty string is the
identity ``I``.  An :class:`NCPoly` is an immutable finite map from words to
nonzero :class:`~qzassenhaus.qfield.QRat` coefficients.

    >>> X1 = q_commutator(B, A, 1)
    >>> print(X1)
    -q*AB + BA
    >>> normal_order(X1).is_zero()
    True
"""
from __future__ import annotations

from typing import Iterable, Mapping, Union

from .qfield import ONE, ZERO, QRat, q_power

__all__ = [
    "ALPHABET",
    "NCPoly",
    "A",
    "B",
    "I",
    "word_key",
    "sum_of_products",
    "q_commutator",
    "nested_X",
    "inversions",
    "normal_order",
]

ALPHABET = "AB"


def word_key(w: str) -> tuple[int, str]:
    """Degree-lexicographic key with ``A < B``."""
    return (len(w), w)


def _check_word(w: str) -> str:
    if w.strip(ALPHABET):
        raise ValueError(f"word {w!r} is not over the alphabet {{A, B}}")
    return w


class NCPoly:
    """Polynomial in the free algebra on ``A`` and ``B``.

    Terms iterate in degree-lexicographic order, which fixes the printed and
    serialized form.
    """

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Union[Mapping[str, object], Iterable[tuple[str, object]], None] = None):
        acc: dict[str, QRat] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                _check_word(w)
                c = QRat.coerce(c)
                acc[w] = acc[w] + c if w in acc else c
        self._t = {w: c for w, c in sorted(acc.items(), key=lambda wc: word_key(wc[0])) if c}
        self._h = None

    @classmethod
    def _raw(cls, d: dict) -> "NCPoly":
        p = object.__new__(cls)
        p._t = {w: d[w] for w in sorted(d, key=word_key) if d[w]}
        p._h = None
        return p

    @classmethod
    def word(cls, w: str, coeff=ONE) -> "NCPoly":
        return cls({_check_word(w): coeff})

    @classmethod
    def scalar(cls, c) -> "NCPoly":
        return cls({"": c})

    # container protocol ---------------------------------------------------

    @property
    def terms(self) -> dict[str, QRat]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def words(self) -> list[str]:
        return list(self._t)

    def coeff(self, w: str) -> QRat:
        return self._t.get(w, ZERO)

    def __len__(self) -> int:
        return len(self._t)

    def __iter__(self):
        return iter(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def degrees(self) -> set[int]:
        return {len(w) for w in self._t}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        d = self.degrees()
        if not d:
            return True
        if degree is None:
            return len(d) == 1
        return d == {degree}

    def map_coefficients(self, f) -> "NCPoly":
        return NCPoly((w, f(c)) for w, c in self._t.items())

    # arithmetic -----------------------------------------------------------

    def __add__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        if not other._t:
            return self
        d = dict(self._t)
        for w, c in other._t.items():
            d[w] = d[w] + c if w in d else c
        return NCPoly._raw(d)

    def __neg__(self) -> "NCPoly":
        p = object.__new__(NCPoly)
        p._t = {w: -c for w, c in self._t.items()}
        p._h = None
        return p

    def __sub__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "NCPoly":
        c = QRat.coerce(c)
        if not c:
            return ZERO_POLY
        if c == ONE:
            return self
        return NCPoly._raw({w: v * c for w, v in self._t.items()})

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            if not self._t or not other._t:
                return ZERO_POLY
            d: dict[str, QRat] = {}
            _accumulate_product(d, self, other)
            return NCPoly._raw(d)
        if isinstance(other, (QRat, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "NCPoly":
        if isinstance(other, (QRat, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> "NCPoly":
        return self.scale(ONE / QRat.coerce(other))

    def __pow__(self, k: int) -> "NCPoly":
        if k < 0:
            raise ValueError("negative power in the free algebra")
        out = I
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPoly):
            return self._t == other._t
        return NotImplemented

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for w, c in self._t.items():
            mono = w or "I"
            if c == ONE:
                s = mono
            elif c == -ONE:
                s = "-" + mono
            else:
                cs = str(c)
                if " " in cs and c.den == ONE.den:
                    cs = f"({cs})"
                s = f"{cs}*{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self) -> str:
        return f"NCPoly({str(self)!r})"


def _accumulate_product(d: dict, X: NCPoly, Y: NCPoly, sign: int = 1) -> None:
    """Add ``sign * X * Y`` into the word -> coefficient dict ``d`` in place."""
    for w1, c1 in X._t.items():
        for w2, c2 in Y._t.items():
            w = w1 + w2
            v = c1 * c2
            if sign < 0:
                v = -v
            d[w] = d[w] + v if w in d else v


def sum_of_products(pairs, sign: int = 1) -> NCPoly:
    """``sign * sum(X * Y for X, Y in pairs)`` without intermediate polynomials."""
    d: dict = {}
    for X, Y in pairs:
        _accumulate_product(d, X, Y, sign)
    return NCPoly._raw(d)


ZERO_POLY = NCPoly()
I = NCPoly({"": ONE})
A = NCPoly({"A": ONE})
B = NCPoly({"B": ONE})


def q_commutator(X: NCPoly, Y: NCPoly, k: int = 1) -> NCPoly:
    """``[X, Y]_{q^k} = XY - q^k YX``; ``k = 0`` is the ordinary commutator."""
    return X * Y - (Y * X).scale(q_power(k))


def nested_X(n: int) -> NCPoly:
    """Right-nested q-commutator ``[...[[B, A]_q, A]_{q^2} ..., A]_{q^n}``."""
    if n < 1:
        raise ValueError("nested_X requires n >= 1")
    X = q_commutator(B, A, 1)
    for j in range(2, n + 1):
        X = q_commutator(X, A, j)
    return X


def inversions(w: str) -> int:
    """Number of letter pairs with ``B`` before ``A``."""
    seen_b = 0
    inv = 0
    for ch in w:
        if ch == "B":
            seen_b += 1
        else:
            inv += seen_b
    return inv


def normal_order(p: NCPoly, k: int = 1) -> NCPoly:
    """Normal form modulo ``BA = q^k AB`` (``A`` letters moved left).

    Each application of ``BA -> q^k AB`` removes one inversion, so a word with
    ``a`` letters ``A``, ``b`` letters ``B`` and ``i`` inversions rewrites to
    ``q^(k i) A^a B^b`` regardless of the order of rewriting.  ``k = 1`` is the
    relation ``AB = q^-1 BA``; ``k = -1`` is its dual ``AB = q BA``.
    """
    d: dict[str, QRat] = {}
    for w, c in p.items():
        a = w.count("A")
        nf = "A" * a + "B" * (len(w) - a)
        v = c * q_power(k * inversions(w))
        d[nf] = d[nf] + v if nf in d else v
    return NCPoly._raw(d)
