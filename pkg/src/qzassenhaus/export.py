"""
Serialization of factorizations: a versioned JSON document, plain text and
LaTeX.

JSON layout (``"qzx-format-version": 1``)::

    {
      "qzx-format-version": 1,
      "variant": "escalating", "order": 4, "convention": "jackson",
      "shape": "product",
      "generators": [[["A", "1", "1"]], [["B", "1", "1"]]],
      "factors": [
        {"grade": 2, "base": 2,
         "exponent": [["AB", "-q", "1 + q"], ["BA", "1", "1 + q"]]},
        ...
      ],
      "provenance": {"tool-version": "...", "timestamp": "...", "config": {...}}
    }

Each exponent term is ``[word, numerator, denominator]`` with the canonical
polynomial strings of :class:`~qzassenhaus.qfield.QRat`.
"""
from __future__ import annotations

import json
import re
from datetime import datetime, timezone

from .disentangler import Factor, Factorization
from .qfield import QRat
from .wordalg import NCPoly

__all__ = [
    "FORMAT_VERSION",
    "to_document",
    "from_document",
    "dumps",
    "loads",
    "poly_to_text",
    "poly_to_latex",
    "to_text",
    "to_latex",
]

FORMAT_VERSION = 1


def _version() -> str:
    from . import __version__
    return __version__


def _poly_terms(P: NCPoly) -> list:
    return [[w, *c.strings()] for w, c in P.items()]


def _poly_from_terms(terms) -> NCPoly:
    return NCPoly((w, QRat(num, den)) for w, num, den in terms)


def to_document(f: Factorization, config: dict | None = None,
                timestamp: str | None = None) -> dict:
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return {
        "qzx-format-version": FORMAT_VERSION,
        "variant": f.variant,
        "order": f.order,
        "convention": f.convention,
        "shape": f.shape,
        "generators": [_poly_terms(g) for g in f.generators],
        "factors": [
            {"grade": x.grade, "base": x.base, "exponent": _poly_terms(x.exponent)}
            for x in f.factors
        ],
        "provenance": {
            "tool-version": _version(),
            "timestamp": timestamp,
            "config": dict(config or {}),
        },
    }


def from_document(doc: dict) -> Factorization:
    version = doc.get("qzx-format-version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported qzx-format-version {version!r}")
    factors = tuple(
        Factor(int(x["grade"]), int(x["base"]), _poly_from_terms(x["exponent"]))
        for x in doc["factors"]
    )
    gens = tuple(_poly_from_terms(g) for g in doc["generators"])
    return Factorization(doc["variant"], int(doc["order"]), factors,
                         convention=doc["convention"], shape=doc["shape"],
                         generators=gens)


def dumps(f: Factorization, config: dict | None = None, timestamp: str | None = None) -> str:
    return json.dumps(to_document(f, config, timestamp), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Factorization:
    return from_document(json.loads(text))


# ---------------------------------------------------------------------------
# human-readable forms


def poly_to_text(P: NCPoly) -> str:
    return str(P)


def _compress(w: str) -> list[tuple[str, int]]:
    runs = []
    for ch in w:
        if runs and runs[-1][0] == ch:
            runs[-1] = (ch, runs[-1][1] + 1)
        else:
            runs.append((ch, 1))
    return runs


def _word_latex(w: str) -> str:
    if not w:
        return "I"
    return "".join(ch if k == 1 else f"{ch}^{{{k}}}" for ch, k in _compress(w))


_POW = re.compile(r"q\^(\d+)")


def _qpoly_latex(s: str) -> str:
    return _POW.sub(r"q^{\1}", s.replace("*", ""))


def _coeff_latex(c: QRat) -> str:
    num, den = c.strings()
    if den == "1":
        return _qpoly_latex(num)
    return rf"\frac{{{_qpoly_latex(num)}}}{{{_qpoly_latex(den)}}}"


def poly_to_latex(P: NCPoly) -> str:
    if not P:
        return "0"
    out = []
    for w, c in P.items():
        num, den = c.strings()
        sign = "+"
        if num.startswith("-") and " " not in num:
            sign, c = "-", -c
            num, den = c.strings()
        if num == "1" and den == "1":
            body = _word_latex(w)
        elif den == "1" and " " in num:
            body = rf"({_coeff_latex(c)})\,{_word_latex(w)}"
        else:
            body = rf"{_coeff_latex(c)}\,{_word_latex(w)}"
        out.append((sign, body))
    s = out[0][1] if out[0][0] == "+" else "-" + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def _exp_latex(conv: str, base: int, grade: int, body: str) -> str:
    xg = "x" if grade == 1 else f"x^{{{grade}}}"
    arg = f"{xg}{body}" if " " not in body else rf"{xg}\left({body}\right)"
    qb = "q" if base == 1 else f"q^{{{base}}}"
    if conv == "classical" or base == 0:
        return rf"e^{{{arg}}}"
    if conv == "jackson":
        return rf"e_{{{qb}}}^{{{arg}}}"
    name = "e" if conv == "e_lower" else "E"
    return rf"{name}_{{{qb}}}\left({arg}\right)"


def to_latex(f: Factorization) -> str:
    """Display-math LaTeX for the factorization through its order."""
    a, b = f.generators
    conv = f.convention
    first = 0 if conv == "classical" else 1
    ga, gb = poly_to_latex(a), poly_to_latex(b)
    if f.shape == "exponent":
        exponent = " + ".join(
            [rf"x\left({ga} + {gb}\right)"]
            + [rf"x^{{{x.grade}}}\left({poly_to_latex(x.exponent)}\right)" for x in f.factors])
        lhs = _exp_latex(conv, first, 1, ga) + " " + _exp_latex(conv, first, 1, gb)
        rhs = (r"e^{" if conv == "classical" else r"e_{q}^{") + exponent + "}"
        return rf"{lhs} = {rhs} + O(x^{{{f.order + 1}}})"
    lines = [_exp_latex(conv, first, 1, rf"{ga} + {gb}") + " ="]
    factors = [_exp_latex(conv, first, 1, ga), _exp_latex(conv, first, 1, gb)]
    factors += [_exp_latex(conv, x.base, x.grade, poly_to_latex(x.exponent))
                for x in f.factors if x.exponent]
    lines.append(r" \\ \quad ".join(factors))
    lines.append(rf"\cdots \quad + O(x^{{{f.order + 1}}})")
    return "\n".join(lines)


def to_text(f: Factorization) -> str:
    head = f"{f.variant} factorization, convention {f.convention}, through x^{f.order}"
    lines = [head]
    a, b = f.generators
    if f.shape == "exponent":
        lines.append(f"  Z1 = {a + b}")
        for x in f.factors:
            lines.append(f"  Z{x.grade} = {x.exponent}")
        return "\n".join(lines) + "\n"
    lines.append(f"  prefix: exp({a}) exp({b})")
    for x in f.factors:
        base = "classical" if x.base == 0 else ("q" if x.base == 1 else f"q^{x.base}")
        lines.append(f"  grade {x.grade}, base {base}: {x.exponent}")
    return "\n".join(lines) + "\n"
