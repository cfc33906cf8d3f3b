"""
Q-series values: exact numbers r + s*sqrt(D) and truncated formal power series
plus the text / CSV / JSON codecs shared by every subcommand.
"""
import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, Optional, Tuple, Union

import numpy as np
import pandas as pd

SCHEMA = "qtheta/1"

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ─── Exact elements of Q(sqrt(D)) ─────────────────────────────────────

@dataclass(frozen=True)
class QuadValue:
    """Exact r + s*sqrt(D) with rational r, s and a positive radicand D."""
    r: Fraction
    s: Fraction = Fraction(0)
    D: int = 1

    def __post_init__(self):
        object.__setattr__(self, "r", _frac(self.r))
        object.__setattr__(self, "s", _frac(self.s))
        if self.D <= 0:
            raise ValueError(f"radicand must be positive, got {self.D}")

    # ── helpers ──
    def _coerce(self, other) -> Optional["QuadValue"]:
        if isinstance(other, QuadValue):
            if other.D == self.D or other.s == 0:
                return other if other.D == self.D else QuadValue(other.r, 0, self.D)
            if self.s == 0:
                return other
            raise ValueError(f"cannot mix sqrt({self.D}) and sqrt({other.D})")
        if isinstance(other, (int, Fraction)):
            return QuadValue(other, 0, self.D)
        return None

    def _radicand(self, other: "QuadValue") -> int:
        return other.D if self.s == 0 and other.s != 0 else self.D

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    def is_zero(self) -> bool:
        return self.r == 0 and self.s == 0

    def rational_part(self) -> Fraction:
        return self.r

    def sqrt_part(self) -> Fraction:
        return self.s

    # ── arithmetic ──
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return float(self) + other if isinstance(other, float) else NotImplemented
        return QuadValue(self.r + o.r, self.s + o.s, self._radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadValue(-self.r, -self.s, self.D)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return float(self) * other if isinstance(other, float) else NotImplemented
        D = self._radicand(o)
        return QuadValue(self.r * o.r + self.s * o.s * D,
                         self.r * o.s + self.s * o.r, D)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.s == 0 and self.r == other
        if isinstance(other, QuadValue):
            if self.s == 0 and other.s == 0:
                return self.r == other.r
            return (self.r, self.s, self.D) == (other.r, other.s, other.D)
        return NotImplemented

    def __hash__(self):
        return hash((self.r, self.s, self.D if self.s else 0))

    def __float__(self):
        return float(self.r) + float(self.s) * math.sqrt(self.D)

    def __str__(self):
        if self.s == 0:
            return str(self.r)
        root = f"sqrt({self.D})"
        s_txt = root if abs(self.s) == 1 else f"{_fmt_rational(abs(self.s))}*{root}"
        if self.r == 0:
            return s_txt if self.s > 0 else f"-{s_txt}"
        sign = "+" if self.s > 0 else "-"
        return f"{self.r} {sign} {s_txt}"


Coefficient = Union[int, Fraction, float, QuadValue]


def _is_zero(c: Coefficient) -> bool:
    return c.is_zero() if isinstance(c, QuadValue) else c == 0


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"({x})"


# ─── Truncated power series ───────────────────────────────────────────

@dataclass(frozen=True)
class QSeries:
    """
    Truncated formal power series sum c_m q^m for 0 <= m <= order.

    Absent exponents mean zero. Binary operations truncate to the smaller
    order so results never claim coefficients neither operand knows.
    """
    order: int
    coeffs: Dict[int, Coefficient] = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        clean = {int(m): c for m, c in self.coeffs.items()
                 if 0 <= m <= self.order and not _is_zero(c)}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, m: int) -> Coefficient:
        if m < 0 or m > self.order:
            raise IndexError(f"q^{m} outside truncation order {self.order}")
        return self.coeffs.get(m, 0)

    def __iter__(self) -> Iterator[Tuple[int, Coefficient]]:
        return iter(self.coeffs.items())

    def __len__(self) -> int:
        return len(self.coeffs)

    def support(self) -> set:
        return set(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, order: int) -> "QSeries":
        return QSeries(min(order, self.order), self.coeffs)

    def map(self, fn: Callable[[Coefficient], Coefficient]) -> "QSeries":
        return QSeries(self.order, {m: fn(c) for m, c in self.coeffs.items()})

    def rational_part(self) -> "QSeries":
        return self.map(lambda c: c.r if isinstance(c, QuadValue) else c)

    def sqrt_part(self) -> "QSeries":
        return self.map(lambda c: c.s if isinstance(c, QuadValue) else 0)

    def to_float(self) -> "QSeries":
        return self.map(float)

    # ── arithmetic ──
    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        out = dict(self.truncate(n).coeffs)
        for m, c in other.truncate(n):
            out[m] = out[m] + c if m in out else c
        return QSeries(n, out)

    def __neg__(self) -> "QSeries":
        return self.map(lambda c: -c)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def scale(self, k) -> "QSeries":
        return self.map(lambda c: k * c)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        out: Dict[int, Coefficient] = {}
        for i, x in self.truncate(n):
            for j, y in other.truncate(n - i):
                out[i + j] = out[i + j] + x * y if i + j in out else x * y
        return QSeries(n, out)

    def __rmul__(self, k):
        return self.scale(k)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __str__(self):
        return format_qseries(self)


# ─── Codecs ───────────────────────────────────────────────────────────

def _fmt_coefficient(c: Coefficient) -> str:
    if isinstance(c, float):
        return f"{c:.6g}"
    if isinstance(c, QuadValue):
        return str(c.r) if c.is_rational else f"({c})"
    return _fmt_rational(_frac(c)) if isinstance(c, Fraction) else str(c)


def _fmt_term(m: int, c: Coefficient) -> str:
    if m == 0:
        return _fmt_coefficient(c)
    mono = "q" if m == 1 else f"q^{m}"
    text = _fmt_coefficient(c)
    if text in ("1", "-1"):
        return text[:-1] + mono
    return f"{text}*{mono}"


def format_qseries(series: QSeries) -> str:
    """`c0 + c1*q + c2*q^2 + ...`, zero terms omitted, `0` for the zero series."""
    out = ""
    for m, c in series:
        term = _fmt_term(m, c)
        if not out:
            out = term
        elif term.startswith("-"):
            out += f" - {term[1:]}"
        else:
            out += f" + {term}"
    return out or "0"


_TERM = re.compile(r"^(?P<coef>\d+(?:\.\d*)?|\(-?\d+/\d+\))?\*?(?P<q>q(?:\^(?P<exp>\d+))?)?$")


def parse_qseries(text: str, order: int) -> QSeries:
    """
    Parse `2q^2 - 4q^3 + ...` (with or without `*`) into a QSeries.
    Decimal coefficients become floats, everything else stays exact.
    """
    body = re.sub(r"\s+", "", text)
    coeffs: Dict[int, Coefficient] = {}
    for sign, term in re.findall(r"([+-]?)((?:\([^)]*\)|[^+-])+)", body):
        match = _TERM.match(term)
        if match is None or not term:
            raise ValueError(f"cannot parse q-series term {sign}{term!r}")
        raw = match.group("coef")
        if raw is None:
            value: Coefficient = 1
        elif raw.startswith("("):
            value = Fraction(raw.strip("()"))
        elif "." in raw:
            value = float(raw)
        else:
            value = int(raw)
        if sign == "-":
            value = -value
        if match.group("q") is None:
            m = 0
        else:
            m = int(match.group("exp") or 1)
        if m <= order:
            coeffs[m] = coeffs.get(m, 0) + value
    return QSeries(order, coeffs)


def series_to_frame(series: QSeries) -> pd.DataFrame:
    """Machine rows `m, r_num, r_den, s_num, s_den` (floats keep r_num only)."""
    rows = []
    for m, c in series:
        if isinstance(c, float):
            rows.append({"m": m, "r_num": c, "r_den": 1, "s_num": 0, "s_den": 1})
            continue
        r, s = (c.r, c.s) if isinstance(c, QuadValue) else (_frac(c), Fraction(0))
        rows.append({"m": m, "r_num": r.numerator, "r_den": r.denominator,
                     "s_num": s.numerator, "s_den": s.denominator})
    return pd.DataFrame(rows, columns=["m", "r_num", "r_den", "s_num", "s_den"])


def _encode(c: Coefficient):
    if isinstance(c, np.generic):
        return c.item()
    if isinstance(c, float):
        return c
    if isinstance(c, QuadValue):
        return {"r": _encode(c.r), "s": _encode(c.s), "D": c.D}
    x = _frac(c)
    return {"num": x.numerator, "den": x.denominator}


def series_to_record(series: QSeries, **meta) -> dict:
    return {"schema": SCHEMA, **meta, "order": series.order,
            "coeffs": [{"m": m, "c": _encode(c)} for m, c in series]}


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=False, default=_encode)
