"""
Ideal lattices as embedded binary quadratic forms.

A form (a, b, c) with D = 4ac - b^2 is placed in the plane by
    x = (2au + bv) / (2 sqrt(a)),   y = -v sqrt(D) / (2 sqrt(a))
so x^2 + y^2 = f(u, v). Every weighted coefficient then lies in Q(sqrt(D)):
    x^2 - y^2 = (4a^2 u^2 + 4ab uv + (2b^2 - 4ac) v^2) / (4a)
    x y       = -((2au + bv) v / (4a)) sqrt(D)
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Tuple

import numpy as np
import pandas as pd
from sympy import Matrix, ilcm

from modules.qfield import BinaryForm, QuadField
from modules.qseries import QSeries, QuadValue

logger = logging.getLogger(__name__)


class LatticeError(ValueError):
    """Bad class index, unsupported harmonic or inexact evaluation."""


class Harmonic(Enum):
    X2_Y2 = "x2-y2"   # Re (x+iy)^2
    XY = "xy"         # Im (x+iy)^2 / 2
    HALF = "half"     # (x^2 - y^2) / 2


@dataclass(frozen=True)
class IdealLattice:
    form: BinaryForm
    class_label: str = "o"

    @property
    def disc(self) -> int:
        return self.form.discriminant

    @property
    def radicand(self) -> int:
        return -self.form.discriminant

    def __str__(self):
        return f"L_{self.class_label}{self.form}"


def class_label(class_index: int, class_number: int) -> str:
    if class_index == 0:
        return "o"
    return "a" if class_number == 2 else f"a{class_index}"


def lattice_for_class(K: QuadField, class_index: int) -> IdealLattice:
    if not 0 <= class_index < K.class_number:
        raise LatticeError(
            f"class index {class_index} out of range for {K} (h={K.class_number})")
    return IdealLattice(K.forms[class_index], class_label(class_index, K.class_number))


# ─── Shells ───────────────────────────────────────────────────────────

def shell(L: IdealLattice, m: int) -> List[Tuple[int, int]]:
    """Lattice vectors (u, v) of norm m in lexicographic order."""
    return L.form.solutions(m)


@lru_cache(maxsize=64)
def _shell_table(form: BinaryForm, N: int) -> pd.DataFrame:
    a, b, c = form
    D = 4 * a * c - b * b
    us, vs = [], []
    vmax = math.isqrt(4 * a * N // D)
    for v in range(-vmax, vmax + 1):
        s = math.isqrt(4 * a * N - D * v * v)
        lo = -((s + b * v) // (2 * a))
        hi = (s - b * v) // (2 * a)
        if hi < lo:
            continue
        us.append(np.arange(lo, hi + 1, dtype=np.int64))
        vs.append(np.full(hi - lo + 1, v, dtype=np.int64))
    u = np.concatenate(us)
    v = np.concatenate(vs)
    m = a * u * u + b * u * v + c * v * v
    t = 2 * a * u + b * v

    count = np.bincount(m, minlength=N + 1).astype(np.int64)
    p2a = np.zeros(N + 1, dtype=np.int64)
    p2b = np.zeros(N + 1, dtype=np.int64)
    np.add.at(p2a, m, 4 * a * a * u * u + 4 * a * b * u * v + (2 * b * b - 4 * a * c) * v * v)
    np.add.at(p2b, m, -t * v)
    logger.debug(f"[lattice] shell table {form} N={N}: {len(m)} vectors")
    table = pd.DataFrame({"count": count, "p2a_num": p2a, "p2b_num": p2b})
    table.index.name = "m"
    return table


def shell_table(L: IdealLattice, N: int) -> pd.DataFrame:
    """
    Per-norm shell data for 0 <= m <= N.

    count    -- |shell(L, m)|
    p2a_num  -- 4a * sum of (x^2 - y^2)
    p2b_num  -- 4a * sum of xy / sqrt(D)
    """
    if N < 0:
        raise LatticeError(f"bound must be nonnegative, got {N}")
    return _shell_table(L.form, N).copy()


def theta_series(L: IdealLattice, N: int) -> QSeries:
    counts = _shell_table(L.form, N)["count"].to_numpy()
    return QSeries(N, {int(m): int(counts[m]) for m in np.flatnonzero(counts)})


def weighted_theta(L: IdealLattice, P: Harmonic, N: int) -> QSeries:
    """Theta series of L weighted by the harmonic polynomial P, exact in Q(sqrt(D))."""
    table = _shell_table(L.form, N)
    a, D = L.form.a, L.radicand
    if P is Harmonic.XY:
        nums = table["p2b_num"].to_numpy()
        make = lambda k: QuadValue(0, Fraction(k, 4 * a), D)
    elif P in (Harmonic.X2_Y2, Harmonic.HALF):
        nums = table["p2a_num"].to_numpy()
        den = 4 * a if P is Harmonic.X2_Y2 else 8 * a
        make = lambda k: QuadValue(Fraction(k, den), 0, D)
    else:
        raise LatticeError(f"unsupported harmonic {P}")
    return QSeries(N, {int(m): make(int(nums[m])) for m in np.flatnonzero(nums)})


# ─── Harmonic power sums ──────────────────────────────────────────────

def power_sum_numerators(points: Iterable[Tuple[int, int]], form: BinaryForm,
                         j: int) -> Tuple[int, int]:
    """
    Integer (P, Q) with sum over points of ((2 sqrt(a)) z)^j = P + i Q sqrt(D),
    where z = x + iy. Each point contributes (A - i v sqrt(D))^j, A = 2au + bv.
    """
    a, b = form.a, form.b
    D = -form.discriminant
    P = Q = 0
    for u, v in points:
        base_p, base_q = 2 * a * u + b * v, -v
        p, q = 1, 0
        for _ in range(j):
            p, q = p * base_p - q * base_q * D, p * base_q + q * base_p
        P += p
        Q += q
    return P, Q


def harmonic_power_sum(L: IdealLattice, m: int, j: int) -> Tuple[QuadValue, QuadValue]:
    """(Re, Im) of the sum of (x+iy)^j over shell(L, m), both exact in Q(sqrt(D))."""
    if m < 1 or j < 1:
        raise LatticeError(f"need m >= 1 and j >= 1, got m={m} j={j}")
    D = L.radicand
    P, Q = power_sum_numerators(shell(L, m), L.form, j)
    if P == 0 and Q == 0:
        return QuadValue(0, 0, D), QuadValue(0, 0, D)
    a = L.form.a
    if j % 2:
        root = math.isqrt(a)
        if root * root != a:
            raise LatticeError(
                f"odd power sum j={j} on {L} leaves Q(sqrt({D})) (a={a} not a square)")
        scale = 2 ** j * root ** j
    else:
        scale = 2 ** j * a ** (j // 2)
    return QuadValue(Fraction(P, scale), 0, D), QuadValue(0, Fraction(Q, scale), D)


# ─── Level bookkeeping ────────────────────────────────────────────────

@dataclass(frozen=True)
class ThetaLevel:
    """Level data for a weighted theta series of weight 3 (metadata only)."""
    gram: Tuple[Tuple[int, int], Tuple[int, int]]
    det: int
    N: int
    case: int
    level: int
    character_numerator: int

    @property
    def group(self) -> str:
        return f"Gamma0({self.level})"

    @property
    def character(self) -> str:
        return f"({self.character_numerator}/.)"


def modular_level(L: IdealLattice) -> ThetaLevel:
    """
    Integral Gram matrix A (doubled when b is odd), the least N with N A^-1
    integral, and the resulting level 4N, 2N or N depending on the parity of
    the diagonals of A and N A^-1.
    """
    a, b, c = L.form
    if b % 2:
        gram = Matrix([[2 * a, b], [b, 2 * c]])
    else:
        gram = Matrix([[a, b // 2], [b // 2, c]])
    inverse = gram.inv()
    N = int(ilcm(*[entry.q for entry in inverse]))
    scaled = inverse * N
    gram_even = all(int(gram[i, i]) % 2 == 0 for i in range(2))
    dual_even = all(int(scaled[i, i]) % 2 == 0 for i in range(2))
    if gram_even and dual_even:
        case, level = 3, N
    elif gram_even:
        case, level = 2, 2 * N
    else:
        case, level = 1, 4 * N
    det = int(gram.det())
    return ThetaLevel(
        gram=tuple(tuple(int(x) for x in gram.row(i)) for i in range(2)),
        det=det, N=N, case=case, level=level, character_numerator=-det,
    )
