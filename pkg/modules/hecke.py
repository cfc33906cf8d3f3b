"""
Weight 3 CM eigenforms of imaginary quadratic fields, built from the ideal
class lattices for the Hecke character of trivial conductor.

Class numbers one and two are assembled exactly from weighted theta series;
the class number three field Q(sqrt(-23)) is solved numerically from the
Hecke relations at 2 and 3.
"""
import cmath
import itertools
import logging
import math
from dataclasses import dataclass, replace
from functools import partial
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq
from sympy import Poly, Rational, groebner, primerange, symbols
from sympy import sqrt as sym_sqrt

from modules.lattice import Harmonic, ThetaLevel, lattice_for_class, modular_level, weighted_theta
from modules.qfield import (QuadField, SplitType, class_index_of_norm, field_from_d, ideal_count,
                            kronecker_symbol, prime_splitting, principal_norm_representations,
                            ramified_nonprincipal_prime)
from modules.qseries import QSeries
from modules.reference import CLASS_NUMBER_THREE_CASE, EIGENFORM_COEFFICIENTS, RAMIFIED_COEFFICIENTS

logger = logging.getLogger(__name__)

WEIGHT = 3
H3_ROOT_TOL = 1e-12
H3_PAIR_TOL = 1e-6
FLOAT_REL_TOL = 1e-6
C2_DERIVATION_BOUND = 100


class EigenformError(ValueError):
    """Wrong class number, missing data or an unsatisfiable construction."""


@dataclass(frozen=True)
class Eigenform:
    field: QuadField
    coeffs: QSeries
    weight: int = WEIGHT
    exact: bool = True
    variant: int = 1
    theta_levels: Tuple[ThetaLevel, ...] = ()

    @property
    def order(self) -> int:
        return self.coeffs.order

    def a(self, n: int):
        return self.coeffs[n]

    def chi(self, p: int) -> int:
        return kronecker_symbol(self.field.d_K, p)

    @property
    def level(self) -> int:
        # Gamma0(|d_K|), trivial conductor
        return self.field.radicand

    @property
    def character(self) -> str:
        return f"({self.field.d_K}/.)"

    def with_coeffs(self, coeffs: QSeries) -> "Eigenform":
        return replace(self, coeffs=coeffs)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    witness: Optional[tuple] = None
    detail: str = ""
    witnesses: Tuple[tuple, ...] = ()


# ─── Helpers ──────────────────────────────────────────────────────────

def _rational_weighted(K: QuadField, class_index: int, N: int) -> QSeries:
    series = weighted_theta(lattice_for_class(K, class_index), Harmonic.X2_Y2, N)
    if not series.sqrt_part().is_zero():
        raise EigenformError(f"{K}: x^2 - y^2 weighted series has a sqrt part")
    return series.rational_part()


def _integral(series: QSeries, what: str) -> QSeries:
    out = {}
    for m, c in series:
        c = Fraction(c)
        if c.denominator != 1:
            raise EigenformError(f"{what}: coefficient at q^{m} is {c}, not an integer")
        out[m] = c.numerator
    return QSeries(series.order, out)


def smallest_prime_factors(N: int) -> np.ndarray:
    spf = np.zeros(N + 1, dtype=np.int64)
    for i in range(2, math.isqrt(N) + 1):
        if spf[i] == 0:
            block = spf[i * i::i]
            block[block == 0] = i
    idx = np.arange(N + 1)
    unset = (spf == 0) & (idx >= 2)
    spf[unset] = idx[unset]
    return spf


def _prime_power_parts(n: int, spf: np.ndarray) -> List[Tuple[int, int]]:
    parts = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        parts.append((p, e))
    return parts


def hecke_relations(N: int) -> Iterator[tuple]:
    """
    The Hecke relations up to N in increasing n:
    ("power", n, p, e)     a(p^e) = a(p) a(p^(e-1)) - chi(p) p^(k-1) a(p^(e-2))
    ("pair",  n, m1, m2)   a(n) = a(m1) a(m2), gcd(m1, m2) = 1, 1 < m1 < m2
    """
    spf = smallest_prime_factors(max(N, 1))
    for n in range(2, N + 1):
        parts = _prime_power_parts(n, spf)
        if len(parts) == 1:
            p, e = parts[0]
            if e >= 2:
                yield ("power", n, p, e)
            continue
        blocks = [p ** e for p, e in parts]
        splits = {math.prod(combo) for r in range(1, len(blocks))
                  for combo in itertools.combinations(blocks, r)}
        for m1 in sorted(s for s in splits if s * s < n):
            yield ("pair", n, m1, n // m1)


# ─── Exact constructions ──────────────────────────────────────────────

def eigenform_h1(K: QuadField, N: int) -> Eigenform:
    """Theta series of L_o weighted by (x^2 - y^2) / 2."""
    if K.class_number != 1:
        raise EigenformError(f"{K} has class number {K.class_number}, expected 1")
    if K.d in (1, 3):
        raise EigenformError(f"{K} has extra units; not covered")
    L = lattice_for_class(K, 0)
    series = weighted_theta(L, Harmonic.HALF, N)
    if not series.sqrt_part().is_zero():
        raise EigenformError(f"{K}: weighted series has a sqrt part")
    coeffs = _integral(series.rational_part(), f"eigenform of {K}")
    if N >= 1 and coeffs[1] != 1:
        raise EigenformError(f"{K}: a(1) = {coeffs[1]}")
    return Eigenform(K, coeffs, theta_levels=(modular_level(L),))


def _c2_relation(rel: tuple, alpha: Dict[int, Fraction], beta: Dict[int, Fraction],
                 chi: Callable[[int], int]) -> Tuple[Fraction, Fraction, Fraction]:
    """(k0, k1, k2) with relation residual k0 + k1 c2 + k2 c2^2."""
    def lin(n):
        return alpha.get(n, Fraction(0)), beta.get(n, Fraction(0))

    kind, n = rel[0], rel[1]
    if kind == "pair":
        (x0, x1), (y0, y1), (z0, z1) = lin(n), lin(rel[2]), lin(rel[3])
        return x0 - y0 * z0, x1 - (y0 * z1 + y1 * z0), -y1 * z1
    p, e = rel[2], rel[3]
    (x0, x1), (y0, y1), (z0, z1) = lin(n), lin(p), lin(n // p)
    w0, w1 = lin(n // (p * p))
    tw = chi(p) * p ** (WEIGHT - 1)
    return x0 - y0 * z0 + tw * w0, x1 - (y0 * z1 + y1 * z0) + tw * w1, -y1 * z1


def derive_c1_c2(K: QuadField, N: int = C2_DERIVATION_BOUND) -> Tuple[Fraction, Fraction]:
    """
    Re-derive (c1, c2) from the Hecke relations alone.

    c1 = 1 / T_o(1) by normalization. Each relation is quadratic in c2; the
    first one with a c2^2 term fixes c2 up to sign and the positive root is
    kept. All relations up to N must then hold exactly. N is raised to cover
    the square of the smallest nonprincipal norm, where that first relation
    can sit.
    """
    if K.class_number != 2:
        raise EigenformError(f"{K} has class number {K.class_number}, expected 2")
    m0 = K.forms[1].a
    if m0 * m0 > N:
        logger.debug(f"[hecke] {K}: raising c2 bound {N} -> {m0 * m0} for norm {m0}")
        N = m0 * m0
    w_o = _rational_weighted(K, 0, N)
    w_a = _rational_weighted(K, 1, N)
    c1 = 1 / Fraction(w_o[1])
    alpha = {m: c1 * Fraction(c) for m, c in w_o}
    alpha[1] = Fraction(1)
    beta = {m: Fraction(c) for m, c in w_a}
    chi = partial(kronecker_symbol, K.d_K)

    relations = [(rel, _c2_relation(rel, alpha, beta, chi)) for rel in hecke_relations(N)]
    pinned = next(((rel, k) for rel, k in relations if k[2] != 0), None)
    if pinned is None:
        raise EigenformError(f"{K}: no relation up to {N} involves c2^2")
    rel, (k0, k1, k2) = pinned
    disc = k1 * k1 - 4 * k2 * k0
    root = sym_sqrt(Rational(disc.numerator, disc.denominator)) if disc >= 0 else None
    if root is None or not root.is_Rational:
        raise EigenformError(f"{K}: relation {rel} has no rational root (disc {disc})")
    r = Fraction(int(root.p), int(root.q))
    candidates = sorted({(-k1 + r) / (2 * k2), (-k1 - r) / (2 * k2)}, reverse=True)

    for c2 in candidates:
        if c2 <= 0:
            continue
        bad = next((rel for rel, k in relations if k[0] + k[1] * c2 + k[2] * c2 * c2 != 0), None)
        if bad is None:
            logger.info(f"[hecke] {K}: c1={c1} c2={c2} from {rel}, {len(relations)} relations hold")
            return c1, c2
        logger.debug(f"[hecke] {K}: c2={c2} breaks {bad}")
    raise EigenformError(f"{K}: no positive rational c2 satisfies the relations up to {N}")


def variant_sign(K: QuadField) -> int:
    """
    +1 or -1 so that variant 1 (c2 multiplied by this sign) reproduces the
    sign of the tabulated b(m) at the ramified nonprincipal prime m.
    """
    if K.d not in RAMIFIED_COEFFICIENTS:
        return 1
    m, b = RAMIFIED_COEFFICIENTS[K.d]
    _, c2 = EIGENFORM_COEFFICIENTS[K.d]
    value = c2 * Fraction(_rational_weighted(K, 1, m)[m])
    if value == 0:
        raise EigenformError(f"{K}: T_a({m}) vanishes, cannot fix the variant sign")
    return 1 if (value > 0) == (b > 0) else -1


def eigenform_h2(K: QuadField, N: int, variant: int = 1,
                 coefficients: Optional[Tuple[Fraction, Fraction]] = None) -> Eigenform:
    """c1 * Theta_{L_o,P} + (+-c2) * Theta_{L_a,P} with P = x^2 - y^2."""
    if K.class_number != 2:
        raise EigenformError(f"{K} has class number {K.class_number}, expected 2")
    if variant not in (1, 2):
        raise EigenformError(f"variant must be 1 or 2, got {variant}")
    if coefficients is None:
        coefficients = EIGENFORM_COEFFICIENTS.get(K.d) or derive_c1_c2(K)
    c1, c2 = coefficients
    sigma = variant_sign(K)
    sign = sigma if variant == 1 else -sigma
    series = _rational_weighted(K, 0, N).scale(c1) + _rational_weighted(K, 1, N).scale(sign * c2)
    coeffs = _integral(series, f"eigenform of {K} variant {variant}")
    if N >= 1 and coeffs[1] != 1:
        raise EigenformError(f"{K}: a(1) = {coeffs[1]}")
    levels = tuple(modular_level(lattice_for_class(K, i)) for i in range(2))
    return Eigenform(K, coeffs, variant=variant, theta_levels=levels)


def eigenform(K: QuadField, N: int, variant: int = 1) -> Eigenform:
    if K.class_number == 1:
        return eigenform_h1(K, N)
    if K.class_number == 2:
        return eigenform_h2(K, N, variant)
    raise EigenformError(f"{K} has class number {K.class_number}; use the h3 solver for d=23")


# ─── Ideal character sums ─────────────────────────────────────────────

def _principal_sum(K: QuadField, n: int) -> Fraction:
    total = Fraction(0)
    for a, b, half in principal_norm_representations(K, n):
        total += Fraction(a * a - K.d * b * b, 4 if half else 1)
    return total


def ideal_character_sum(K: QuadField, n: int, sign: int = 1) -> Fraction:
    """
    Sum of phi(A) over the ideals of norm n, phi(alpha O) = alpha^2, computed
    from principal generators. For class number two a nonprincipal A is moved
    into the principal class through the ramified ideal J of norm m, with
    phi(J) = sign * m.
    """
    if K.class_number == 1:
        return _principal_sum(K, n)
    if K.class_number != 2:
        raise EigenformError(f"{K}: ideal character sums need class number 1 or 2")
    m = ramified_nonprincipal_prime(K)
    if m is None:
        raise EigenformError(f"{K}: no ramified prime in the nonprincipal class")
    phi_J = sign * m
    e = 0
    while n % m == 0:
        n //= m
        e += 1
    if ideal_count(K, n) == 0:
        return Fraction(0)
    if class_index_of_norm(K, n) == 0:
        rest = _principal_sum(K, n)
    else:
        rest = _principal_sum(K, m * n) / phi_J
    return Fraction(phi_J) ** e * rest


# ─── Hecke recursion and checks ───────────────────────────────────────

def hecke_extend(prime_coeffs: Dict[int, object], chi: Callable[[int], int],
                 k: int, N: int) -> QSeries:
    """Full series from a(p) via multiplicativity and the prime-power recursion."""
    spf = smallest_prime_factors(max(N, 1))
    a: List[object] = [0] * (N + 1)
    if N >= 1:
        a[1] = 1
    for n in range(2, N + 1):
        p = int(spf[n])
        q, e = n, 0
        while q % p == 0:
            q //= p
            e += 1
        if q > 1:
            a[n] = a[n // q] * a[q]
        elif e == 1:
            if p not in prime_coeffs:
                raise EigenformError(f"missing coefficient a({p})")
            a[n] = prime_coeffs[p]
        else:
            a[n] = a[p] * a[n // p] - chi(p) * p ** (k - 1) * a[n // (p * p)]
    return QSeries(N, dict(enumerate(a)))


def _close(x, y, exact: bool, rel_tol: float) -> bool:
    if exact:
        return x == y
    return abs(x - y) <= rel_tol * max(1.0, abs(y))


def check_multiplicativity(f: Eigenform, N: Optional[int] = None,
                           rel_tol: float = FLOAT_REL_TOL) -> CheckResult:
    N = f.order if N is None else min(N, f.order)
    a, k = f.a, f.weight
    checked = 0
    for rel in hecke_relations(N):
        checked += 1
        if rel[0] == "pair":
            _, n, m1, m2 = rel
            if not _close(a(n), a(m1) * a(m2), f.exact, rel_tol):
                return CheckResult("multiplicativity", False, checked, (m1, m2),
                                   f"a({n}) = {a(n)} but a({m1}) a({m2}) = {a(m1) * a(m2)}")
        else:
            _, n, p, e = rel
            expected = a(p) * a(n // p) - f.chi(p) * p ** (k - 1) * a(n // (p * p))
            if not _close(a(n), expected, f.exact, rel_tol):
                return CheckResult("multiplicativity", False, checked, (p, e),
                                   f"a({p}^{e}) = {a(n)} but the recursion gives {expected}")
    return CheckResult("multiplicativity", True, checked)


def ramanujan_check(f: Eigenform, N: Optional[int] = None) -> CheckResult:
    """|a(p)| < 2 p^((k-1)/2) at every unramified prime p <= N, compared squared."""
    N = f.order if N is None else min(N, f.order)
    checked = 0
    for p in primerange(2, N + 1):
        p = int(p)
        if f.chi(p) == 0:
            continue
        checked += 1
        ap = f.a(p)
        if not ap * ap < 4 * p ** (f.weight - 1):
            return CheckResult("ramanujan", False, checked, (p, ap),
                               f"|a({p})| = {abs(ap)} breaks the bound")
    return CheckResult("ramanujan", True, checked)


def sine_formula_check(f: Eigenform, p: int, alpha_max: int) -> CheckResult:
    """
    a(p^alpha) = p^((k-1) alpha / 2) U_alpha, with U the Chebyshev recurrence
    U_{alpha+1} = z U_alpha - U_{alpha-1} and z = a(p) / p^((k-1)/2).
    """
    k = f.weight
    if k % 2 == 0:
        raise EigenformError(f"weight {k}: p^((k-1)/2) is irrational")
    if f.chi(p) != 1:
        raise EigenformError(f"{p} does not split in {f.field}")
    if p ** alpha_max > f.order:
        raise EigenformError(f"a({p}^{alpha_max}) is beyond order {f.order}")
    half = (k - 1) // 2
    ap = f.a(p)
    if not ap * ap < 4 * p ** (k - 1):
        raise EigenformError(f"a({p}) = {ap} breaks the Ramanujan bound")
    z = Fraction(ap, p ** half) if f.exact else ap / p ** half
    prev, cur = 0, 1
    for alpha in range(alpha_max + 1):
        predicted = p ** (half * alpha) * cur
        if not _close(f.a(p ** alpha), predicted, f.exact, FLOAT_REL_TOL):
            return CheckResult("sine-formula", False, alpha + 1, (p, alpha),
                               f"a({p}^{alpha}) = {f.a(p ** alpha)}, expected {predicted}")
        prev, cur = cur, z * cur - prev
    return CheckResult("sine-formula", True, alpha_max + 1)


def nonvanishing_scan(f: Eigenform, K: QuadField, N: Optional[int] = None) -> CheckResult:
    """
    Split primes p <= N must have a(p) outside {0, p, -p}; then no a(p^alpha)
    vanishes, which is asserted on the series directly.
    """
    N = f.order if N is None else min(N, f.order)
    witnesses = []
    checked = 0
    for p in primerange(2, N + 1):
        p = int(p)
        if prime_splitting(K, p) is not SplitType.SPLIT:
            continue
        ap = f.a(p)
        witnesses.append((p, ap))
        checked += 1
        if ap in (0, p, -p):
            return CheckResult("nonvanishing", False, checked, (p, ap),
                               f"a({p}) = {ap}", tuple(witnesses))
        q = p * p
        while q <= N:
            checked += 1
            if f.a(q) == 0:
                return CheckResult("nonvanishing", False, checked, (q, 0),
                                   f"a({q}) vanishes", tuple(witnesses))
            q *= p
    return CheckResult("nonvanishing", True, checked, witnesses=tuple(witnesses))


# ─── Class number three: Q(sqrt(-23)) ─────────────────────────────────

@dataclass(frozen=True)
class H3Solution:
    a_cubic: Tuple[int, ...]
    b_cubic: Tuple[int, ...]
    linear_relation: Tuple[int, ...]       # (k_b, k_a2, k_a1, k_a0): k_b b = k_a2 a^2 + k_a1 a + k_a0
    a_roots: Tuple[float, ...]
    b_roots: Tuple[float, ...]
    pairing: Tuple[Tuple[int, int], ...]   # (i, j): A_{i+1} with B_{j+1}
    residuals: Tuple[Tuple[float, float, float], ...]
    eigenforms: Tuple[Eigenform, ...] = ()


def h3_basis(N: int) -> Tuple[QSeries, QSeries, QSeries]:
    """
    S0 = (1/2) Theta_{L_o, x^2-y^2}
    S1 = 2 Theta_{L_a1, x^2-y^2}
    S2 = (4/sqrt(23)) Theta_{L_a2, xy}
    """
    K = field_from_d(CLASS_NUMBER_THREE_CASE)
    Lo, La1, La2 = (lattice_for_class(K, i) for i in range(3))
    S0 = weighted_theta(Lo, Harmonic.X2_Y2, N).rational_part().scale(Fraction(1, 2))
    S1 = weighted_theta(La1, Harmonic.X2_Y2, N).rational_part().scale(2)
    S2 = weighted_theta(La2, Harmonic.XY, N).sqrt_part().scale(4)
    return S0, S1, S2


def _primitive(expr, gen) -> Poly:
    poly = Poly(expr, gen).clear_denoms()[1].primitive()[1]
    return -poly if poly.LC() < 0 else poly


def _real_roots(coeffs: Tuple[int, ...]) -> Tuple[float, ...]:
    c = np.array(coeffs, dtype=float)
    bound = 1.0 + float(np.max(np.abs(c[1:] / c[0])))
    grid = np.linspace(-bound, bound, 20001)
    values = np.polyval(c, grid)
    roots = []
    for x0, x1, y0, y1 in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if y0 == 0:
            roots.append(float(x0))
        elif y0 * y1 < 0:
            roots.append(brentq(lambda x: np.polyval(c, x), x0, x1, xtol=1e-15))
    scale = float(np.sum(np.abs(c)))
    for r in roots:
        if abs(np.polyval(c, r)) > H3_ROOT_TOL * scale * max(1.0, abs(r)) ** (len(c) - 1):
            raise EigenformError(f"root {r} of {coeffs} fails the residual check")
    if len(roots) != len(c) - 1:
        raise EigenformError(f"{coeffs}: found {len(roots)} real roots")
    return tuple(sorted(roots))


def h3_eigenforms(N: int = 50) -> H3Solution:
    """
    Solve f = S0 + a S1 + b S2 for the normalized eigenforms of Q(sqrt(-23))
    using the relations at p = 2, p = 3 and the pair (2, 3).
    """
    if N < 9:
        raise EigenformError(f"the relations need coefficients through q^9, got N={N}")
    K = field_from_d(CLASS_NUMBER_THREE_CASE)
    S0, S1, S2 = h3_basis(N)
    rows = np.array([[float(S[m]) for m in range(1, N + 1)] for S in (S0, S1, S2)])
    if np.linalg.matrix_rank(rows) < 3:
        raise EigenformError(f"basis series are linearly dependent up to q^{N}")

    a, b = symbols("a b")

    def f(n):
        return sum(Rational(str(Fraction(S[n]))) * x for S, x in ((S0, 1), (S1, a), (S2, b)))

    def tw(p):
        return kronecker_symbol(K.d_K, p) * p ** (WEIGHT - 1)

    relations = [
        f(4) - f(2) ** 2 + tw(2) * f(1),
        f(9) - f(3) ** 2 + tw(3) * f(1),
        f(6) - f(2) * f(3),
    ]
    basis_ab = groebner(relations, b, a, order="lex")
    basis_ba = groebner(relations, a, b, order="lex")
    a_poly = _primitive(next(g for g in basis_ab.exprs if g.free_symbols == {a}), a)
    b_poly = _primitive(next(g for g in basis_ba.exprs if g.free_symbols == {b}), b)
    linear = next(g for g in basis_ab.exprs if Poly(g, b).degree() == 1)
    lin_poly = Poly(linear, b, a).clear_denoms()[1].primitive()[1]
    k_b = int(lin_poly.coeff_monomial(b))
    sign = 1 if k_b > 0 else -1
    linear_relation = (sign * k_b,) + tuple(
        -sign * int(lin_poly.coeff_monomial(a ** i)) for i in (2, 1, 0))

    a_cubic = tuple(int(x) for x in a_poly.all_coeffs())
    b_cubic = tuple(int(x) for x in b_poly.all_coeffs())
    a_roots = _real_roots(a_cubic)
    b_roots = _real_roots(b_cubic)
    logger.info(f"[h3] a-cubic {a_cubic} roots {a_roots}")
    logger.info(f"[h3] b-cubic {b_cubic} roots {b_roots}")

    pairing, residuals = [], []
    for i, A in enumerate(a_roots):
        for j, B in enumerate(b_roots):
            res = tuple(abs(float(r.subs({a: A, b: B}))) for r in relations)
            logger.debug(f"[h3] pair (A{i + 1}, B{j + 1}) residuals {res}")
            if max(res) < H3_PAIR_TOL:
                pairing.append((i, j))
                residuals.append(res)
    if len(pairing) != len(a_roots):
        raise EigenformError(f"expected {len(a_roots)} root pairs, found {pairing}")

    levels = tuple(modular_level(lattice_for_class(K, i)) for i in range(3))
    forms = []
    for i, j in pairing:
        A, B = a_roots[i], b_roots[j]
        coeffs = {m: float(S0[m]) + A * float(S1[m]) + B * float(S2[m]) for m in range(N + 1)}
        forms.append(Eigenform(K, QSeries(N, coeffs), exact=False, variant=i + 1,
                               theta_levels=levels))
    return H3Solution(a_cubic, b_cubic, linear_relation, a_roots, b_roots,
                      tuple(pairing), tuple(residuals), tuple(forms))


def h3_character_values() -> List[Tuple[complex, float, float]]:
    """
    Cube roots alpha of (-7 + 3 sqrt(-23)) / 2, the possible values of phi on
    the prime P2 = (2, (-1 + sqrt(-23)) / 2), with the implied a(2) and a(3),
    sorted by a(2).

    P2 times its conjugate is (2), so a(2) = alpha + 4 / alpha. P2 times
    P3 = (3, (1 - sqrt(-23)) / 2) is ((1 - sqrt(-23)) / 2), whose phi value is
    its square (-11 - sqrt(-23)) / 2; with beta = phi(P3) this gives
    a(3) = beta + 9 / beta.
    """
    root = math.sqrt(23)
    w = complex(-3.5, 1.5 * root)
    r, theta = abs(w) ** (1 / 3), cmath.phase(w)
    alphas = [cmath.rect(r, (theta + 2 * math.pi * k) / 3) for k in range(3)]
    values = []
    for al in alphas:
        beta = complex(-5.5, -0.5 * root) / al
        values.append((al, (al + 4 / al).real, (beta + 9 / beta).real))
    return sorted(values, key=lambda t: t[1])
