"""
Imaginary quadratic fields Q(sqrt(-d)): discriminants, Kronecker symbol,
prime splitting, ideal counting and the reduced-form class group.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple

from sympy import factorint, isprime, jacobi_symbol

logger = logging.getLogger(__name__)


class FieldError(ValueError):
    """Invalid field parameter (d not square-free, p not prime, ...)."""


class RingCase(Enum):
    TWO_THREE_MOD_4 = "-d = 2,3 (mod 4)"
    ONE_MOD_4 = "-d = 1 (mod 4)"


class SplitType(Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


# ─── Binary quadratic forms ───────────────────────────────────────────

@dataclass(frozen=True, order=True)
class BinaryForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.c <= 0 or self.discriminant >= 0:
            raise FieldError(f"form {self} is not positive definite")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        return b >= 0 if (abs(b) == a or a == c) else True

    @property
    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    def __call__(self, u: int, v: int) -> int:
        return self.a * u * u + self.b * u * v + self.c * v * v

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"

    def solutions(self, m: int) -> List[Tuple[int, int]]:
        """All (u, v) with f(u, v) = m, lexicographically ordered."""
        if m < 0:
            return []
        if m == 0:
            return [(0, 0)]
        a, b = self.a, self.b
        D = -self.discriminant
        vmax = math.isqrt(4 * a * m // D)
        found = set()
        # 4a f(u,v) = (2au + bv)^2 + D v^2
        for v in range(-vmax, vmax + 1):
            rest = 4 * a * m - D * v * v
            if rest < 0:
                continue
            s = math.isqrt(rest)
            if s * s != rest:
                continue
            for t in (s, -s):
                num = t - b * v
                if num % (2 * a) == 0:
                    found.add((num // (2 * a), v))
        return sorted(found)

    def represents(self, m: int) -> bool:
        return bool(self.solutions(m))


def reduced_forms(disc: int, primitive_only: bool = True) -> List[BinaryForm]:
    """
    Reduced positive definite forms of discriminant disc, principal form first
    then by (a, b). With primitive_only=False non-primitive forms are kept
    (the scanner wants every 2-D lattice, not just class group members).
    """
    if disc >= 0 or disc % 4 not in (0, 1):
        raise FieldError(f"{disc} is not a negative discriminant")
    forms = []
    for a in range(1, math.isqrt(-disc // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if primitive_only and math.gcd(a, b, c) != 1:
                continue
            forms.append(BinaryForm(a, b, c))
    return sorted(forms, key=lambda f: (f.a, f.b))


# ─── Fields ───────────────────────────────────────────────────────────

@dataclass(frozen=True)
class QuadField:
    d: int
    d_K: int
    ring_case: RingCase
    forms: Tuple[BinaryForm, ...]

    @property
    def class_number(self) -> int:
        return len(self.forms)

    @property
    def radicand(self) -> int:
        return -self.d_K

    @property
    def principal_form(self) -> BinaryForm:
        return self.forms[0]

    def __str__(self):
        return f"Q(sqrt(-{self.d}))"


def is_square_free(n: int) -> bool:
    if n < 1:
        return False
    return all(e == 1 for e in factorint(n).values())


def fundamental_discriminant(d: int) -> int:
    return -d if (-d) % 4 == 1 else -4 * d


@lru_cache(maxsize=None)
def field_from_d(d: int) -> QuadField:
    if not is_square_free(d):
        raise FieldError(f"d={d} must be a positive square-free integer")
    d_K = fundamental_discriminant(d)
    case = RingCase.ONE_MOD_4 if (-d) % 4 == 1 else RingCase.TWO_THREE_MOD_4
    forms = tuple(reduced_forms(d_K))
    logger.debug(f"[qfield] d={d} d_K={d_K} h={len(forms)}")
    return QuadField(d=d, d_K=d_K, ring_case=case, forms=forms)


# ─── Characters and splitting ─────────────────────────────────────────

def _kronecker_at_two(d_K: int) -> int:
    if d_K % 2 == 0:
        return 0
    return 1 if d_K % 8 in (1, 7) else -1


def kronecker_symbol(d_K: int, n: int) -> int:
    """(d_K / n) for n >= 1; Jacobi on the odd part, fixed value at 2."""
    if n < 1:
        raise FieldError(f"kronecker symbol needs n >= 1, got {n}")
    e = (n & -n).bit_length() - 1
    odd = n >> e
    value = jacobi_symbol(d_K % odd, odd) if odd > 1 else 1
    if e:
        value *= _kronecker_at_two(d_K) ** e
    return int(value)


def prime_splitting(K: QuadField, p: int) -> SplitType:
    if not isprime(p):
        raise FieldError(f"{p} is not prime")
    if K.d_K % p == 0:
        return SplitType.RAMIFIED
    if p == 2:
        return SplitType.SPLIT if K.d_K % 8 == 1 else SplitType.INERT
    return SplitType.SPLIT if kronecker_symbol(K.d_K, p) == 1 else SplitType.INERT


def _local_count(kind: SplitType, e: int) -> int:
    if kind is SplitType.SPLIT:
        return e + 1
    if kind is SplitType.INERT:
        return (1 + (-1) ** e) // 2
    return 1


def ideal_count(K: QuadField, n: int) -> int:
    """Number of integral ideals of norm n."""
    if n < 1:
        raise FieldError(f"norm must be positive, got {n}")
    total = 1
    for p, e in factorint(n).items():
        total *= _local_count(prime_splitting(K, p), e)
        if total == 0:
            break
    return total


# ─── Norm representations ─────────────────────────────────────────────

class NormRepresentation(NamedTuple):
    a: int
    b: int
    half: bool  # True: 4n = a^2 + d b^2 with a, b odd


def _pairs(target: int, d: int) -> List[Tuple[int, int]]:
    # (a, b) with a^2 + d b^2 = target, one of each +-(a, b)
    out = []
    for b in range(0, math.isqrt(target // d) + 1):
        rest = target - d * b * b
        a = math.isqrt(rest)
        if a * a != rest:
            continue
        if a == 0:
            out.append((0, b))
        elif b == 0:
            out.append((a, 0))
        else:
            out.extend([(a, b), (a, -b)])
    return out


def principal_norm_representations(K: QuadField, n: int) -> List[NormRepresentation]:
    """
    Generators of the principal ideals of norm n, one per ideal (a,b) ~ (-a,-b).
    For -d = 1 (mod 4) the half-integral generators (a + b sqrt(-d))/2 with
    a, b both odd are tagged half=True.
    """
    if n < 1:
        raise FieldError(f"norm must be positive, got {n}")
    reps = [NormRepresentation(a, b, False) for a, b in _pairs(n, K.d)]
    if K.ring_case is RingCase.ONE_MOD_4:
        reps += [NormRepresentation(a, b, True) for a, b in _pairs(4 * n, K.d)
                 if a % 2 and b % 2]
    return sorted(reps)


def nonprincipal_norm_representations(K: QuadField, n: int, m: int) -> List[NormRepresentation]:
    """Generators of the principal ideals of norm m*n (the products J*A with N(J)=m)."""
    return principal_norm_representations(K, m * n)


def class_index_of_norm(K: QuadField, n: int) -> Optional[int]:
    """Index of the first class whose form represents n, None when no class does."""
    if n == 1:
        return 0
    for i, form in enumerate(K.forms):
        if form.represents(n):
            return i
    return None


def ramified_nonprincipal_prime(K: QuadField) -> Optional[int]:
    """Smallest prime p | d_K that is the norm of an ideal outside the principal class."""
    for p in sorted(factorint(-K.d_K)):
        idx = class_index_of_norm(K, p)
        if idx is not None and idx != 0:
            return p
    return None
