"""
Spherical t-design certification for lattice shells in dimension 2.

Harm_j(R^2) is spanned by Re and Im of (x+iy)^j, so a shell is a t-design
exactly when the power sums of (x+iy)^j vanish for 1 <= j <= t.
"""
import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from modules.lattice import IdealLattice, power_sum_numerators, shell

logger = logging.getLogger(__name__)

DEFAULT_STRENGTH_CAP = 12


class EmptyShellError(ValueError):
    """The design property is undefined on an empty shell."""


@dataclass(frozen=True)
class DesignVerdict:
    m: int
    shell_size: int
    max_strength: int
    failing_degree: Optional[int]
    cap: int

    @property
    def is_design(self) -> bool:
        """True when no harmonic degree up to cap fails."""
        return self.failing_degree is None

    def supports(self, t: int) -> bool:
        return t <= self.max_strength


def fisher_bound(n: int, t: int) -> int:
    """Smallest possible size of a spherical t-design on S^{n-1}."""
    if n < 2 or t < 1:
        raise ValueError(f"need n >= 2 and t >= 1, got n={n} t={t}")
    s = t // 2
    if t % 2 == 0:
        return comb(n - 1 + s, s) + comb(n + s - 2, s - 1)
    return 2 * comb(n - 1 + s, s)


def is_antipodal(points: List[Tuple[int, int]]) -> bool:
    pts = set(points)
    return all((-u, -v) in pts for u, v in pts)


def _strength(L: IdealLattice, m: int, cap: int) -> DesignVerdict:
    points = shell(L, m)
    if not points:
        raise EmptyShellError(f"shell m={m} of {L} is empty")
    antipodal = is_antipodal(points)
    for j in range(1, cap + 1):
        if antipodal and j % 2:
            continue
        if power_sum_numerators(points, L.form, j) != (0, 0):
            return DesignVerdict(m, len(points), j - 1, j, cap)
    return DesignVerdict(m, len(points), cap, None, cap)


def is_t_design(L: IdealLattice, m: int, t: int) -> DesignVerdict:
    """Verdict restricted to degrees 1..t; `.is_design` answers the query."""
    if t < 1:
        raise ValueError(f"strength must be >= 1, got {t}")
    verdict = _strength(L, m, t)
    if verdict.shell_size < fisher_bound(2, t) and verdict.is_design:
        raise AssertionError(f"shell m={m} of {L} beats the Fisher bound at t={t}")
    return verdict


def max_strength(L: IdealLattice, m: int, cap: int = DEFAULT_STRENGTH_CAP) -> DesignVerdict:
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    verdict = _strength(L, m, cap)
    logger.debug(f"[design] {L} m={m} size={verdict.shell_size} t*={verdict.max_strength}")
    return verdict
