"""
Reference data: field lists, the ideal / coefficient tables and the printed
q-expansions kept under modules/data with their SHA-256 checksums.
"""
import hashlib
import logging
import re
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict

from modules.qfield import BinaryForm, field_from_d
from modules.qseries import QSeries, parse_qseries

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"


class FixtureError(ValueError):
    """Fixture file missing, corrupted or unparsable."""


# ─── Field lists ──────────────────────────────────────────────────────

CLASS_NUMBER_ONE_ALL = (1, 2, 3, 7, 11, 19, 43, 67, 163)
CLASS_NUMBER_ONE = (2, 7, 11, 19, 43, 67, 163)
CLASS_NUMBER_TWO = (5, 6, 10, 13, 15, 22, 35, 37, 51, 58, 91, 115, 123, 187, 235, 267, 403, 427)
CLASS_NUMBER_THREE_CASE = 23


# ─── Ideal counts per norm ────────────────────────────────────────────

IDEAL_COUNTS = {
    2: {1: 1, 2: 1, 3: 2, 4: 1},
    5: {1: 1, 2: 1, 3: 2, 4: 1, 5: 1, 6: 2},
}

IDEAL_COUNTS_D23 = {1: 1, 2: 2, 3: 2, 4: 3, 5: 0, 6: 4, 7: 0, 8: 4, 9: 3, 10: 0}


# ─── Eigenform coefficients for class number two ─────────────────────

C1 = Fraction(1, 2)

EIGENFORM_COEFFICIENTS = {d: (C1, Fraction(1, 2)) for d in CLASS_NUMBER_TWO}
EIGENFORM_COEFFICIENTS.update({
    15: (C1, Fraction(2)),
    35: (C1, Fraction(3)),
    91: (C1, Fraction(5, 3)),
    187: (C1, Fraction(7, 3)),
    403: (C1, Fraction(11, 9)),
})

# d -> (smallest ramified prime m represented by the nonprincipal class, b(m))
RAMIFIED_COEFFICIENTS = {
    5: (2, 2), 6: (2, 2), 10: (2, 2), 13: (2, 2), 15: (3, -3), 22: (2, 2),
    35: (5, -5), 37: (2, 2), 51: (3, 3), 58: (2, 2), 91: (7, -7), 115: (5, -5),
    123: (3, 3), 187: (11, -11), 235: (5, 5), 267: (3, 3), 403: (13, -13), 427: (7, 7),
}


# ─── Lattice bases ────────────────────────────────────────────────────
# [A, B] with B = r + sqrt(-d) or (r + sqrt(-d)) / 2 when half is set

BASES_CLASS_NUMBER_ONE = {d: (1, 0, False) if d in (1, 2) else (1, 1, True) for d in CLASS_NUMBER_ONE_ALL}

BASES_CLASS_NUMBER_TWO = {
    5: (2, 1, False), 6: (2, 0, False), 10: (2, 0, False), 13: (2, 1, False),
    15: (2, 1, True), 22: (2, 0, False), 35: (3, 1, True), 37: (2, 1, False),
    51: (3, 3, True), 58: (2, 0, False), 91: (5, 3, True), 115: (5, 5, True),
    123: (3, 3, True), 187: (7, 3, True), 235: (5, 5, True), 267: (3, 3, True),
    403: (11, 9, True), 427: (7, 7, True),
}


def basis_form(d: int, basis) -> BinaryForm:
    """Norm form N(xA + yB) / A of the ideal with Z-basis [A, B]."""
    A, r, half = basis
    b = r if half else 2 * r
    d_K = field_from_d(d).d_K
    return BinaryForm(A, b, (b * b - d_K) // (4 * A))


# ─── Printed q-expansions ─────────────────────────────────────────────

FIXTURES = {
    "d5_series": ("d5_series.txt", 500,
                      "e930105c3939d8d392ffaacf2aff48b3798ae1c18a894d16e4ecb2c28f34ef92"),
    "d23_series": ("d23_series.txt", 100,
                     "4285566689c45fe7d1f03699b45be2def90ffee2a32f8dd6ee52dccca27a542c"),
    "d23_eigenforms": ("d23_eigenforms.txt", 50,
                                "0b67a1457a02eca35d2061238f82e817667cd7d350097c92a26c81f4862f646a"),
}

_HEADER = re.compile(r"^\[(\w+)\]$")


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Dict[str, QSeries]:
    """Named series of a fixture file, checksum verified before parsing."""
    if name not in FIXTURES:
        raise FixtureError(f"unknown fixture {name!r}")
    filename, order, digest = FIXTURES[name]
    path = DATA_DIR / filename
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise FixtureError(f"cannot read {path}: {e}") from e
    actual = hashlib.sha256(raw).hexdigest()
    if actual != digest:
        raise FixtureError(f"{filename}: checksum {actual} != {digest}")

    series: Dict[str, QSeries] = {}
    current = None
    for line in raw.decode("utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        header = _HEADER.match(line)
        if header:
            current = header.group(1)
            series[current] = QSeries(order)
            continue
        if current is None:
            raise FixtureError(f"{filename}: series text before any [name] header")
        try:
            series[current] = series[current] + parse_qseries(line, order)
        except ValueError as e:
            raise FixtureError(f"{filename} [{current}]: {e}") from e
    logger.debug(f"[reference] loaded {filename}: {sorted(series)}")
    return series
