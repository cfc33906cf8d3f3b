"""
Design Scanner: sweep every reduced binary form down to a discriminant bound
and report the shells that are spherical 2-designs or better.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional

import pandas as pd

from modules.design import DEFAULT_STRENGTH_CAP, fisher_bound, max_strength
from modules.lattice import IdealLattice, shell_table
from modules.qfield import BinaryForm, reduced_forms

logger = logging.getLogger(__name__)

MAX_WORKERS = 8

REPORT_COLUMNS = ["disc", "a", "b", "c", "m", "shell_size", "max_strength", "trichotomy_tag"]

TAG_HEXAGONAL = "k^2*(-3)"
TAG_SQUARE = "k^2*(-4)"
TAG_OTHER = "other"


def trichotomy_tag(disc: int) -> str:
    for base, tag in ((3, TAG_HEXAGONAL), (4, TAG_SQUARE)):
        if -disc % base == 0:
            k = math.isqrt(-disc // base)
            if k * k * base == -disc:
                return tag
    return TAG_OTHER


def _forms_down_to(disc_min: int) -> List[BinaryForm]:
    forms = []
    for disc in range(-3, disc_min - 1, -1):
        if disc % 4 in (0, 1):
            forms.extend(reduced_forms(disc, primitive_only=False))
    return forms


def _scan_one(form: BinaryForm, norm_bound: int, strength_cap: int) -> List[dict]:
    """Rows for one form: every nonempty shell m <= norm_bound with t* >= 2."""
    L = IdealLattice(form, "scan")
    table = shell_table(L, norm_bound).iloc[1:]
    nonempty = table[table["count"] > 0]
    candidates = nonempty[(nonempty["p2a_num"] == 0) & (nonempty["p2b_num"] == 0)]

    # ── Fisher bound: a 2-design needs at least 3 points ──
    too_small = candidates[candidates["count"] < fisher_bound(2, 2)]
    if not too_small.empty:
        raise AssertionError(f"{form}: shells {list(too_small.index)} beat the Fisher bound")

    tag = trichotomy_tag(form.discriminant)
    rows = []
    for m in candidates.index:
        verdict = max_strength(L, int(m), strength_cap)
        rows.append({
            "disc": form.discriminant, "a": form.a, "b": form.b, "c": form.c,
            "m": int(m), "shell_size": verdict.shell_size,
            "max_strength": verdict.max_strength, "trichotomy_tag": tag,
        })
    return rows


def scan_forms(disc_min: int, norm_bound: int,
               strength_cap: int = DEFAULT_STRENGTH_CAP,
               max_workers: int = MAX_WORKERS,
               progress_callback: Optional[Callable[[int, int], None]] = None) -> pd.DataFrame:
    """
    Scan all reduced forms with disc_min <= b^2 - 4ac < 0, non-primitive ones
    included. Rows are sorted by |disc|, then form, then m, whatever order the
    workers finish in.
    """
    if disc_min > -3 or norm_bound < 1 or strength_cap < 1:
        raise ValueError("need disc_min <= -3, norm_bound >= 1 and strength_cap >= 1")
    forms = _forms_down_to(disc_min)
    logger.info(f"[scan] {len(forms)} forms, disc >= {disc_min}, m <= {norm_bound}")

    rows: List[dict] = []
    done = 0
    with ThreadPoolExecutor(max_workers=max_workers) as ex:
        future_map = {ex.submit(_scan_one, f, norm_bound, strength_cap): f for f in forms}
        for future in as_completed(future_map):
            done += 1
            if progress_callback:
                progress_callback(done, len(forms))
            try:
                rows.extend(future.result())
            except AssertionError:
                raise
            except Exception as e:
                logger.warning(f"[scan] {future_map[future]} failed: {e}")

    if not rows:
        return pd.DataFrame(columns=REPORT_COLUMNS)
    df = pd.DataFrame(rows, columns=REPORT_COLUMNS)
    df = df.sort_values(["disc", "a", "b", "c", "m"], ascending=[False, True, True, True, True])
    return df.reset_index(drop=True)


def summarize_conjecture(report: pd.DataFrame, disc_min: int, norm_bound: int) -> pd.DataFrame:
    """
    Per-form evidence for the design trichotomy on the scanned range:

    k^2*(-3): no 6-designs, some 4-designs, all shells 4-designs only for disc -3
    k^2*(-4): no 4-designs, some 2-designs, all shells 2-designs only for disc -4
    other   : no 2-designs
    """
    out = []
    for form in _forms_down_to(disc_min):
        L = IdealLattice(form, "scan")
        table = shell_table(L, norm_bound).iloc[1:]
        nonempty = int((table["count"] > 0).sum())
        rows = report[(report["disc"] == form.discriminant) & (report["a"] == form.a)
                      & (report["b"] == form.b) & (report["c"] == form.c)]
        strengths = rows["max_strength"]
        four = int((strengths >= 4).sum())
        two = int((strengths >= 2).sum())
        tag = trichotomy_tag(form.discriminant)
        # scaled copies of A_2 and Z^2 count as those lattices
        g = math.gcd(form.a, form.b, form.c)
        base_disc = form.discriminant // (g * g)
        if tag == TAG_HEXAGONAL:
            ok = (strengths < 6).all() and four > 0 and (four < nonempty or base_disc == -3)
        elif tag == TAG_SQUARE:
            ok = (strengths < 4).all() and two > 0 and (two < nonempty or base_disc == -4)
        else:
            ok = two == 0
        out.append({
            "disc": form.discriminant, "a": form.a, "b": form.b, "c": form.c,
            "trichotomy_tag": tag, "nonempty_shells": nonempty,
            "two_designs": two, "four_designs": four,
            "max_strength": int(strengths.max()) if two else None,
            "consistent": bool(ok),
        })
    return pd.DataFrame(out)
