import pytest

from modules.scanner import (REPORT_COLUMNS, TAG_HEXAGONAL, TAG_OTHER, TAG_SQUARE, scan_forms,
                             summarize_conjecture, trichotomy_tag)


@pytest.mark.parametrize("disc,tag", [
    (-3, TAG_HEXAGONAL), (-12, TAG_HEXAGONAL), (-27, TAG_HEXAGONAL), (-48, TAG_HEXAGONAL),
    (-4, TAG_SQUARE), (-16, TAG_SQUARE), (-36, TAG_SQUARE),
    (-7, TAG_OTHER), (-8, TAG_OTHER), (-20, TAG_OTHER), (-23, TAG_OTHER),
])
def test_trichotomy_tag(disc, tag):
    assert trichotomy_tag(disc) == tag


@pytest.fixture(scope="module")
def small_scan():
    return scan_forms(-40, 40, max_workers=4)


def test_scan_report_shape_and_order(small_scan):
    assert list(small_scan.columns) == REPORT_COLUMNS
    first = small_scan.iloc[0]
    assert (first["disc"], first["a"], first["b"], first["c"], first["m"]) == (-3, 1, 1, 1, 1)
    assert first["shell_size"] == 6
    assert first["max_strength"] == 5
    assert small_scan["disc"].is_monotonic_decreasing


def test_scan_finds_designs_only_on_square_and_hexagonal_discriminants(small_scan):
    assert set(small_scan["trichotomy_tag"]) <= {TAG_HEXAGONAL, TAG_SQUARE}
    assert (small_scan["shell_size"] >= 3).all()
    assert (small_scan["max_strength"] >= 2).all()


def test_scan_counts_progress():
    calls = []
    scan_forms(-8, 10, progress_callback=lambda done, total: calls.append((done, total)))
    assert calls[-1][0] == calls[-1][1]


def test_conjecture_summary_is_consistent(small_scan):
    summary = summarize_conjecture(small_scan, -40, 40)
    assert summary["consistent"].all()
    hexagonal = summary[summary["disc"] == -3].iloc[0]
    assert hexagonal["four_designs"] == hexagonal["nonempty_shells"]
    other = summary[summary["trichotomy_tag"] == TAG_OTHER]
    assert (other["two_designs"] == 0).all()


@pytest.fixture(scope="module")
def wide_scan():
    return scan_forms(-48, 500, max_workers=4)


def test_trichotomy_holds_through_discriminant_minus_48(wide_scan):
    summary = summarize_conjecture(wide_scan, -48, 500)
    assert summary["disc"].min() == -48
    assert summary["consistent"].all()
    assert set(wide_scan["trichotomy_tag"]) <= {TAG_HEXAGONAL, TAG_SQUARE}
    assert (wide_scan["max_strength"] < 6).all()
    hexagonal = summary[summary["trichotomy_tag"] == TAG_HEXAGONAL]
    assert (hexagonal["four_designs"] > 0).all()


def test_scan_validates_bounds():
    with pytest.raises(ValueError):
        scan_forms(-2, 10)
    with pytest.raises(ValueError):
        scan_forms(-20, 0)
