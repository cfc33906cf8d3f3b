import pytest

from modules.design import (EmptyShellError, fisher_bound, is_antipodal, is_t_design,
                            max_strength)
from modules.lattice import IdealLattice, lattice_for_class
from modules.qfield import BinaryForm, field_from_d

SQUARE = IdealLattice(BinaryForm(1, 0, 1), "toy")
HEXAGONAL = IdealLattice(BinaryForm(1, 1, 1), "toy")


@pytest.mark.parametrize("n,t,expected", [(2, 2, 3), (2, 3, 4), (2, 4, 5), (2, 5, 6), (3, 2, 4), (3, 3, 6)])
def test_fisher_bound(n, t, expected):
    assert fisher_bound(n, t) == expected


def test_fisher_bound_needs_sane_arguments():
    with pytest.raises(ValueError):
        fisher_bound(1, 2)


def test_antipodal():
    assert is_antipodal([(1, 0), (-1, 0)])
    assert not is_antipodal([(1, 0), (0, 1)])


@pytest.mark.parametrize("m", [1, 2, 5, 25, 65])
def test_square_lattice_shells_have_strength_three(m):
    verdict = max_strength(SQUARE, m)
    assert verdict.max_strength == 3
    assert verdict.failing_degree == 4


@pytest.mark.parametrize("m", [1, 3, 7, 49])
def test_hexagonal_lattice_shells_have_strength_five(m):
    verdict = max_strength(HEXAGONAL, m)
    assert verdict.max_strength == 5
    assert not verdict.is_design


def test_is_t_design_restricts_degrees():
    assert is_t_design(SQUARE, 1, 2).is_design
    assert is_t_design(SQUARE, 1, 3).is_design
    verdict = is_t_design(SQUARE, 1, 4)
    assert not verdict.is_design
    assert verdict.failing_degree == 4


def test_two_point_shell_is_not_a_design():
    L = lattice_for_class(field_from_d(2), 0)
    verdict = is_t_design(L, 1, 2)
    assert verdict.shell_size == 2
    assert not verdict.is_design
    assert not verdict.supports(2)


def test_empty_shell():
    with pytest.raises(EmptyShellError):
        max_strength(SQUARE, 3)


def test_cap_and_strength_validation():
    with pytest.raises(ValueError):
        max_strength(SQUARE, 1, cap=0)
    with pytest.raises(ValueError):
        is_t_design(SQUARE, 1, 0)


@pytest.mark.parametrize("form,image", [
    (BinaryForm(2, 2, 3), BinaryForm(3, -2, 2)),
    (BinaryForm(1, 0, 1), BinaryForm(1, 2, 2)),
    (BinaryForm(1, 1, 1), BinaryForm(1, -1, 1)),
    (BinaryForm(1, 1, 6), BinaryForm(6, 1, 1)),
])
def test_strength_is_unchanged_under_equivalent_forms(form, image):
    L, M = IdealLattice(form, "toy"), IdealLattice(image, "toy")
    norms = [m for m in range(1, 61) if form.represents(m)]
    assert norms == [m for m in range(1, 61) if image.represents(m)]
    for m in norms:
        v, w = max_strength(L, m), max_strength(M, m)
        assert (v.shell_size, v.max_strength) == (w.shell_size, w.max_strength), m
