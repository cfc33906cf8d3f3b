from fractions import Fraction

import pytest
from sympy import primerange

from modules.hecke import (EigenformError, check_multiplicativity, derive_c1_c2, eigenform,
                           eigenform_h1, eigenform_h2, h3_character_values, h3_eigenforms,
                           hecke_extend, hecke_relations, ideal_character_sum, nonvanishing_scan,
                           ramanujan_check, sine_formula_check, smallest_prime_factors,
                           variant_sign)
from modules.qfield import SplitType, field_from_d, ideal_count, kronecker_symbol, prime_splitting
from modules.qseries import QSeries, format_qseries
from modules.reference import (CLASS_NUMBER_ONE, CLASS_NUMBER_TWO, EIGENFORM_COEFFICIENTS,
                               RAMIFIED_COEFFICIENTS, load_fixture)


def test_smallest_prime_factors():
    assert smallest_prime_factors(10).tolist() == [0, 0, 2, 3, 2, 5, 2, 7, 2, 3, 2]


def test_hecke_relations():
    assert list(hecke_relations(12)) == [
        ("power", 4, 2, 2), ("pair", 6, 2, 3), ("power", 8, 2, 3),
        ("power", 9, 3, 2), ("pair", 10, 2, 5), ("pair", 12, 3, 4),
    ]


def test_d2_eigenform_leading_terms():
    f = eigenform_h1(field_from_d(2), 9)
    assert format_qseries(f.coeffs) == "q - 2*q^2 - 2*q^3 + 4*q^4 + 4*q^6 - 8*q^8 - 5*q^9"
    assert f.level == 8


@pytest.mark.parametrize("d", [1, 3, 5])
def test_eigenform_h1_rejects_other_fields(d):
    with pytest.raises(EigenformError):
        eigenform_h1(field_from_d(d), 10)


@pytest.mark.parametrize("d", CLASS_NUMBER_ONE)
def test_class_number_one_eigenforms_are_hecke(d):
    f = eigenform(field_from_d(d), 300)
    assert check_multiplicativity(f).passed
    assert ramanujan_check(f).passed


@pytest.mark.parametrize("d", CLASS_NUMBER_TWO)
def test_derived_coefficients_match_table(d):
    assert derive_c1_c2(field_from_d(d)) == EIGENFORM_COEFFICIENTS[d]


@pytest.mark.parametrize("d,N", [(403, 50), (403, 100), (427, 10), (5, 1)])
def test_c2_derivation_reaches_the_nonprincipal_square(d, N):
    assert derive_c1_c2(field_from_d(d), N) == EIGENFORM_COEFFICIENTS[d]


def test_variant_sign():
    assert variant_sign(field_from_d(5)) == 1
    assert variant_sign(field_from_d(15)) == 1
    assert variant_sign(field_from_d(115)) == -1


@pytest.mark.parametrize("d", CLASS_NUMBER_TWO)
def test_class_number_two_eigenforms(d):
    K = field_from_d(d)
    m, b = RAMIFIED_COEFFICIENTS[d]
    for variant in (1, 2):
        f = eigenform_h2(K, 150, variant)
        assert f.a(1) == 1
        assert check_multiplicativity(f).passed
        assert ramanujan_check(f).passed
    assert eigenform_h2(K, m).a(m) == b
    assert eigenform_h2(K, m, 2).a(m) == -b


def test_d5_eigenform_matches_printed_series():
    printed = load_fixture("d5_series")["eigenform"]
    assert eigenform_h2(field_from_d(5), 100).coeffs == printed.truncate(100)


def test_eigenform_h2_argument_checks():
    with pytest.raises(EigenformError):
        eigenform_h2(field_from_d(2), 10)
    with pytest.raises(EigenformError):
        eigenform_h2(field_from_d(5), 10, variant=3)
    with pytest.raises(EigenformError):
        eigenform(field_from_d(23), 10)


def test_d2_character_sum_witness():
    assert ideal_character_sum(field_from_d(2), 11) == 14


@pytest.mark.parametrize("d", CLASS_NUMBER_ONE)
def test_character_sums_give_the_h1_eigenform(d):
    K = field_from_d(d)
    f = eigenform_h1(K, 80)
    assert all(ideal_character_sum(K, n) == f.a(n) for n in range(1, 81))


@pytest.mark.parametrize("d", [5, 6, 15, 35, 115])
def test_character_sums_give_the_h2_eigenforms(d):
    K = field_from_d(d)
    N = 80
    by_sign = {tuple(ideal_character_sum(K, n, sign) for n in range(1, N + 1)) for sign in (1, -1)}
    by_variant = {tuple(eigenform_h2(K, N, v).a(n) for n in range(1, N + 1)) for v in (1, 2)}
    assert by_sign == by_variant


def test_hecke_extend_rebuilds_the_series():
    K = field_from_d(7)
    f = eigenform_h1(K, 200)
    primes = {int(p): f.a(int(p)) for p in primerange(2, 201)}
    assert hecke_extend(primes, f.chi, 3, 200) == f.coeffs


def test_hecke_extend_needs_every_prime():
    with pytest.raises(EigenformError):
        hecke_extend({2: 1}, lambda p: 1, 3, 5)


def test_multiplicativity_witness_on_a_broken_series():
    f = eigenform_h1(field_from_d(2), 30)
    broken = f.with_coeffs(f.coeffs + QSeries(30, {6: 1}))
    result = check_multiplicativity(broken)
    assert not result.passed
    assert result.witness == (2, 3)


def test_sine_formula():
    f = eigenform_h1(field_from_d(2), 300)
    assert sine_formula_check(f, 3, 5).passed
    with pytest.raises(EigenformError):
        sine_formula_check(f, 5, 2)
    with pytest.raises(EigenformError):
        sine_formula_check(f, 3, 6)


def test_nonvanishing_scan_d2():
    K = field_from_d(2)
    result = nonvanishing_scan(eigenform_h1(K, 500), K)
    assert result.passed
    assert (11, 14) in result.witnesses


# ── Q(sqrt(-23)) ──

@pytest.fixture(scope="module")
def h3():
    return h3_eigenforms(50)


def test_h3_eliminants(h3):
    assert h3.a_cubic == (512, 0, -96, 7)
    assert h3.b_cubic == (512, 0, -2208, 1587)
    assert h3.linear_relation == (3, 64, 7, -8)


def test_h3_roots_and_pairing(h3):
    assert len(h3.a_roots) == 3 and len(h3.b_roots) == 3
    assert list(h3.a_roots) == sorted(h3.a_roots)
    assert h3.pairing == ((0, 1), (1, 0), (2, 2))
    for i, j in h3.pairing:
        A, B = h3.a_roots[i], h3.b_roots[j]
        assert 3 * B == pytest.approx(64 * A * A + 7 * A - 8, abs=1e-9)


def test_h3_eigenforms_match_character_values(h3):
    values = [a2 for _, a2, _ in h3_character_values()]
    assert values == pytest.approx([-3.72545, 0.601466, 3.12398], abs=1e-5)
    assert [f.a(2) for f in h3.eigenforms] == pytest.approx(values, abs=1e-6)


def test_h3_eigenforms_are_hecke(h3):
    for f in h3.eigenforms:
        assert not f.exact
        assert f.a(1) == pytest.approx(1)
        assert check_multiplicativity(f).passed


def test_h3_eigenforms_match_printed_values(h3):
    printed = load_fixture("d23_eigenforms")
    for i, f in enumerate(h3.eigenforms, start=1):
        expected = printed[f"psi{i}"]
        for m in range(51):
            assert f.a(m) == pytest.approx(float(expected[m]), abs=1e-3)


def test_h3_needs_enough_coefficients():
    with pytest.raises(EigenformError):
        h3_eigenforms(8)


def test_h3_character_values_give_a3(h3):
    values = h3_character_values()
    assert [a3 for _, _, a3 in values] == pytest.approx([4.249425, 1.543637, -5.793062], abs=1e-5)
    for (alpha, a2, a3), f in zip(values, h3.eigenforms):
        assert abs(alpha) == pytest.approx(2)
        assert f.a(2) == pytest.approx(a2, abs=1e-6)
        assert f.a(3) == pytest.approx(a3, abs=1e-6)


# ── every class number one and two field ──

ALL_FIELDS = CLASS_NUMBER_ONE + CLASS_NUMBER_TWO


def _eigenforms(d, N):
    K = field_from_d(d)
    if K.class_number == 1:
        return [eigenform_h1(K, N)]
    return [eigenform_h2(K, N, variant) for variant in (1, 2)]


@pytest.mark.parametrize("d", ALL_FIELDS)
def test_hecke_extend_rebuilds_every_eigenform(d):
    N = 200
    for f in _eigenforms(d, N):
        primes = {int(p): f.a(int(p)) for p in primerange(2, N + 1)}
        assert hecke_extend(primes, f.chi, 3, N) == f.coeffs


@pytest.mark.parametrize("d", ALL_FIELDS)
def test_sine_formula_on_the_first_split_primes(d):
    K = field_from_d(d)
    N = 1000
    split = [int(p) for p in primerange(2, N) if prime_splitting(K, int(p)) == SplitType.SPLIT][:5]
    assert len(split) == 5
    for f in _eigenforms(d, N):
        for p in split:
            alpha_max = 1
            while p ** (alpha_max + 1) <= N:
                alpha_max += 1
            assert sine_formula_check(f, p, alpha_max).passed, (f.variant, p)


@pytest.mark.parametrize("d", ALL_FIELDS)
def test_coefficients_vanish_off_ideal_norms(d):
    K = field_from_d(d)
    N = 300
    missing = [n for n in range(1, N + 1) if ideal_count(K, n) == 0]
    assert missing
    for f in _eigenforms(d, N):
        assert all(f.a(n) == 0 for n in missing)


@pytest.mark.parametrize("d", CLASS_NUMBER_TWO)
def test_character_sums_on_prime_powers(d):
    K = field_from_d(d)
    N = 200
    powers = sorted(p ** e for p in primerange(2, N + 1) for e in range(1, 8) if p ** e <= N)
    for sign in (1, -1):
        a = {n: ideal_character_sum(K, n, sign) for n in [1] + powers}
        assert a[1] == 1
        for p in primerange(2, N + 1):
            tw = kronecker_symbol(K.d_K, p) * p * p
            q = p * p
            while q <= N:
                assert a[q] == a[p] * a[q // p] - tw * a[q // (p * p)], (sign, q)
                q *= p
    by_sign = {tuple(ideal_character_sum(K, n, sign) for n in powers) for sign in (1, -1)}
    by_variant = {tuple(eigenform_h2(K, N, v).a(n) for n in powers) for v in (1, 2)}
    assert by_sign == by_variant
