import math

import pytest

from qpaths.distributions import (
    ResidueDistribution,
    area_distribution,
    exceedance_distribution,
    exponent_sum_distribution,
    inversion_distribution,
    maj_distribution,
    subset_product_distribution,
    subset_sum_distribution,
    verify_theorem,
)
from qpaths.errors import InvalidArgumentError, PreconditionError
from qpaths.numbertheory import binomial, catalan


def test_six_four_mod_ten():
    d = area_distribution(6, 4, 10)
    assert d.counts == (22, 20) * 5
    assert d.total == 210 and not d.uniform()
    assert area_distribution(6, 4, 10, mode="oracle") == d


def test_three_by_three_mod_five():
    assert area_distribution(3, 3, 5).counts == (4,) * 5
    assert area_distribution(3, 3, 5, mode="oracle").counts == (4,) * 5


@pytest.mark.parametrize("total", range(0, 17))
def test_routes_agree(total):
    for w in range(total + 1):
        h = total - w
        for m in range(1, total + 3):
            assert area_distribution(w, h, m, "oracle") == area_distribution(w, h, m, "poly")


def test_bad_arguments():
    with pytest.raises(InvalidArgumentError):
        area_distribution(2, 2, 0)
    with pytest.raises(InvalidArgumentError):
        area_distribution(2, 2, 3, mode="guess")
    with pytest.raises(InvalidArgumentError):
        area_distribution(-1, 2, 3)
    with pytest.raises(InvalidArgumentError):
        subset_sum_distribution(3, 4, 2)
    with pytest.raises(AssertionError):
        ResidueDistribution(3, (1, 1, 1), 4)


def test_subset_sums():
    assert subset_sum_distribution(4, 2, 3).counts == (2, 2, 2)
    assert subset_sum_distribution(2, 1, 1).counts == (2,)
    assert subset_sum_distribution(6, 3, 5).counts == (4,) * 5


def test_subset_products():
    d = subset_product_distribution(5, 3)
    assert d.counts == (1, 1, 1, 1)
    assert list(d.residues) == [1, 2, 3, 4]
    assert subset_product_distribution(3, 1).counts == (1, 1)
    assert subset_product_distribution(13, 5).counts == (66,) * 12


def test_product_preconditions():
    with pytest.raises(PreconditionError):
        subset_product_distribution(9, 2)
    with pytest.raises(PreconditionError):
        subset_product_distribution(7, 7)
    with pytest.raises(PreconditionError):
        subset_product_distribution(7, 2)
    d = subset_product_distribution(7, 2, diagnostic=True)
    assert not d.applicable
    assert d.total == binomial(6, 2)


def test_exponent_sums_match_products():
    # the discrete log is a bijection from products mod p to sums mod p-1
    for p, l in [(5, 3), (7, 5), (11, 3), (13, 7)]:
        a = subset_product_distribution(p, l)
        b = exponent_sum_distribution(p, l)
        assert sorted(a.counts) == sorted(b.counts)


def test_maj_examples():
    assert maj_distribution(2, 3).counts == (2, 2, 2)
    assert maj_distribution(1, 1).counts == (2,)
    assert maj_distribution(4, 7).counts == (10,) * 7


@pytest.mark.parametrize("n", range(1, 9))
def test_inv_matches_area(n):
    m = 2 * n - 1
    assert inversion_distribution(n, m) == area_distribution(n, n, m)


def test_exceedance_distribution():
    assert exceedance_distribution(4).counts == (14,) * 5


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("t", [1, 2, 3, 7])
def test_single_parameter_theorems(t, n):
    v = verify_theorem(t, mode="oracle", n=n)
    assert v.passed, v
    assert v.distribution.total == binomial(2 * n, n) or t == 7


def test_theorem_one_poly_route():
    for n in range(1, 41):
        v = verify_theorem(1, n=n)
        assert v.passed and v.expected_count * (2 * n - 1) == binomial(2 * n, n)


def test_theorem_seven_expected_count():
    v = verify_theorem(7, n=7)
    assert v.modulus == 8 and v.expected_count == catalan(7) == 429


@pytest.mark.parametrize("n", range(2, 17))
def test_theorem_four(n):
    for k in range(1, n):
        if math.gcd(n, k) == 1:
            assert verify_theorem(4, n=n, k=k).passed
    if n % 2 == 0:
        with pytest.raises(PreconditionError):
            verify_theorem(4, n=n, k=2)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_theorem_five(p):
    for l in range(1, p):
        if math.gcd(l, p - 1) == 1:
            v = verify_theorem(5, p=p, l=l)
            assert v.passed and v.checks["exponent_sums_uniform"]


@pytest.mark.parametrize("n", range(2, 17))
def test_reduced_modulus_uniform_exactly_when_k_coprime(n):
    # uniformity mod n/g needs gcd(k, n/g) = 1, not just g > 1
    for k in range(1, n):
        g = math.gcd(n, k)
        r = n // g
        v = verify_theorem(6, n=n, k=k)
        assert v.modulus == r
        assert v.passed == (math.gcd(k, r) == 1)


def test_reduced_modulus_counterexample():
    v = verify_theorem(6, n=4, k=2)
    assert v.distribution.counts == (4, 2)
    assert not v.passed


def test_full_modulus_negative_control():
    v = verify_theorem(6, n=10, k=4, modulus=10)
    assert not v.passed and not v.distribution.uniform()
    assert verify_theorem(6, n=10, k=4).passed


def test_verify_theorem_errors():
    with pytest.raises(InvalidArgumentError):
        verify_theorem(8, n=3)
    with pytest.raises(PreconditionError):
        verify_theorem(1, n=0)
    with pytest.raises(PreconditionError):
        verify_theorem(6, n=4, k=4)
    with pytest.raises(PreconditionError):
        verify_theorem(5, p=7, l=2)
