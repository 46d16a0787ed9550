"""
Gaussian binomial coefficients and q-Catalan polynomials.

``gauss_binom(n, k)`` is the generating polynomial of lattice paths from (0,0)
to (k, n-k) by enclosed area. Two independent constructions are provided:

* the q-Pascal recurrence  G(n,k) = q^(n-k) G(n-1,k-1) + G(n-1,k),
  memoized on (n, min(k, n-k));
* the factorial quotient [n]_q! / ([k]_q! [n-k]_q!) with exact division.

Above ``DP_MAX_N`` the recurrence table becomes quartic in ``n``, so
``gauss_binom`` switches to the telescoping product
prod_i (1 - q^(n-k+i)) / (1 - q^i), vectorized over numpy object arrays and
truncated at half the degree.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

from qpaths.errors import InvalidArgumentError, NotDivisibleError
from qpaths.intpoly import ONE, ZERO, Polynomial, poly_exact_div, poly_mul, q_analogue

DP_MAX_N = 64

_memo: dict[tuple[int, int], Polynomial] = {}
_memo_lock = threading.Lock()


def _lookup(m: int, j: int) -> Polynomial:
    if j < 0 or j > m:
        return ZERO
    if j == 0 or j == m:
        return ONE
    return _memo[(m, min(j, m - j))]


def _fill(n: int, k: int) -> None:
    # band of (m, j) cells the recurrence needs to reach (n, k)
    for m in range(2, n + 1):
        lo = max(1, k - (n - m))
        hi = min(k, m - 1)
        for j in range(lo, hi + 1):
            key = (m, min(j, m - j))
            if key in _memo:
                continue
            _memo[key] = _lookup(m - 1, j - 1).shift(m - j) + _lookup(m - 1, j)


def gauss_binom_recurrence(n: int, k: int) -> Polynomial:
    """Gaussian binomial via the memoized q-Pascal recurrence, any size."""
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    if k == 0:
        return ONE
    with _memo_lock:
        if (n, k) not in _memo:
            _fill(n, k)
        return _memo[(n, k)]


def _gauss_binom_ratio(n: int, k: int) -> Polynomial:
    k = min(k, n - k)
    deg = k * (n - k)
    # coefficients are palindromic, so only powers below ``half`` are computed
    half = deg // 2 + 1
    c = np.zeros(half, dtype=object)
    c[0] = 1
    length = 1
    for i in range(1, k + 1):
        a = n - k + i
        # multiply by (1 - q^a), truncated
        grown = min(length + a, half)
        if a < grown:
            c[a:grown] -= c[: grown - a]
        # divide by (1 - q^i): h[j] = f[j] + h[j - i], a strided running sum
        rows = -(-grown // i)
        buf = np.zeros(rows * i, dtype=object)
        buf[:grown] = c[:grown]
        c[:grown] = np.cumsum(buf.reshape(rows, i), axis=0).ravel()[:grown]
        # c now holds the low half of [n-k+i brack i]_q
        length = min(length + n - k, half)
    low = c.tolist()
    coeffs = low + low[: deg + 1 - half][::-1]
    if sum(coeffs) != math.comb(n, k):  # pragma: no cover - would be a bug
        raise NotDivisibleError(f"ratio route lost exactness at ({n}, {k})", Polynomial(coeffs))
    return Polynomial(coeffs)


def gauss_binom(n: int, k: int) -> Polynomial:
    """
    The Gaussian binomial coefficient ``[n brack k]_q``.

    Zero polynomial for ``k`` outside ``[0, n]``.

    >>> gauss_binom(4, 2)
    Polynomial([1, 1, 2, 1, 1])
    """
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return ZERO
    if min(k, n - k) == 0:
        return ONE
    if n <= DP_MAX_N:
        return gauss_binom_recurrence(n, k)
    return _gauss_binom_ratio(n, k)


def gauss_binom_product(n: int, k: int) -> Polynomial:
    """Gaussian binomial as a quotient of q-factorials.

    The numerator [n]_q!/[max(k, n-k)]_q! is accumulated first, then divided by
    [1]_q, [2]_q, ... in turn; every intermediate quotient is a polynomial.
    """
    if not 0 <= k <= n:
        raise InvalidArgumentError(f"need 0 <= k <= n, got n={n}, k={k}")
    small, large = sorted((k, n - k))
    num = ONE
    for i in range(large + 1, n + 1):
        num = poly_mul(num, q_analogue(i))
    for i in range(2, small + 1):
        try:
            num = poly_exact_div(num, q_analogue(i))
        except NotDivisibleError as exc:  # pragma: no cover - would be a bug
            raise AssertionError(f"q-factorial quotient not exact at [{i}]_q for ({n}, {k})") from exc
    return num


def q_catalan(n: int) -> Polynomial:
    """
    ``[2n brack n]_q / [n+1]_q``; evaluates to the Catalan number at q = 1.

    >>> q_catalan(2)
    Polynomial([1, 0, 1])
    """
    if n < 1:
        raise InvalidArgumentError(f"q-Catalan needs n >= 1, got {n}")
    return poly_exact_div(gauss_binom(2 * n, n), q_analogue(n + 1))


@dataclass(frozen=True)
class QIdentityReport:
    n: int
    central_factorization: bool
    catalan_difference: bool
    odd_divisor: bool

    @property
    def all_hold(self) -> bool:
        return self.central_factorization and self.catalan_difference and self.odd_divisor


def verify_q_identities(n: int) -> QIdentityReport:
    """Check three polynomial identities for the central Gaussian binomial at ``n``.

    * ``[2n brack n] = (1 + q^n) [2n-1]_q ([2n-2 brack n-1] / [n]_q)``
    * ``[2n brack n] / [n+1]_q = [2n brack n] - q [2n brack n+1]``
    * ``[2n-1]_q`` divides ``[2n brack n]``
    """
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    central = gauss_binom(2 * n, n)

    try:
        prev_quot = poly_exact_div(gauss_binom(2 * n - 2, n - 1), q_analogue(n))
        rhs = poly_mul(poly_mul(ONE + Polynomial.monomial(n), q_analogue(2 * n - 1)), prev_quot)
        factorization = rhs == central
    except NotDivisibleError:
        factorization = False

    try:
        lhs = poly_exact_div(central, q_analogue(n + 1))
        difference = lhs == central - gauss_binom(2 * n, n + 1).shift(1)
    except NotDivisibleError:
        difference = False

    try:
        poly_exact_div(central, q_analogue(2 * n - 1))
        odd = True
    except NotDivisibleError:
        odd = False

    return QIdentityReport(n, factorization, difference, odd)
