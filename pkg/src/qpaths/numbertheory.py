"""Exact integer helpers: binomials, Catalan numbers, and the cyclic unit group mod p."""
from __future__ import annotations

import math

from qpaths.errors import InvalidArgumentError


def binomial(n: int, k: int) -> int:
    """
    ``C(n, k)``, zero outside ``0 <= k <= n``.

    >>> binomial(8, 4)
    70
    """
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    """
    >>> [catalan(i) for i in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    q, r = divmod(math.comb(2 * n, n), n + 1)
    assert r == 0
    return q


def verify_eq1(n: int) -> bool:
    """Check ``C(2n, n) == 2 (2n - 1) C_{n-1}``."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    return math.comb(2 * n, n) == 2 * (2 * n - 1) * catalan(n - 1)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    """
    Smallest generator of the unit group mod ``p`` (1 for p = 2).

    >>> primitive_root(7)
    3
    """
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    if p == 2:
        return 1
    order = p - 1
    factors = _prime_factors(order)
    for g in range(2, p):
        if all(pow(g, order // f, p) != 1 for f in factors):
            return g
    raise AssertionError(f"no primitive root found mod {p}")  # pragma: no cover


def discrete_log(p: int, g: int, x: int) -> int:
    """Exponent ``j`` in ``[0, p-2]`` with ``g**j == x (mod p)``, by linear scan."""
    if x % p == 0:
        raise InvalidArgumentError(f"{x} is not a unit mod {p}")
    x %= p
    acc = 1
    for j in range(p - 1):
        if acc == x:
            return j
        acc = acc * g % p
    raise InvalidArgumentError(f"{g} does not generate {x} mod {p}; not a primitive root?")
