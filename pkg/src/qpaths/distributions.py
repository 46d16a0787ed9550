"""
Residue-class distributions of path area, word statistics, subset sums and
subset products, with a verdict per partition theorem.

Area distributions have two routes: ``"oracle"`` enumerates every path, and
``"poly"`` reads the content sums of the Gaussian binomial.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable

from qpaths.errors import InvalidArgumentError, PreconditionError
from qpaths.gaussian import gauss_binom
from qpaths.intpoly import content_sums
from qpaths.numbertheory import binomial, catalan, discrete_log, is_prime, primitive_root
from qpaths.paths import area, enumerate_paths, enumerate_words, exceedance, inversions, major_index

MODES = ("oracle", "poly")


@dataclass(frozen=True)
class ResidueDistribution:
    """Counts of objects per residue class.

    ``counts[i]`` belongs to residue ``first_residue + i``. Product
    distributions mod p start at residue 1.
    """

    modulus: int
    counts: tuple[int, ...]
    total: int
    first_residue: int = 0
    applicable: bool = True

    def __post_init__(self):
        if sum(self.counts) != self.total:
            raise AssertionError(f"counts sum to {sum(self.counts)}, total is {self.total}")

    @classmethod
    def from_counts(cls, modulus: int, counts: Iterable[int], **kw) -> ResidueDistribution:
        counts = tuple(counts)
        return cls(modulus, counts, sum(counts), **kw)

    @property
    def residues(self) -> range:
        return range(self.first_residue, self.first_residue + len(self.counts))

    def uniform(self) -> bool:
        classes = len(self.counts)
        return self.total % classes == 0 and all(c * classes == self.total for c in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.residues, self.counts))


def _tally(values: Iterable[int], m: int) -> ResidueDistribution:
    counts = [0] * m
    for v in values:
        counts[v % m] += 1
    return ResidueDistribution.from_counts(m, counts)


def _check_modulus(m: int) -> None:
    if m < 1:
        raise InvalidArgumentError(f"modulus must be >= 1, got {m}")


def area_distribution(width: int, height: int, m: int, mode: str = "poly") -> ResidueDistribution:
    """Paths to ``(width, height)`` counted by area mod ``m``."""
    _check_modulus(m)
    if mode == "oracle":
        return _tally((area(p) for p in enumerate_paths(width, height)), m)
    if mode == "poly":
        if width < 0 or height < 0:
            raise InvalidArgumentError(f"endpoint must be nonnegative, got ({width}, {height})")
        return ResidueDistribution.from_counts(m, content_sums(gauss_binom(width + height, width), m))
    raise InvalidArgumentError(f"mode must be one of {MODES}, got {mode!r}")


def inversion_distribution(n: int, m: int) -> ResidueDistribution:
    """Even binary words of length ``2n`` by inversion count mod ``m``."""
    _check_modulus(m)
    return _tally((inversions(w) for w in enumerate_words(n)), m)


def maj_distribution(n: int, m: int) -> ResidueDistribution:
    """Even binary words of length ``2n`` by major index mod ``m``."""
    _check_modulus(m)
    return _tally((major_index(w) for w in enumerate_words(n)), m)


def exceedance_distribution(n: int) -> ResidueDistribution:
    """Paths to ``(n, n)`` by number of north steps on or above the diagonal (values 0..n)."""
    return _tally((exceedance(p) for p in enumerate_paths(n, n)), n + 1)


def subset_sum_distribution(n: int, k: int, m: int) -> ResidueDistribution:
    """
    Strictly increasing ``k``-term sequences in ``[1, n]`` by sum mod ``m``.

    >>> subset_sum_distribution(4, 2, 3).counts
    (2, 2, 2)
    """
    _check_modulus(m)
    if not 1 <= k <= n:
        raise InvalidArgumentError(f"need 1 <= k <= n, got n={n}, k={k}")
    return _tally((sum(c) for c in itertools.combinations(range(1, n + 1), k)), m)


def _check_product_params(p: int, l: int) -> bool:
    """Validate shape; return whether the uniformity statement applies."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if not 1 <= l <= p - 1:
        raise PreconditionError(f"length must lie in [1, {p - 1}], got {l}")
    return math.gcd(l, p - 1) == 1


def subset_product_distribution(p: int, l: int, diagnostic: bool = False) -> ResidueDistribution:
    """Strictly increasing ``l``-term sequences in ``[1, p-1]`` by product mod ``p``.

    Residues run 1..p-1. When ``gcd(l, p-1) > 1`` the uniformity statement does
    not apply and a :class:`PreconditionError` is raised, unless ``diagnostic``
    is set, in which case the distribution comes back flagged ``applicable=False``.
    """
    applicable = _check_product_params(p, l)
    if not applicable and not diagnostic:
        raise PreconditionError(f"gcd({l}, {p - 1}) = {math.gcd(l, p - 1)} > 1")
    counts = [0] * (p - 1)
    for combo in itertools.combinations(range(1, p), l):
        prod = 1
        for a in combo:
            prod = prod * a % p
        counts[prod - 1] += 1
    return ResidueDistribution.from_counts(p, counts, first_residue=1, applicable=applicable)


def exponent_sum_distribution(p: int, l: int) -> ResidueDistribution:
    """Same sequences as :func:`subset_product_distribution`, counted by the sum of
    their discrete logarithms mod ``p - 1``."""
    _check_product_params(p, l)
    g = primitive_root(p)
    logs = [discrete_log(p, g, a) for a in range(1, p)]
    return _tally((sum(c) for c in itertools.combinations(logs, l)), p - 1)


@dataclass(frozen=True)
class Verdict:
    theorem: int
    params: dict
    distribution: ResidueDistribution
    expected_count: int
    passed: bool
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def modulus(self) -> int:
        return self.distribution.modulus


def _exact(num: int, den: int) -> int | None:
    q, r = divmod(num, den)
    return q if r == 0 else None


def _verdict(theorem: int, params: dict, dist: ResidueDistribution, expected: int | None, **checks: bool) -> Verdict:
    hit = expected is not None and all(c == expected for c in dist.counts)
    passed = hit and all(checks.values())
    return Verdict(theorem, params, dist, expected if expected is not None else -1, passed, dict(checks))


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def verify_theorem(theorem: int, mode: str = "poly", **params) -> Verdict:
    """Compute the distribution behind one partition theorem and compare with the predicted count.

    Parameters per theorem: 1, 2, 3, 7 take ``n``; 4 and 6 take ``n`` and ``k``
    (6 also accepts a ``modulus`` override); 5 takes ``p`` and ``l``.
    """
    if theorem in (1, 2, 3, 7):
        n = params["n"]
        _need(n >= 1, f"n must be >= 1, got {n}")
        if theorem == 7:
            dist = area_distribution(n, n, n + 1, mode)
            return _verdict(7, {"n": n}, dist, catalan(n))
        m = 2 * n - 1
        expected = _exact(binomial(2 * n, n), m)
        if theorem == 1:
            dist = area_distribution(n, n, m, mode)
        elif theorem == 2:
            dist = inversion_distribution(n, m)
        else:
            dist = subset_sum_distribution(2 * n, n, m)
        return _verdict(theorem, {"n": n}, dist, expected)

    if theorem in (4, 6):
        n, k = params["n"], params["k"]
        _need(0 < k < n, f"need 0 < k < n, got n={n}, k={k}")
        g = math.gcd(n, k)
        if theorem == 4:
            _need(g == 1, f"gcd({n}, {k}) = {g}; theorem 4 needs coprime n and k")
            m = n
        else:
            m = params.get("modulus") or n // g
        dist = area_distribution(k, n - k, m, mode)
        return _verdict(theorem, {"n": n, "k": k, "g": g}, dist, _exact(binomial(n, k), m))

    if theorem == 5:
        p, l = params["p"], params["l"]
        _need(_check_product_params(p, l), f"gcd({l}, {p - 1}) > 1")
        dist = subset_product_distribution(p, l)
        expected = _exact(binomial(p - 1, l), p - 1)
        logs = exponent_sum_distribution(p, l)
        exp_ok = logs.uniform() and all(c == expected for c in logs.counts)
        return _verdict(5, {"p": p, "l": l}, dist, expected, exponent_sums_uniform=exp_ok)

    raise InvalidArgumentError(f"theorem must be 1..7, got {theorem}")
