"""
Exact polynomial arithmetic over the integers.

A polynomial is stored densely, constant term first, so ``Polynomial([1, 2, 1])``
is ``1 + 2q + q^2``. Coefficients are Python ints and never overflow.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from qpaths.errors import InvalidArgumentError, NotDivisibleError


@dataclass(frozen=True, init=False)
class Polynomial:
    """
    A polynomial in ``q`` with integer coefficients, kept in canonical form.

    The highest stored coefficient is never zero; the zero polynomial stores
    an empty tuple.

    >>> Polynomial([1, 1, 0, 0])
    Polynomial([1, 1])
    >>> Polynomial([1, 1]) * Polynomial([1, 1])
    Polynomial([1, 2, 1])
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> Polynomial:
        if power < 0:
            raise InvalidArgumentError(f"negative power {power}")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else "q" if i == 1 else f"q^{i}"
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return Polynomial(a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def shift(self, power: int) -> Polynomial:
        """Multiply by ``q**power``."""
        if power < 0:
            raise InvalidArgumentError(f"negative shift {power}")
        if not self.coeffs:
            return self
        return Polynomial((0,) * power + self.coeffs)


ZERO = Polynomial()
ONE = Polynomial([1])


def q_analogue(m: int) -> Polynomial:
    """
    Return ``[m]_q = 1 + q + ... + q^(m-1)``.

    >>> q_analogue(3)
    Polynomial([1, 1, 1])
    """
    if m < 1:
        raise InvalidArgumentError(f"q-analogue needs m >= 1, got {m}")
    return Polynomial([1] * m)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        return ZERO
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    # loop over the shorter factor; each pass is a shifted scaled copy of the longer one
    for j, d in enumerate(b):
        if d == 0:
            continue
        if d == 1:
            for i, c in enumerate(a):
                out[i + j] += c
        else:
            for i, c in enumerate(a):
                out[i + j] += c * d
    return Polynomial(out)


def poly_exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Return ``h`` with ``f == g * h`` and integer coefficients.

    Raises :class:`NotDivisibleError` carrying the remainder when ``g`` does not
    divide ``f`` in Z[q].

    >>> poly_exact_div(q_analogue(4), q_analogue(2))
    Polynomial([1, 0, 1])
    """
    if g.is_zero():
        raise InvalidArgumentError("division by the zero polynomial")
    if f.is_zero():
        return ZERO
    rem = list(f.coeffs)
    dg = g.degree
    lead = g.coeffs[-1]
    if f.degree < dg:
        raise NotDivisibleError(f"degree {dg} divisor exceeds degree {f.degree} dividend", f)
    quot = [0] * (f.degree - dg + 1)
    gc = g.coeffs
    for i in range(f.degree - dg, -1, -1):
        top = rem[i + dg]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            raise NotDivisibleError(
                f"non-integer quotient coefficient {top}/{lead} at q^{i}", Polynomial(rem)
            )
        quot[i] = c
        for j, d in enumerate(gc):
            rem[i + j] -= c * d
    remainder = Polynomial(rem)
    if not remainder.is_zero():
        raise NotDivisibleError(f"nonzero remainder {remainder}", remainder)
    return Polynomial(quot)


def content_sums(f: Polynomial, m: int) -> list[int]:
    """
    Coefficient sums of ``f`` over each residue class of exponents mod ``m``.

    >>> content_sums(Polynomial([3, 1, 4]), 2)
    [7, 1]
    """
    if m < 1:
        raise InvalidArgumentError(f"modulus must be >= 1, got {m}")
    sums = [0] * m
    for i, c in enumerate(f.coeffs):
        sums[i % m] += c
    return sums


def divides(g: Polynomial, f: Polynomial) -> bool:
    try:
        poly_exact_div(f, g)
    except NotDivisibleError:
        return False
    return True


def has_equal_content(f: Polynomial, m: int, *, cross_check: bool = False) -> bool:
    """True iff every exponent class mod ``m`` carries exactly ``f(1)/m`` of the coefficient mass.

    Equivalent to ``[m]_q`` dividing ``f``. With ``cross_check`` the division is
    also carried out and a disagreement raises ``AssertionError``.
    """
    sums = content_sums(f, m)
    total = sum(sums)
    equal = total % m == 0 and all(s * m == total for s in sums)
    if cross_check:
        by_division = divides(q_analogue(m), f)
        if by_division != equal:
            raise AssertionError(
                f"content sums ({equal}) and division by [{m}]_q ({by_division}) disagree for {f!r}"
            )
    return equal
