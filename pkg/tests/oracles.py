"""Independent brute-force oracles. None of these call the code paths they check."""
from __future__ import annotations

import itertools
from collections import Counter


def all_step_strings(width, height):
    """Every E/N string with the given counts, by filtering the full product."""
    for steps in itertools.product("EN", repeat=width + height):
        if steps.count("E") == width:
            yield "".join(steps)


def shoelace_area(steps: str) -> int:
    """Area between the path and the lower-right boundary, by the shoelace formula on
    the closed polygon path -> (w, 0) -> (0, 0)."""
    x = y = 0
    pts = [(0, 0)]
    for s in steps:
        if s == "E":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    pts.append((x, 0))
    twice = 0
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        twice += x1 * y2 - x2 * y1
    assert twice % 2 == 0
    return abs(twice) // 2


def area_generating_coeffs(width, height):
    """Coefficient list of sum over paths of q^area, via the shoelace oracle."""
    counts = Counter(shoelace_area(s) for s in all_step_strings(width, height))
    top = max(counts)
    return [counts.get(i, 0) for i in range(top + 1)]


def convolve(a, b):
    out = {}
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out.get(i + j, 0) + x * y
    n = max(out) + 1 if out else 0
    res = [out.get(i, 0) for i in range(n)]
    while res and res[-1] == 0:
        res.pop()
    return res


def factorial(n):
    r = 1
    for i in range(2, n + 1):
        r *= i
    return r


def binom_by_factorials(n, k):
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def pow_mod_scan(p, g):
    """Map x -> exponent by walking powers of g."""
    table = {}
    acc = 1
    for j in range(p - 1):
        table.setdefault(acc, j)
        acc = acc * g % p
    return table
