import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpaths.cyclic import (
    catalan_restrict_step,
    close_square_path,
    embedded_area,
    orbit_of,
    orbit_partition,
    phi_sequence,
    phi_square,
    phi_word,
    rotate_step,
)
from qpaths.errors import InvalidArgumentError
from qpaths.numbertheory import binomial, catalan
from qpaths.paths import LatticePath, area, enumerate_paths, transpose

ROT_BEFORE = LatticePath("NEENEENE")  # (0,0)-(0,1)-(2,1)-(2,2)-(4,2)-(4,3)-(5,3)
ROT_AFTER = LatticePath("ENEENEEN")
SAMPLE = LatticePath.from_word("01101001")
CORNER_ORBIT = [LatticePath(s) for s in ["ENNENEE", "EENNENE", "EEENNEN", "NEEENNE", "ENEEENN", "NENEEEN", "NNENEEE"]]


def test_rotate_examples():
    assert rotate_step(LatticePath("EN")) == LatticePath("NE")
    assert area(LatticePath("NE")) - area(LatticePath("EN")) == 1
    assert rotate_step(ROT_BEFORE) == ROT_AFTER
    assert (area(ROT_BEFORE), area(ROT_AFTER)) == (9, 6)
    assert rotate_step(LatticePath("EEEE")) == LatticePath("EEEE")
    with pytest.raises(InvalidArgumentError):
        rotate_step(LatticePath(""))


@given(st.text(alphabet="EN", min_size=1, max_size=20).map(LatticePath))
def test_rotate_area_shift(p):
    n, k = len(p), p.width
    q = rotate_step(p)
    delta = area(q) - area(p)
    assert delta == (k if p.steps[-1] == "N" else -(n - k))
    assert delta % n == k % n
    cur = p
    for _ in range(n):
        cur = rotate_step(cur)
    assert cur == p


def test_phi_square_two_steps():
    top_before = SAMPLE
    top_after = phi_square(top_before)
    assert top_after == LatticePath("ENNNENEE")
    assert (area(top_before), area(top_after)) == (8, 11)
    bottom_after = phi_square(top_after)
    assert bottom_after == LatticePath("EENNNENE")
    assert area(bottom_after) - area(top_after) == -4


def test_phi_square_small():
    assert phi_square(LatticePath("EN")) == LatticePath("EN")
    assert phi_square(LatticePath("NE")) == LatticePath("NE")
    with pytest.raises(InvalidArgumentError):
        phi_square(LatticePath("EEN"))


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_square_laws(n):
    m = 2 * n - 1
    for p in enumerate_paths(n, n):
        q = phi_square(p)
        assert q.steps[0] == p.steps[0]
        shift = n - 1 if p.steps[0] == "E" else n
        assert (area(q) - area(p)) % m == shift % m
        if p.steps[0] == "N":
            assert q == transpose(phi_square(transpose(p)))
            # the transpose sends area k to n^2 - k
            assert (area(transpose(p)) + area(p)) == n * n
        assert phi_word(p.word) == q.word


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_square_orbit_partition(n):
    orbits = orbit_partition(enumerate_paths(n, n), "phi-square")
    m = 2 * n - 1
    assert len(orbits) * m == binomial(2 * n, n)
    for orb in orbits:
        assert len(orb) == m
        assert orb.has_distinct_residues()


def test_phi_square_orbit_of_sample():
    orb = orbit_of(SAMPLE, "phi-square")
    assert len(orb) == 7
    assert orb.residues == (1, 4, 0, 3, 6, 2, 5)
    assert all(d % 7 == 3 for d in orb.deltas)


def test_phi_word_examples():
    assert phi_word("01") == "01"
    assert phi_word("0110") == "0011"
    w = "011010"
    cur = w
    for _ in range(5):
        cur = phi_word(cur)
    assert cur == w
    with pytest.raises(InvalidArgumentError):
        phi_word("1")


def test_phi_sequence_examples():
    assert phi_sequence((1, 2)) == (1, 3)
    assert phi_sequence((2, 4)) == (2, 3)
    assert phi_sequence((1, 4)) == (1, 2)
    with pytest.raises(InvalidArgumentError):
        phi_sequence((3, 2))
    with pytest.raises(InvalidArgumentError):
        phi_sequence((1, 5))


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_sequence_laws(n):
    m = 2 * n - 1
    seqs = list(itertools.combinations(range(1, 2 * n + 1), n))
    for s in seqs:
        t = phi_sequence(s)
        shift = n - 1 if s[0] == 1 else n
        assert (sum(t) - sum(s)) % m == shift % m
        assert (t[0] == 1) == (s[0] == 1)
    orbits = orbit_partition(seqs, "phi-seq")
    assert sum(len(o) for o in orbits) == len(seqs)
    for orb in orbits:
        assert len(orb) == m and orb.has_distinct_residues()


def test_rotate_orbit_trivial_and_five_three():
    assert len(orbit_of(LatticePath("E"), "rotate")) == 1
    orb = orbit_of(ROT_BEFORE, "rotate")
    assert len(orb) == 8
    assert sorted(orb.residues) == list(range(8))


@pytest.mark.parametrize("n", range(2, 13))
def test_rotate_orbits_coprime(n):
    for k in range(1, n):
        if math.gcd(n, k) != 1:
            continue
        for orb in orbit_partition(enumerate_paths(k, n - k), "rotate"):
            assert len(orb) == n and orb.has_distinct_residues()


def test_rotate_orbit_through_corner():
    orb = orbit_of(CORNER_ORBIT[0], "rotate")
    assert list(orb.elements) == CORNER_ORBIT
    assert orb.deltas == (-3, -3, 4, -3, 4, 4, -3)
    through = [p for p in orb.elements if p.steps[-1] == "E"]
    assert len(through) == 4


def test_catalan_restrict_small():
    orb = orbit_of(LatticePath("ENE"), "catalan")
    assert len(orb) == 2
    assert {close_square_path(LatticePath(s)) for s in ("EN", "NE")} == set(orb.elements)
    with pytest.raises(InvalidArgumentError):
        catalan_restrict_step(LatticePath("ENN"))
    with pytest.raises(InvalidArgumentError):
        catalan_restrict_step(LatticePath("EEN"))


@pytest.mark.parametrize("n", range(1, 8))
def test_catalan_restrict_laws(n):
    starts = [close_square_path(p) for p in enumerate_paths(n, n)]
    orbits = orbit_partition(starts, "catalan")
    assert len(orbits) == catalan(n)
    for orb in orbits:
        assert len(orb) == n + 1
        assert sorted(orb.residues) == list(range(n + 1))
        assert all(d % (n + 1) == 1 for d in orb.deltas)
        for p in orb.elements:
            assert embedded_area(p) == area(LatticePath(p.steps[:-1]))


def test_orbit_rejects_unknown_map():
    with pytest.raises(InvalidArgumentError):
        orbit_of(LatticePath("EN"), "flip")
