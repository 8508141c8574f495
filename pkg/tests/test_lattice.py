"""Lattice of flats: enumeration, Moebius values, characteristic polynomials."""

import pytest

from modext.algebra import IntPolynomial
from modext.errors import NotAFlat, TooLarge
from modext.lattice import charpoly, enumerate_flats, interval_charpoly, mobius

from oracles import brute_flats, brute_mobius, whitney_charpoly_coeffs


def test_u23_lattice(corpus):
    m, lat = corpus("u23")
    assert len(lat) == 5  # bottom, three atoms, top
    assert lat.bottom == 0 and lat.top == 0b111
    assert lat.rank == 2
    assert sorted(lat.flats()) == sorted(brute_flats(m))
    assert lat.charpoly() == IntPolynomial([2, -3, 1])  # (t-1)(t-2)


def test_flat_enumeration_matches_brute(corpus):
    for name in ("u23", "u34", "fano", "example-7", "c4", "bn-2", "fish-sign"):
        m, lat = corpus(name)
        assert sorted(lat.flats()) == sorted(brute_flats(m)), name


def test_covers_are_saturated(corpus):
    for name in ("fano", "example-7", "k4"):
        m, lat = corpus(name)
        for f in lat.flats():
            for g in lat.covers[f]:
                assert g & f == f and g != f
                assert lat.rank_of[g] == lat.rank_of[f] + 1
                assert m.closure(g) == g
                # no flat strictly between f and g
                for h in lat.flats():
                    assert not (h & f == f and h & g == h and f != h != g)


def test_mobius_matches_brute(corpus):
    for name in ("u23", "fano", "example-7", "c5"):
        m, lat = corpus(name)
        expected = brute_mobius(m)
        got = mobius(lat)
        assert got == expected, name


def test_charpoly_matches_whitney_sum(corpus):
    for name in ("u23", "u34", "fano", "example-7", "k5", "bn-3", "dn-3"):
        m, lat = corpus(name)
        assert lat.charpoly() == IntPolynomial(whitney_charpoly_coeffs(m)), name


def test_charpoly_known_values(corpus):
    _, lat = corpus("fano")
    assert lat.charpoly() == IntPolynomial.from_roots([1, 2, 4])
    _, lat = corpus("k4")
    assert lat.charpoly() == IntPolynomial.from_roots([1, 2, 3])
    _, lat = corpus("bn-3")
    assert lat.charpoly() == IntPolynomial.from_roots([1, 3, 5])


def test_interval_charpoly_is_restriction_charpoly(corpus):
    m, lat = corpus("example-7")
    for f in lat.flats():
        sub = m.restrict(f)
        assert interval_charpoly(lat, lat.bottom, f) == charpoly(sub)


def test_interval_charpoly_is_contraction_charpoly(corpus):
    m, lat = corpus("example-7")
    for f in lat.flats():
        q, _ = m.contract_simplify(f)
        assert lat.upper_charpoly(f) == charpoly(q)


def test_interval_requires_comparable_flats(corpus):
    _, lat = corpus("u23")
    with pytest.raises(NotAFlat):
        interval_charpoly(lat, 0b011, lat.top)


def test_max_flats_guardrail(corpus):
    m, _ = corpus("fano")
    with pytest.raises(TooLarge):
        enumerate_flats(m, max_flats=5)


def test_charpoly_of_empty_and_single():
    from modext.matroid import graphic_matroid
    m0 = graphic_matroid(0, [])
    assert charpoly(m0) == IntPolynomial.one()
    m1 = graphic_matroid(2, [(0, 1)])
    assert charpoly(m1) == IntPolynomial([-1, 1])  # t - 1


def test_lattice_json_shape(corpus):
    _, lat = corpus("u23")
    data = lat.to_json()
    assert data["rank"] == 2
    assert [e["atoms"] for e in data["levels"][1]] == [[0], [1], [2]]
    assert data["levels"][2] == [{"atoms": [0, 1, 2], "mobius": 2}]
