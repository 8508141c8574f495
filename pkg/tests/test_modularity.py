"""Modularity criteria, roundness, supersolvable chains."""

import pytest

from modext.errors import EmptyFlat, NotACoatom
from modext.matroid import atom_tuple, mask_of
from modext.modularity import (coatom_pairing, is_modular_coatom_triangle,
                               is_modular_flat, is_round, modular_flats,
                               short_circuit_check, supersolvable_chain,
                               violating_flat_in_context)

from oracles import brute_flats, brute_modular, brute_round, brute_supersolvable


def test_rank_equation_matches_brute(corpus):
    for name in ("u23", "u34", "fano", "example-7", "fish-sign", "c4"):
        m, lat = corpus(name)
        flats = brute_flats(m)
        for f in flats:
            got = bool(is_modular_flat(m, f, lattice=lat))
            assert got == brute_modular(m, f, flats), (name, atom_tuple(f))


def test_trivial_flats_always_modular(corpus):
    for name in ("u34", "example-7", "bn-2"):
        m, lat = corpus(name)
        assert is_modular_flat(m, lat.bottom, lattice=lat)
        assert is_modular_flat(m, lat.top, lattice=lat)
        for a in range(m.n):  # atoms are modular in a simple matroid
            assert is_modular_flat(m, 1 << a, lattice=lat)


def test_fano_everything_modular(corpus):
    m, lat = corpus("fano")
    assert len(modular_flats(m, lattice=lat)) == len(lat) == 16


def test_fish_witness(corpus):
    m, lat = corpus("fish-sign")
    x = mask_of([1, 2])
    w = is_modular_flat(m, x, lattice=lat)
    assert not w.modular
    y = w.violating_flat
    assert m.rank(x) + m.rank(y) != m.rank(x & y) + m.rank(x | y)


def test_criterion_agreement_on_corpus(corpus):
    for name in ("u23", "u34", "fano", "example-7", "c4", "c5", "bn-2",
                 "fish-sign", "q2-z3"):
        m, lat = corpus(name)
        for f in lat.flats():
            eq = bool(is_modular_flat(m, f, lattice=lat))
            if f:
                sc = bool(short_circuit_check(m, f))
                assert eq == sc, (name, atom_tuple(f))
        for z in lat.coatoms():
            eq = bool(is_modular_flat(m, z, lattice=lat))
            tri = bool(is_modular_coatom_triangle(m, z, lattice=lat))
            assert eq == tri, (name, atom_tuple(z))


def test_short_circuit_rejects_empty_flat(corpus):
    m, _ = corpus("u23")
    with pytest.raises(EmptyFlat):
        short_circuit_check(m, 0)


def test_short_circuit_witness_is_a_short_circuit(corpus):
    m, lat = corpus("fish-sign")
    x = mask_of([1, 2])
    w = short_circuit_check(m, x)
    assert not w.modular
    c, e = w.circuit, w.atom
    # the witness circuit straddles x and its atom e admits no short circuit
    assert c & x and c & ~x
    assert (1 << e) & c and not (1 << e) & x
    out = c & ~x
    for x0 in atom_tuple(x):
        t = out | (1 << x0)
        assert m.rank(t) != m.rank(t & ~(1 << e))


def test_triangle_test_requires_coatom(corpus):
    m, lat = corpus("fano")
    with pytest.raises(NotACoatom):
        is_modular_coatom_triangle(m, 1, lattice=lat)


def test_triangle_witness_pair(corpus):
    m, lat = corpus("example-13")
    for z in lat.coatoms():
        w = is_modular_coatom_triangle(m, z, lattice=lat)
        if w.modular:
            continue
        a, b = w.pair
        pair_mask = (1 << a) | (1 << b)
        assert pair_mask & z == 0
        hits = [f for f in atom_tuple(z)
                if m.rank(pair_mask | (1 << f)) == 2]
        assert len(hits) != 1


def test_coatom_pairing(corpus):
    m, lat = corpus("example-7")
    x = mask_of([1, 2, 5, 6])
    pairing = coatom_pairing(m, x, lattice=lat)
    outside = [a for a in range(m.n) if not (1 << a) & x]
    assert set(pairing) == {(a, b) for a in outside for b in outside if a < b}
    for (a, b), f in pairing.items():
        # f is the unique atom of x making a triangle with a and b
        assert (1 << f) & x
        assert m.rank((1 << a) | (1 << b) | (1 << f)) == 2


def test_coatom_pairing_triples_dependent(corpus):
    m, lat = corpus("fano")
    for x in lat.coatoms():
        pairing = coatom_pairing(m, x, lattice=lat)
        outside = atom_tuple(m.full_mask & ~x)
        from itertools import combinations
        for a, b, c in combinations(outside, 3):
            triple = (1 << pairing[(a, b)]) | (1 << pairing[(a, c)]) \
                | (1 << pairing[(b, c)])
            assert m.rank(triple) < bin(triple).count("1")


def test_roundness_matches_brute(corpus):
    for name in ("u23", "u34", "fano", "c4", "k4", "bn-2", "fish-sign",
                 "example-7"):
        m, lat = corpus(name)
        assert is_round(m, lattice=lat).round == brute_round(m), name


def test_roundness_witness_covers(corpus):
    m, lat = corpus("c4")
    verdict = is_round(m, lattice=lat)
    assert not verdict.round
    f1, f2 = verdict.witness
    assert f1 | f2 == lat.top and f1 != lat.top and f2 != lat.top


def test_complete_graphs_round(corpus):
    for name, expected in (("k4", True), ("k5", True), ("c4", False),
                           ("c5", False)):
        m, lat = corpus(name)
        assert is_round(m, lattice=lat).round == expected


def test_supersolvable_matches_brute(corpus):
    for name in ("u23", "u34", "fano", "example-7", "c4", "c5", "k4",
                 "fish-sign", "bn-2", "q2-z3", "dn-3"):
        m, lat = corpus(name)
        got = supersolvable_chain(m, lattice=lat) is not None
        assert got == brute_supersolvable(m), name


def test_supersolvable_chain_structure(corpus):
    m, lat = corpus("fano")
    cert = supersolvable_chain(m, lattice=lat)
    flats = cert.flats
    assert flats[0] == lat.bottom and flats[-1] == lat.top
    for lo, hi in zip(flats, flats[1:]):
        assert lo & hi == lo
        assert lat.rank_of[hi] == lat.rank_of[lo] + 1
        assert violating_flat_in_context(lat, lo, hi) is None


def test_chain_flats_modular_in_whole_lattice(corpus):
    # peeling is equivalent to a chain modular in the full lattice
    for name in ("fano", "k4", "bn-3", "ziegler-11"):
        m, lat = corpus(name)
        cert = supersolvable_chain(m, lattice=lat)
        assert cert is not None
        for f in cert.flats:
            assert is_modular_flat(m, f, lattice=lat), name


def test_published_chain_for_ziegler_11(corpus):
    m, lat = corpus("ziegler-11")
    chain = [mask_of([3]), mask_of([3, 4, 5]), mask_of([0, 3, 4, 5, 6, 7, 8])]
    ranks = [1, 2, 3]
    for f, r in zip(chain, ranks):
        assert f in lat and lat.rank_of[f] == r
        assert is_modular_flat(m, f, lattice=lat)


def test_not_supersolvable_members(corpus):
    for name in ("example-13", "ziegler-19", "bowtie-frame", "dn-4", "u34"):
        m, lat = corpus(name)
        assert supersolvable_chain(m, lattice=lat) is None, name


def test_example_13_no_modular_coatoms(corpus):
    m, lat = corpus("example-13")
    for z in lat.coatoms():
        assert violating_flat_in_context(lat, z, lat.top) is not None
