"""Matroid construction, rank/closure behaviour, minors, circuits."""

import random
from itertools import combinations

import pytest

from modext.algebra import Field, FieldMatrix
from modext.errors import InvalidInput, NotAFlat, NotSimple, TooLarge
from modext.matroid import (Matroid, atom_tuple, circuits, graphic_matroid,
                            is_chordal, linear_matroid, load_matroid, mask_of)

from oracles import brute_chordal, brute_closure


def u23():
    return linear_matroid(FieldMatrix(Field.gf(2), [[1, 0, 1], [0, 1, 1]]))


def test_u23_ranks_and_closure():
    m = u23()
    assert m.n == 3 and m.full_rank == 2
    assert m.rank(0b111) == 2
    for a in range(3):
        assert m.rank(1 << a) == 1
        assert m.closure(1 << a) == 1 << a
    assert m.closure(0b011) == 0b111
    assert m.is_flat(0b111) and not m.is_flat(0b011)


def test_simplicity_rejected():
    with pytest.raises(NotSimple):  # zero column = loop
        linear_matroid(FieldMatrix(Field.gf(2), [[1, 0], [0, 0]]))
    with pytest.raises(NotSimple):  # parallel columns
        linear_matroid(FieldMatrix(Field.gf(3), [[1, 2], [2, 4 % 3]]))
    with pytest.raises(NotSimple):  # graphic: parallel edges
        graphic_matroid(2, [(0, 1), (0, 1)])
    with pytest.raises(InvalidInput):  # graphic: loop edge
        graphic_matroid(2, [(0, 0)])


def test_guardrail():
    with pytest.raises(TooLarge):
        Matroid(30, lambda s: bin(s).count("1"))
    Matroid(30, lambda s: bin(s).count("1"), max_atoms=32)  # opt-in is fine


def test_graphic_rank_is_spanning_forest_size():
    rng = random.Random(3)
    for _ in range(25):
        nv = rng.randint(1, 6)
        pool = list(combinations(range(nv), 2))
        rng.shuffle(pool)
        edges = pool[: rng.randint(0, len(pool))]
        m = graphic_matroid(nv, edges)
        for _ in range(40):
            mask = rng.randrange(1 << len(edges)) if edges else 0
            chosen = [edges[i] for i in atom_tuple(mask)]
            # forest size = nv - number of components on nv vertices
            parent = list(range(nv))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            comps = nv
            for u, v in chosen:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
            assert m.rank(mask) == nv - comps


def test_restrict_and_contract():
    m = u23()
    flat = m.closure(0b001)
    sub = m.restrict(flat)
    assert sub.n == 1 and sub.full_rank == 1
    with pytest.raises(NotAFlat):
        m.restrict(0b011)
    q, atom_map = m.contract_simplify(0b001)
    # contracting an atom of a 3-point line leaves a single parallel class
    assert q.full_rank == 1 and q.n == 1
    assert set(atom_map) == {1, 2} and set(atom_map.values()) == {0}


def test_contract_simplify_of_fano_atom(corpus):
    m, _ = corpus("fano")
    q, _ = m.contract_simplify(0b1)
    assert q.full_rank == 2 and q.n == 3  # PG(2,2)/point = 3-point line


def test_circuits_u23():
    m = u23()
    assert circuits(m) == (0b111,)


def test_circuits_are_minimal_dependent(corpus):
    m, _ = corpus("example-7")
    for c in circuits(m):
        k = bin(c).count("1")
        assert m.rank(c) == k - 1
        for a in atom_tuple(c):
            smaller = c & ~(1 << a)
            assert m.rank(smaller) == bin(smaller).count("1")


def test_closure_matches_brute(corpus):
    for name in ("u23", "fano", "example-7", "k4"):
        m, _ = corpus(name)
        rng = random.Random(11)
        for _ in range(80):
            s = rng.randrange(1 << m.n)
            assert m.closure(s) == brute_closure(m, s)


def test_is_chordal_matches_brute_force():
    for nv in range(0, 5):
        pairs = list(combinations(range(nv), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            assert is_chordal(nv, edges) == brute_chordal(nv, edges), edges
    rng = random.Random(5)
    pairs = list(combinations(range(5), 2))
    for _ in range(120):
        mask = rng.randrange(1 << len(pairs))
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        assert is_chordal(5, edges) == brute_chordal(5, edges), edges


def test_mask_helpers():
    assert mask_of([0, 2, 5]) == 0b100101
    assert atom_tuple(0b100101) == (0, 2, 5)
    assert mask_of([]) == 0


def test_load_matroid_roundtrip():
    m = u23()
    data = {"type": "linear",
            "field": {"kind": "gf", "p": 2},
            "matrix": [[1, 0, 1], [0, 1, 1]],
            "labels": ["a", "b", "c"]}
    m2 = load_matroid(data)
    assert m2.n == m.n
    for s in range(1 << 3):
        assert m2.rank(s) == m.rank(s)
    assert m2.label_of(2) == "c"


def test_empty_matroid():
    m = graphic_matroid(0, [])
    assert m.n == 0 and m.full_rank == 0
    assert m.closure(0) == 0 and m.is_flat(0)
