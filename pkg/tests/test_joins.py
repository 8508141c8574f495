"""Modular joins, the product identity, and the certified class."""

import pytest

from modext.algebra import IntPolynomial, poly_exact_div
from modext.certificates import (EmptyCertificate, ModularCoatomCertificate,
                                 ModularJoinCertificate)
from modext.divisional import is_divisional_atom
from modext.errors import InvalidInput
from modext.joins import (brylawski_identity_check, find_modular_joins,
                          join_divisional_lift_check, me_certify)
from modext.lattice import interval_charpoly
from modext.matroid import atom_tuple, mask_of
from modext.modularity import is_modular_flat, is_round
from modext.verify import verify_certificate


def test_no_joins_for_round_matroids(corpus):
    for name in ("u23", "fano", "k4", "bn-2"):
        m, lat = corpus(name)
        assert is_round(m, lattice=lat).round
        assert find_modular_joins(m, lattice=lat) == []


def test_example_13_join(corpus):
    m, lat = corpus("example-13")
    joins = find_modular_joins(m, lattice=lat)
    assert joins, "expected at least one decomposition"
    wanted = [d for d in joins if d.x == mask_of([0])]
    assert wanted
    d = wanted[0]
    assert d.e1 | d.e2 == lat.top and d.e1 & d.e2 == d.x
    assert d.x_round
    assert is_modular_flat(m, d.e1, lattice=lat)
    assert is_modular_flat(m, d.e2, lattice=lat)


def test_ziegler_19_join_over_three_point_flat(corpus):
    m, lat = corpus("ziegler-19")
    joins = find_modular_joins(m, lattice=lat)
    assert any(atom_tuple(d.x) == (0, 1, 2) for d in joins)


def test_product_identity_all_joins(corpus):
    for name in ("example-13", "ziegler-19", "example-7", "c4", "u34",
                 "fish-sign", "dn-4"):
        m, lat = corpus(name)
        for d in find_modular_joins(m, lattice=lat):
            assert brylawski_identity_check(m, d, lattice=lat), name


def test_product_identity_is_the_stated_equation(corpus):
    m, lat = corpus("example-13")
    d = [j for j in find_modular_joins(m, lattice=lat)
         if j.x == mask_of([0])][0]
    chi = lat.charpoly()
    chi_x = interval_charpoly(lat, lat.bottom, d.x)
    chi_1 = interval_charpoly(lat, lat.bottom, d.e1)
    chi_2 = interval_charpoly(lat, lat.bottom, d.e2)
    assert chi * chi_x == chi_1 * chi_2


def test_me_certificates_shape(corpus):
    m, lat = corpus("example-13")
    cert = me_certify(m, lattice=lat)
    assert isinstance(cert, ModularJoinCertificate)
    assert cert.x == mask_of([0])
    assert atom_tuple(cert.e1) == tuple(range(7))
    assert atom_tuple(cert.e2) == (0,) + tuple(range(7, 13))

    m, lat = corpus("fano")
    cert = me_certify(m, lattice=lat)
    assert isinstance(cert, ModularCoatomCertificate)

    from modext.matroid import graphic_matroid
    empty = graphic_matroid(0, [])
    assert isinstance(me_certify(empty), EmptyCertificate)


def test_me_rejections(corpus):
    for name in ("u34", "dn-4", "c4", "c5", "fish-sign"):
        m, lat = corpus(name)
        assert me_certify(m, lattice=lat) is None, name


def test_me_acceptances(corpus):
    for name in ("u23", "fano", "k5", "bn-3", "q2-z3", "q3-z3", "braid-4",
                 "example-7", "ziegler-11", "ziegler-19", "bowtie-frame",
                 "bowtie-lift", "example-13"):
        m, lat = corpus(name)
        assert me_certify(m, lattice=lat) is not None, name


def test_me_certificates_verify(corpus):
    for name in ("u23", "fano", "example-13", "ziegler-19", "bowtie-frame",
                 "bn-3", "example-7"):
        m, lat = corpus(name)
        cert = me_certify(m, lattice=lat)
        report = verify_certificate(m, cert, lattice=lat)
        assert report.ok, (name, report.failures)


@pytest.mark.parametrize("name,x_atoms,expected", [
    ("example-13", (0,), (3, 4, 6)),
    ("ziegler-19", (0, 1, 2), (8, 9, 10)),
])
def test_join_divisional_lift(corpus, name, x_atoms, expected):
    m, lat = corpus(name)
    d = [j for j in find_modular_joins(m, lattice=lat)
         if atom_tuple(j.x) == x_atoms][0]
    m1 = m.restrict(d.e1)
    e1_atoms = atom_tuple(d.e1)
    divisional = tuple(
        parent for parent in e1_atoms
        if parent not in x_atoms
        and is_divisional_atom(m1, e1_atoms.index(parent))[0]
    )
    assert divisional == expected
    # every divisional atom of M|E1 outside X lifts to a divisional atom of M
    for parent in divisional:
        assert join_divisional_lift_check(m, d, parent)
        assert is_divisional_atom(m, parent, lattice=lat)[0]


def test_join_divisional_lift_rejects_bad_atoms(corpus):
    m, lat = corpus("ziegler-19")
    d = [j for j in find_modular_joins(m, lattice=lat)
         if atom_tuple(j.x) == (0, 1, 2)][0]
    with pytest.raises(InvalidInput):
        join_divisional_lift_check(m, d, 0)  # inside X
    with pytest.raises(InvalidInput):
        join_divisional_lift_check(m, d, 11)  # on the E2 side
    with pytest.raises(InvalidInput):
        join_divisional_lift_check(m, d, 3)  # in E1 - X but not divisional


def test_join_construction_from_pieces(corpus):
    # restricting example-13 to either side of its join gives matroids that
    # certify on their own, matching the class closure statement
    m, lat = corpus("example-13")
    cert = me_certify(m, lattice=lat)
    for side in (cert.e1, cert.e2):
        sub = m.restrict(side)
        assert me_certify(sub) is not None
