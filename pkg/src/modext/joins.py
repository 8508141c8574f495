"""Modular joins and the modularly-extended class.

A modular join presents the ground set as the union of two proper modular
flats E1 and E2 with intersection flat X.  The charpoly identity
chi(M) * chi(M|X) = chi(M|E1) * chi(M|E2) then holds exactly.

The modularly-extended class is the smallest one containing the empty
matroid and closed under (a) adding a modular coatom whose restriction is
in the class and (b) modular joins over a round intersection with both
sides in the class; `me_certify` searches for such a certificate
recursively over the lattice, memoized per flat.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import poly_mul
from .certificates import (
    EmptyCertificate,
    ModularCoatomCertificate,
    ModularJoinCertificate,
)
from .divisional import is_divisional_atom
from .errors import IdentityViolation, InvalidInput, LiftViolation
from .lattice import FlatLattice, charpoly, enumerate_flats
from .matroid import Matroid, atom_tuple, lex_key
from .modularity import round_in_context, violating_flat_in_context


@dataclass(frozen=True)
class JoinDecomposition:
    """Two proper modular flats covering the ground set, with X = e1 & e2."""

    e1: int
    e2: int
    x: int
    x_round: bool

    def to_json(self) -> dict:
        return {
            "e1": list(atom_tuple(self.e1)),
            "e2": list(atom_tuple(self.e2)),
            "x": list(atom_tuple(self.x)),
            "x_round": self.x_round,
        }


def _modular_flats_in_context(lat: FlatLattice, ctx: int) -> list:
    """Flats of the restriction to ctx that are modular within it."""
    return [f for f in lat.below(ctx)
            if violating_flat_in_context(lat, f, ctx) is None]


def _join_pairs(lat: FlatLattice, ctx: int):
    """Deterministic pairs of proper modular flats of M|ctx covering ctx."""
    mods = [f for f in _modular_flats_in_context(lat, ctx) if f != ctx]
    for i, e1 in enumerate(mods):
        for e2 in mods[i + 1:]:
            if e1 | e2 == ctx:
                yield e1, e2


def find_modular_joins(m: Matroid, lattice: FlatLattice | None = None) -> list:
    """All modular join decompositions of the whole matroid.

    Pairs are unordered, listed lexicographically by atom sets, each
    annotated with the roundness of the restriction to the intersection.
    """
    lat = lattice if lattice is not None else enumerate_flats(m)
    out = []
    for e1, e2 in _join_pairs(lat, lat.top):
        x = e1 & e2
        ok, _ = round_in_context(lat, x)
        out.append(JoinDecomposition(e1, e2, x, ok))
    return out


def brylawski_identity_check(m: Matroid, d: JoinDecomposition,
                             lattice: FlatLattice | None = None) -> bool:
    """Exact check of chi(M) * chi(M|X) == chi(M|E1) * chi(M|E2).

    Raises IdentityViolation carrying all four polynomials on failure.
    """
    lat = lattice if lattice is not None else enumerate_flats(m)
    bottom = lat.bottom
    chi_m = lat.charpoly()
    chi_x = lat.interval_charpoly(bottom, d.x)
    chi_e1 = lat.interval_charpoly(bottom, d.e1)
    chi_e2 = lat.interval_charpoly(bottom, d.e2)
    if poly_mul(chi_m, chi_x) != poly_mul(chi_e1, chi_e2):
        raise IdentityViolation(chi_m, chi_x, chi_e1, chi_e2)
    return True


def me_certify(m: Matroid, lattice: FlatLattice | None = None):
    """Certificate that the matroid is modularly extended, or None.

    Recursion over restrictions to flats of the root lattice: the empty
    flat is certified outright; otherwise try every modular coatom of the
    restriction (lexicographic) whose own restriction certifies, then every
    modular join whose intersection is round with both sides certified.
    One memo table keyed by flat serves the whole search.
    """
    lat = lattice if lattice is not None else enumerate_flats(m)
    memo = {}

    def cert(ctx):
        if ctx in memo:
            return memo[ctx]
        if ctx == lat.bottom:
            result = EmptyCertificate()
        else:
            result = None
            for z in lat.children[ctx]:
                if violating_flat_in_context(lat, z, ctx) is not None:
                    continue
                sub = cert(z)
                if sub is not None:
                    result = ModularCoatomCertificate(z, sub)
                    break
            if result is None:
                for e1, e2 in _join_pairs(lat, ctx):
                    x = e1 & e2
                    ok, _ = round_in_context(lat, x)
                    if not ok:
                        continue
                    c1 = cert(e1)
                    if c1 is None:
                        continue
                    c2 = cert(e2)
                    if c2 is None:
                        continue
                    result = ModularJoinCertificate(e1, e2, x, c1, c2)
                    break
        memo[ctx] = result
        return result

    return cert(lat.top)


def join_divisional_lift_check(m: Matroid, d: JoinDecomposition, e: int) -> bool:
    """Check that a divisional atom of the factor M|E1 stays divisional in M.

    `e` is an atom of m lying in E1 - X and divisional in the restriction
    to E1 (verified; InvalidInput otherwise).  Confirms e is divisional in
    m and that the lifted contraction charpoly satisfies
    chi(si(M/e)) * chi(M|X) == chi(si(M1/e)) * chi(M|E2) exactly; raises
    LiftViolation on either failure.
    """
    bit = 1 << e
    if not (d.e1 & bit) or (d.x & bit):
        raise InvalidInput(f"atom {e} is not in E1 minus X")
    m1 = m.restrict(d.e1)
    e_in_m1 = atom_tuple(d.e1).index(e)
    ok1, _ = is_divisional_atom(m1, e_in_m1)
    if not ok1:
        raise InvalidInput(f"atom {e} is not divisional in the restriction to E1")
    ok, _ = is_divisional_atom(m, e)
    if not ok:
        raise LiftViolation(f"atom {e} is divisional in M|E1 but not in M")
    contraction, _ = m.contract_simplify(m.closure(bit))
    m1_contraction, _ = m1.contract_simplify(m1.closure(1 << e_in_m1))
    chi_me = charpoly(contraction)
    chi_x = charpoly(m.restrict(d.x))
    chi_m1e = charpoly(m1_contraction)
    chi_e2 = charpoly(m.restrict(d.e2))
    if poly_mul(chi_me, chi_x) != poly_mul(chi_m1e, chi_e2):
        raise LiftViolation(
            f"contraction charpoly of atom {e} does not factor through the join: "
            f"{chi_me} * {chi_x} != {chi_m1e} * {chi_e2}")
    return True
