"""Modularity of flats, roundness, and supersolvability.

A flat X is modular when r(X) + r(Y) = r(X meet Y) + r(X join Y) for every
flat Y.  Three equivalent tests are implemented: the rank equation itself,
a coatom triangle test (every pair of atoms outside a coatom closes a
triangle through it), and the short-circuit axiom over circuits.  Each
returns a ModularityWitness carrying the verdict plus the first offending
object on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .certificates import ChainCertificate
from .errors import EmptyFlat, NotACoatom, NotAFlat, NotModularCoatom
from .lattice import FlatLattice, enumerate_flats
from .matroid import Matroid, atom_tuple, circuits, iter_atoms, lex_key


@dataclass(frozen=True)
class ModularityWitness:
    """Verdict of a modularity test plus the evidence behind it.

    On failure exactly one kind of evidence is set: `violating_flat` for the
    rank equation, `pair` for the coatom triangle test, or `circuit`+`atom`
    for the short-circuit axiom.  On success under the coatom test,
    `pairing` maps each outside pair to a triangle-closing atom.
    """

    modular: bool
    criterion: str
    flat: int
    violating_flat: int | None = None
    pair: tuple | None = None
    circuit: int | None = None
    atom: int | None = None
    pairing: tuple | None = None

    def __bool__(self) -> bool:
        return self.modular

    def to_json(self) -> dict:
        out = {
            "criterion": self.criterion,
            "modular": self.modular,
            "flat": list(atom_tuple(self.flat)),
        }
        if self.violating_flat is not None:
            out["violating_flat"] = list(atom_tuple(self.violating_flat))
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.circuit is not None:
            out["circuit"] = list(atom_tuple(self.circuit))
        if self.atom is not None:
            out["atom"] = self.atom
        if self.pairing is not None:
            out["pairing"] = [[list(pair), f] for pair, f in self.pairing]
        return out


@dataclass(frozen=True)
class RoundnessVerdict:
    """Roundness verdict; on failure, two proper flats covering the ground set."""

    round: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.round

    def to_json(self) -> dict:
        out = {"round": self.round}
        if self.witness is not None:
            out["witness"] = [list(atom_tuple(f)) for f in self.witness]
        return out


def _lattice_for(m: Matroid, lattice: FlatLattice | None) -> FlatLattice:
    return lattice if lattice is not None else enumerate_flats(m)


# ---------------------------------------------------------------------------
# the rank equation, in and out of context


def violating_flat_in_context(lat: FlatLattice, z: int, ctx: int):
    """First flat Y <= ctx violating the rank equation against z, or None.

    Checks modularity of z within the restriction to the flat ctx; with
    ctx the top flat this is plain modularity.  Meets of flats are their
    intersections, and the rank of a join equals the rank of the union.
    """
    m = lat.matroid
    rank_of = lat.rank_of
    rz = rank_of[z]
    for y in lat.below(ctx):
        if rz + rank_of[y] != rank_of[z & y] + m.rank(z | y):
            return y
    return None


def is_modular_flat(m: Matroid, x: int, lattice: FlatLattice | None = None) -> ModularityWitness:
    """Rank-equation modularity test against every flat."""
    lat = _lattice_for(m, lattice)
    lat.require(x)
    bad = violating_flat_in_context(lat, x, lat.top)
    if bad is None:
        return ModularityWitness(True, "rank-equation", x)
    return ModularityWitness(False, "rank-equation", x, violating_flat=bad)


def modular_flats(m: Matroid, lattice: FlatLattice | None = None) -> tuple:
    """All modular flats, by rank then lexicographic atom order."""
    lat = _lattice_for(m, lattice)
    top = lat.top
    return tuple(f for f in lat.flats()
                 if violating_flat_in_context(lat, f, top) is None)


# ---------------------------------------------------------------------------
# coatom triangle test


def is_modular_coatom_triangle(m: Matroid, x: int,
                               lattice: FlatLattice | None = None) -> ModularityWitness:
    """Coatom modularity via triangles: every atom pair outside x must close
    a circuit with some atom of x."""
    lat = _lattice_for(m, lattice)
    lat.require(x)
    if lat.rank_of[x] != lat.rank - 1:
        raise NotACoatom(f"{sorted(atom_tuple(x))} has rank {lat.rank_of[x]}, "
                         f"need {lat.rank - 1}")
    outside = atom_tuple(m.full_mask & ~x)
    inside = atom_tuple(x)
    pairing = []
    for e, e2 in combinations(outside, 2):
        pair_mask = (1 << e) | (1 << e2)
        hit = None
        for f in inside:
            if m.rank(pair_mask | (1 << f)) == 2:
                hit = f
                break
        if hit is None:
            return ModularityWitness(False, "coatom-triangle", x, pair=(e, e2))
        pairing.append(((e, e2), hit))
    return ModularityWitness(True, "coatom-triangle", x, pairing=tuple(pairing))


def coatom_pairing(m: Matroid, x: int, lattice: FlatLattice | None = None) -> dict:
    """The pairing (a, b) -> f of a modular coatom, with uniqueness enforced.

    For each atom pair outside x there must be exactly one atom f of x with
    {a, b, f} a circuit; otherwise NotModularCoatom is raised.  The triple
    f(a,b), f(a,c), f(b,c) of any three outside atoms is dependent.
    """
    lat = _lattice_for(m, lattice)
    lat.require(x)
    if lat.rank_of[x] != lat.rank - 1:
        raise NotACoatom(f"{sorted(atom_tuple(x))} is not a coatom")
    outside = atom_tuple(m.full_mask & ~x)
    inside = atom_tuple(x)
    out = {}
    for a, b in combinations(outside, 2):
        pair_mask = (1 << a) | (1 << b)
        hits = [f for f in inside if m.rank(pair_mask | (1 << f)) == 2]
        if len(hits) != 1:
            raise NotModularCoatom(
                f"pair ({a}, {b}) outside {sorted(atom_tuple(x))} has "
                f"{len(hits)} triangle completions")
        out[(a, b)] = hits[0]
    return out


# ---------------------------------------------------------------------------
# short-circuit axiom


def short_circuit_check(m: Matroid, x: int) -> ModularityWitness:
    """Modular short-circuit axiom over all circuits.

    For every circuit C and atom e in C - X there must be an atom x0 of X
    such that a circuit through e lies inside {x0} | (C - X); the inner
    existence test is the closure condition r(T) == r(T - {e}).
    """
    if x == 0:
        raise EmptyFlat("the short-circuit axiom is stated for nonempty flats")
    if not m.is_flat(x):
        raise NotAFlat(f"{sorted(atom_tuple(x))} is not a flat")
    for c in circuits(m):
        out = c & ~x
        if out == 0 or out == c:
            continue
        for e in iter_atoms(out):
            ok = False
            for x0 in iter_atoms(x):
                t = out | (1 << x0)
                if m.rank(t) == m.rank(t & ~(1 << e)):
                    ok = True
                    break
            if not ok:
                return ModularityWitness(False, "short-circuit", x, circuit=c, atom=e)
    return ModularityWitness(True, "short-circuit", x)


# ---------------------------------------------------------------------------
# roundness


def round_in_context(lat: FlatLattice, ctx: int):
    """Roundness of the restriction to ctx: (verdict, witness-pair or None).

    A ground set is a union of two proper flats iff it is a union of two
    coatoms, so only pairs of flats covered by ctx are scanned.
    """
    coats = lat.children.get(ctx, ())
    for i, c1 in enumerate(coats):
        for c2 in coats[i + 1:]:
            if c1 | c2 == ctx:
                return False, (c1, c2)
    return True, None


def is_round(m: Matroid, lattice: FlatLattice | None = None) -> RoundnessVerdict:
    """Whether the ground set is not a union of two proper flats."""
    lat = _lattice_for(m, lattice)
    ok, witness = round_in_context(lat, lat.top)
    return RoundnessVerdict(ok, witness)


# ---------------------------------------------------------------------------
# supersolvability


def supersolvable_chain(m: Matroid, lattice: FlatLattice | None = None):
    """A saturated chain of modular flats from bottom to top, or None.

    Depth-first search peeling modular coatoms of the current restriction,
    backtracking over all of them in lexicographic order; by the tower
    property every flat of the returned chain is modular in m itself.
    """
    lat = _lattice_for(m, lattice)
    memo = {}

    def chain_for(ctx):
        if ctx in memo:
            return memo[ctx]
        if ctx == lat.bottom:
            result = (ctx,)
        else:
            result = None
            for z in lat.children[ctx]:
                if violating_flat_in_context(lat, z, ctx) is not None:
                    continue
                sub = chain_for(z)
                if sub is not None:
                    result = sub + (ctx,)
                    break
        memo[ctx] = result
        return result

    chain = chain_for(lat.top)
    if chain is None:
        return None
    return ChainCertificate(chain)
