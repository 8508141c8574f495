"""Divisional atoms and divisional flags.

An atom e is divisional when the charpoly of the simplified contraction
si(M/e) divides chi(M) exactly.  A divisional flag is a saturated chain of
flats from bottom to top whose upward contraction charpolys divide each
in turn; the step quotients are forced to be linear, and their product
telescopes back to chi(M).

The flag search runs on the lattice of flats: the lattice of si(M/X) is
the interval [X, top], so chi(si(M/X)) is the interval charpoly, while
`is_divisional_atom` goes through an explicit contraction.  The two routes
are cross-checked in the test suite.
"""

from __future__ import annotations

from .algebra import IntPolynomial, poly_exact_div
from .certificates import DivisionalFlag
from .errors import InternalInconsistency, NotModular
from .lattice import FlatLattice, enumerate_flats, charpoly
from .matroid import Matroid, atom_tuple
from .modularity import violating_flat_in_context


def is_divisional_atom(m: Matroid, e: int, lattice: FlatLattice | None = None):
    """Whether atom e is divisional; returns (verdict, linear quotient or None)."""
    contraction, _ = m.contract_simplify(m.closure(1 << e))
    chi_m = lattice.charpoly() if lattice is not None else charpoly(m)
    chi_c = charpoly(contraction)
    q = poly_exact_div(chi_m, chi_c)
    if q is None:
        return False, None
    if q.degree != 1 or not q.is_monic:
        raise InternalInconsistency(f"atom quotient {q} is not linear monic")
    return True, q


def divisional_flag(m: Matroid, lattice: FlatLattice | None = None):
    """A divisional flag of the matroid, or None when none exists.

    Depth-first search upward through the lattice: from flat X try each
    cover Y (lexicographic) whose upper-interval charpoly divides that of
    X; verdicts are memoized per flat.  The top two steps always divide
    (chi = 1 and t - 1 there), so at corank <= 2 any saturated chain
    completes the flag.
    """
    lat = lattice if lattice is not None else enumerate_flats(m)
    top = lat.top
    rank = lat.rank
    memo = {}

    def search(x):
        if x in memo:
            return memo[x]
        if x == top:
            result = (x,)
        elif rank - lat.rank_of[x] <= 2:
            result = (x,) + search(lat.covers[x][0])
        else:
            result = None
            chi_x = lat.upper_charpoly(x)
            for y in lat.covers[x]:
                if poly_exact_div(chi_x, lat.upper_charpoly(y)) is None:
                    continue
                sub = search(y)
                if sub is not None:
                    result = (x,) + sub
                    break
        memo[x] = result
        return result

    flats = search(lat.bottom)
    if flats is None:
        return None
    roots = []
    for a, b in zip(flats, flats[1:]):
        q = poly_exact_div(lat.upper_charpoly(a), lat.upper_charpoly(b))
        if q is None or q.degree != 1 or not q.is_monic:
            raise InternalInconsistency(
                f"flag step {sorted(atom_tuple(a))} -> {sorted(atom_tuple(b))} "
                f"has non-linear quotient {q}")
        roots.append(-q.coeffs[0])
    return DivisionalFlag(tuple(flats), tuple(roots))


def stanley_division_check(m: Matroid, x: int, lattice: FlatLattice | None = None) -> bool:
    """Whether chi of the restriction to a modular flat divides chi(M).

    Re-verifies modularity first and raises NotModular when x fails the
    rank equation.
    """
    lat = lattice if lattice is not None else enumerate_flats(m)
    lat.require(x)
    bad = violating_flat_in_context(lat, x, lat.top)
    if bad is not None:
        raise NotModular(
            f"{sorted(atom_tuple(x))} is not modular; rank equation fails "
            f"against {sorted(atom_tuple(bad))}")
    chi_lower = lat.interval_charpoly(lat.bottom, x)
    return poly_exact_div(lat.charpoly(), chi_lower) is not None


def flag_quotient_product(flag: DivisionalFlag) -> IntPolynomial:
    """Product of all step quotients of a flag (telescopes to chi(M))."""
    out = IntPolynomial.one()
    for q in flag.quotients():
        out = out * q
    return out
