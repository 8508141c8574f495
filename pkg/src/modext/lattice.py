"""The geometric lattice of flats: enumeration, Mobius function, charpoly.

Flats are bitmasks over the matroid's atoms; the partial order is subset
containment, meets are intersections, and the join of two flats is the
closure of their union (whose rank equals the rank of the plain union).
Enumeration walks rank levels upward: the flats of rank k+1 are exactly
the closures cl(F | {a}) over rank-k flats F and atoms a outside F, which
also yields every covering pair.
"""

from __future__ import annotations

from .algebra import IntPolynomial
from .errors import NotAFlat, NotComparable, TooLarge
from .matroid import Matroid, atom_tuple, lex_key

DEFAULT_MAX_FLATS = 2 ** 20


class FlatLattice:
    """The lattice of flats of a simple matroid, fully enumerated."""

    def __init__(self, matroid: Matroid, levels, covers):
        self.matroid = matroid
        self.levels = [sorted(level, key=lex_key) for level in levels]
        self.rank_of = {}
        for k, level in enumerate(self.levels):
            for f in level:
                self.rank_of[f] = k
        self.covers = {f: tuple(sorted(cs, key=lex_key)) for f, cs in covers.items()}
        self.covers.setdefault(self.top, ())
        children = {f: [] for f in self.rank_of}
        for f, cs in self.covers.items():
            for c in cs:
                children[c].append(f)
        self.children = {f: tuple(sorted(cs, key=lex_key)) for f, cs in children.items()}
        self._below = {}
        self._above = {}
        self._mobius = None
        self._charpoly = None
        self._upper = {}

    # -- basic structure

    @property
    def bottom(self) -> int:
        return self.levels[0][0]

    @property
    def top(self) -> int:
        return self.levels[-1][0]

    @property
    def rank(self) -> int:
        return len(self.levels) - 1

    def flats(self):
        """All flats, by rank then lexicographic atom order."""
        for level in self.levels:
            yield from level

    def __len__(self):
        return len(self.rank_of)

    def __contains__(self, flat: int) -> bool:
        return flat in self.rank_of

    def require(self, flat: int) -> int:
        if flat not in self.rank_of:
            raise NotAFlat(f"{sorted(atom_tuple(flat))} is not a flat of this matroid")
        return flat

    def below(self, flat: int):
        """Flats contained in `flat`, ordered by rank then lex (cached)."""
        cached = self._below.get(flat)
        if cached is None:
            self.require(flat)
            cached = tuple(f for f in self.flats() if f & flat == f)
            self._below[flat] = cached
        return cached

    def above(self, flat: int):
        """Flats containing `flat`, ordered by rank then lex (cached)."""
        cached = self._above.get(flat)
        if cached is None:
            self.require(flat)
            cached = tuple(f for f in self.flats() if f & flat == flat)
            self._above[flat] = cached
        return cached

    def coatoms(self):
        """Flats covered by the top flat."""
        if self.rank == 0:
            return ()
        return tuple(self.levels[self.rank - 1])

    # -- Mobius function and characteristic polynomials

    def mobius(self) -> dict:
        """Mobius values mu(bottom, X) for every flat X (cached)."""
        if self._mobius is None:
            self._mobius = _mobius_over(list(self.flats()), self.bottom)
        return self._mobius

    def charpoly(self) -> IntPolynomial:
        """Characteristic polynomial of the whole lattice (cached)."""
        if self._charpoly is None:
            mu = self.mobius()
            self._charpoly = _chi_from_mobius(mu, self.rank_of, self.rank)
        return self._charpoly

    def interval_charpoly(self, bottom: int, top: int) -> IntPolynomial:
        """Characteristic polynomial of the interval [bottom, top]."""
        self.require(bottom)
        self.require(top)
        if bottom & top != bottom:
            raise NotComparable(
                f"{sorted(atom_tuple(bottom))} is not below {sorted(atom_tuple(top))}")
        flats = [f for f in self.above(bottom) if f & top == f]
        mu = _mobius_over(flats, bottom)
        top_rank = self.rank_of[top]
        return _chi_from_mobius(mu, self.rank_of, top_rank, shift=self.rank_of[bottom])

    def upper_charpoly(self, flat: int) -> IntPolynomial:
        """Charpoly of [flat, top]; equals the charpoly of the simplified
        contraction by the flat.  Cached per flat."""
        cached = self._upper.get(flat)
        if cached is None:
            cached = self.interval_charpoly(flat, self.top)
            self._upper[flat] = cached
        return cached

    # -- serialization

    def to_json(self) -> dict:
        mu = self.mobius()
        return {
            "rank": self.rank,
            "levels": [
                [{"atoms": list(atom_tuple(f)), "mobius": mu[f]} for f in level]
                for level in self.levels
            ],
        }

    def __repr__(self):
        return f"FlatLattice(rank={self.rank}, flats={len(self)})"


def _mobius_over(flats, bottom) -> dict:
    """Mobius values over an arbitrary containment-closed flat collection.

    `flats` must contain `bottom` and be closed under the interval it is
    meant to describe; the recursion is mu(bottom)=1,
    mu(X) = -sum(mu(Y) for bottom <= Y < X).
    """
    order = sorted(flats, key=lambda f: (bin(f).count("1"), f))
    mu = {}
    for x in order:
        if x == bottom:
            mu[x] = 1
            continue
        acc = 0
        for y in order:
            if y == x:
                continue
            if y & x == y and mu.get(y) is not None:
                acc += mu[y]
        mu[x] = -acc
    return mu


def _chi_from_mobius(mu: dict, rank_of: dict, top_rank: int, shift: int = 0) -> IntPolynomial:
    coeffs = [0] * (top_rank - shift + 1)
    for f, value in mu.items():
        coeffs[top_rank - rank_of[f]] += value
    return IntPolynomial(coeffs)


def enumerate_flats(m: Matroid, max_flats: int = DEFAULT_MAX_FLATS) -> FlatLattice:
    """Enumerate the lattice of flats of a simple matroid.

    Walks rank levels upward by closing each flat with one more atom;
    raises TooLarge when the flat count exceeds `max_flats`.
    """
    bottom = m.closure(0)
    levels = [[bottom]]
    covers = {}
    total = 1
    full = m.full_mask
    current = [bottom]
    while current and current[0] != full:
        nxt = set()
        for f in current:
            cs = set()
            rest = full & ~f
            while rest:
                low = rest & -rest
                rest ^= low
                g = m.closure(f | low)
                cs.add(g)
                nxt.add(g)
            covers[f] = cs
        total += len(nxt)
        if total > max_flats:
            raise TooLarge(f"flat count exceeds the guardrail of {max_flats}")
        current = sorted(nxt)
        levels.append(current)
    return FlatLattice(m, levels, covers)


def mobius(lattice: FlatLattice) -> dict:
    """Mobius values mu(0, X) of a lattice, keyed by flat bitmask."""
    return dict(lattice.mobius())


def charpoly(m) -> IntPolynomial:
    """Characteristic polynomial of a matroid (or an already-built lattice)."""
    if isinstance(m, FlatLattice):
        return m.charpoly()
    return enumerate_flats(m).charpoly()


def interval_charpoly(lattice: FlatLattice, bottom: int, top: int) -> IntPolynomial:
    """Characteristic polynomial of an interval of the lattice of flats."""
    return lattice.interval_charpoly(bottom, top)
