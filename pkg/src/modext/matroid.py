"""Simple matroids given by exact rank oracles.

Ground sets are atoms 0..n-1 and subsets are plain Python ints used as
bitmasks (bit a set <=> atom a in the subset), which keeps subset algebra
to single machine operations at desk scale.  A Matroid wraps a pure rank
function with a memo table; derived matroids (restrictions, simplified
contractions) delegate their queries to the parent oracle, so memoized
ranks are shared.

The memo is an ordinary dict: entries are only ever inserted, values are
deterministic functions of the key, and CPython dict reads/writes are
atomic, so concurrent readers cannot observe an inconsistent cache.
"""

from __future__ import annotations

from itertools import combinations

from .algebra import Field, FieldMatrix, gf_row_rank, integer_row_rank, _clear_row_denominators
from .errors import InvalidInput, NotAFlat, NotSimple, TooLarge

DEFAULT_MAX_ATOMS = 24


# ---------------------------------------------------------------------------
# bitmask subset helpers


def mask_of(atoms) -> int:
    """Bitmask of an iterable of atom indices."""
    m = 0
    for a in atoms:
        m |= 1 << a
    return m


def atom_tuple(mask: int) -> tuple:
    """Ascending tuple of atom indices in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_atoms(mask: int):
    """Yield atom indices of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lex_key(mask: int) -> tuple:
    """Sort key ordering subsets lexicographically by their atom tuples."""
    return atom_tuple(mask)


# ---------------------------------------------------------------------------
# the matroid itself


class Matroid:
    """A simple matroid on atoms 0..n-1 with a memoized exact rank oracle.

    `rank_fn` must be a pure function of the subset bitmask satisfying the
    rank axioms; constructors in this module validate simplicity before
    handing one over.  `backend` records where the oracle came from
    ("linear", "graphic", "frame", "lift", or "explicit").
    """

    def __init__(self, n, rank_fn, *, labels=None, backend="explicit",
                 max_atoms=DEFAULT_MAX_ATOMS):
        if n > max_atoms:
            raise TooLarge(f"{n} atoms exceeds the guardrail of {max_atoms}")
        if n < 0:
            raise InvalidInput("negative ground-set size")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InvalidInput("label count does not match ground-set size")
            if len(set(labels)) != n:
                raise InvalidInput("labels must be unique")
        self.n = n
        self.labels = labels
        self.backend = backend
        self.full_mask = (1 << n) - 1
        self._rank_fn = rank_fn
        self._memo = {0: 0}
        self._circuit_cache = None

    # -- rank and closure

    def rank(self, subset: int) -> int:
        """Rank of a subset bitmask (memoized)."""
        memo = self._memo
        r = memo.get(subset)
        if r is None:
            if subset & ~self.full_mask:
                raise InvalidInput(f"subset {bin(subset)} outside ground set of size {self.n}")
            r = self._rank_fn(subset)
            memo[subset] = r
        return r

    @property
    def full_rank(self) -> int:
        return self.rank(self.full_mask)

    def closure(self, subset: int) -> int:
        """Smallest flat containing the subset."""
        r = self.rank(subset)
        out = subset
        rest = self.full_mask & ~subset
        while rest:
            low = rest & -rest
            rest ^= low
            if self.rank(subset | low) == r:
                out |= low
        return out

    def is_flat(self, subset: int) -> bool:
        return self.closure(subset) == subset

    def label_of(self, atom: int) -> str:
        if self.labels is not None:
            return self.labels[atom]
        return f"e{atom}"

    def check_simple(self) -> None:
        """Raise NotSimple when a rank-0 atom or a parallel pair exists."""
        for a in range(self.n):
            if self.rank(1 << a) == 0:
                raise NotSimple([a], f"atom {a} has rank 0")
        for a, b in combinations(range(self.n), 2):
            if self.rank((1 << a) | (1 << b)) < 2:
                raise NotSimple([a, b], f"atoms {a} and {b} are parallel")

    # -- minors

    def restrict(self, flat: int) -> "Matroid":
        """Restriction to a flat, reindexed to atoms 0..|flat|-1.

        The rank oracle delegates to the parent, so memoized ranks are
        shared.  Labels are inherited.
        """
        if not self.is_flat(flat):
            raise NotAFlat(f"restriction requires a flat, got {sorted(atom_tuple(flat))}")
        atoms = atom_tuple(flat)
        bits = [1 << a for a in atoms]

        def rank_fn(sub, _bits=bits, _parent=self):
            expanded = 0
            i = 0
            while sub:
                if sub & 1:
                    expanded |= _bits[i]
                sub >>= 1
                i += 1
            return _parent.rank(expanded)

        labels = tuple(self.label_of(a) for a in atoms) if self.labels else None
        return Matroid(len(atoms), rank_fn, labels=labels, backend=self.backend)

    def contract_simplify(self, flat: int):
        """Simplification of the contraction by a flat.

        Returns (matroid, atom_map).  The atoms of the result are the flats
        covering `flat`; original atom a outside the flat maps through
        atom_map to the index of its cover closure(flat | {a}).  The rank
        oracle evaluates r(union of covers) - r(flat) on the parent.
        """
        if not self.is_flat(flat):
            raise NotAFlat(f"contraction requires a flat, got {sorted(atom_tuple(flat))}")
        base = self.rank(flat)
        cover_of = {}
        for a in iter_atoms(self.full_mask & ~flat):
            cover_of[a] = self.closure(flat | (1 << a))
        covers = sorted(set(cover_of.values()), key=lex_key)
        index = {c: i for i, c in enumerate(covers)}
        atom_map = {a: index[c] for a, c in cover_of.items()}

        def rank_fn(sub, _covers=covers, _flat=flat, _base=base, _parent=self):
            union = _flat
            i = 0
            while sub:
                if sub & 1:
                    union |= _covers[i]
                sub >>= 1
                i += 1
            return _parent.rank(union) - _base

        m = Matroid(len(covers), rank_fn, backend="explicit")
        return m, atom_map

    def __repr__(self):
        return f"Matroid(n={self.n}, backend={self.backend!r})"


# ---------------------------------------------------------------------------
# constructors


def linear_matroid(matrix: FieldMatrix, labels=None, max_atoms=DEFAULT_MAX_ATOMS) -> Matroid:
    """Matroid of the columns of an exact matrix; atom i is column i.

    Raises NotSimple (listing the offending columns) on zero or pairwise
    proportional columns.
    """
    field = matrix.field
    ncols = matrix.ncols
    cols = [matrix.column(j) for j in range(ncols)]
    for j, col in enumerate(cols):
        if all(field.is_zero(x) for x in col):
            raise NotSimple([j], f"column {j} is zero")
    for i, j in combinations(range(ncols), 2):
        if _proportional(field, cols[i], cols[j]):
            raise NotSimple([i, j], f"columns {i} and {j} are proportional")

    if field.is_rational:
        int_cols = [tuple(_clear_row_denominators(list(c))) for c in cols]

        def rank_fn(mask, _cols=int_cols):
            return integer_row_rank([list(_cols[a]) for a in iter_atoms(mask)])
    else:
        p = field.p
        res_cols = [tuple(int(x) % p for x in c) for c in cols]

        def rank_fn(mask, _cols=res_cols, _p=p):
            return gf_row_rank([list(_cols[a]) for a in iter_atoms(mask)], _p)

    return Matroid(ncols, rank_fn, labels=labels, backend="linear", max_atoms=max_atoms)


def _proportional(field: Field, u, v) -> bool:
    """Whether two nonzero vectors over the field differ by a scalar."""
    pivot = next(i for i, x in enumerate(u) if not field.is_zero(x))
    if field.is_zero(v[pivot]):
        return False
    lam = field.mul(v[pivot], field.inv(u[pivot]))
    return all(field.is_zero(field.sub(field.mul(lam, a), b)) for a, b in zip(u, v))


def graphic_matroid(n_vertices: int, edges, labels=None, max_atoms=DEFAULT_MAX_ATOMS) -> Matroid:
    """Cycle matroid of a simple graph on vertices 0..n_vertices-1.

    Atom i is edge i.  Loops and repeated edges are rejected because the
    matroid would not be simple.
    """
    edge_list = []
    seen = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise InvalidInput(f"edge {e!r} out of vertex range")
        if u == v:
            raise InvalidInput(f"loop at vertex {u} is not allowed in a simple graph")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise NotSimple([len(edge_list)], f"repeated edge {key}")
        seen.add(key)
        edge_list.append(key)
    edge_list = tuple(edge_list)
    if labels is None and edge_list:
        labels = tuple(f"{u}-{v}" for u, v in edge_list)

    def rank_fn(mask, _edges=edge_list):
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        nv = 0
        ncomp = 0
        for a in iter_atoms(mask):
            u, v = _edges[a]
            for w in (u, v):
                if w not in parent:
                    parent[w] = w
                    nv += 1
                    ncomp += 1
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                ncomp -= 1
        return nv - ncomp

    return Matroid(len(edge_list), rank_fn, labels=labels, backend="graphic",
                   max_atoms=max_atoms)


# ---------------------------------------------------------------------------
# circuits


def circuits(m: Matroid):
    """All circuits (minimal dependent sets) as a tuple of bitmasks.

    Enumerates subsets by increasing cardinality up to rank+1; a set is a
    circuit when it is dependent and every single-deletion is independent.
    Results are cached on the matroid.
    """
    if m._circuit_cache is not None:
        return m._circuit_cache
    out = []
    r = m.full_rank
    ground = range(m.n)
    for size in range(1, min(m.n, r + 1) + 1):
        for combo in combinations(ground, size):
            mask = mask_of(combo)
            if m.rank(mask) != size - 1:
                continue
            if all(m.rank(mask ^ (1 << a)) == size - 1 for a in combo):
                out.append(mask)
    m._circuit_cache = tuple(out)
    return m._circuit_cache


# ---------------------------------------------------------------------------
# graph utilities


def is_chordal(n_vertices: int, edges) -> bool:
    """Whether a simple graph is chordal, by simplicial-vertex peeling."""
    adj = {v: set() for v in range(n_vertices)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    alive = set(range(n_vertices))
    while alive:
        simplicial = None
        for v in sorted(alive):
            nb = adj[v] & alive
            if all(w in adj[u] for u, w in combinations(sorted(nb), 2)):
                simplicial = v
                break
        if simplicial is None:
            return False
        alive.discard(simplicial)
    return True


# ---------------------------------------------------------------------------
# JSON loading


def load_matroid(data, max_atoms=DEFAULT_MAX_ATOMS) -> Matroid:
    """Build a matroid from a JSON descriptor.

    Supported descriptors:
      {"type": "linear", "field": {...}, "matrix": [[...], ...], "labels": [...]}
      {"type": "graph", "vertices": n, "edges": [[u, v], ...]}
    """
    if not isinstance(data, dict):
        raise InvalidInput("matroid descriptor must be an object")
    kind = data.get("type")
    if kind == "linear":
        try:
            field = Field.from_json(data["field"])
            matrix = FieldMatrix(field, data["matrix"])
        except KeyError as exc:
            raise InvalidInput(f"linear descriptor missing {exc}") from exc
        return linear_matroid(matrix, labels=data.get("labels"), max_atoms=max_atoms)
    if kind == "graph":
        try:
            return graphic_matroid(int(data["vertices"]), data["edges"],
                                   labels=data.get("labels"), max_atoms=max_atoms)
        except KeyError as exc:
            raise InvalidInput(f"graph descriptor missing {exc}") from exc
    raise InvalidInput(f"unknown matroid type {kind!r}")
