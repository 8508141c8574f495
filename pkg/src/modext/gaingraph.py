"""Gain graphs over finite groups and their frame and lift matroids.

A gain graph has edges {u,v}_g labelled by group elements, with
{u,v}_g = {v,u}_{g^-1}; edges are canonicalized to u < v.  Loops are kept
separately (a set of vertices) and count as unbalanced cycles.  A cycle is
balanced when its gain product along the traversal is the identity.

Matroid atoms are edges in listed order followed by loops in ascending
vertex order; the extended lift matroid prepends an extra atom `inf`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Field
from .arrangement import Arrangement
from .errors import (
    HasLoops,
    InvalidInput,
    NoAdditiveEmbedding,
    NoMultiplicativeEmbedding,
    NotSimpleFrame,
)
from .matroid import Matroid, iter_atoms


# ---------------------------------------------------------------------------
# finite groups


class FiniteGroup:
    """A finite group given by its multiplication table.

    Elements are indices 0..order-1 with 0 the identity; `names` are their
    display strings.  Optional embeddings map elements injectively and
    homomorphically into the multiplicative or additive group of a field;
    both are validated at construction.
    """

    def __init__(self, names, table, *, mult_embedding=None, add_embedding=None):
        self.names = tuple(str(x) for x in names)
        n = len(self.names)
        if len(set(self.names)) != n or n == 0:
            raise InvalidInput("group element names must be nonempty and unique")
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InvalidInput("group table must be square of the group order")
        if any(x < 0 or x >= n for row in self.table for x in row):
            raise InvalidInput("group table entries out of range")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise InvalidInput("element 0 must be the identity")
        self.inverse = []
        for a in range(n):
            invs = [b for b in range(n) if self.table[a][b] == 0]
            if len(invs) != 1 or self.table[invs[0]][a] != 0:
                raise InvalidInput(f"element {a} lacks a two-sided inverse")
            self.inverse.append(invs[0])
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise InvalidInput("group table is not associative")
        self.mult_embedding = self._check_embedding(mult_embedding, additive=False)
        self.add_embedding = self._check_embedding(add_embedding, additive=True)

    def _check_embedding(self, emb, additive: bool):
        if emb is None:
            return None
        field, values = emb
        values = tuple(field.of(v) for v in values)
        if len(values) != self.order or len(set(values)) != self.order:
            raise InvalidInput("embedding must be injective over all elements")
        for a in range(self.order):
            for b in range(self.order):
                image = field.add(values[a], values[b]) if additive \
                    else field.mul(values[a], values[b])
                if image != values[self.table[a][b]]:
                    raise InvalidInput("embedding is not a homomorphism")
        if not additive and any(field.is_zero(v) for v in values):
            raise InvalidInput("multiplicative embedding hits zero")
        if additive and not field.is_zero(values[0]):
            raise InvalidInput("additive embedding must send identity to zero")
        return field, values

    @property
    def order(self) -> int:
        return len(self.names)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.op(x, a)
            k += 1
        return k

    def generator(self):
        """An element of full order when the group is cyclic, else None."""
        for a in range(self.order):
            if self.element_order(a) == self.order:
                return a
        return None

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(str(name))
        except ValueError as exc:
            raise InvalidInput(f"unknown group element {name!r}") from exc

    # -- standard groups

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls(("1",), ((0,),))

    @classmethod
    def sign(cls) -> "FiniteGroup":
        return cls(("+1", "-1"), ((0, 1), (1, 0)))

    @classmethod
    def zmod(cls, n: int) -> "FiniteGroup":
        if n < 1:
            raise InvalidInput("zmod order must be positive")
        names = tuple(str(k) for k in range(n))
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        return cls(names, table)

    def to_json(self) -> dict:
        if self.order == 1:
            return {"kind": "trivial"}
        if self.names == ("+1", "-1"):
            return {"kind": "sign"}
        if all(self.names[k] == str(k) for k in range(self.order)) and all(
                self.table[a][b] == (a + b) % self.order
                for a in range(self.order) for b in range(self.order)):
            return {"kind": "zmod", "p": self.order}
        return {"kind": "table", "names": list(self.names),
                "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, data) -> "FiniteGroup":
        if not isinstance(data, dict) or "kind" not in data:
            raise InvalidInput(f"bad group descriptor {data!r}")
        kind = data["kind"]
        if kind == "trivial":
            return cls.trivial()
        if kind == "sign":
            return cls.sign()
        if kind == "zmod":
            return cls.zmod(int(data.get("p", 0)))
        if kind == "table":
            try:
                return cls(data["names"], data["table"])
            except KeyError as exc:
                raise InvalidInput(f"table group missing {exc}") from exc
        raise InvalidInput(f"unknown group kind {kind!r}")

    def __repr__(self):
        return f"FiniteGroup({'/'.join(self.names)})"


def multiplicative_embedding(group: FiniteGroup, field: Field):
    """Injective homomorphism into the multiplicative group of the field.

    Finite subgroups of a field's multiplicative group are cyclic, so one
    exists iff the group is cyclic of an order n with a primitive n-th root
    of unity in the field: n <= 2 over Q, n dividing p-1 over GF(p).
    Returns the tuple of images indexed by element.
    """
    if group.mult_embedding is not None and group.mult_embedding[0] == field:
        return group.mult_embedding[1]
    n = group.order
    if n == 1:
        return (field.one(),)
    g = group.generator()
    if g is None:
        raise NoMultiplicativeEmbedding(
            f"group of order {n} is not cyclic, so it has no field embedding")
    if field.is_rational:
        if n != 2:
            raise NoMultiplicativeEmbedding(f"Q has no elements of order {n}")
        omega = Fraction(-1)
    else:
        p = field.p
        if (p - 1) % n != 0:
            raise NoMultiplicativeEmbedding(f"GF({p})^* has no subgroup of order {n}")
        gen = _gf_generator(p)
        omega = pow(gen, (p - 1) // n, p)
    values = [None] * n
    x, power = 0, field.one()
    for _ in range(n):
        values[x] = power
        x = group.op(x, g)
        power = field.mul(power, omega)
    return tuple(values)


def additive_embedding(group: FiniteGroup, field: Field):
    """Injective homomorphism into the additive group of the field.

    Over Q only the trivial group embeds; over GF(p) the group must be
    cyclic of order p (or trivial).
    """
    if group.add_embedding is not None and group.add_embedding[0] == field:
        return group.add_embedding[1]
    n = group.order
    if n == 1:
        return (field.zero(),)
    if field.is_rational:
        raise NoAdditiveEmbedding("Q has no finite additive subgroups beyond 0")
    p = field.p
    if n != p:
        raise NoAdditiveEmbedding(f"GF({p})+ has no subgroup of order {n}")
    g = group.generator()
    if g is None:
        raise NoAdditiveEmbedding(f"group of order {n} is not cyclic")
    values = [None] * n
    x = 0
    for k in range(n):
        values[x] = k % p
        x = group.op(x, g)
    return tuple(values)


def _gf_generator(p: int) -> int:
    """Smallest generator of GF(p)^*."""
    for g in range(2, p):
        x, k = g, 1
        while x != 1:
            x = x * g % p
            k += 1
        if k == p - 1:
            return g
    return 1  # p == 2


# ---------------------------------------------------------------------------
# gain graphs


@dataclass(frozen=True)
class GainEdge:
    """An edge {u,v}_g in canonical orientation u < v."""

    u: int
    v: int
    gain: int

    def endpoints(self):
        return self.u, self.v

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u

    def gain_from(self, start: int, group: FiniteGroup) -> int:
        """Gain reading the edge as a step from `start` to the other end."""
        return self.gain if start == self.u else group.inv(self.gain)


class GainGraph:
    """A finite gain graph: vertices 0..n-1, canonical edges, loop set."""

    def __init__(self, n: int, group: FiniteGroup, edges, loops=()):
        if n < 0:
            raise InvalidInput("negative vertex count")
        self.n = n
        self.group = group
        canon = []
        for e in edges:
            u, v, g = e
            u, v = int(u), int(v)
            g = group.index_of(g) if isinstance(g, str) else int(g)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge {e!r} out of vertex range")
            if u == v:
                raise InvalidInput(f"edge {e!r} is a loop; list loops separately")
            if not (0 <= g < group.order):
                raise InvalidInput(f"edge {e!r} has an unknown gain")
            if u > v:
                u, v, g = v, u, group.inv(g)
            canon.append(GainEdge(u, v, g))
        self.edges = tuple(canon)
        loops = sorted({int(v) for v in loops})
        if loops and not (0 <= loops[0] and loops[-1] < n):
            raise InvalidInput("loop vertex out of range")
        self.loops = tuple(loops)

    # -- atoms: edges first, then loops

    @property
    def num_atoms(self) -> int:
        return len(self.edges) + len(self.loops)

    def atom_label(self, i: int) -> str:
        if i < len(self.edges):
            e = self.edges[i]
            return f"{{{e.u},{e.v}}}_{self.group.names[e.gain]}"
        return f"loop({self.loops[i - len(self.edges)]})"

    def atom_labels(self) -> tuple:
        return tuple(self.atom_label(i) for i in range(self.num_atoms))

    def incident(self, v: int):
        """Indices of edges touching vertex v."""
        return [i for i, e in enumerate(self.edges) if v in (e.u, e.v)]

    def edges_between(self, u: int, v: int):
        a, b = min(u, v), max(u, v)
        return [e for e in self.edges if (e.u, e.v) == (a, b)]

    def delete_vertex(self, v: int) -> "GainGraph":
        """Induced gain graph on the other vertices (reindexed)."""
        keep = [w for w in range(self.n) if w != v]
        new = {w: i for i, w in enumerate(keep)}
        edges = [(new[e.u], new[e.v], e.gain) for e in self.edges if v not in (e.u, e.v)]
        loops = [new[w] for w in self.loops if w != v]
        return GainGraph(len(keep), self.group, edges, loops)

    def induced_atoms(self, vertices) -> int:
        """Bitmask of atoms (edges and loops) inside a vertex subset."""
        vs = set(vertices)
        mask = 0
        for i, e in enumerate(self.edges):
            if e.u in vs and e.v in vs:
                mask |= 1 << i
        for j, w in enumerate(self.loops):
            if w in vs:
                mask |= 1 << (len(self.edges) + j)
        return mask

    def to_json(self) -> dict:
        return {
            "vertices": self.n,
            "group": self.group.to_json(),
            "edges": [[e.u, e.v, self.group.names[e.gain]] for e in self.edges],
            "loops": list(self.loops),
        }

    @classmethod
    def from_json(cls, data) -> "GainGraph":
        if not isinstance(data, dict):
            raise InvalidInput("gain graph descriptor must be an object")
        try:
            group = FiniteGroup.from_json(data["group"])
            return cls(int(data["vertices"]), group, data["edges"],
                       data.get("loops", ()))
        except KeyError as exc:
            raise InvalidInput(f"gain graph descriptor missing {exc}") from exc

    def __repr__(self):
        return (f"GainGraph(n={self.n}, group={self.group!r}, "
                f"edges={len(self.edges)}, loops={len(self.loops)})")


# ---------------------------------------------------------------------------
# balance analysis


@dataclass(frozen=True)
class ComponentReport:
    """One connected component of a selected atom subset."""

    vertices: tuple
    atoms: int
    balanced: bool
    potentials: tuple
    unbalanced_witnesses: tuple


@dataclass(frozen=True)
class BalanceReport:
    """Balance analysis of a subset of edges and loops."""

    components: tuple

    @property
    def balanced(self) -> bool:
        return all(c.balanced for c in self.components)

    def to_json(self) -> dict:
        return {
            "balanced": self.balanced,
            "components": [
                {
                    "vertices": list(c.vertices),
                    "balanced": c.balanced,
                    "potentials": [[v, g] for v, g in c.potentials],
                    "unbalanced_witnesses": [
                        sorted(iter_atoms(w)) for w in c.unbalanced_witnesses],
                }
                for c in self.components
            ],
        }


def analyze_balance(g: GainGraph, atoms: int | None = None) -> BalanceReport:
    """Connected components of an atom subset with balance verdicts.

    Potentials are spanning-tree gains from the component root; an edge
    {u,v}_h off the tree is consistent iff pot(u)*h == pot(v), and any
    inconsistent edge contributes its fundamental cycle as an unbalanced
    witness.  Loops are unbalanced witnesses outright.
    """
    if atoms is None:
        atoms = (1 << g.num_atoms) - 1
    group = g.group
    ne = len(g.edges)
    edge_idx = [i for i in iter_atoms(atoms) if i < ne]
    loop_idx = [i for i in iter_atoms(atoms) if i >= ne]
    adj = {}
    for i in edge_idx:
        e = g.edges[i]
        adj.setdefault(e.u, []).append(i)
        adj.setdefault(e.v, []).append(i)
    for i in loop_idx:
        adj.setdefault(g.loops[i - ne], [])
    seen = set()
    tree_edges = {}  # vertex -> atom of the edge that first reached it
    components = []
    for root in sorted(adj):
        if root in seen:
            continue
        pot = {root: 0}
        order = [root]
        seen.add(root)
        queue = deque([root])
        comp_atoms = 0
        witnesses = []
        while queue:
            u = queue.popleft()
            for i in adj[u]:
                e = g.edges[i]
                comp_atoms |= 1 << i
                w = e.other(u)
                if w not in pot:
                    pot[w] = group.op(pot[u], e.gain_from(u, group))
                    tree_edges[w] = i
                    seen.add(w)
                    order.append(w)
                    queue.append(w)
        # chord consistency over the settled component
        for i in edge_idx:
            e = g.edges[i]
            if e.u in pot and tree_edges.get(e.u) != i and tree_edges.get(e.v) != i:
                if group.op(pot[e.u], e.gain) != pot[e.v]:
                    cycle = (1 << i) | _tree_path_atoms(g, tree_edges, e.u, e.v)
                    witnesses.append(cycle)
        for i in loop_idx:
            if g.loops[i - ne] in pot:
                comp_atoms |= 1 << i
                witnesses.append(1 << i)
        components.append(ComponentReport(
            vertices=tuple(order),
            atoms=comp_atoms,
            balanced=not witnesses,
            potentials=tuple((v, pot[v]) for v in order),
            unbalanced_witnesses=tuple(witnesses),
        ))
    return BalanceReport(tuple(components))


def _tree_path_atoms(g: GainGraph, tree_edges: dict, u: int, v: int) -> int:
    """Atoms of the tree path between two vertices of one BFS tree."""
    def to_root(w):
        path = []
        while w in tree_edges:
            i = tree_edges[w]
            path.append((w, i))
            w = g.edges[i].other(w)
        return path

    pu, pv = to_root(u), to_root(v)
    iu = {i for _, i in pu}
    common = next((i for _, i in pv if i in iu), None)
    mask = 0
    for _, i in pu:
        mask |= 1 << i
        if i == common:
            break
    for _, i in pv:
        if i == common:
            break
        mask |= 1 << i
    if common is not None:
        mask &= ~(1 << common)
    return mask


# ---------------------------------------------------------------------------
# frame and lift matroids


def frame_matroid(g: GainGraph) -> Matroid:
    """The frame matroid: per component, rank = |V| - 1 + [unbalanced].

    A component is unbalanced when it holds a loop or an edge inconsistent
    with spanning-tree potentials.  Repeated identical edges would be
    parallel atoms, so they raise NotSimpleFrame.
    """
    seen = {}
    for i, e in enumerate(g.edges):
        key = (e.u, e.v, e.gain)
        if key in seen:
            raise NotSimpleFrame([seen[key], i], f"repeated edge {g.atom_label(i)}")
        seen[key] = i

    ne = len(g.edges)
    group = g.group

    def rank_fn(mask, _g=g, _ne=ne, _group=group):
        rank = 0
        adj = {}
        loop_vs = set()
        for i in iter_atoms(mask):
            if i < _ne:
                e = _g.edges[i]
                adj.setdefault(e.u, []).append(e)
                adj.setdefault(e.v, []).append(e)
            else:
                w = _g.loops[i - _ne]
                adj.setdefault(w, [])
                loop_vs.add(w)
        seen_v = set()
        for root in adj:
            if root in seen_v:
                continue
            pot = {root: 0}
            seen_v.add(root)
            queue = [root]
            unbalanced = root in loop_vs
            comp_edges = []
            while queue:
                u = queue.pop()
                for e in adj[u]:
                    comp_edges.append((u, e))
                    w = e.other(u)
                    if w not in pot:
                        pot[w] = _group.op(pot[u], e.gain_from(u, _group))
                        seen_v.add(w)
                        queue.append(w)
                        if w in loop_vs:
                            unbalanced = True
            if not unbalanced:
                for u, e in comp_edges:
                    if _group.op(pot[e.u], e.gain) != pot[e.v]:
                        unbalanced = True
                        break
            rank += len(pot) - 1 + (1 if unbalanced else 0)
        return rank

    return Matroid(g.num_atoms, rank_fn, labels=g.atom_labels() or None,
                   backend="frame")


def lift_matroid(g: GainGraph) -> Matroid:
    """The extended lift matroid on {inf} followed by the edges.

    A subset is independent when no cycle in it is balanced and it holds at
    most one of {inf, an unbalanced cycle}; rank is computed by greedy
    growth over that independence oracle.  Loops are rejected.
    """
    if g.loops:
        raise HasLoops("the extended lift matroid is defined for loopless gain graphs")
    group = g.group
    edges = g.edges
    labels = ("inf",) + tuple(g.atom_label(i) for i in range(len(edges)))

    def independent(mask) -> bool:
        has_inf = bool(mask & 1)
        adj = {}
        for i in iter_atoms(mask & ~1):
            e = edges[i - 1]
            adj.setdefault(e.u, []).append((i, e))
            adj.setdefault(e.v, []).append((i, e))
        seen = set()
        cyclic = 0
        for root in adj:
            if root in seen:
                continue
            pot = {root: 0}
            seen.add(root)
            queue = [root]
            tree = set()
            comp = {}
            while queue:
                u = queue.pop()
                for i, e in adj[u]:
                    comp[i] = e
                    w = e.other(u)
                    if w not in pot:
                        pot[w] = group.op(pot[u], e.gain_from(u, group))
                        seen.add(w)
                        tree.add(i)
                        queue.append(w)
            extra = len(comp) - len(tree)
            if extra > 1:
                return False
            if extra == 1:
                chord = next(e for i, e in comp.items() if i not in tree)
                if group.op(pot[chord.u], chord.gain) == pot[chord.v]:
                    return False  # the unique cycle is balanced
                cyclic += 1
        return cyclic + (1 if has_inf else 0) <= 1

    def rank_fn(mask):
        basis = 0
        r = 0
        for i in iter_atoms(mask):
            cand = basis | (1 << i)
            if independent(cand):
                basis = cand
                r += 1
        return r

    return Matroid(len(edges) + 1, rank_fn, labels=labels, backend="lift")


# ---------------------------------------------------------------------------
# simplicial vertices


def _has_edge_with_gain(g: GainGraph, u: int, w: int, gain_from_u: int) -> bool:
    return any(e.gain_from(u, g.group) == gain_from_u for e in g.edges_between(u, w))


def bias_simplicial_vertices(g: GainGraph) -> list:
    """Vertices v that are bias simplicial.

    (i) any two-edge path u -e1- v -e2- w with u != w closes with an edge
    {u,w} of the composed gain; (ii) parallel edges at v with different
    gains force a loop at the other endpoint; (iii) a loop at v forces a
    loop at every neighbour.
    """
    group = g.group
    loops = set(g.loops)
    out = []
    for v in range(g.n):
        inc = g.incident(v)
        ok = True
        for i in inc:
            e1 = g.edges[i]
            u = e1.other(v)
            g1 = e1.gain_from(u, group)  # u -> v
            for j in inc:
                e2 = g.edges[j]
                w = e2.other(v)
                if w == u:
                    continue
                h = e2.gain_from(v, group)  # v -> w
                if not _has_edge_with_gain(g, u, w, group.op(g1, h)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for i in inc:
                for j in inc:
                    if i < j:
                        e1, e2 = g.edges[i], g.edges[j]
                        if e1.endpoints() == e2.endpoints() and e1.gain != e2.gain:
                            if e1.other(v) not in loops:
                                ok = False
                                break
                if not ok:
                    break
        if ok and v in loops:
            ok = all(g.edges[i].other(v) in loops for i in inc)
        if ok:
            out.append(v)
    return out


def link_simplicial_vertices(g: GainGraph) -> list:
    """Vertices satisfying the path-closure clause alone; loopless only."""
    if g.loops:
        raise HasLoops("link simpliciality is defined for loopless gain graphs")
    group = g.group
    out = []
    for v in range(g.n):
        inc = g.incident(v)
        ok = True
        for i in inc:
            e1 = g.edges[i]
            u = e1.other(v)
            g1 = e1.gain_from(u, group)
            for j in inc:
                e2 = g.edges[j]
                w = e2.other(v)
                if w == u:
                    continue
                if not _has_edge_with_gain(g, u, w, group.op(g1, e2.gain_from(v, group))):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# standard graphs and realizations


def complete_gain_graph(n: int, group: FiniteGroup, loops: bool = False) -> GainGraph:
    """K_n^G: all gains on every vertex pair; loops everywhere when asked."""
    edges = [(u, v, g) for u in range(n) for v in range(u + 1, n)
             for g in range(group.order)]
    return GainGraph(n, group, edges, range(n) if loops else ())


def realize_frame_arrangement(g: GainGraph, field: Field) -> Arrangement:
    """Hyperplanes x_u - emb(g) x_v = 0 per edge and x_w = 0 per loop.

    Needs an injective multiplicative embedding of the gain group; atom
    order matches the gain graph's.
    """
    emb = multiplicative_embedding(g.group, field)
    forms = []
    for e in g.edges:
        row = [field.zero()] * g.n
        row[e.u] = field.one()
        row[e.v] = field.neg(emb[e.gain])
        forms.append(row)
    for w in g.loops:
        row = [field.zero()] * g.n
        row[w] = field.one()
        forms.append(row)
    return Arrangement(field, g.n, forms, labels=g.atom_labels() or None)


def realize_lift_arrangement(g: GainGraph, field: Field) -> Arrangement:
    """Hyperplanes z = 0 (first, for inf) and x_u - x_v - emb(g) z = 0.

    Coordinates are (z, x_0, ..., x_{n-1}); needs an injective additive
    embedding of the gain group; loopless gain graphs only.
    """
    if g.loops:
        raise HasLoops("lift realization is defined for loopless gain graphs")
    emb = additive_embedding(g.group, field)
    dim = g.n + 1
    z_form = [field.one()] + [field.zero()] * g.n
    forms = [z_form]
    for e in g.edges:
        row = [field.zero()] * dim
        row[0] = field.neg(emb[e.gain])
        row[1 + e.u] = field.one()
        row[1 + e.v] = field.neg(field.one())
        forms.append(row)
    labels = ("inf",) + tuple(g.atom_label(i) for i in range(len(g.edges)))
    return Arrangement(field, dim, forms, labels=labels)
