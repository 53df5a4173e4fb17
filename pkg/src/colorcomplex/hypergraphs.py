"""Hypergraphs on vertex set {1..n} and the standard parameterized families.

Edges are vertex sets of size >= 1; a size-1 edge plays the role of a loop.
Instances are immutable and hashable; the edge list is kept in canonical
order (each edge sorted, edges sorted lexicographically) so equal
hypergraphs serialize identically.
"""

import json

from .errors import ParameterError, StructureError
from .jsonutil import canonical_json


class Hypergraph:
    __slots__ = ("n", "edges", "edge_masks")

    def __init__(self, n, edges):
        if not isinstance(n, int) or n < 1:
            raise ParameterError(f"n must be a positive integer, got {n!r}")
        canon = []
        for e in edges:
            vs = tuple(sorted(set(e)))
            if len(vs) != len(tuple(e)):
                raise StructureError(f"edge {tuple(e)!r} repeats a vertex")
            if not vs:
                raise StructureError("empty edge")
            if vs[0] < 1 or vs[-1] > n:
                raise StructureError(f"edge {vs!r} outside 1..{n}")
            canon.append(vs)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise StructureError(f"duplicate edge {a!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))
        masks = []
        for vs in canon:
            m = 0
            for v in vs:
                m |= 1 << (v - 1)
            masks.append(m)
        object.__setattr__(self, "edge_masks", tuple(masks))

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={list(map(list, self.edges))})"

    def uniformity(self):
        """Common edge size, or None when edges have mixed sizes or are absent."""
        sizes = {len(e) for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def has_loop(self):
        return any(len(e) == 1 for e in self.edges)

    def to_json_dict(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json_text(self):
        return canonical_json(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d):
        try:
            n = d["n"]
            edges = d["edges"]
        except (KeyError, TypeError) as exc:
            raise StructureError(f"hypergraph JSON needs 'n' and 'edges': {exc}")
        return cls(n, edges)

    @classmethod
    def from_json_text(cls, text):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StructureError(f"invalid JSON: {exc}")
        return cls.from_json_dict(d)


def _validate_nk(n, k):
    if not (isinstance(n, int) and isinstance(k, int)):
        raise ParameterError("n and k must be integers")
    if k < 1 or k > n:
        raise ParameterError(f"need 1 <= k <= n, got n={n}, k={k}")


def complete_uniform(n, k):
    """All k-subsets of {1..n} as edges."""
    _validate_nk(n, k)
    from itertools import combinations

    return Hypergraph(n, combinations(range(1, n + 1), k))


def vertex_star(n, k, center=1):
    """All k-subsets of {1..n} that contain the center vertex."""
    _validate_nk(n, k)
    if not 1 <= center <= n:
        raise ParameterError(f"center {center} outside 1..{n}")
    from itertools import combinations

    others = [v for v in range(1, n + 1) if v != center]
    edges = [(center,) + c for c in combinations(others, k - 1)]
    return Hypergraph(n, edges)


def star(n, k, covered=None):
    """Edges share the core {1..k-1}; tips k..covered; rest isolated.

    With covered=n (the default) the l-k+1 = n-k+1 edges cover every vertex.
    Smaller `covered` leaves vertices covered+1..n isolated, which is the
    shape whose top homology tracks the chromatic polynomial of the core
    contraction.
    """
    _validate_nk(n, k)
    if k < 2:
        raise ParameterError("star needs k >= 2")
    l = n if covered is None else covered
    if not k <= l <= n:
        raise ParameterError(f"need k <= covered <= n, got covered={l}")
    core = tuple(range(1, k))
    edges = [core + (t,) for t in range(k, l + 1)]
    return Hypergraph(n, edges)


def diagonal(n, k):
    """Consecutive windows {i,...,i+k-1} for i = 1..n-k+1, no wraparound."""
    _validate_nk(n, k)
    if k < 2:
        raise ParameterError("diagonal needs k >= 2")
    edges = [tuple(range(i, i + k)) for i in range(1, n - k + 2)]
    return Hypergraph(n, edges)


def looped_complete(n):
    """Every 2-subset plus a loop at every vertex; its block-containment
    complex is the full cyclic complex."""
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")
    from itertools import combinations

    edges = [(v,) for v in range(1, n + 1)]
    edges += list(combinations(range(1, n + 1), 2))
    return Hypergraph(n, edges)


def complete_graph(n):
    return complete_uniform(n, 2)


def contract_core(h):
    """Collapse the common core of all edges to a single vertex.

    Requires every edge to consist of the core plus exactly one extra vertex,
    so the result is a graph: new vertex 1 is the collapsed core, the
    remaining vertices keep their relative order as 2..(n - |core| + 1).
    Vertices outside every edge survive as isolated vertices.  Returns
    (graph, mapping) where mapping sends old vertices to new ones (core
    vertices all map to 1).
    """
    if not h.edges:
        raise ParameterError("contract_core needs at least one edge")
    core = h.edge_masks[0]
    for m in h.edge_masks[1:]:
        core &= m
    if core == 0:
        raise StructureError("edges have no common core vertex")
    core_set = {v for v in range(1, h.n + 1) if core >> (v - 1) & 1}
    for e in h.edges:
        extra = [v for v in e if v not in core_set]
        if len(extra) != 1:
            raise StructureError(
                f"edge {e!r} must be the core plus exactly one vertex"
            )
    mapping = {}
    nxt = 2
    for v in range(1, h.n + 1):
        if v in core_set:
            mapping[v] = 1
        else:
            mapping[v] = nxt
            nxt += 1
    new_n = nxt - 1
    new_edges = set()
    for e in h.edges:
        img = tuple(sorted({mapping[v] for v in e}))
        new_edges.add(img)
    return Hypergraph(new_n, sorted(new_edges)), mapping
