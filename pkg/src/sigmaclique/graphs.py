"""Bitset-backed simple graphs and clique/stable-set machinery.

Vertices are dense integers ``0..n-1``.  Adjacency is one int bitmask per
vertex, so pairwise checks and candidate pruning run at word speed on the
desk-scale instances this package targets.  Vertex subsets (cliques,
stable sets) are plain int bitmasks too; :func:`mask_of` and
:func:`vertices_of` convert to and from iterables.

Constructed graph families may attach text labels to vertices.  Labels are
purely for reporting; every algorithm works on indices.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import InputError

__all__ = [
    "Graph",
    "bits",
    "mask_of",
    "vertices_of",
    "complement",
    "is_clique",
    "enumerate_maximal_cliques",
    "clique_number",
    "max_stable_set_size",
    "max_stable_set_in_neighborhood",
    "parse_edge_list",
    "parse_dimacs",
    "read_graph",
    "format_edge_list",
    "format_dimacs",
    "write_graph",
]


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    """Bitmask with one bit per vertex index in ``vertices``."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    """Sorted list of vertex indices in ``mask``."""
    return list(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with bitmask adjacency rows.

    Invariants (checked at construction): adjacency is symmetric, there
    are no self-loops, and no row references a vertex outside ``0..n-1``.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise InputError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"adjacency row {u} references a vertex >= n")
            if row >> u & 1:
                raise InputError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    raise InputError(f"adjacency not symmetric at ({u}, {v})")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError("labels must have one entry per vertex")

    @staticmethod
    def from_edges(n: int, edges, labels=None) -> "Graph":
        """Build a graph on ``n`` vertices from an iterable of (u, v) pairs."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            later = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(later):
                out.append((u, v))
        return out

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)


def complement(g: Graph) -> Graph:
    """Complement graph: u~v iff u != v and u, v nonadjacent in ``g``."""
    full = g.full_mask
    adj = tuple((full & ~g.adj[u]) & ~(1 << u) for u in range(g.n))
    return Graph(g.n, adj, g.labels)


def is_clique(g: Graph, s: int) -> bool:
    """True iff every pair of vertices in mask ``s`` is adjacent.

    Vacuously true for at most one vertex.  Raises on out-of-range bits.
    """
    if s & ~g.full_mask:
        raise InputError("vertex set references a vertex >= n")
    for u in bits(s):
        rest = s & ~(1 << u)
        if rest & ~g.adj[u]:
            return False
    return True


def _degeneracy_order(g: Graph) -> list[int]:
    # Repeatedly remove a minimum-degree vertex; ties go to the lowest index.
    remaining = g.full_mask
    order = []
    for _ in range(g.n):
        best_v, best_d = -1, g.n + 1
        for v in bits(remaining):
            d = (g.adj[v] & remaining).bit_count()
            if d < best_d:
                best_v, best_d = v, d
        order.append(best_v)
        remaining &= ~(1 << best_v)
    return order


def _bron_kerbosch_pivot(adj, r: int, p: int, x: int, out: list[int]):
    if p == 0 and x == 0:
        out.append(r)
        return
    pux = p | x
    pivot, best = -1, -1
    for u in bits(pux):
        c = (p & adj[u]).bit_count()
        if c > best:
            pivot, best = u, c
    for v in bits(p & ~adj[pivot]):
        b = 1 << v
        _bron_kerbosch_pivot(adj, r | b, p & adj[v], x & adj[v], out)
        p &= ~b
        x |= b


def enumerate_maximal_cliques(g: Graph) -> list[int]:
    """All inclusion-maximal cliques as bitmasks, each listed once.

    Pivoting enumeration seeded by a degeneracy ordering.  An isolated
    vertex yields the singleton clique containing it.  The result is
    sorted by mask value for determinism.
    """
    if g.n == 0:
        return []
    order = _degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    out: list[int] = []
    for i, v in enumerate(order):
        later = mask_of(order[i + 1 :])
        earlier = mask_of(order[:i])
        _bron_kerbosch_pivot(g.adj, 1 << v, g.adj[v] & later, g.adj[v] & earlier, out)
    out.sort()
    return out


@functools.lru_cache(maxsize=None)
def _mis_size(adj: tuple[int, ...], mask: int) -> int:
    # Exact maximum independent set size within `mask`, by branch and bound
    # on the lowest-index vertex: either exclude it, or include it and drop
    # its closed neighborhood.
    if mask == 0:
        return 0
    low = mask & -mask
    v = low.bit_length() - 1
    without = _mis_size(adj, mask ^ low)
    with_v = 1 + _mis_size(adj, mask & ~(adj[v] | low))
    return max(without, with_v)


def max_stable_set_size(g: Graph, within: int) -> int:
    """Size of a maximum stable (independent) set inside mask ``within``."""
    if within & ~g.full_mask:
        raise InputError("vertex set references a vertex >= n")
    return _mis_size(g.adj, within)


def max_stable_set_in_neighborhood(g: Graph, u: int) -> int:
    """Maximum stable-set size within the neighborhood of ``u``.

    0 for an isolated vertex, 1 when the neighborhood is a clique.
    """
    if not 0 <= u < g.n:
        raise InputError(f"vertex {u} out of range")
    return _mis_size(g.adj, g.adj[u])


def clique_number(g: Graph) -> int:
    """Size of a largest clique; 1 for edgeless nonempty graphs, 0 if n=0.

    Computed as the maximum stable set of the complement.
    """
    if g.n == 0:
        return 0
    return _mis_size(complement(g).adj, g.full_mask)


# ---------------------------------------------------------------------------
# File formats.
#
# Two interchangeable formats are supported:
#   * plain edge list: one "u v" pair per line, 0-based, '#' comments;
#     the vertex count is inferred as max index + 1.
#   * DIMACS-like: "c" comments, one "p edge <n> <m>" header, then
#     "e u v" lines with 1-based vertex ids.


def parse_edge_list(text: str, labels=None) -> Graph:
    edges = []
    max_v = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex id in {raw!r}")
        if u < 0 or v < 0:
            raise InputError(f"line {lineno}: negative vertex id")
        if u == v:
            raise InputError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        max_v = max(max_v, u, v)
    return Graph.from_edges(max_v + 1, edges, labels)


def parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise InputError(f"line {lineno}: expected 'p edge n m'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise InputError(f"line {lineno}: non-integer counts in problem line")
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise InputError(f"line {lineno}: non-integer vertex id")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"line {lineno}: vertex id out of range 1..{n}")
            if u == v:
                raise InputError(f"line {lineno}: self-loop")
            edges.append((u, v))
        else:
            raise InputError(f"line {lineno}: unrecognized directive {parts[0]!r}")
    if n is None:
        raise InputError("missing 'p edge n m' line")
    g = Graph.from_edges(n, edges)
    if declared_m is not None and g.m != declared_m:
        raise InputError(f"header declares {declared_m} edges but file defines {g.m}")
    return g


def read_graph(path) -> Graph:
    """Read a graph file, sniffing edge-list versus DIMACS format."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.split()[0] in ("p", "e", "c"):
            return parse_dimacs(text)
        return parse_edge_list(text)
    return parse_edge_list(text)


def format_edge_list(g: Graph) -> str:
    lines = []
    if g.labels is not None:
        for u in range(g.n):
            lines.append(f"# {u} = {g.labels[u]}")
    for u, v in g.edges():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def format_dimacs(g: Graph) -> str:
    lines = []
    if g.labels is not None:
        for u in range(g.n):
            lines.append(f"c {u + 1} = {g.labels[u]}")
    lines.append(f"p edge {g.n} {g.m}")
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path, fmt: str = "edges") -> None:
    """Write ``g`` to ``path`` in 'edges' or 'dimacs' format."""
    if fmt == "edges":
        text = format_edge_list(g)
    elif fmt == "dimacs":
        text = format_dimacs(g)
    else:
        raise InputError(f"unknown graph format {fmt!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
