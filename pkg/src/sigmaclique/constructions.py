"""Constructive generators: the three-block separation family, complete
multipartite graphs, finite fields, orthogonal arrays, and the optimal
multipartite clique partitions built from them.

The separation family ``G_n`` has 3n+2 vertices arranged as two pendant
vertices plus three n-cliques X, Y, Z, with Z complete to X and Y and a
perfect matching between X and Y.  Its two canonical covers pull apart
the minimum-count and minimum-sigma objectives: the unique cover with
n+2 cliques has sigma n^2+4n+2, while an (n+4)-clique cover achieves
sigma 8n+2.

Orthogonal arrays OA(d, d+1) are realized over GF(d) in the standard
affine way (rows indexed by (a, b), one column per slope c holding
a + c*b, plus a final column holding b), which exists exactly when d is
a prime power.
"""

from __future__ import annotations

from dataclasses import dataclass

from .covers import CliqueCover
from .errors import ConstructionError, VerificationError
from .graphs import Graph, mask_of

__all__ = [
    "build_gn",
    "canonical_covers_gn",
    "MultipartiteSpec",
    "build_multipartite",
    "cocktail_party",
    "prime_power_decomposition",
    "GaloisField",
    "OrthogonalArray",
    "build_oa",
    "optimal_partition_multipartite",
]


# ---------------------------------------------------------------------------
# The separation family G_n.
#
# Vertex layout: index 0 is x_0, indices 1..n are x_1..x_n, index n+1 is
# y_0, indices n+2..2n+1 are y_1..y_n, indices 2n+2..3n+1 are z_1..z_n.


def _gn_indices(n: int):
    x0 = 0
    xs = list(range(1, n + 1))
    y0 = n + 1
    ys = list(range(n + 2, 2 * n + 2))
    zs = list(range(2 * n + 2, 3 * n + 2))
    return x0, xs, y0, ys, zs


def build_gn(n: int) -> Graph:
    """The separation family member on 3n+2 labeled vertices.

    X+{x_0}, Y+{y_0} and Z are cliques, Z is complete to X and Y, and
    x_i ~ y_j iff i = j.  x_0 and y_0 have no other neighbors.
    """
    if n < 1:
        raise ConstructionError(f"need n >= 1, got {n}")
    x0, xs, y0, ys, zs = _gn_indices(n)
    labels = (
        ["x0"]
        + [f"x{i}" for i in range(1, n + 1)]
        + ["y0"]
        + [f"y{i}" for i in range(1, n + 1)]
        + [f"z{i}" for i in range(1, n + 1)]
    )
    edges = []
    x_block = [x0] + xs
    y_block = [y0] + ys
    for block in (x_block, y_block, zs):
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                edges.append((block[i], block[j]))
    for z in zs:
        for v in xs + ys:
            edges.append((z, v))
    for i in range(n):
        edges.append((xs[i], ys[i]))
    return Graph.from_edges(3 * n + 2, edges, labels)


def canonical_covers_gn(n: int) -> tuple[CliqueCover, CliqueCover]:
    """The two canonical covers of ``build_gn(n)``.

    First: the unique cover with n+2 cliques ({x_i, y_i}+Z for each i,
    then {x_0}+X and {y_0}+Y), sigma n^2+4n+2.  Second: the n+4 cliques
    {x_0}+X, {y_0}+Y, X+Z, Y+Z and the matching pairs {x_i, y_i},
    sigma 8n+2.
    """
    if n < 1:
        raise ConstructionError(f"need n >= 1, got {n}")
    x0, xs, y0, ys, zs = _gn_indices(n)
    z_mask = mask_of(zs)
    first = [mask_of([xs[i], ys[i]]) | z_mask for i in range(n)]
    first.append(mask_of([x0] + xs))
    first.append(mask_of([y0] + ys))
    second = [
        mask_of([x0] + xs),
        mask_of([y0] + ys),
        mask_of(xs) | z_mask,
        mask_of(ys) | z_mask,
    ]
    second.extend(mask_of([xs[i], ys[i]]) for i in range(n))
    return (
        CliqueCover(tuple(first), "cover"),
        CliqueCover(tuple(second), "cover"),
    )


# ---------------------------------------------------------------------------
# Complete multipartite graphs.


@dataclass(frozen=True)
class MultipartiteSpec:
    """Part sizes of a complete multipartite graph, largest part d."""

    part_sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.part_sizes:
            raise ConstructionError("need at least one part")
        if any(s < 1 for s in self.part_sizes):
            raise ConstructionError("empty parts are not allowed")

    @property
    def n(self) -> int:
        return sum(self.part_sizes)

    @property
    def d(self) -> int:
        return max(self.part_sizes)


def build_multipartite(part_sizes, labels: str = "auto") -> Graph:
    """Complete multipartite graph: u ~ v iff u and v are in different parts.

    Vertices are laid out part by part.  With ``labels='auto'`` vertex l
    of part j is labeled ``v<j>_<l>`` (both 1-based).
    """
    spec = part_sizes if isinstance(part_sizes, MultipartiteSpec) else MultipartiteSpec(tuple(part_sizes))
    sizes = spec.part_sizes
    n = spec.n
    part_of = []
    label_list = []
    for j, size in enumerate(sizes):
        for l in range(size):
            part_of.append(j)
            label_list.append(f"v{j + 1}_{l + 1}")
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return Graph.from_edges(n, edges, label_list if labels == "auto" else None)


def cocktail_party(t: int) -> Graph:
    """K_t(2): the complete graph on 2t vertices minus a perfect matching.

    Part i holds vertices 2i and 2i+1, labeled x_{i+1} and y_{i+1}.
    """
    if t < 1:
        raise ConstructionError(f"need t >= 1, got {t}")
    g = build_multipartite((2,) * t, labels=None)
    labels = []
    for i in range(1, t + 1):
        labels.extend([f"x{i}", f"y{i}"])
    return Graph(g.n, g.adj, tuple(labels))


# ---------------------------------------------------------------------------
# Finite fields GF(q), q = p^e a prime power, with table-based arithmetic.


def _factorize(q: int) -> list[tuple[int, int]]:
    out = []
    x = q
    p = 2
    while p * p <= x:
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            out.append((p, e))
        p += 1
    if x > 1:
        out.append((x, 1))
    return out


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """(p, e) with q = p^e if q is a prime power >= 2, else None."""
    if q < 2:
        return None
    factors = _factorize(q)
    if len(factors) == 1:
        return factors[0]
    return None


def _factorization_string(q: int) -> str:
    return " * ".join(
        str(p) if e == 1 else f"{p}^{e}" for p, e in _factorize(q)
    )


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(a, mod, p):
    # Remainder of a modulo the monic polynomial `mod`.
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return a[:dm] if dm > 0 else []


def _int_to_poly(x: int, p: int, e: int):
    coeffs = []
    for _ in range(e):
        coeffs.append(x % p)
        x //= p
    return coeffs


def _poly_to_int(coeffs, p: int) -> int:
    x = 0
    for c in reversed(coeffs):
        x = x * p + c
    return x


def _find_irreducible(p: int, e: int):
    # Smallest monic degree-e polynomial with no monic divisor of degree
    # 1..e//2, scanning constant-through-leading coefficients as a base-p
    # counter (so x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^2+1 for GF(9)).
    for c in range(p**e):
        cand = _int_to_poly(c, p, e) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _is_irreducible(poly, p: int) -> bool:
    e = len(poly) - 1
    if poly[0] == 0:
        return False
    for k in range(1, e // 2 + 1):
        for c in range(p**k):
            div = _int_to_poly(c, p, k) + [1]
            if not any(_poly_mod(poly, div, p)):
                return False
    return True


class GaloisField:
    """GF(q) with elements encoded as ints 0..q-1.

    Prime q uses modular arithmetic; prime powers use polynomial
    arithmetic modulo the smallest irreducible monic polynomial (elements
    encode coefficient vectors base p).  Addition and multiplication are
    precomputed as full tables, which is comfortable at desk scale
    (q <= 169).
    """

    def __init__(self, q: int):
        decomp = prime_power_decomposition(q)
        if decomp is None:
            raise ConstructionError(
                f"{q} is not a prime power ({q} = {_factorization_string(q)})"
            )
        self.q = q
        self.p, self.e = decomp
        if self.e == 1:
            self.irreducible = None
            self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            self.irreducible = _find_irreducible(self.p, self.e)
            polys = [_int_to_poly(x, self.p, self.e) for x in range(q)]
            self.add_table = [
                [
                    _poly_to_int([(xa + xb) % self.p for xa, xb in zip(pa, pb)], self.p)
                    for pb in polys
                ]
                for pa in polys
            ]
            self.mul_table = [
                [
                    _poly_to_int(
                        _poly_mod(_poly_mul(pa, pb, self.p), self.irreducible, self.p)
                        + [0] * self.e,
                        self.p,
                    )
                    if pa and pb
                    else 0
                    for pb in polys
                ]
                for pa in polys
            ]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        row = self.add_table[a]
        for b in range(self.q):
            if row[b] == 0:
                return b
        raise AssertionError  # pragma: no cover

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        row = self.mul_table[a]
        for b in range(self.q):
            if row[b] == 1:
                return b
        raise AssertionError  # pragma: no cover

    def elements(self) -> range:
        return range(self.q)


# ---------------------------------------------------------------------------
# Orthogonal arrays OA(n, k).


@dataclass(frozen=True)
class OrthogonalArray:
    """n^2 x k array over symbols 1..n where every ordered column pair
    exhibits every ordered symbol pair exactly once."""

    n: int
    k: int
    rows: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        if len(self.rows) != self.n * self.n:
            raise VerificationFailure(f"expected {self.n * self.n} rows")
        for r, row in enumerate(self.rows):
            if len(row) != self.k:
                raise VerificationFailure(f"row {r} has {len(row)} columns")
            if any(not 1 <= s <= self.n for s in row):
                raise VerificationFailure(f"row {r} has a symbol outside 1..{self.n}")
        for c1 in range(self.k):
            for c2 in range(self.k):
                if c1 == c2:
                    continue
                seen = {(row[c1], row[c2]) for row in self.rows}
                if len(seen) != self.n * self.n:
                    raise VerificationFailure(
                        f"columns ({c1}, {c2}) repeat an ordered symbol pair"
                    )

    def to_csv(self) -> str:
        return "\n".join(",".join(str(s) for s in row) for row in self.rows) + "\n"


# validate() raises through the shared verification type; alias keeps the
# dataclass body readable.
from .errors import VerificationError as VerificationFailure  # noqa: E402


def build_oa(d: int) -> OrthogonalArray:
    """OA(d, d+1) over GF(d): rows indexed by (a, b), one column per slope
    c holding a + c*b, plus a final column holding b; symbols 1..d."""
    if d < 2 or prime_power_decomposition(d) is None:
        raise ConstructionError(
            f"{d} is not a prime power ({_factorization_string(d)})"
            if d >= 2
            else f"need d >= 2, got {d}"
        )
    field = GaloisField(d)
    rows = []
    for a in range(d):
        for b in range(d):
            row = [field.add(a, field.mul(c, b)) + 1 for c in range(d)]
            row.append(b + 1)
            rows.append(tuple(row))
    return OrthogonalArray(n=d, k=d + 1, rows=tuple(rows))


# ---------------------------------------------------------------------------
# Optimal sigma partitions of complete multipartite graphs.


def _validate_partition_spec(spec: MultipartiteSpec) -> int:
    d = spec.d
    n = spec.n
    if prime_power_decomposition(d) is None:
        raise ConstructionError(
            f"largest part size d={d} must be a prime power "
            f"({d} = {_factorization_string(d)})"
        )
    full = sum(1 for s in spec.part_sizes if s == d)
    if full < 2:
        raise ConstructionError(
            f"need at least two parts of the maximum size d={d}, found {full}"
        )
    if n < 2 * d:
        raise ConstructionError(f"need n >= 2d, got n={n} < {2 * d}")
    if n > d * (d + 1):
        raise ConstructionError(f"need n <= d(d+1), got n={n} > {d * (d + 1)}")
    if len(spec.part_sizes) > d + 1:
        raise ConstructionError(
            f"{len(spec.part_sizes)} parts cannot embed into the host "
            f"complete multipartite graph with d+1={d + 1} parts"
        )
    return d


def optimal_partition_multipartite(part_sizes) -> CliqueCover:
    """A clique partition of ``build_multipartite(part_sizes)`` with sigma
    exactly n*d and every vertex in exactly d cliques.

    The graph is embedded into the host K_{d+1}(d): parts are assigned to
    host parts largest first (ties by original order), each keeping its
    lowest-indexed vertices, and the d^2 transversal cliques read off the
    rows of OA(d, d+1) are intersected with the embedded vertex set.
    """
    spec = part_sizes if isinstance(part_sizes, MultipartiteSpec) else MultipartiteSpec(tuple(part_sizes))
    d = _validate_partition_spec(spec)
    oa = build_oa(d)
    sizes = spec.part_sizes
    # Host part j hosts the j-th largest part of the input graph.
    order = sorted(range(len(sizes)), key=lambda j: (-sizes[j], j))
    starts = [0] * len(sizes)
    acc = 0
    for j, size in enumerate(sizes):
        starts[j] = acc
        acc += size
    cliques = []
    for row in oa.rows:
        members = []
        for host_j, part_j in enumerate(order):
            symbol = row[host_j]  # 1-based vertex slot within the host part
            if symbol <= sizes[part_j]:
                members.append(starts[part_j] + symbol - 1)
        cliques.append(mask_of(members))
    return CliqueCover(tuple(cliques), "partition")
