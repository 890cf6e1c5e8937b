"""Clique coverings and partitions: data model, verification, statistics.

A :class:`CliqueCover` is an ordered list of vertex-set bitmasks plus a
mode flag.  In ``cover`` mode every edge of the target graph must lie in
at least one listed clique; in ``partition`` mode in exactly one.  The
*sigma* of a cover is the sum of clique sizes, which by double counting
equals the sum over vertices of their valencies (the number of cliques
containing each vertex).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, VerificationError
from .graphs import Graph, bits, mask_of, vertices_of

__all__ = [
    "MODES",
    "CliqueCover",
    "CoverStats",
    "VerifyResult",
    "verify",
    "stats",
    "edges_to_cover",
    "parse_cover",
    "format_cover",
    "read_cover",
    "write_cover",
    "cover_report",
]

MODES = ("cover", "partition")


@dataclass(frozen=True)
class CliqueCover:
    """Ordered cliques (bitmasks) plus a cover-vs-partition mode flag."""

    cliques: tuple[int, ...]
    mode: str = "cover"

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}, got {self.mode!r}")

    @staticmethod
    def from_vertex_sets(sets, mode: str = "cover") -> "CliqueCover":
        return CliqueCover(tuple(mask_of(s) for s in sets), mode)

    @property
    def count(self) -> int:
        return len(self.cliques)

    @property
    def sigma(self) -> int:
        return sum(c.bit_count() for c in self.cliques)

    def vertex_sets(self) -> list[list[int]]:
        return [vertices_of(c) for c in self.cliques]


@dataclass(frozen=True)
class CoverStats:
    sigma: int
    count: int
    valencies: tuple[int, ...]
    max_valency: int
    min_valency: int


@dataclass(frozen=True)
class VerifyResult:
    """Verification verdict with a deterministic diagnostic.

    ``reason`` names the first violation found; checks run in a fixed
    order (clique validity in list order, duplicate rule, then edge
    coverage in lexicographic edge order) so diagnostics are stable.
    """

    ok: bool
    reason: str | None = None
    bad_edge: tuple[int, int] | None = None
    bad_clique: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _first_missing_pair(g: Graph, clique: int) -> tuple[int, int] | None:
    vs = vertices_of(clique)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if not g.has_edge(u, v):
                return (u, v)
    return None


def verify(g: Graph, cover: CliqueCover, allow_singletons: bool = False) -> VerifyResult:
    """Check that ``cover`` is a valid clique covering/partition of ``g``.

    Out-of-range vertices raise :class:`InputError` (an input problem,
    not a verification verdict).  Singleton cliques fail unless
    ``allow_singletons`` is set; empty cliques always fail.  Duplicate
    cliques are allowed in covers but rejected in partitions of any graph
    with at least one edge.
    """
    for idx, clique in enumerate(cover.cliques):
        if clique & ~g.full_mask:
            raise InputError(f"clique {idx} references a vertex >= n={g.n}")
    for idx, clique in enumerate(cover.cliques):
        size = clique.bit_count()
        if size == 0:
            return VerifyResult(False, f"clique {idx} is empty", bad_clique=idx)
        if size == 1 and not allow_singletons:
            return VerifyResult(
                False,
                f"clique {idx} is a singleton (pass allow_singletons to permit)",
                bad_clique=idx,
            )
        missing = _first_missing_pair(g, clique)
        if missing is not None:
            u, v = missing
            return VerifyResult(
                False,
                f"clique {idx} is not a clique: {u} and {v} are nonadjacent",
                bad_edge=missing,
                bad_clique=idx,
            )
    if cover.mode == "partition" and g.m >= 1:
        seen: dict[int, int] = {}
        for idx, clique in enumerate(cover.cliques):
            if clique in seen:
                return VerifyResult(
                    False,
                    f"clique {idx} duplicates clique {seen[clique]} in a partition",
                    bad_clique=idx,
                )
            seen[clique] = idx
    counts: dict[tuple[int, int], int] = {}
    for clique in cover.cliques:
        vs = vertices_of(clique)
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                counts[(u, v)] = counts.get((u, v), 0) + 1
    for u, v in g.edges():
        c = counts.get((u, v), 0)
        if c == 0:
            return VerifyResult(False, f"edge ({u}, {v}) is uncovered", bad_edge=(u, v))
        if cover.mode == "partition" and c > 1:
            return VerifyResult(
                False,
                f"edge ({u}, {v}) is covered {c} times in a partition",
                bad_edge=(u, v),
            )
    return VerifyResult(True)


def stats(g: Graph, cover: CliqueCover, allow_singletons: bool = False) -> CoverStats:
    """Sigma, clique count, and per-vertex valencies of a verified cover.

    Refuses covers that do not verify.  The double-counting identity
    (sigma equals the sum of valencies) is enforced.
    """
    res = verify(g, cover, allow_singletons=allow_singletons)
    if not res:
        raise VerificationError(f"cover does not verify: {res.reason}")
    valencies = [0] * g.n
    for clique in cover.cliques:
        for u in bits(clique):
            valencies[u] += 1
    sigma = cover.sigma
    assert sigma == sum(valencies)
    return CoverStats(
        sigma=sigma,
        count=cover.count,
        valencies=tuple(valencies),
        max_valency=max(valencies, default=0),
        min_valency=min(valencies, default=0),
    )


def edges_to_cover(g: Graph) -> CliqueCover:
    """The trivial partition of all m edges into 2-cliques (sigma = 2m)."""
    return CliqueCover(
        tuple((1 << u) | (1 << v) for u, v in g.edges()), mode="partition"
    )


def cover_report(g: Graph, cover: CliqueCover, allow_singletons: bool = False) -> dict:
    """JSON-ready report: mode, count, sigma, valency summary, verdict."""
    res = verify(g, cover, allow_singletons=allow_singletons)
    report = {
        "mode": cover.mode,
        "count": cover.count,
        "sigma": cover.sigma,
        "verified": res.ok,
    }
    if res.ok:
        st = stats(g, cover, allow_singletons=allow_singletons)
        report["valency"] = {
            "min": st.min_valency,
            "max": st.max_valency,
            "list": list(st.valencies),
        }
    else:
        report["failure"] = res.reason
    return report


# File format: header "mode: cover" or "mode: partition", then one clique
# per line as space-separated vertex ids.  '#' starts a comment.


def parse_cover(text: str) -> CliqueCover:
    mode = None
    cliques = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if mode is None:
            if not line.startswith("mode:"):
                raise InputError(f"line {lineno}: expected 'mode: cover|partition' header")
            mode = line.split(":", 1)[1].strip()
            if mode not in MODES:
                raise InputError(f"line {lineno}: unknown mode {mode!r}")
            continue
        try:
            vs = [int(tok) for tok in line.split()]
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex id in {raw!r}")
        if any(v < 0 for v in vs):
            raise InputError(f"line {lineno}: negative vertex id")
        if len(set(vs)) != len(vs):
            raise InputError(f"line {lineno}: repeated vertex in clique")
        cliques.append(mask_of(vs))
    if mode is None:
        raise InputError("missing 'mode:' header line")
    return CliqueCover(tuple(cliques), mode)


def format_cover(cover: CliqueCover) -> str:
    lines = [f"mode: {cover.mode}"]
    for clique in cover.cliques:
        lines.append(" ".join(str(v) for v in vertices_of(clique)))
    return "\n".join(lines) + "\n"


def read_cover(path) -> CliqueCover:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cover(fh.read())


def write_cover(cover: CliqueCover, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_cover(cover))
