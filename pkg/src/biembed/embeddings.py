"""Rotation systems and face tracing.

A rotation system assigns to each vertex a cyclic order of its neighbors,
which encodes a cellular embedding of the graph in an orientable surface.
The faces of that embedding are recovered by walking arcs:

    after traversing the arc u -> v, the next arc leaves v toward the
    successor of u in the rotation at v.

Iterating until every directed arc has been consumed yields the face set.
Any consistent convention gives the same face count; this one is fixed so
that embeddings verify deterministically.  Genus then follows from the
Euler polyhedral equation v - e + f = 2 - 2g, which only makes sense for
connected graphs (a disconnected "embedding" is several surfaces).

The file format mirrors the way rotation tables are usually printed: one
row per vertex, `<v>. <n1> <n2> ... <nk>`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_connected, make_graph

Arc = tuple[int, int]
Face = tuple[Arc, ...]


@dataclass(frozen=True)
class RotationSystem:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rotation) != self.graph.n:
            raise ValueError(
                f"rotation has {len(self.rotation)} rows for {self.graph.n} vertices"
            )


@dataclass(frozen=True)
class Violation:
    vertex: int
    kind: str
    detail: str


@dataclass(frozen=True)
class RotationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[Face, ...]

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def lengths(self) -> list[int]:
        return [len(f) for f in self.faces]


@dataclass(frozen=True)
class SurfaceStats:
    v: int
    e: int
    f: int
    genus: int


def make_rotation_system(graph: Graph, rows) -> RotationSystem:
    return RotationSystem(graph, tuple(tuple(row) for row in rows))


def validate_rotation(r: RotationSystem) -> RotationReport:
    """Check each rotation row against the neighbor set; never raises.

    Reported violation kinds: "self in rotation", "duplicate neighbor",
    "non-neighbor present", "missing neighbor".
    """
    adjacency: list[set[int]] = [set() for _ in range(r.graph.n)]
    for a, b in r.graph.edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    out: list[Violation] = []
    for v in range(r.graph.n):
        row = r.rotation[v]
        nbrs = adjacency[v]
        seen: set[int] = set()
        for w in row:
            if w == v:
                out.append(Violation(v, "self in rotation", f"vertex {v} lists itself"))
            elif w in seen:
                out.append(Violation(v, "duplicate neighbor", f"{w} repeated at {v}"))
            elif w not in nbrs:
                out.append(
                    Violation(v, "non-neighbor present", f"{w} is not adjacent to {v}")
                )
            seen.add(w)
        for w in sorted(nbrs - seen):
            out.append(Violation(v, "missing neighbor", f"{w} missing from row {v}"))
    return RotationReport(tuple(out))


def _canonical_face(walk: list[Arc]) -> Face:
    k = walk.index(min(walk))
    return tuple(walk[k:] + walk[:k])


def trace_faces(r: RotationSystem) -> FaceSet:
    report = validate_rotation(r)
    if not report.ok:
        first = report.violations[0]
        raise ValueError(
            "cannot trace an invalid rotation system "
            f"({len(report.violations)} violations, first: {first.kind} at vertex "
            f"{first.vertex}); see validate_rotation"
        )
    succ: list[dict[int, int]] = [{} for _ in range(r.graph.n)]
    for v in range(r.graph.n):
        row = r.rotation[v]
        for i, w in enumerate(row):
            succ[v][w] = row[(i + 1) % len(row)]

    order: list[Arc] = sorted(
        arc for u, v in r.graph.edges for arc in ((u, v), (v, u))
    )
    used: set[Arc] = set()
    faces: list[Face] = []
    # scanning arcs in sorted order makes each trace start at the least
    # unused arc, which is necessarily the least arc of its own face
    for start in order:
        if start in used:
            continue
        walk: list[Arc] = []
        arc = start
        while True:
            walk.append(arc)
            used.add(arc)
            u, v = arc
            arc = (v, succ[v][u])
            if arc == start:
                break
        faces.append(_canonical_face(walk))
    return FaceSet(tuple(faces))


def is_triangular(fs: FaceSet) -> bool:
    return all(len(f) == 3 for f in fs.faces)


def surface_stats(r: RotationSystem) -> SurfaceStats:
    if not is_connected(r.graph):
        raise ValueError("genus undefined for disconnected embedding")
    fs = trace_faces(r)
    v = r.graph.n
    e = len(r.graph.edges)
    f = fs.face_count
    chi = v - e + f
    if chi % 2 != 0:
        raise AssertionError(f"odd Euler characteristic {chi}")
    genus = (2 - chi) // 2
    if genus < 0:
        raise AssertionError(f"negative genus {genus}")
    return SurfaceStats(v, e, f, genus)


def parse_rotation_file(text: str) -> RotationSystem:
    """Parse rows `<v>. <n1> <n2> ...` into a rotation system.

    The edge set is implied by the rows; every edge must be listed at both
    endpoints or the text does not describe a rotation system at all.
    """
    rows: dict[int, tuple[int, ...]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        head, _, rest = line.partition(".")
        if not _:
            raise ValueError(f"malformed line (no '.'): {raw!r}")
        try:
            v = int(head)
            nbrs = tuple(int(tok) for tok in rest.split())
        except ValueError:
            raise ValueError(f"malformed line: {raw!r}") from None
        if v in rows:
            raise ValueError(f"duplicate row for vertex {v}")
        rows[v] = nbrs

    if not rows:
        raise ValueError("empty rotation file")
    n = max(rows) + 1
    missing = [v for v in range(n) if v not in rows]
    if missing:
        raise ValueError(f"missing rows for vertices {missing}")

    rotation = tuple(rows[v] for v in range(n))
    arcs = {(v, w) for v in range(n) for w in rotation[v]}
    for v, w in arcs:
        if (w, v) not in arcs:
            raise ValueError(
                f"rotation inconsistent with implied edge set: {v} lists {w} "
                f"but {w} does not list {v}"
            )
    graph = make_graph(n, ((v, w) for v, w in arcs if v < w))
    return RotationSystem(graph, rotation)


def serialize_rotation(r: RotationSystem) -> str:
    lines = []
    for v in range(r.graph.n):
        entries = " ".join(str(w) for w in r.rotation[v])
        lines.append(f"{v}. {entries}".rstrip())
    return "\n".join(lines) + "\n"
