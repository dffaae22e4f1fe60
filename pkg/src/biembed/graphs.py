"""Simple graphs on vertex set 0..n-1, circulants, complements, permutations.

Edges are stored canonically as (u, v) with u < v so that graphs compare
and serialize deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")

    def neighbors(self, v: int) -> set[int]:
        out: set[int] = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def make_graph(n: int, edges) -> Graph:
    """Build a Graph from any iterable of vertex pairs, normalizing order."""
    canon = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        canon.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(canon))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


@dataclass(frozen=True)
class DifferenceSet:
    """A set of differences X ⊆ {1, ..., ⌊n/2⌋} over the cyclic group Z_n.

    For even n the value n/2 is rejected: the pairs i ± n/2 coincide, which
    would silently halve the degree of the circulant it generates.
    """

    n: int
    x: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        for d in self.x:
            if not (1 <= d <= self.n // 2):
                raise ValueError(
                    f"difference {d} outside 1..{self.n // 2} for modulus {self.n}"
                )
            if self.n % 2 == 0 and d == self.n // 2:
                raise ValueError(
                    f"difference {d} equals n/2 for even modulus {self.n}; "
                    "the two directions coincide"
                )


def make_circulant(d: DifferenceSet) -> Graph:
    """The circulant graph C(n, X): vertex i adjacent to i ± x mod n, x ∈ X."""
    edges = set()
    for i in range(d.n):
        for x in d.x:
            j = (i + x) % d.n
            edges.add((min(i, j), max(i, j)))
    return Graph(d.n, frozenset(edges))


def complement(g: Graph) -> Graph:
    all_pairs = {(u, v) for u in range(g.n) for v in range(u + 1, g.n)}
    return Graph(g.n, frozenset(all_pairs - g.edges))


def is_connected(g: Graph) -> bool:
    """True iff g has a single connected component (vacuously true for n = 0)."""
    if g.n == 0:
        return True
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a bijection on 0..n-1")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: Permutation) -> Permutation:
        """self ∘ other: first apply other, then self."""
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.images[other.images[i]] for i in range(self.n)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def apply_permutation(g: Graph, p: Permutation) -> Graph:
    if p.n != g.n:
        raise ValueError(f"permutation size {p.n} does not match graph order {g.n}")
    return make_graph(g.n, ((p(u), p(v)) for u, v in g.edges))


def is_antimorphism(g: Graph, p: Permutation) -> bool:
    """True iff p maps g onto its edge-complement."""
    if p.n != g.n:
        raise ValueError(f"permutation size {p.n} does not match graph order {g.n}")
    return apply_permutation(g, p) == complement(g)


def parse_graph_file(text: str) -> Graph:
    """Parse the graph text format: first line n, then one `u v` edge per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"bad vertex count line: {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
    return make_graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def circulant_is_connected(d: DifferenceSet) -> bool:
    """gcd test: C(n, X) is connected iff gcd(X ∪ {n}) = 1."""
    g = d.n
    for x in d.x:
        g = gcd(g, x)
    return g == 1
