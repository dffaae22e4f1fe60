"""The infinite family of triangular biembeddings of K_{24s+13}.

For every s ≥ 1 the labels {1, ..., 12s+6} split into two sets of size 6s+3,
and each set is realized as the current set of a one-face cubic current
graph over Z_{24s+13}.  The two derived embeddings are triangular embeddings
of complementary circulants, so together they biembed K_{24s+13} in genus
24s² + 13s + 1, which meets the lower bound exactly.

The current-graph pair comes from a parameterized template asset (a rim
cycle on 4s+2 slots plus value-matched chords; see the data file for the
encoding).  ``search_pair`` reconstructs a valid pair from scratch by
backtracking and exists both as a fallback if the template asset is absent
and as an independent witness that such pairs exist.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .currents import CurrentGraph, current_classes, derive_embedding, validate_current_graph
from .graphs import DifferenceSet
from .verify import BiembeddingReport, verify_biembedding, with_stages

_TEMPLATE_RESOURCE = "family_template.json"


@dataclass(frozen=True)
class FamilyParameter:
    s: int

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ValueError(
                f"family parameter s must be at least 1, got {self.s} "
                "(K_13 is known but below the template range)"
            )

    @property
    def n(self) -> int:
        return 24 * self.s + 13


@dataclass(frozen=True)
class CurrentPair:
    first: CurrentGraph
    second: CurrentGraph

    def __post_init__(self) -> None:
        if self.first.n != self.second.n:
            raise ValueError(
                f"moduli differ: {self.first.n} vs {self.second.n}"
            )
        n = self.first.n
        x1 = current_classes(self.first).x
        x2 = current_classes(self.second).x
        if x1 & x2:
            raise ValueError(f"current sets overlap: {sorted(x1 & x2)}")
        full = set(range(1, n // 2 + 1))
        if (x1 | x2) != full:
            raise ValueError("current sets do not cover {1..⌊n/2⌋}")


def family_genus(s: int) -> int:
    """Genus of each half of the K_{24s+13} biembedding: 24s² + 13s + 1."""
    return 24 * s * s + 13 * s + 1


def current_sets(p: FamilyParameter) -> tuple[DifferenceSet, DifferenceSet]:
    """Split {1..12s+6} into the two current sets.

    The first set takes residues 2, 3, 5 mod 6 plus the exceptional labels
    1 and 6; the second takes residues 0, 1, 4 mod 6 plus the exceptional
    labels 6s+2 and 12s+5.  Each set gets 6s+3 labels, and the first keeps
    the generator 1 while the second keeps 4, so both circulants C(n, X)
    are connected.
    """
    s, n = p.s, p.n
    top = 12 * s + 6
    x1 = {1, 6}
    x2 = {6 * s + 2, 12 * s + 5}
    for i in range(1, top + 1):
        if i in x1 or i in x2:
            continue
        if i % 6 in (2, 3, 5):
            x1.add(i)
        else:
            x2.add(i)
    return DifferenceSet(n, frozenset(x1)), DifferenceSet(n, frozenset(x2))


def _lin(form: list[int], s: int, k: int = 0) -> int:
    value = form[0] + form[1] * s
    if len(form) == 3:
        value += form[2] * k
    return value


def _rule_slots(rule: dict, s: int) -> list[tuple[int, int]]:
    """Expand one template rule into (slot, k) instances for this s."""
    if s < rule.get("s_min", 1):
        return []
    if s > rule.get("s_max", s):
        return []
    k_lo = _lin(rule["k_min"], s) if "k_min" in rule else 0
    k_hi = _lin(rule["k_max"], s) if "k_max" in rule else 0
    return [(_lin(rule["slot"], s, k), k) for k in range(k_lo, k_hi + 1)]


def _instantiate_half(half: dict, s: int, n: int) -> CurrentGraph:
    nv = 4 * s + 2
    deltas: dict[int, int] = {}
    for rule in half["deltas"]:
        for slot, k in _rule_slots(rule, s):
            if slot in deltas:
                raise AssertionError(f"template places two chords at slot {slot}")
            deltas[slot] = _lin(rule["value"], s, k)
    if sorted(deltas) != list(range(nv)):
        raise AssertionError("template does not cover every slot exactly once")

    bit_one: set[int] = set()
    for rule in half["bit_one_slots"]:
        bit_one.update(slot for slot, _ in _rule_slots(rule, s))

    # chord partners are implied by value: slot j with delta -d ends the
    # chord carrying d
    slot_of = {deltas[i] % n: i for i in range(nv)}
    partner: dict[int, int] = {}
    for i in range(nv):
        j = slot_of.get((-deltas[i]) % n)
        if j is None or j == i:
            raise AssertionError(f"chord at slot {i} has no matching end")
        partner[i] = j

    # walk the rim accumulating flows; f[i] is the current on rim arc i->i+1
    f = [0] * nv
    f[0] = _lin(half["f0"], s) % n
    for i in range(1, nv):
        f[i] = (f[i - 1] + deltas[i]) % n
    if (f[nv - 1] + deltas[0]) % n != f[0]:
        raise AssertionError("rim flows do not close up")

    rows = []
    for i in range(nv):
        prev_v, next_v = (i - 1) % nv, (i + 1) % nv
        in_rim = (prev_v, (n - f[prev_v]) % n)
        out_rim = (next_v, f[i])
        chord = (partner[i], (n - deltas[i]) % n)
        if i in bit_one:
            rows.append((in_rim, chord, out_rim))
        else:
            rows.append((in_rim, out_rim, chord))
    return CurrentGraph(n, tuple(rows))


def _load_template() -> dict:
    try:
        path = resources.files("biembed.data").joinpath(_TEMPLATE_RESOURCE)
        return json.loads(path.read_text())
    except (FileNotFoundError, ModuleNotFoundError):
        raise RuntimeError(
            "family template missing: reconstruct a pair with search_pair "
            "(CLI: `family search --s <s>`)"
        ) from None


def build_pair(p: FamilyParameter) -> CurrentPair:
    """Instantiate the template for s, returning a validated CurrentPair."""
    template = _load_template()
    first = _instantiate_half(template["halves"][0], p.s, p.n)
    second = _instantiate_half(template["halves"][1], p.s, p.n)
    pair = CurrentPair(first, second)

    x1, x2 = current_sets(p)
    if current_classes(first) != x1 or current_classes(second) != x2:
        raise AssertionError("template pair does not carry the expected current sets")
    for cg in (first, second):
        report = validate_current_graph(cg)
        if not report.ok:
            raise AssertionError(
                "template current graph invalid: " + "; ".join(report.failures)
            )
    return pair


def verify_pair(pair: CurrentPair, p: FamilyParameter) -> BiembeddingReport:
    """Derive both halves of a pair and certify the biembedding of K_n."""
    x1, x2 = current_sets(p)
    sets_match = (
        current_classes(pair.first) == x1 and current_classes(pair.second) == x2
    )
    r1 = derive_embedding(pair.first)
    r2 = derive_embedding(pair.second)
    report = verify_biembedding(r1, r2, p.n)
    expected = family_genus(p.s)
    genus_ok = all(h.genus == expected for h in report.halves)
    return with_stages(
        report,
        [("current sets match", sets_match), ("genus formula", genus_ok)],
    )


def verify_family(p: FamilyParameter) -> BiembeddingReport:
    return verify_pair(build_pair(p), p)


def search_pair(
    x1: DifferenceSet, x2: DifferenceSet, budget: int = 10_000_000
) -> CurrentPair | None:
    """Backtracking reconstruction of a valid current-graph pair.

    Explores one-face cubic current graphs for each current set in turn:
    vertices are oriented zero-sum triples of arc currents (Kirchhoff holds
    by construction), and partial face chains are pruned the moment they
    would close early, so any completed assignment has exactly one face.
    Deterministic: candidates are tried in sorted order.  ``budget`` bounds
    the number of search nodes spent on each half; exhaustion returns None,
    which says nothing about existence.
    """
    if x1.n != x2.n:
        raise ValueError(f"moduli differ: {x1.n} vs {x2.n}")
    n = x1.n
    if x1.x & x2.x:
        raise ValueError(f"current sets overlap: {sorted(x1.x & x2.x)}")
    if (x1.x | x2.x) != set(range(1, n // 2 + 1)):
        raise ValueError("current sets must partition {1..⌊n/2⌋}")
    for x in (x1, x2):
        if len(x.x) % 3 != 0:
            raise ValueError(
                f"current set of size {len(x.x)} admits no cubic current graph "
                "(need 3 | |X|)"
            )
    first = _search_half(x1, budget)
    if first is None:
        return None
    second = _search_half(x2, budget)
    if second is None:
        return None
    return CurrentPair(first, second)


def _search_half(x: DifferenceSet, budget: int) -> CurrentGraph | None:
    n = x.n
    elements = sorted({d % n for d in x.x} | {(n - d) % n for d in x.x})
    total = len(elements)

    # partial face permutation sigma (arcs a -> -b for oriented triples),
    # kept as chains; start_of/end_of map a chain's endpoints to each other
    nxt: dict[int, int] = {}
    start_of: dict[int, int] = {}
    end_of: dict[int, int] = {}
    unassigned = set(elements)
    triples: list[tuple[int, int, int]] = []
    nodes = 0

    def add_arc(u: int, v: int, undo: list) -> bool:
        # u has no outgoing arc yet, v no incoming; chains stay acyclic
        # unless this is the very last arc
        s = start_of.get(u, u)
        e = end_of.get(v, v)
        if s == v and len(nxt) + 1 < total:
            return False
        undo.append((u, v, s, e))
        nxt[u] = v
        start_of[e] = s
        end_of[s] = e
        return True

    def remove_arcs(undo: list) -> None:
        for u, v, s, e in reversed(undo):
            del nxt[u]
            if start_of.get(e) == s:
                del start_of[e]
            if end_of.get(s) == e:
                del end_of[s]
            if u != s:
                start_of[u] = s
                end_of[s] = u
            if v != e:
                start_of[e] = v
                end_of[v] = e

    def place(a: int, b: int, c: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return False
        undo: list = []
        for u, v in ((a, (n - b) % n), (b, (n - c) % n), (c, (n - a) % n)):
            if not add_arc(u, v, undo):
                remove_arcs(undo)
                return False
        triples.append((a, b, c))
        for e in (a, b, c):
            unassigned.discard(e)
        if dfs():
            return True
        triples.pop()
        for e in (a, b, c):
            unassigned.add(e)
        remove_arcs(undo)
        return False

    def dfs() -> bool:
        if nodes > budget:
            return False
        if not unassigned:
            return True
        a = min(unassigned)
        rest = sorted(unassigned - {a})
        for b in rest:
            c = (-a - b) % n
            if c <= b or c not in unassigned:
                continue
            if place(a, b, c) or place(a, c, b):
                return True
            if nodes > budget:
                return False
        return False

    if not dfs():
        return None

    where = {}
    for idx, (a, b, c) in enumerate(triples):
        for e in (a, b, c):
            where[e] = idx
    rows = tuple(
        tuple((where[(n - e) % n], (n - e) % n) for e in t) for t in triples
    )
    cg = CurrentGraph(n, rows)
    report = validate_current_graph(cg)
    if not report.ok:
        raise AssertionError("search produced an invalid current graph: " + "; ".join(report.failures))
    return cg
