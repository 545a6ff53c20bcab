"""Signed multigraphs: representation, switching, balance, cycle signs.

A signed multigraph is a set of vertices 0..n-1 together with an ordered
list of edges (u, v, sign), sign being +1 or -1.  Loops (u == v) and
parallel edges are allowed.  Graphs are immutable values: every operation
returns a new graph.

The `zero_forbidden` vertex flags are internal bookkeeping for the
polynomial engine (a flagged vertex may not receive color 0); graphs built
from files or constructors have no flags set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ContractionError, BudgetExceededError, ParseError

Edge = tuple[int, int, int]

DEFAULT_CYCLE_GUARD = 16
DEFAULT_ISO_GUARD = 16


def _check_edge(n: int, u: int, v: int, sign: int, where: str = "") -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge endpoint out of range{where}: ({u}, {v}) with {n} vertices")
    if sign not in (1, -1):
        raise ValueError(f"edge sign must be +1 or -1{where}, got {sign!r}")


@dataclass(frozen=True)
class SignedMultigraph:
    """Immutable signed multigraph with an ordered edge list."""

    vertex_count: int
    edges: tuple[Edge, ...]
    zero_forbidden: frozenset[int] = field(default_factory=frozenset)
    labels: Mapping[int, str] | None = None

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        object.__setattr__(self, "edges", tuple((int(u), int(v), int(s)) for u, v, s in self.edges))
        for u, v, s in self.edges:
            _check_edge(self.vertex_count, u, v, s)
        object.__setattr__(self, "zero_forbidden", frozenset(self.zero_forbidden))
        for v in self.zero_forbidden:
            if not (0 <= v < self.vertex_count):
                raise ValueError(f"zero_forbidden vertex {v} out of range")

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def signature(self) -> frozenset[int]:
        """Indices of the negative edges."""
        return frozenset(i for i, (_, _, s) in enumerate(self.edges) if s == -1)

    def degrees(self) -> list[int]:
        """Endpoint counts per vertex; a loop contributes 2 to its vertex."""
        deg = [0] * self.vertex_count
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_positive_loop(self) -> bool:
        return any(u == v and s == 1 for u, v, s in self.edges)

    def underlying_pairs(self) -> tuple[tuple[int, int], ...]:
        """Edge list with signs stripped, endpoints normalized to (min, max)."""
        return tuple((u, v) if u <= v else (v, u) for u, v, _ in self.edges)

    def same_underlying(self, other: "SignedMultigraph") -> bool:
        return (
            self.vertex_count == other.vertex_count
            and self.underlying_pairs() == other.underlying_pairs()
        )

    # -- construction helpers ---------------------------------------------

    def with_signs(self, negative: Iterable[int]) -> "SignedMultigraph":
        """Copy of this graph whose negative edges are exactly the given indices."""
        neg = set(negative)
        for i in neg:
            if not (0 <= i < self.edge_count):
                raise ValueError(f"edge index {i} out of range")
        edges = tuple((u, v, -1 if i in neg else 1) for i, (u, v, _) in enumerate(self.edges))
        return SignedMultigraph(self.vertex_count, edges, self.zero_forbidden, self.labels)

    # -- switching ---------------------------------------------------------

    def switch(self, vertices: Iterable[int]) -> "SignedMultigraph":
        """Flip the sign of every non-loop edge with exactly one endpoint in the set.

        Loops are incident twice, so the two flips cancel and their signs
        are kept.  The underlying graph, flags and labels are unchanged.
        """
        vset = frozenset(vertices)
        for v in vset:
            if not (0 <= v < self.vertex_count):
                raise ValueError(f"switch vertex {v} out of range")
        edges = tuple(
            (u, v, -s if (u in vset) != (v in vset) else s) for u, v, s in self.edges
        )
        return SignedMultigraph(self.vertex_count, edges, self.zero_forbidden, self.labels)

    # -- balance -----------------------------------------------------------

    def is_balanced(self) -> bool:
        """True iff every cycle has positive sign product.

        Assigns each vertex a potential in {+1, -1} by spanning-forest
        propagation (positive edge: equal potentials, negative: opposite)
        and checks the non-tree edges for consistency.  A negative loop is
        a negative 1-cycle; positive loops are ignored.
        """
        for u, v, s in self.edges:
            if u == v and s == -1:
                return False
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for u, v, s in self.edges:
            if u != v:
                adj[u].append((v, s))
                adj[v].append((u, s))
        potential = [0] * self.vertex_count
        for root in range(self.vertex_count):
            if potential[root]:
                continue
            potential[root] = 1
            stack = [root]
            while stack:
                x = stack.pop()
                for y, s in adj[x]:
                    want = potential[x] * s
                    if potential[y] == 0:
                        potential[y] = want
                        stack.append(y)
                    elif potential[y] != want:
                        return False
        return True

    # -- deletion / contraction ---------------------------------------------

    def delete_edge(self, index: int) -> "SignedMultigraph":
        """Remove the edge at `index`; vertices are untouched."""
        if not (0 <= index < self.edge_count):
            raise ValueError(f"edge index {index} out of range")
        edges = self.edges[:index] + self.edges[index + 1 :]
        return SignedMultigraph(self.vertex_count, edges, self.zero_forbidden, self.labels)

    def contract_edge(self, index: int) -> "SignedMultigraph":
        """Contract the positive non-loop edge at `index`.

        The endpoints merge into the smaller id; higher vertex ids shift
        down by one (stable compaction).  Other edges between the merged
        pair become loops and keep their signs.  The merged vertex is
        zero-forbidden if either endpoint was.
        """
        if not (0 <= index < self.edge_count):
            raise ValueError(f"edge index {index} out of range")
        u, v, s = self.edges[index]
        if u == v:
            raise ContractionError("cannot contract a loop")
        if s != 1:
            raise ContractionError("cannot contract a negative edge")
        keep, drop = (u, v) if u < v else (v, u)

        def remap(x: int) -> int:
            if x == drop:
                return keep
            return x - 1 if x > drop else x

        edges = tuple(
            (remap(a), remap(b), t) for i, (a, b, t) in enumerate(self.edges) if i != index
        )
        flags = frozenset(remap(x) for x in self.zero_forbidden)
        labels = None
        if self.labels is not None:
            labels = {remap(x): t for x, t in self.labels.items() if x != drop}
        return SignedMultigraph(self.vertex_count - 1, edges, flags, labels)

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        """Render in the `p signed` file format (round-trips exactly)."""
        lines = [f"p signed {self.vertex_count} {self.edge_count}"]
        for u, v, s in self.edges:
            lines.append(f"e {u} {v} {'+' if s == 1 else '-'}")
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SignedMultigraph:
    """Parse the signed-graph file format.

    Line 1: ``p signed <vertex_count> <edge_count>``, then exactly
    edge_count lines ``e <u> <v> <+|->`` with 0-based vertex ids.
    Blank lines and ``#`` comments are skipped.
    """
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "signed":
                raise ParseError("expected header 'p signed <vertices> <edges>'", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be nonnegative", lineno)
            header = (n, m)
            continue
        if fields[0] != "e":
            raise ParseError(f"unexpected record {fields[0]!r}", lineno)
        if len(fields) != 4:
            raise ParseError("edge line must be 'e <u> <v> <+|->'", lineno)
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if fields[3] == "+":
            sign = 1
        elif fields[3] == "-":
            sign = -1
        else:
            raise ParseError(f"bad sign token {fields[3]!r}", lineno)
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise ParseError(f"vertex id out of range: ({u}, {v})", lineno)
        edges.append((u, v, sign))
    if header is None:
        raise ParseError("empty input, no header found")
    if len(edges) != header[1]:
        raise ParseError(f"header promised {header[1]} edges, found {len(edges)}")
    return SignedMultigraph(header[0], tuple(edges))


# -- cycles ---------------------------------------------------------------


@dataclass(frozen=True)
class CycleSignRecord:
    """A simple cycle given as a closed vertex walk plus its edge indices."""

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("cycle sign must be +1 or -1")


def simple_cycles(g: SignedMultigraph, max_vertices: int = DEFAULT_CYCLE_GUARD) -> list[CycleSignRecord]:
    """All simple cycles of `g` with their sign products, canonically ordered.

    A simple cycle is a closed walk with no repeated vertex and no repeated
    edge: loops are 1-cycles, a pair of parallel edges is a 2-cycle.  Cycles
    are identified by their edge sets.  Exhaustive enumeration, guarded by
    `max_vertices`.
    """
    if g.vertex_count > max_vertices:
        raise BudgetExceededError(
            f"cycle enumeration guard: {g.vertex_count} vertices > {max_vertices}"
        )
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(g.vertex_count)]
    for i, (u, v, s) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, i, s))
            adj[v].append((u, i, s))

    seen: dict[frozenset[int], CycleSignRecord] = {}

    for i, (u, v, s) in enumerate(g.edges):
        if u == v:
            seen[frozenset((i,))] = CycleSignRecord((u,), (i,), s)

    def record(path_vertices: list[int], path_edges: list[int]) -> None:
        key = frozenset(path_edges)
        if key in seen:
            return
        sign = 1
        for e in path_edges:
            sign *= g.edges[e][2]
        seen[key] = CycleSignRecord(tuple(path_vertices), tuple(path_edges), sign)

    def extend(start: int, current: int, path_vertices: list[int], path_edges: list[int]) -> None:
        for nxt, eidx, _ in adj[current]:
            if eidx in path_edges:
                continue
            if nxt == start:
                if len(path_edges) >= 1:
                    record(path_vertices, path_edges + [eidx])
                continue
            if nxt < start or nxt in path_vertices:
                continue
            extend(start, nxt, path_vertices + [nxt], path_edges + [eidx])

    for start in range(g.vertex_count):
        extend(start, start, [start], [])

    records = list(seen.values())
    records.sort(key=lambda r: (len(r.edge_indices), tuple(sorted(r.edge_indices))))
    return records


def negative_cycles(g: SignedMultigraph, max_vertices: int = DEFAULT_CYCLE_GUARD) -> list[CycleSignRecord]:
    """The simple cycles whose sign product is -1, in canonical order."""
    return [c for c in simple_cycles(g, max_vertices) if c.sign == -1]


# -- switching equivalence / isomorphism ----------------------------------


def switching_equivalent(g1: SignedMultigraph, g2: SignedMultigraph) -> bool:
    """True iff g2 can be obtained from g1 by switching a vertex set.

    Requires identical underlying multigraphs with edge i of g1
    corresponding to edge i of g2.  Criterion: the edge-wise product
    signature must be balanced.
    """
    if not g1.same_underlying(g2):
        raise ValueError("underlying multigraphs differ")
    product = tuple(
        (u, v, s1 * s2) for (u, v, s1), (_, _, s2) in zip(g1.edges, g2.edges)
    )
    return SignedMultigraph(g1.vertex_count, product).is_balanced()


def relabel(g: SignedMultigraph, perm: Sequence[int]) -> SignedMultigraph:
    """Rename vertices: vertex x becomes perm[x].  Edge order is kept."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise ValueError("perm must be a permutation of the vertex ids")
    edges = tuple((perm[u], perm[v], s) for u, v, s in g.edges)
    flags = frozenset(perm[x] for x in g.zero_forbidden)
    labels = None
    if g.labels is not None:
        labels = {perm[x]: t for x, t in g.labels.items()}
    return SignedMultigraph(g.vertex_count, edges, flags, labels)


def _adjacency_multiset(g: SignedMultigraph) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for u, v in g.underlying_pairs():
        counts[(u, v)] = counts.get((u, v), 0) + 1
    return counts


def _underlying_isomorphisms(
    g1: SignedMultigraph, g2: SignedMultigraph, max_vertices: int
) -> Iterable[tuple[int, ...]]:
    """Yield all vertex bijections g1 -> g2 preserving adjacency multiplicity."""
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return
    if n > max_vertices:
        raise BudgetExceededError(f"isomorphism guard: {n} vertices > {max_vertices}")
    a1 = _adjacency_multiset(g1)
    a2 = _adjacency_multiset(g2)
    deg1 = g1.degrees()
    deg2 = g2.degrees()
    if sorted(deg1) != sorted(deg2):
        return

    def mult(table, x, y):
        return table.get((x, y) if x <= y else (y, x), 0)

    image = [-1] * n
    used = [False] * n

    def place(x: int):
        if x == n:
            yield tuple(image)
            return
        for y in range(n):
            if used[y] or deg1[x] != deg2[y]:
                continue
            if mult(a1, x, x) != mult(a2, y, y):
                continue
            ok = True
            for x2 in range(x):
                if mult(a1, x, x2) != mult(a2, y, image[x2]):
                    ok = False
                    break
            if ok:
                image[x] = y
                used[y] = True
                yield from place(x + 1)
                used[y] = False
                image[x] = -1

    yield from place(0)


def automorphisms(
    g: SignedMultigraph, max_vertices: int = DEFAULT_ISO_GUARD
) -> list[tuple[int, ...]]:
    """All vertex permutations preserving underlying adjacency with multiplicity."""
    return list(_underlying_isomorphisms(g, g, max_vertices))


def _switch_compatible(relabeled: SignedMultigraph, g2: SignedMultigraph) -> bool:
    """Can some switching of `relabeled` equal g2 up to pairing of parallel copies?

    Switching flips all parallel edges of a vertex pair together, so per
    pair the sign multisets must match either directly or fully flipped;
    the flip choices must extend to a consistent vertex 2-coloring.
    Loop sign multisets must match exactly.
    """
    by_pair_1: dict[tuple[int, int], list[int]] = {}
    by_pair_2: dict[tuple[int, int], list[int]] = {}
    for (u, v, s) in relabeled.edges:
        by_pair_1.setdefault((u, v) if u <= v else (v, u), []).append(s)
    for (u, v, s) in g2.edges:
        by_pair_2.setdefault((u, v) if u <= v else (v, u), []).append(s)
    if set(by_pair_1) != set(by_pair_2):
        return False

    n = g2.vertex_count
    # Union-find with parity: parity 1 means endpoints lie on opposite
    # sides of the switching cut.
    parent = list(range(n))
    parity = [0] * n

    def find(x: int) -> tuple[int, int]:
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    def union(x: int, y: int, rel: int) -> bool:
        rx, px = find(x)
        ry, py = find(y)
        if rx == ry:
            return (px ^ py) == rel
        parent[rx] = ry
        parity[rx] = px ^ py ^ rel
        return True

    for pair, signs1 in by_pair_1.items():
        signs2 = by_pair_2[pair]
        if len(signs1) != len(signs2):
            return False
        u, v = pair
        a = sorted(signs1)
        b = sorted(signs2)
        b_flipped = sorted(-s for s in signs2)
        if u == v:
            if a != b:
                return False
            continue
        same = a == b
        flipped = a == b_flipped
        if same and flipped:
            continue
        if same:
            if not union(u, v, 0):
                return False
        elif flipped:
            if not union(u, v, 1):
                return False
        else:
            return False
    return True


def switching_isomorphic(
    g1: SignedMultigraph, g2: SignedMultigraph, max_vertices: int = DEFAULT_ISO_GUARD
) -> bool:
    """True iff g1 is isomorphic to a switching of g2.

    Tries every underlying-graph isomorphism and checks whether a
    switching can reconcile the signs.  Non-isomorphic underlying graphs
    give False.
    """
    for perm in _underlying_isomorphisms(g1, g2, max_vertices):
        if _switch_compatible(relabel(g1, perm), g2):
            return True
    return False


# -- small constructors used across tests and the CLI ---------------------


def cycle_graph(n: int, negative_edges: Iterable[int] = ()) -> SignedMultigraph:
    """Cycle on n >= 2 vertices; edge i joins vertex i to (i+1) mod n."""
    if n < 2:
        raise ValueError("cycle needs at least 2 vertices")
    neg = set(negative_edges)
    edges = tuple((i, (i + 1) % n, -1 if i in neg else 1) for i in range(n))
    return SignedMultigraph(n, edges)


def path_graph(n: int) -> SignedMultigraph:
    """All-positive path on n vertices."""
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return SignedMultigraph(n, tuple((i, i + 1, 1) for i in range(n - 1)))


def complete_graph(n: int) -> SignedMultigraph:
    """All-positive complete graph on n vertices."""
    edges = tuple((u, v, 1) for u, v in itertools.combinations(range(n), 2))
    return SignedMultigraph(n, edges)
