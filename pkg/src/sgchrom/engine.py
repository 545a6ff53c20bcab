"""Deletion-contraction engine for signed chromatic polynomials.

Computes the chromatic polynomial (counts colorings in 2k+1 colors at
odd arguments) or the zero-free chromatic polynomial (2k colors at even
arguments) of a signed multigraph as an exact integer polynomial.

Recursion on a positive non-loop edge e: poly(G) = poly(G-e) - poly(G/e).
Reductions applied before branching:

  * duplicate parallel edges of equal sign impose one constraint: deduped
  * positive loop: the zero polynomial
  * negative loop: deleted; in chromatic mode its vertex loses color 0
  * isolated vertices contribute a factor l (or l-1 when the vertex may
    not take 0), pendant vertices a factor l-1, stripped iteratively
  * all-negative edge set: switch at one endpoint to create a positive
    edge (both polynomials are switching invariant)

Subresults are memoized on the exact normalized graph; the cache never
changes results, only skips recomputation.
"""

from __future__ import annotations

import enum

from .errors import BudgetExceededError
from .graph import SignedMultigraph
from .oracle import DEFAULT_BUDGET as ORACLE_BUDGET
from .oracle import count_proper, count_zero_free
from .poly import Polynomial, X, interpolate_integer_poly

DEFAULT_ENGINE_BUDGET = 1_000_000


class Mode(enum.Enum):
    """Which coloring family the polynomial counts."""

    CHROMATIC = "chromatic"
    ZERO_FREE = "zero-free"


_LAM = X
_LAM1 = X - 1

_Edges = tuple[tuple[int, int, int], ...]
_State = tuple[int, _Edges, frozenset[int]]


def _normalize(n: int, edges: _Edges, flags: frozenset[int], chromatic: bool):
    """Apply loop/duplicate/pendant reductions until stable.

    Returns (lam_exp, lam1_exp, state) where state is the reduced graph,
    or None when a positive loop forces the zero polynomial.
    """
    lam_exp = 0
    lam1_exp = 0
    flagset = set(flags) if chromatic else set()

    seen: set[tuple[int, int, int]] = set()
    kept: list[tuple[int, int, int]] = []
    for u, v, s in edges:
        if u == v:
            if s == 1:
                return None
            if chromatic:
                flagset.add(u)
            continue
        key = (u, v, s) if u <= v else (v, u, s)
        if key in seen:
            continue
        seen.add(key)
        kept.append(key)

    # Iteratively strip degree-0 and degree-1 vertices.  A pendant vertex
    # has exactly one forbidden color whatever its neighbor gets, except a
    # zero-forbidden pendant in chromatic mode, which must stay.
    alive = [True] * n
    edge_alive = [True] * len(kept)
    deg = [0] * n
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, (u, v, _) in enumerate(kept):
        deg[u] += 1
        deg[v] += 1
        incident[u].append(i)
        incident[v].append(i)

    queue = list(range(n))
    while queue:
        v = queue.pop()
        if not alive[v]:
            continue
        if deg[v] == 0:
            alive[v] = False
            if v in flagset:
                lam1_exp += 1
                flagset.discard(v)
            else:
                lam_exp += 1
        elif deg[v] == 1 and v not in flagset:
            ei = next(i for i in incident[v] if edge_alive[i])
            a, b, _ = kept[ei]
            other = b if a == v else a
            alive[v] = False
            edge_alive[ei] = False
            deg[other] -= 1
            lam1_exp += 1
            queue.append(other)

    if not any(edge_alive):
        # No edges left: the queue has already stripped every vertex.
        return lam_exp, lam1_exp, (0, (), frozenset())

    remap = [-1] * n
    nxt = 0
    for v in range(n):
        if alive[v]:
            remap[v] = nxt
            nxt += 1
    new_edges = tuple(
        (remap[u], remap[v], s)
        for i, (u, v, s) in enumerate(kept)
        if edge_alive[i]
    )
    new_flags = frozenset(remap[v] for v in flagset if alive[v])
    return lam_exp, lam1_exp, (nxt, new_edges, new_flags)


def _switch_raw(n: int, edges: _Edges, vertex: int) -> _Edges:
    return tuple(
        (u, v, -s if (u == vertex) != (v == vertex) else s) for u, v, s in edges
    )


def _pick_edge(n: int, edges: _Edges) -> int:
    """Index of a positive edge, preferring one that lies on a cycle."""
    fallback = -1
    for i, (u, v, s) in enumerate(edges):
        if s != 1:
            continue
        if fallback < 0:
            fallback = i
        # Cycle edge test: endpoints stay connected without it.
        adj: list[list[int]] = [[] for _ in range(n)]
        for j, (a, b, _) in enumerate(edges):
            if j != i:
                adj[a].append(b)
                adj[b].append(a)
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                return i
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return fallback


def _contract_raw(n: int, edges: _Edges, flags: frozenset[int], index: int):
    u, v, _ = edges[index]
    keep, drop = (u, v) if u < v else (v, u)

    def remap(x: int) -> int:
        if x == drop:
            return keep
        return x - 1 if x > drop else x

    new_edges = tuple(
        (remap(a), remap(b), s) for i, (a, b, s) in enumerate(edges) if i != index
    )
    new_flags = frozenset(remap(x) for x in flags)
    return n - 1, new_edges, new_flags


def chromatic_poly(
    g: SignedMultigraph, mode: Mode = Mode.CHROMATIC, budget: int = DEFAULT_ENGINE_BUDGET
) -> Polynomial:
    """Exact polynomial whose evaluations give the coloring counts of `g`.

    In chromatic mode the value at 2k+1 equals count_proper(g, k); in
    zero-free mode the value at 2k equals count_zero_free(g, k).
    """
    chromatic = mode is Mode.CHROMATIC
    memo: dict[_State, Polynomial] = {}
    nodes = 0

    def rec(n: int, edges: _Edges, flags: frozenset[int]) -> Polynomial:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"engine exceeded budget of {budget} nodes")
        reduced = _normalize(n, edges, flags, chromatic)
        if reduced is None:
            return Polynomial.zero()
        lam_exp, lam1_exp, (rn, redges, rflags) = reduced
        factor = _LAM**lam_exp * _LAM1**lam1_exp
        if rn == 0:
            return factor
        key = (rn, redges, rflags)
        core = memo.get(key)
        if core is None:
            work_edges = redges
            if all(s == -1 for _, _, s in work_edges):
                work_edges = _switch_raw(rn, work_edges, work_edges[0][0])
            e = _pick_edge(rn, work_edges)
            deleted = work_edges[:e] + work_edges[e + 1 :]
            cn, cedges, cflags = _contract_raw(rn, work_edges, rflags, e)
            core = rec(rn, deleted, rflags) - rec(cn, cedges, cflags)
            memo[key] = core
        return factor * core

    flags = g.zero_forbidden if chromatic else frozenset()
    return rec(g.vertex_count, g.edges, flags)


def interpolated_poly(
    g: SignedMultigraph,
    mode: Mode = Mode.CHROMATIC,
    budget: int = ORACLE_BUDGET,
    force_pure: bool = False,
) -> Polynomial:
    """Independent route: interpolate the polynomial from oracle counts.

    Samples the brute-force counter at the smallest vertex_count+1
    arguments of the right parity and fits the unique integer polynomial.
    Never calls the deletion-contraction engine.
    """
    degree = g.vertex_count
    samples: list[tuple[int, int]] = []
    if mode is Mode.CHROMATIC:
        for k in range(degree + 1):
            samples.append((2 * k + 1, count_proper(g, k, budget, force_pure)))
    else:
        for k in range(1, degree + 2):
            samples.append((2 * k, count_zero_free(g, k, budget, force_pure)))
    return interpolate_integer_poly(samples, degree)
