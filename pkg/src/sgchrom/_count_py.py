"""Pure-Python kernel for exact proper-coloring counts.

Backtracking search over vertex colorings with two exact accelerations:
the residual graph of uncolored vertices is split into connected
components whose counts multiply, and a vertex with no uncolored
neighbors is tallied directly from its remaining palette instead of
branched on.  Branch vertices are taken in descending residual degree.

Counts are Python ints, so no overflow is possible.  The compiled kernel
in ``_count_cy`` implements the identical search; this module is the
fallback when the extension is unavailable.
"""

from __future__ import annotations

from .errors import BudgetExceededError

KERNEL_NAME = "pure-python"


def count_colorings(
    vertex_count: int,
    edges: list[tuple[int, int, int]],
    zero_forbidden: set[int],
    k: int,
    zero_free: bool,
    budget: int,
) -> int:
    """Count proper colorings with colors in {-k..k} ({-k..-1,1..k} if zero_free).

    `edges` must contain no loops (the caller resolves loop semantics) and
    should be deduplicated.  `zero_forbidden` vertices may not take color 0;
    it is ignored in zero-free mode where 0 is not in the palette anyway.
    """
    if vertex_count == 0:
        return 1

    n_slots = 2 * k + 1
    if zero_free:
        palette = [s for s in range(n_slots) if s != k]
    else:
        palette = list(range(n_slots))

    adj: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
    for u, v, s in edges:
        adj[u].append((v, s))
        adj[v].append((u, s))

    # forb[v][slot]: how many current constraints exclude that color;
    # allowed[v]: palette slots with no constraint.
    forb = [[0] * n_slots for _ in range(vertex_count)]
    allowed = [len(palette)] * vertex_count
    if not zero_free:
        for v in zero_forbidden:
            forb[v][k] = 1
            allowed[v] -= 1

    uncolored = [True] * vertex_count
    nodes = 0

    def split_components(region: list[int]) -> list[list[int]]:
        comps: list[list[int]] = []
        pending = set(region)
        for start in region:
            if start not in pending:
                continue
            comp = [start]
            pending.discard(start)
            stack = [start]
            while stack:
                x = stack.pop()
                for y, _ in adj[x]:
                    if y in pending:
                        pending.discard(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(comp)
        return comps

    def count_region(region: list[int]) -> int:
        if not region:
            return 1
        total = 1
        for comp in split_components(region):
            total *= count_component(comp)
            if total == 0:
                break
        return total

    def count_component(comp: list[int]) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"coloring search exceeded budget of {budget} nodes")
        if len(comp) == 1:
            return allowed[comp[0]]

        # Branch on the vertex with the most uncolored neighbors; ties go
        # to overall degree, then to the smallest id for determinism.
        best = comp[0]
        best_key = (-1, -1)
        for v in comp:
            res_deg = sum(1 for w, _ in adj[v] if uncolored[w])
            key = (res_deg, len(adj[v]))
            if key > best_key or (key == best_key and v < best):
                best, best_key = v, key
        v = best
        rest = [w for w in comp if w != v]
        fv = forb[v]
        total = 0
        for slot in palette:
            if fv[slot]:
                continue
            color = slot - k
            touched: list[tuple[int, int]] = []
            dead = False
            for w, s in adj[v]:
                if not uncolored[w]:
                    continue
                wslot = s * color + k
                fw = forb[w]
                fw[wslot] += 1
                touched.append((w, wslot))
                if fw[wslot] == 1:
                    allowed[w] -= 1
                    if allowed[w] == 0:
                        dead = True
            if not dead:
                uncolored[v] = False
                total += count_region(rest)
                uncolored[v] = True
            for w, wslot in touched:
                fw = forb[w]
                fw[wslot] -= 1
                if fw[wslot] == 0:
                    allowed[w] += 1
        return total

    return count_region(list(range(vertex_count)))
