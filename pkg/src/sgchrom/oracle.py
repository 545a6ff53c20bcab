"""Exact counting of proper signed colorings by exhaustive search.

This is the ground-truth side of every cross-check in the package: it
never touches the polynomial engine.  A coloring with color radius k maps
vertices to {-k..k} (chromatic counting, 2k+1 colors) or to the same set
without 0 (zero-free counting, 2k colors); an edge (x, y, s) demands
c(x) != s*c(y).

The inner search runs on a compiled kernel when the extension built from
``_count_cy.pyx`` is importable, and otherwise on the pure-Python twin in
``_count_py``.  Both implement the same algorithm and return identical
counts; see benchmarks/bench_kernels.py for the speed comparison.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping

from ._count_py import count_colorings as _count_pure
from .errors import UncolorableError
from .graph import SignedMultigraph

try:  # compiled lane, optional
    from ._count_cy import count_colorings as _count_compiled
except ImportError:  # pragma: no cover - depends on build environment
    _count_compiled = None

DEFAULT_BUDGET = 100_000_000

# The compiled kernel accumulates in 128-bit integers; counts are bounded
# by palette_size ** vertices, so route anything near the limit to the
# pure lane, which uses Python ints.
_COMPILED_BIT_LIMIT = 120


def active_kernel_name() -> str:
    if _count_compiled is not None and not _force_pure():
        return "compiled"
    return "pure-python"


def _force_pure() -> bool:
    return os.environ.get("SGCHROM_PURE", "") not in ("", "0")


def _dispatch(
    vertex_count: int,
    edges: list[tuple[int, int, int]],
    flags: set[int],
    k: int,
    zero_free: bool,
    budget: int,
    force_pure: bool,
) -> int:
    palette_size = 2 * k if zero_free else 2 * k + 1
    use_compiled = (
        _count_compiled is not None
        and not force_pure
        and not _force_pure()
        and vertex_count * max(palette_size, 1).bit_length() <= _COMPILED_BIT_LIMIT
    )
    kernel = _count_compiled if use_compiled else _count_pure
    return kernel(vertex_count, edges, flags, k, zero_free, budget)


def _prepare(g: SignedMultigraph, zero_free: bool):
    """Resolve loops and duplicate edges into kernel-ready constraints.

    Returns (edges, flags) or None when a positive loop makes every
    coloring improper.
    """
    flags = set() if zero_free else set(g.zero_forbidden)
    seen: set[tuple[int, int, int]] = set()
    edges: list[tuple[int, int, int]] = []
    for u, v, s in g.edges:
        if u == v:
            if s == 1:
                return None
            if not zero_free:
                flags.add(u)  # negative loop: color 0 excluded
            continue
        key = (u, v, s) if u <= v else (v, u, s)
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    return edges, flags


def count_proper(
    g: SignedMultigraph, k: int, budget: int = DEFAULT_BUDGET, force_pure: bool = False
) -> int:
    """Number of proper colorings of g with the 2k+1 colors {-k..k}."""
    if k < 0:
        raise ValueError("color radius k must be nonnegative")
    prepared = _prepare(g, zero_free=False)
    if prepared is None:
        return 0
    edges, flags = prepared
    return _dispatch(g.vertex_count, edges, flags, k, False, budget, force_pure)


def count_zero_free(
    g: SignedMultigraph, k: int, budget: int = DEFAULT_BUDGET, force_pure: bool = False
) -> int:
    """Number of proper colorings with the 2k colors {-k..-1, 1..k}."""
    if k < 0:
        raise ValueError("color radius k must be nonnegative")
    prepared = _prepare(g, zero_free=True)
    if prepared is None:
        return 0
    edges, flags = prepared
    return _dispatch(g.vertex_count, edges, flags, k, True, budget, force_pure)


@dataclass(frozen=True)
class SignedColoring:
    """A total color assignment with radius k, optionally zero-free."""

    assignment: Mapping[int, int]
    k: int
    zero_free: bool = False

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("color radius k must be nonnegative")
        for v, c in self.assignment.items():
            if abs(c) > self.k:
                raise ValueError(f"color {c} at vertex {v} outside radius {self.k}")
            if self.zero_free and c == 0:
                raise ValueError(f"vertex {v} colored 0 in zero-free mode")


def is_proper(g: SignedMultigraph, coloring: SignedColoring) -> bool:
    """Check c(x) != sign * c(y) on every edge, plus the zero-forbidden flags."""
    c = coloring.assignment
    missing = [v for v in range(g.vertex_count) if v not in c]
    if missing:
        raise ValueError(f"assignment misses vertices {missing}")
    for v in g.zero_forbidden:
        if c[v] == 0:
            return False
    for u, v, s in g.edges:
        if c[u] == s * c[v]:
            return False
    return True


def chromatic_number(g: SignedMultigraph, budget: int = DEFAULT_BUDGET) -> int:
    """Smallest color count that admits a proper coloring.

    Odd counts 2k+1 test chromatic counting, even counts 2k test
    zero-free counting, ascending from 1.  A graph with a positive loop
    has no proper coloring at all and raises UncolorableError.
    """
    if g.has_positive_loop():
        raise UncolorableError("a positive loop admits no proper coloring")
    # 2*vertex_count+1 colors always suffice (give every vertex a distinct
    # positive color), so the scan terminates.
    for size in range(1, 2 * g.vertex_count + 2):
        if size % 2 == 1:
            if count_proper(g, (size - 1) // 2, budget) > 0:
                return size
        else:
            if count_zero_free(g, size // 2, budget) > 0:
                return size
    raise AssertionError("unreachable: every loop-free signed graph is colorable")
