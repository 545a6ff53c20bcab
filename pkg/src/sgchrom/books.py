"""Signed book graphs: constructors, closed-form polynomials, classes.

A book graph B(m, n) is n cycles of length m (the pages) sharing one
common edge uv.  Signatures of interest: sigma_l makes the first page
edge at u negative on pages 1..l; the "uv" signature makes only the
common edge negative.  Up to switching and graph isomorphism these are
the only cases, and each family has a closed-form chromatic and
zero-free chromatic polynomial built from the reduced cycle polynomial
(chromatic polynomial of an m-cycle divided by l*(l-1)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .engine import Mode
from .errors import BudgetExceededError, SgchromError
from .graph import SignedMultigraph, automorphisms
from .poly import Polynomial, X, reduced_cycle_poly

SIG_UV = "uv"


@dataclass(frozen=True)
class BookSpec:
    """Identifies a signed book graph: page length m, page count n, signature."""

    m: int
    n: int
    sig: int | str = 0

    def __post_init__(self):
        if self.m < 3:
            raise ValueError("page cycle length m must be at least 3")
        if self.n < 1:
            raise ValueError("page count n must be at least 1")
        if isinstance(self.sig, str):
            if self.sig != SIG_UV:
                raise ValueError(f"signature selector must be 0..n or {SIG_UV!r}")
        elif not 0 <= self.sig <= self.n:
            raise ValueError(f"signature index {self.sig} outside 0..{self.n}")


def _page_vertex(m: int, page: int, j: int) -> int:
    """Vertex id of the j-th internal vertex (1-based) of the given page."""
    return 2 + (page - 1) * (m - 2) + (j - 1)


def build_book(spec: BookSpec) -> SignedMultigraph:
    """Construct the signed book graph for `spec`.

    Vertex numbering: u=0, v=1, then each page's internal vertices in
    order.  Edge order: uv first, then per page the edge at u followed by
    the path down to v.
    """
    m, n = spec.m, spec.n
    edges: list[tuple[int, int, int]] = [(0, 1, -1 if spec.sig == SIG_UV else 1)]
    labels = {0: "u", 1: "v"}
    neg_pages = spec.sig if isinstance(spec.sig, int) else 0
    for page in range(1, n + 1):
        first = _page_vertex(m, page, 1)
        edges.append((0, first, -1 if page <= neg_pages else 1))
        for j in range(1, m - 2):
            edges.append((_page_vertex(m, page, j), _page_vertex(m, page, j + 1), 1))
        edges.append((_page_vertex(m, page, m - 2), 1, 1))
        for j in range(1, m - 1):
            labels[_page_vertex(m, page, j)] = f"u_{j}^{page}"
    return SignedMultigraph(2 + n * (m - 2), tuple(edges), labels=labels)


def build_unbalanced_cycle(n: int) -> SignedMultigraph:
    """Cycle on n >= 2 vertices with exactly one negative edge.

    For n = 2 this is the parallel +/- pair on two vertices.
    """
    if n < 2:
        raise ValueError("unbalanced cycle needs at least 2 vertices")
    edges = tuple(
        (i, (i + 1) % n, -1 if i == n - 1 else 1) for i in range(n)
    )
    return SignedMultigraph(n, edges)


def build_digon_book(m: int, n: int) -> SignedMultigraph:
    """Book graph whose common edge is replaced by a +/- parallel pair.

    m = 2 is the bare two-vertex unbalanced digon (only n = 1 makes
    sense there); for m >= 3 the n all-positive pages are attached as in
    build_book.
    """
    if m < 2:
        raise ValueError("page cycle length must be at least 2")
    if n < 1:
        raise ValueError("page count must be at least 1")
    if m == 2:
        if n != 1:
            raise ValueError("m = 2 admits only the single digon (n = 1)")
        return build_unbalanced_cycle(2)
    edges: list[tuple[int, int, int]] = [(0, 1, 1), (0, 1, -1)]
    for page in range(1, n + 1):
        first = _page_vertex(m, page, 1)
        edges.append((0, first, 1))
        for j in range(1, m - 2):
            edges.append((_page_vertex(m, page, j), _page_vertex(m, page, j + 1), 1))
        edges.append((_page_vertex(m, page, m - 2), 1, 1))
    return SignedMultigraph(2 + n * (m - 2), tuple(edges))


# -- closed-form polynomials -------------------------------------------------


def cycle_chromatic_poly(m: int) -> Polynomial:
    """Chromatic polynomial of the all-positive m-cycle."""
    if m < 2:
        raise ValueError("cycle length must be at least 2")
    return (X - 1) ** m + (-1) ** m * (X - 1)


def unbalanced_cycle_poly(n: int, mode: Mode) -> Polynomial:
    """Closed form for the one-negative-edge n-cycle.

    Chromatic: (l-1)^n.  Zero-free: (l-1)^n - (-1)^n, which also equals
    l times the reduced cycle polynomial of length n+1.
    """
    if n < 2:
        raise ValueError("unbalanced cycle needs length at least 2")
    if mode is Mode.CHROMATIC:
        return (X - 1) ** n
    return (X - 1) ** n - (-1) ** n


def digon_book_poly(m: int, n: int, mode: Mode) -> Polynomial:
    """Closed form for the book with an unbalanced digon as common edge."""
    if m < 2 or n < 1:
        raise ValueError("digon book needs m >= 2, n >= 1")
    head = (X - 1) ** 2 if mode is Mode.CHROMATIC else X * (X - 2)
    return head * reduced_cycle_poly(m) ** n


def page_recursion_poly(m: int, n: int, mode: Mode) -> Polynomial:
    """Polynomial of the book whose only negative edge is the common one.

    For a single page this is the unbalanced m-cycle.  Each further page
    contributes via f(n) = (l-1) * q_{m-1} * f(n-1) + (-1)^m * head * q_m^(n-1)
    with q the reduced cycle polynomial and head (l-1)^2 or l(l-2) by mode.
    """
    if m < 3 or n < 1:
        raise ValueError("page recursion needs m >= 3, n >= 1")
    current = unbalanced_cycle_poly(m, mode)
    if n == 1:
        return current
    q_m = reduced_cycle_poly(m)
    q_m1 = reduced_cycle_poly(m - 1)
    head = (X - 1) ** 2 if mode is Mode.CHROMATIC else X * (X - 2)
    sign = (-1) ** (m - 2)
    for pages in range(2, n + 1):
        current = (X - 1) * q_m1 * current + sign * head * q_m ** (pages - 1)
    return current


def page_recursion_closed_form(m: int, n: int, mode: Mode) -> Polynomial:
    """Non-recursive expression for page_recursion_poly.

    Sums the geometric part of the recursion in closed form; the divisor
    (l-1)*q_{m-1} - q_m is the constant (-1)^(m-1), so the division is
    exact.  Kept as an independently computed identity check.
    """
    if m < 3 or n < 1:
        raise ValueError("closed form needs m >= 3, n >= 1")
    q_m = reduced_cycle_poly(m)
    q_m1 = reduced_cycle_poly(m - 1)
    numerator = ((X - 1) * q_m1) ** (n - 1) - q_m ** (n - 1)
    denominator = (X - 1) * q_m1 - q_m
    quotient = numerator.exact_div(denominator)
    sign = (-1) ** (m - 2)
    if mode is Mode.CHROMATIC:
        return (X - 1) ** (m + n - 1) * q_m1 ** (n - 1) + sign * q_m * (X - 1) ** 2 * quotient
    return (
        X * (X - 1) ** (n - 1) * q_m1 ** (n - 1) * reduced_cycle_poly(m + 1)
        + sign * X * (X - 2) * q_m * quotient
    )


def closed_poly(spec: BookSpec, mode: Mode) -> Polynomial:
    """Closed-form polynomial for any canonical signed book graph.

    sig = 0 is the balanced book, sig = 1 the one-negative-page book,
    sig = l >= 2 peels n-l pages off the "uv" family, and sig = "uv"
    is the page recursion itself (a single page being the unbalanced
    cycle).
    """
    m, n = spec.m, spec.n
    q_m = reduced_cycle_poly(m)
    if spec.sig == SIG_UV:
        return page_recursion_poly(m, n, mode)
    l = spec.sig
    if l == 0:
        return X * (X - 1) * q_m**n
    if l == 1:
        if mode is Mode.CHROMATIC:
            return (X - 1) ** m * q_m ** (n - 1)
        return X * q_m ** (n - 1) * reduced_cycle_poly(m + 1)
    return q_m ** (n - l) * page_recursion_poly(m, l, mode)


# -- chromatic numbers --------------------------------------------------------


def chromatic_number_formula(m: int, n: int, l: int) -> int:
    """Chromatic number of the book with signature sigma_l, for n >= 2.

    2 when the pages are odd and every page edge at u is negative, or
    when the pages are even and none is; 3 otherwise.  Single-page books
    are out of range: use the counting oracle (their value is 2 or 3).
    """
    if m < 3:
        raise ValueError("page cycle length m must be at least 3")
    if n < 2:
        raise ValueError("formula requires n >= 2; use the oracle for one page")
    if not 0 <= l <= n:
        raise ValueError(f"signature index {l} outside 0..{n}")
    if m % 2 == 1 and l == n:
        return 2
    if m % 2 == 0 and l == 0:
        return 2
    return 3


# -- automorphisms and switching classes ----------------------------------------


def book_automorphisms(m: int, n: int) -> list[tuple[int, ...]]:
    """The page-permutation x (u,v)-swap group as vertex permutations.

    For n >= 2 this is the full automorphism group of the underlying
    book graph (order n! * 2).  Swapping u and v reverses every page's
    internal path.
    """
    if m < 3 or n < 1:
        raise ValueError("book automorphisms need m >= 3, n >= 1")
    perms: list[tuple[int, ...]] = []
    size = 2 + n * (m - 2)
    for page_images in itertools.permutations(range(1, n + 1)):
        for swap in (False, True):
            perm = [0] * size
            perm[0], perm[1] = (1, 0) if swap else (0, 1)
            for page in range(1, n + 1):
                target = page_images[page - 1]
                for j in range(1, m - 1):
                    jj = (m - 1 - j) if swap else j
                    perm[_page_vertex(m, page, j)] = _page_vertex(m, target, jj)
            perms.append(tuple(perm))
    return perms


@dataclass(frozen=True)
class SwitchingClass:
    """One switching-isomorphism class of signatures of a book graph."""

    representative: frozenset[int]
    size: int
    negative_page_count: int


def enumerate_switching_classes(
    m: int, n: int, max_edges: int = 20
) -> list[SwitchingClass]:
    """Partition all signatures of B(m, n) under switching isomorphism.

    Walks the orbit of every signature bitmask under single-vertex
    switchings and underlying-graph automorphisms.  Each orbit contains
    exactly one canonical sigma_l signature, which becomes its
    representative; the class invariant is its count of negative pages.
    """
    spec = BookSpec(m, n, 0)
    g = build_book(spec)
    n_edges = g.edge_count
    if n_edges > max_edges:
        raise BudgetExceededError(
            f"signature enumeration guard: {n_edges} edges > {max_edges}"
        )

    pair_to_index = {}
    for i, (a, b, _) in enumerate(g.edges):
        pair_to_index[(a, b) if a <= b else (b, a)] = i

    edge_perms: list[tuple[int, ...]] = []
    for perm in automorphisms(g):
        mapped = []
        for a, b, _ in g.edges:
            x, y = perm[a], perm[b]
            mapped.append(pair_to_index[(x, y) if x <= y else (y, x)])
        edge_perms.append(tuple(mapped))

    switch_masks = [0] * g.vertex_count
    for i, (a, b, _) in enumerate(g.edges):
        switch_masks[a] ^= 1 << i
        switch_masks[b] ^= 1 << i

    sigma_masks = []
    for l in range(n + 1):
        mask = 0
        for page in range(1, l + 1):
            mask |= 1 << (1 + (page - 1) * (m - 1))
        sigma_masks.append(mask)

    page_masks = []
    for page in range(1, n + 1):
        mask = 1  # the common edge
        base = 1 + (page - 1) * (m - 1)
        for j in range(m - 1):
            mask |= 1 << (base + j)
        page_masks.append(mask)

    def apply_edge_perm(mask: int, eperm: tuple[int, ...]) -> int:
        out = 0
        for i in range(n_edges):
            if mask >> i & 1:
                out |= 1 << eperm[i]
        return out

    visited = bytearray(1 << n_edges)
    classes: list[SwitchingClass] = []
    for seed in range(1 << n_edges):
        if visited[seed]:
            continue
        orbit = [seed]
        visited[seed] = 1
        head = 0
        while head < len(orbit):
            mask = orbit[head]
            head += 1
            for sw in switch_masks:
                nxt = mask ^ sw
                if not visited[nxt]:
                    visited[nxt] = 1
                    orbit.append(nxt)
            for eperm in edge_perms:
                nxt = apply_edge_perm(mask, eperm)
                if not visited[nxt]:
                    visited[nxt] = 1
                    orbit.append(nxt)

        orbit_set = set(orbit)
        reps = [l for l, mask in enumerate(sigma_masks) if mask in orbit_set]
        if len(reps) != 1:
            raise SgchromError(
                f"expected one canonical signature per class, found {reps}"
            )
        l = reps[0]
        negative_pages = sum(
            1 for pm in page_masks if bin(sigma_masks[l] & pm).count("1") % 2 == 1
        )
        rep_edges = frozenset(
            i for i in range(n_edges) if sigma_masks[l] >> i & 1
        )
        classes.append(SwitchingClass(rep_edges, len(orbit), negative_pages))

    classes.sort(key=lambda c: c.negative_page_count)
    return classes
