"""Embeddability obstructions via Kneser graphs of minimal non-faces.

The pipeline is: minimal non-faces -> disjointness (Kneser) graph ->
chromatic number -> lower bound n - chi - 1 on the index of the deleted
join, against the upper bound given by its dimension.  A lower bound
exceeding d rules out an embedding into the d-sphere; the criterion is
one-directional, so the alternative verdict is "unknown", never "yes".

Complexes built by `join`/`power_join` decompose: minimal non-faces of a
join are the tagged non-faces of the factors, the Kneser graph is the
bipartite sum of the factor graphs, and chromatic numbers add over
bipartite sums.  That keeps every graph actually colored here at desk
scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import Complex, minimal_nonfaces, sort_labels
from .errors import OutOfTheoremRange, TooLargeForExact

EXACT_CAP = 32


@dataclass(frozen=True)
class Graph:
    """Finite simple graph; edges are unordered pairs of declared labels."""

    vertices: tuple
    edges: frozenset[frozenset]

    def __post_init__(self):
        vs = set(self.vertices)
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"not an edge: {sorted(e, key=repr)}")
            if not e <= vs:
                raise ValueError("edge endpoint not among the vertices")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)


def graph(vertices: Iterable, edges: Iterable[Iterable]) -> Graph:
    return Graph(tuple(vertices), frozenset(frozenset(e) for e in edges))


def kneser_graph(family: Iterable[Iterable]) -> Graph:
    """Vertex per set, edge iff the sets are disjoint.

    Vertices are labeled by the sorted tuple of the set's elements.
    """
    sets = sorted(
        {frozenset(f) for f in family},
        key=lambda s: [str(x) for x in sort_labels(s)],
    )
    if not sets:
        raise ValueError("kneser_graph needs a nonempty family")
    labels = [tuple(sort_labels(s)) for s in sets]
    edges = [
        frozenset([labels[i], labels[j]])
        for i, j in itertools.combinations(range(len(sets)), 2)
        if not (sets[i] & sets[j])
    ]
    return Graph(tuple(labels), frozenset(edges))


def bipartite_sum(G: Graph, H: Graph) -> Graph:
    """Disjoint union plus all cross edges; vertices tagged ("1", v), ("2", v)."""
    gv = [("1", v) for v in G.vertices]
    hv = [("2", v) for v in H.vertices]
    edges = {frozenset([("1", a), ("1", b)]) for a, b in map(tuple, G.edges)}
    edges |= {frozenset([("2", a), ("2", b)]) for a, b in map(tuple, H.edges)}
    edges |= {frozenset([u, v]) for u in gv for v in hv}
    return Graph(tuple(gv) + tuple(hv), frozenset(edges))


def _adjacency(G: Graph) -> list[set[int]]:
    index = {v: i for i, v in enumerate(G.vertices)}
    adj: list[set[int]] = [set() for _ in G.vertices]
    for e in G.edges:
        a, b = tuple(e)
        adj[index[a]].add(index[b])
        adj[index[b]].add(index[a])
    return adj


def _greedy_clique(adj: Sequence[set[int]]) -> list[int]:
    order = sorted(range(len(adj)), key=lambda v: -len(adj[v]))
    clique: list[int] = []
    for v in order:
        if all(u in adj[v] for u in clique):
            clique.append(v)
    return clique


def _greedy_coloring(adj: Sequence[set[int]]) -> int:
    order = sorted(range(len(adj)), key=lambda v: -len(adj[v]))
    colors: dict[int, int] = {}
    for v in order:
        used = {colors[u] for u in adj[v] if u in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return max(colors.values(), default=-1) + 1


def _k_colorable(adj: Sequence[set[int]], k: int, clique: Sequence[int]) -> bool:
    n = len(adj)
    if len(clique) > k:
        return False
    colors = [-1] * n
    for i, v in enumerate(clique):
        colors[v] = i

    def extend(num_colored: int) -> bool:
        if num_colored == n:
            return True
        best_key = None
        best_v = -1
        for v in range(n):
            if colors[v] == -1:
                sat = len({colors[u] for u in adj[v] if colors[u] != -1})
                key = (sat, len(adj[v]), -v)
                if best_key is None or key > best_key:
                    best_key, best_v = key, v
        v = best_v
        used = {colors[u] for u in adj[v] if colors[u] != -1}
        if len(used) >= k:
            return False
        highest = max(colors)
        for c in range(min(k - 1, highest + 1) + 1):
            if c not in used:
                colors[v] = c
                if extend(num_colored + 1):
                    return True
                colors[v] = -1
        return False

    return extend(len(clique))


def chromatic_number(G: Graph, mode: str = "exact", cap: int = EXACT_CAP) -> tuple[int, bool]:
    """Chromatic number with an exactness flag.

    Exact mode runs branch-and-bound (greedy clique seed, saturation-first
    branching, canonical color introduction) and is capped at `cap`
    vertices.  Greedy mode returns the largest-degree-first bound, flagged
    inexact; an upper bound still yields valid index lower bounds
    downstream.
    """
    if mode not in ("exact", "greedy_upper"):
        raise ValueError(f"unknown mode {mode!r}")
    n = len(G.vertices)
    if n == 0:
        return 0, True
    adj = _adjacency(G)
    ub = _greedy_coloring(adj)
    if mode == "greedy_upper":
        return ub, False
    if n > cap:
        raise TooLargeForExact(
            f"{n} vertices exceed the exact cap {cap}; use mode='greedy_upper'"
        )
    clique = _greedy_clique(adj)
    for k in range(len(clique), ub):
        if _k_colorable(adj, k, clique):
            return k, True
    return ub, True


def lovasz_kneser_chi(n: int, k: int) -> int:
    """Chromatic number n - 2k + 2 of the Kneser graph KG_{n,k}."""
    if not 0 < 2 * k - 1 <= n:
        raise OutOfTheoremRange(f"need 0 < 2k-1 <= n, got n={n}, k={k}")
    return n - 2 * k + 2


@dataclass(frozen=True)
class ObstructionVerdict:
    complex_size: int
    chi_used: int
    chi_is_exact: bool
    sarkaria_lower: int
    djn_dim_upper: int
    target_sphere: int | None
    embeddable: str  # "no" | "unknown"

    def __post_init__(self):
        if self.sarkaria_lower != self.complex_size - self.chi_used - 1:
            raise ValueError("lower bound must equal n - chi - 1")
        if self.chi_is_exact and self.sarkaria_lower > self.djn_dim_upper:
            raise ValueError("exact lower bound exceeds the dimension upper bound")
        want = "unknown"
        if self.target_sphere is not None and self.sarkaria_lower > self.target_sphere:
            want = "no"
        if self.embeddable != want:
            raise ValueError("verdict inconsistent with the bounds")


def _verdict(K: Complex, chi: int, exact: bool, target: int | None) -> ObstructionVerdict:
    n = len(K.vertices)
    lower = n - chi - 1
    upper = djn_dim_upper(K)
    embeddable = "no" if target is not None and lower > target else "unknown"
    return ObstructionVerdict(n, chi, exact, lower, upper, target, embeddable)


def nonface_kneser_chi(K: Complex, mode: str = "exact", cap: int = EXACT_CAP) -> tuple[int, bool]:
    """Chromatic number of the Kneser graph of K's minimal non-faces.

    Join-built complexes are decomposed factor by factor: the full Kneser
    graph is the bipartite sum of the factor graphs, so the chromatic
    numbers add.
    """
    if K.factors is not None:
        total, exact = 0, True
        for _, factor in K.factors:
            chi, ex = nonface_kneser_chi(factor, mode, cap)
            total += chi
            exact = exact and ex
        return total, exact
    nf = minimal_nonfaces(K)
    if not nf:
        return 0, True
    return chromatic_number(kneser_graph(nf), mode, cap)


def djn_dim_upper(K: Complex) -> int:
    """Dimension of the deleted join, an upper bound for its index.

    Computed from facet pairs: the largest disjoint face pair has the form
    (F, G - F) over facets F, G.  Join-built complexes add up factor
    dimensions (plus one per extra factor).
    """
    if K.factors is not None:
        dims = [djn_dim_upper(factor) for _, factor in K.factors]
        return sum(dims) + len(dims) - 1
    best = -1
    for f in K.facets:
        for g in K.facets:
            best = max(best, len(f) + len(g - f))
    return best - 1 if best >= 0 else -1


def sarkaria_bound(K: Complex, chi_mode: str = "exact", cap: int = EXACT_CAP) -> ObstructionVerdict:
    """Index interval for the deleted join: [n - chi - 1, dim djn K]."""
    chi, exact = nonface_kneser_chi(K, chi_mode, cap)
    return _verdict(K, chi, exact, None)


def nonembeddable(K: Complex, d: int, chi_mode: str = "exact", cap: int = EXACT_CAP) -> ObstructionVerdict:
    """Verdict "no" iff the index lower bound exceeds d; else "unknown"."""
    if d < 0:
        raise ValueError("sphere dimension must be >= 0")
    chi, exact = nonface_kneser_chi(K, chi_mode, cap)
    return _verdict(K, chi, exact, d)
