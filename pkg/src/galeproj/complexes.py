"""Abstract simplicial complexes stored by their facet antichain.

Face membership is a subset test against the facets, which is the right
representation for the small, join-structured complexes this package
works with.  Joins tag vertex labels with a factor prefix ("1:v", "2:v",
...) so repeated joins stay unambiguous; complexes built by `join` or
`power_join` remember their factors, which downstream obstruction
computations exploit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import LabelOutsideVertexSet

Label = object  # ints or strings in practice
Face = frozenset


def _label_key(label):
    return (0, label, "") if isinstance(label, int) else (1, 0, str(label))


def sort_labels(labels: Iterable) -> list:
    return sorted(labels, key=_label_key)


def _antichain(sets: Iterable[Face]) -> frozenset[Face]:
    by_size = sorted(set(sets), key=len, reverse=True)
    kept: list[Face] = []
    for s in by_size:
        if not any(s < t or s == t for t in kept):
            kept.append(s)
    return frozenset(kept)


@dataclass(frozen=True, eq=False)
class Complex:
    """Simplicial complex on ordered vertices, given by its facets."""

    vertices: tuple
    facets: frozenset[Face]
    factors: tuple | None = field(default=None, repr=False)

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise LabelOutsideVertexSet("duplicate vertex labels")
        for f in self.facets:
            if not f <= vs:
                raise LabelOutsideVertexSet(f"facet {sorted(f, key=_label_key)} uses undeclared labels")

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.facets == other.facets

    def __hash__(self):
        return hash((frozenset(self.vertices), self.facets))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_face(self, sigma: Iterable) -> bool:
        s = frozenset(sigma)
        return any(s <= f for f in self.facets)

    def faces(self) -> set[Face]:
        out: set[Face] = set()
        for f in self.facets:
            for r in range(len(f) + 1):
                out.update(map(frozenset, itertools.combinations(f, r)))
        return out

    def sorted_facets(self) -> list[list]:
        return sorted((sort_labels(f) for f in self.facets), key=lambda f: [_label_key(x) for x in f])


def closure_from_facets(vertices: Iterable, facets: Iterable[Iterable]) -> Complex:
    """Complex on the given vertices with the antichain reduction of `facets`."""
    return Complex(tuple(vertices), _antichain(frozenset(f) for f in facets))


def relabel(K: Complex, mapping: Mapping) -> Complex:
    """Rename vertices through an injective mapping."""
    return Complex(
        tuple(mapping[v] for v in K.vertices),
        frozenset(frozenset(mapping[v] for v in f) for f in K.facets),
    )


def _tag(prefix: str, label) -> str:
    return f"{prefix}:{label}"


def _tagged(prefix: str, K: Complex) -> Complex:
    return relabel(K, {v: _tag(prefix, v) for v in K.vertices})


def join(K: Complex, L: Complex) -> Complex:
    """Join of two complexes on factor-tagged labels ("1:v" and "2:v")."""
    a, b = _tagged("1", K), _tagged("2", L)
    facets = frozenset(f | g for f in a.facets for g in b.facets)
    return Complex(a.vertices + b.vertices, facets, factors=(("1", K), ("2", L)))


def power_join(L: Complex, d: int) -> Complex:
    """d-fold join of L with itself, factors tagged "1:", ..., "d:"."""
    if d < 1:
        raise ValueError("power_join needs d >= 1")
    copies = [_tagged(str(k), L) for k in range(1, d + 1)]
    vertices = tuple(v for c in copies for v in c.vertices)
    facets = frozenset(
        frozenset().union(*combo)
        for combo in itertools.product(*(c.facets for c in copies))
    )
    return Complex(vertices, facets, factors=tuple((str(k), L) for k in range(1, d + 1)))


def complement_complex(K: Complex) -> Complex:
    """Closure of the facet complements; an involution on complexes."""
    vs = frozenset(K.vertices)
    return Complex(K.vertices, _antichain(vs - f for f in K.facets))


def minimal_nonfaces(K: Complex) -> set[Face]:
    """Inclusion-minimal non-faces of K.

    Any minimal non-face has all proper subsets among the faces, so its
    size is at most dim(K) + 2; the sweep stops there.
    """
    out: set[Face] = set()
    verts = sort_labels(K.vertices)
    for size in range(1, K.dim + 3):
        for cand in itertools.combinations(verts, size):
            c = frozenset(cand)
            if K.is_face(c):
                continue
            if all(K.is_face(c - {x}) for x in c):
                out.add(c)
    return out


def deleted_join(K: Complex) -> Complex:
    """Complex of disjoint face pairs on two tagged copies of the vertices.

    The facets are the maximal pairs; every maximal pair has the form
    (sigma, G - sigma) with G a facet, so the candidate sweep below is
    exhaustive before the antichain reduction.
    """
    candidates = set()
    for sigma in K.faces():
        for g in K.facets:
            tau = g - sigma
            candidates.add(
                frozenset(_tag("1", v) for v in sigma) | frozenset(_tag("2", v) for v in tau)
            )
    vertices = tuple(_tag("1", v) for v in K.vertices) + tuple(_tag("2", v) for v in K.vertices)
    return Complex(vertices, _antichain(candidates))


def skeleton(K: Complex, k: int) -> Complex:
    """Subcomplex of all faces of dimension at most k."""
    facets = []
    for f in K.facets:
        if len(f) <= k + 1:
            facets.append(f)
        else:
            facets.extend(map(frozenset, itertools.combinations(f, k + 1)))
    return closure_from_facets(K.vertices, facets)


def is_subcomplex(K: Complex, L: Complex) -> bool:
    """True iff every facet of L is a face of K."""
    return all(K.is_face(f) for f in L.facets)


def points_complex(n: int) -> Complex:
    """n isolated points labeled 1..n."""
    if n < 1:
        raise ValueError("points_complex needs n >= 1")
    return Complex(tuple(range(1, n + 1)), frozenset(frozenset([i]) for i in range(1, n + 1)))


def full_simplex(n: int) -> Complex:
    """The simplex with vertices 1..n (a single facet)."""
    if n < 1:
        raise ValueError("full_simplex needs n >= 1")
    return Complex(tuple(range(1, n + 1)), frozenset([frozenset(range(1, n + 1))]))


def simplex_boundary(n: int) -> Complex:
    """Boundary of the simplex on vertices 1..n: all (n-1)-subsets."""
    if n < 1:
        raise ValueError("simplex_boundary needs n >= 1")
    facets = frozenset(frozenset(c) for c in itertools.combinations(range(1, n + 1), n - 1))
    return Complex(tuple(range(1, n + 1)), facets)


def complete_bipartite(part_a: Iterable, part_b: Iterable) -> Complex:
    """Complete bipartite graph between two label sets, as a 1-complex."""
    a, b = list(part_a), list(part_b)
    facets = frozenset(frozenset([x, y]) for x in a for y in b)
    return Complex(tuple(a) + tuple(b), facets)
