"""Face preservation under linear projections of polytopes.

A projection setup packages a polytope with 0 interior, a full-rank
projection, a kernel basis, and the projected dual vertices g_i.  Whether
a face survives the projection is read off the g-vectors indexed by its
tight facets: containing 0 in the convex hull / affine-spanning /
positively spanning correspond to preserved / combinatorially equivalent
/ strictly preserved.  An independent census computed from images and
fibers cross-validates the whole classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import lp
from .complexes import Complex
from .errors import (
    NotAllVerticesSurvive,
    NotGale,
    OriginNotInterior,
    RankDeficient,
    SpanningDefect,
    UnknownLabel,
)
from .gale import (
    VectorConfig,
    general_position,
    is_gale_transform,
    _face_test,
    positively_spanning,
)
from .linalg import (
    Mat,
    Vec,
    affine_rank,
    kernel_basis,
    mat,
    mat_vec,
    matmul,
    rank,
    transpose,
    vec,
    vsub,
)
from .polytopes import HPolytope, dual_generators, h_vertices, hull_vertex_indices


@dataclass(frozen=True)
class ProjectionSetup:
    polytope: HPolytope
    proj: Mat
    kernel: Mat
    g_images: VectorConfig

    @property
    def target_dim(self) -> int:
        return len(self.proj)

    @property
    def kernel_dim(self) -> int:
        return self.polytope.dim - len(self.proj)


@dataclass(frozen=True)
class VertexRecord:
    tight_facets: frozenset[int]
    strictly_preserved: bool
    preserved: bool


@dataclass(frozen=True)
class SurvivalReport:
    records: tuple[VertexRecord, ...]
    total: int
    surviving: int
    image_vertex_count: int


def make_setup(P: HPolytope, proj: Iterable[Iterable], kernel: Iterable[Iterable] | None = None) -> ProjectionSetup:
    """Assemble the projection data for (P, proj).

    The kernel defaults to a computed basis of ker(proj); the g-vectors
    are the dual vertices composed with the kernel inclusion, i.e.
    kernel^T (a_i / b_i).
    """
    proj = mat(proj)
    n = P.dim
    d = len(proj)
    if any(len(row) != n for row in proj):
        raise RankDeficient(f"projection must have {n} columns")
    if not d < n:
        raise RankDeficient("projection must drop at least one dimension")
    if rank(proj) != d:
        raise RankDeficient("projection must have full row rank")
    if any(bi <= 0 for bi in P.b):
        raise OriginNotInterior("recentre the polytope first: need b > 0")
    kern = mat(kernel) if kernel is not None else kernel_basis(proj)
    if len(kern) != n or len(kern[0]) != n - d or rank(kern) != n - d:
        raise RankDeficient("kernel must be an n x (n-d) full-rank matrix")
    if any(any(x != 0 for x in row) for row in matmul(proj, kern)):
        raise RankDeficient("kernel columns must be annihilated by the projection")
    kern_t = transpose(kern)
    ells = dual_generators(P)
    g = VectorConfig([mat_vec(kern_t, ell) for ell in ells.vectors], ells.labels)
    return ProjectionSetup(P, proj, kern, g)


def _g_subset(s: ProjectionSetup, labels: Iterable[int]) -> list[Vec]:
    labels = list(labels)
    unknown = set(labels) - set(s.g_images.labels)
    if unknown:
        raise UnknownLabel(sorted(unknown)[0])
    return s.g_images.subset(labels)


def face_preserved(s: ProjectionSetup, tight: Iterable[int]) -> bool:
    """Image of the face is a face of the image: 0 in conv of its g-vectors."""
    g = _g_subset(s, tight)
    if not g:
        return False
    zero = vec([0] * s.kernel_dim)
    return lp.convex_combination(g, zero) is not None


def face_comb_equiv(s: ProjectionSetup, tight: Iterable[int]) -> bool:
    """Image combinatorially equivalent: the g-vectors span affinely."""
    g = _g_subset(s, tight)
    return affine_rank(g) == s.kernel_dim


def face_strictly_preserved(s: ProjectionSetup, tight: Iterable[int]) -> bool:
    """Strict survival: the g-vectors positively span the kernel space."""
    g = _g_subset(s, tight)
    if not g:
        return False
    return positively_spanning(g)


def _image_points(s: ProjectionSetup, records) -> list[Vec]:
    return [mat_vec(s.proj, r.vertex_coords) for r in records]


def vertex_survival_census(s: ProjectionSetup) -> SurvivalReport:
    """Classify every vertex via the g-vector criteria.

    The image vertex count comes from the hull of the distinct projected
    vertices (the image polytope is the hull of the vertex images).
    """
    records = h_vertices(s.polytope)
    images = _image_points(s, records)
    classified = tuple(
        VertexRecord(
            r.tight_facets,
            face_strictly_preserved(s, r.tight_facets),
            face_preserved(s, r.tight_facets),
        )
        for r in records
    )
    distinct = sorted(set(images))
    image_count = len(hull_vertex_indices(distinct))
    return SurvivalReport(
        classified,
        total=len(records),
        surviving=sum(1 for c in classified if c.strictly_preserved),
        image_vertex_count=image_count,
    )


def oracle_survival(s: ProjectionSetup) -> SurvivalReport:
    """Independent census straight from images and fibers.

    A vertex strictly survives iff its image is a hull vertex of the
    projected vertex set and no other vertex shares that image; it is
    preserved iff its image lies on the boundary of the shadow (a vertex
    can land mid-edge, which keeps its image in a proper face without
    making it a vertex of the image).  No g-vector machinery is involved,
    which makes this the cross-validation oracle for
    `vertex_survival_census`.
    """
    records = h_vertices(s.polytope)
    images = _image_points(s, records)
    distinct = sorted(set(images))
    hull_values = {distinct[i] for i in hull_vertex_indices(distinct)}
    classified = []
    for r, img in zip(records, images):
        strict = img in hull_values and images.count(img) == 1
        shifted = [vsub(w, img) for w in distinct if w != img]
        on_boundary = not shifted or not positively_spanning(shifted)
        classified.append(VertexRecord(r.tight_facets, strict, on_boundary))
    return SurvivalReport(
        tuple(classified),
        total=len(records),
        surviving=sum(1 for c in classified if c.strictly_preserved),
        image_vertex_count=len(hull_values),
    )


@dataclass(frozen=True)
class AssociatedPolytope:
    """Gale-encoded combinatorics of the polytope associated to (P, proj)."""

    config: VectorConfig
    dim: int
    num_vertices: int
    general_position: bool


def associated_polytope(s: ProjectionSetup) -> AssociatedPolytope:
    """The g-configuration as a Gale transform, when all vertices survive.

    Undefined (raises) otherwise.  The encoded polytope has the facet
    labels of P as vertices and dimension m - (n - d) - 1; general
    position of the g-vectors certifies that it is simplicial.
    """
    census = vertex_survival_census(s)
    if census.surviving < census.total:
        raise NotAllVerticesSurvive(
            f"only {census.surviving} of {census.total} vertices survive"
        )
    if not is_gale_transform(s.g_images):
        raise SpanningDefect("g-vectors fail the single-deletion spanning test")
    m = s.polytope.num_facets
    return AssociatedPolytope(
        s.g_images,
        dim=m - s.kernel_dim - 1,
        num_vertices=m,
        general_position=general_position(s.g_images),
    )


def verify_cc_realized(s: ProjectionSetup, K: Complex) -> bool:
    """Does every facet of K appear as a face of the associated polytope?

    K must live on the facet labels of P.  With full vertex survival this
    checks that the whole complement complex of the dual boundary sits in
    the boundary of the associated polytope.
    """
    labels = set(s.g_images.labels)
    alien = set(K.vertices) - labels
    if alien:
        raise UnknownLabel(sorted(alien, key=str)[0])
    if not is_gale_transform(s.g_images):
        raise NotGale("realization check needs the g-vectors to be a Gale transform")
    return all(_face_test(s.g_images, frozenset(f)) for f in K.facets)
