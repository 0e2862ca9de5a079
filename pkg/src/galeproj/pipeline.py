"""End-to-end drivers: bounds, the obstruction chain, the worked
two-triangle projection, randomized empirical checks, and perturbation.

Every driver returns a PipelineReport whose checks each carry the claim
they verify; the CLI turns reports into exit codes.  All randomness is
seeded and split per trial (trial i uses seed * 1_000_003 + i), so runs
are reproducible trial by trial.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .complexes import (
    closure_from_facets,
    complete_bipartite,
    complement_complex,
    minimal_nonfaces,
    points_complex,
    power_join,
    sort_labels,
)
from .errors import (
    EpsilonOutOfRange,
    GaleprojError,
    HypothesisViolated,
    RetriesExhausted,
    WrongDimension,
)
from .gale import VectorConfig, general_position, is_gale_transform, gale_faces_of_card
from .linalg import Mat, affine_rank, frac, mat
from .obstructions import (
    chromatic_number,
    kneser_graph,
    lovasz_kneser_chi,
    nonembeddable,
)
from .polytopes import (
    HPolytope,
    VPolytope,
    dual_boundary_complex,
    h_vertices,
    hull_vertex_indices,
    is_simple,
    minkowski_sum_vertices,
    trivial_upper_bound,
)
from .projections import make_setup, oracle_survival, vertex_survival_census
from .serialize import rat_str


@dataclass(frozen=True)
class Check:
    claim: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"claim": self.claim, "passed": self.passed, "detail": self.detail}


@dataclass
class PipelineReport:
    scenario: str
    inputs: dict
    results: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, claim: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(claim, bool(passed), detail))

    def as_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "inputs": self.inputs,
            "results": self.results,
            "checks": [c.as_dict() for c in self.checks],
            "notes": self.notes,
            "passed": self.passed,
        }


def _require_bound_hypotheses(d: int, r: int, f0s: Sequence[int]) -> None:
    if d < 1:
        raise HypothesisViolated(f"need d >= 1, got {d}")
    if r < d:
        raise HypothesisViolated(f"need r >= d, got r={r} < d={d}")
    if len(f0s) != r:
        raise HypothesisViolated(f"need one vertex count per summand, got {len(f0s)} for r={r}")
    bad = [f for f in f0s if f <= d]
    if bad:
        raise HypothesisViolated(f"every summand needs at least d+1={d + 1} vertices, got {bad}")


def minkowski_vertex_bound(d: int, r: int, f0s: Sequence[int]) -> Fraction:
    """Upper bound (1 - 1/(d+1)^r) * prod f0_i on the sum's vertex count.

    Valid for r >= d summands, each with at least d+1 vertices.
    """
    _require_bound_hypotheses(d, r, f0s)
    total = Fraction(trivial_upper_bound(f0s))
    return (1 - Fraction(1, (d + 1) ** r)) * total


@dataclass(frozen=True)
class PigeonholeCount:
    failures_lower: Fraction  # at least this many vertex-sum tuples fail
    subset_choices: int  # prod C(f0_i, d+1)
    subsums_per_tuple: int  # prod C(f0_i - 1, d)
    ratio: Fraction


def pigeonhole_lower_bound(d: int, r: int, f0s: Sequence[int]) -> PigeonholeCount:
    """Counting argument: at least prod(f0_i / (d+1)) vertex sums fail.

    Every (d+1)-subset choice from each summand yields a simplex sum that
    misses the trivial bound; each vertex tuple occurs in prod C(f0_i-1, d)
    of those subsums, and the ratio of the two counts telescopes to
    prod(f0_i) / (d+1)^r.
    """
    _require_bound_hypotheses(d, r, f0s)
    choices = 1
    per_tuple = 1
    for f in f0s:
        choices *= comb(f, d + 1)
        per_tuple *= comb(f - 1, d)
    ratio = Fraction(choices, per_tuple)
    expected = Fraction(trivial_upper_bound(f0s), (d + 1) ** r)
    if ratio != expected:
        raise AssertionError("binomial ratio identity failed")
    return PigeonholeCount(expected, choices, per_tuple, ratio)


# ---------------------------------------------------------------------------
# the deformed product of two triangles and its projection to the plane

TRIANGLE_PRODUCT_PROJECTION: Mat = mat([[1, 0, 0, 0], [0, 0, 0, 1]])


def deformed_triangle_product(eps) -> HPolytope:
    """The 6-facet system in R^4 that deforms a product of two triangles.

    At eps = 0 it is an honest product; for 0 < eps < 1 the combinatorial
    type is unchanged but the two triangle blocks get coupled, which is
    what makes an 8-vertex shadow possible.
    """
    e = frac(eps)
    rows = [
        [1, 1, 0, 0],
        [-1, 1, 0, 0],
        [0, -1, -e, 0],
        [0, -e, -1, 0],
        [0, 0, 1, 1],
        [0, 0, 1, -1],
    ]
    return HPolytope(rows, [1] * 6)


def coupling_g_matrix(eps) -> VectorConfig:
    """Closed form of the projected dual vertices of the deformed product."""
    e = frac(eps)
    return VectorConfig(
        [(1, 0), (1, 0), (-1, -e), (-e, -1), (0, 1), (0, 1)],
        labels=(1, 2, 3, 4, 5, 6),
    )


def _octahedron_checks(report: PipelineReport, G: VectorConfig) -> None:
    report.check(
        "the g-vectors form a Gale transform (every single deletion spans)",
        is_gale_transform(G),
    )
    counts = [len(gale_faces_of_card(G, k)) for k in (1, 2, 3)]
    report.results["face_counts"] = counts
    report.check(
        "the encoded polytope has octahedron face counts (6, 12, 8)",
        counts == [6, 12, 8],
        f"got {counts}",
    )
    gp = general_position(G)
    report.results["general_position"] = gp
    report.check(
        "repeated g-columns keep the configuration out of general position",
        not gp,
        "pairs of equal vectors are linearly dependent",
    )


def two_triangle_example(eps) -> PipelineReport:
    """Reproduce the worked projection of a deformed two-triangle product.

    For 0 < eps < 1: the system is simple with the 9 product vertices,
    the shadow is an 8-gon, exactly one vertex fails to survive, and the
    complete bipartite complement complex minus the corresponding edge is
    realized in the boundary of the encoded octahedron.  At eps = 1 two
    facet rows coincide, so only the g-matrix side is reported.
    """
    e = frac(eps)
    if not 0 < e <= 1:
        raise EpsilonOutOfRange(f"need 0 < eps <= 1, got {e}")
    report = PipelineReport("two_triangle_example", {"epsilon": rat_str(e)})
    G = coupling_g_matrix(e)

    if e == 1:
        report.notes.append(
            "at eps = 1 facet rows 3 and 4 coincide, so the inequality system "
            "degenerates; the g-matrix is analyzed as a standalone configuration"
        )
        _octahedron_checks(report, G)
        return report

    P = deformed_triangle_product(e)
    records = h_vertices(P)
    report.results["f0"] = len(records)
    report.check("the system has 9 vertices", len(records) == 9, f"got {len(records)}")
    report.check("the system is a simple polytope", is_simple(P))
    incidences = {r.tight_facets for r in records}
    expected = {
        frozenset(a) | frozenset(b)
        for a in itertools.combinations((1, 2, 3), 2)
        for b in itertools.combinations((4, 5, 6), 2)
    }
    report.check(
        "vertex-facet incidences are the two-triangle product pattern",
        incidences == expected,
    )

    setup = make_setup(P, TRIANGLE_PRODUCT_PROJECTION)
    report.check(
        "projected dual vertices match the closed-form coupling matrix",
        setup.g_images == G,
    )
    _octahedron_checks(report, setup.g_images)

    census = vertex_survival_census(setup)
    oracle = oracle_survival(setup)
    report.results["surviving"] = census.surviving
    report.results["image_vertex_count"] = census.image_vertex_count
    report.check(
        "exactly 8 of the 9 vertices are strictly preserved",
        (census.total, census.surviving) == (9, 8),
        f"surviving {census.surviving} of {census.total}",
    )
    report.check(
        "the shadow is an 8-gon",
        census.image_vertex_count == 8,
        f"image has {census.image_vertex_count} vertices",
    )
    report.check(
        "the g-vector census equals the image/fiber oracle vertex-for-vertex",
        census.records == oracle.records
        and census.image_vertex_count == oracle.image_vertex_count,
    )

    failing = [r.tight_facets for r in census.records if not r.strictly_preserved]
    all_labels = frozenset(P.facet_labels)
    missing_edges = [all_labels - f for f in failing]
    report.results["failing_vertices"] = [sort_labels(f) for f in failing]
    report.results["missing_edges"] = [sort_labels(m) for m in missing_edges]

    k33 = complete_bipartite((1, 2, 3), (4, 5, 6))
    skeleton_edges = set(gale_faces_of_card(setup.g_images, 2))
    absent = sorted(k33.facets - skeleton_edges, key=sort_labels)
    report.check(
        "exactly one bipartite edge is missing from the encoded skeleton",
        len(absent) == 1 and set(absent) == set(missing_edges),
        f"missing {[sort_labels(a) for a in absent]}",
    )

    from .projections import verify_cc_realized

    if len(absent) == 1:
        k33_minus = closure_from_facets(k33.vertices, k33.facets - {absent[0]})
        report.check(
            "the bipartite graph minus that edge is realized in the boundary",
            verify_cc_realized(setup, k33_minus),
        )
    report.check(
        "the full bipartite graph is not realized in the boundary",
        not verify_cc_realized(setup, k33),
    )
    report.check(
        "the complement complex of the dual boundary is the complete "
        "bipartite graph on the two facet triples",
        complement_complex(dual_boundary_complex(P)) == k33,
    )
    return report


def obstruction_pipeline(d: int) -> PipelineReport:
    """The general-d obstruction chain for d-fold products of d-simplices.

    Builds the d-fold join of d+1 points, colors the factor Kneser graph
    exactly, assembles the index interval [2d-1, 2d-1], and records the
    consequence: a projection to d-space keeps at most (d+1)^d - 1 of the
    (d+1)^d vertices.
    """
    if d < 2:
        raise HypothesisViolated("the obstruction needs d >= 2 (d = 1 is vacuous)")
    report = PipelineReport("obstruction_pipeline", {"d": d})
    factor = points_complex(d + 1)
    K = power_join(factor, d)
    n = len(K.vertices)
    report.results["n"] = n
    report.check(
        "the d-fold join of d+1 points has d(d+1) vertices",
        n == d * (d + 1),
        f"got {n}",
    )

    nf = sorted(map(sort_labels, minimal_nonfaces(factor)))
    report.check(
        "the factor's minimal non-faces are exactly the 2-element subsets",
        nf == [list(c) for c in itertools.combinations(range(1, d + 2), 2)],
        f"{len(nf)} non-faces",
    )

    kg = kneser_graph(nf)
    chi_factor, chi_exact = chromatic_number(kg)
    formula = lovasz_kneser_chi(d + 1, 2)
    report.results["chi_factor"] = chi_factor
    report.check(
        "exact factor coloring matches the closed-form Kneser value d-1",
        chi_exact and chi_factor == formula == d - 1,
        f"solver {chi_factor}, formula {formula}",
    )

    verdict = nonembeddable(K, 2 * d - 2)
    report.results["chi_total"] = verdict.chi_used
    report.results["sarkaria_lower"] = verdict.sarkaria_lower
    report.results["djn_dim_upper"] = verdict.djn_dim_upper
    report.results["target_sphere"] = verdict.target_sphere
    report.results["embeddable"] = verdict.embeddable
    report.check(
        "chromatic numbers add over the bipartite sum to d(d-1)",
        verdict.chi_used == d * (d - 1) and verdict.chi_is_exact,
        f"chi = {verdict.chi_used}",
    )
    report.check(
        "index lower and upper bounds agree at 2d-1",
        verdict.sarkaria_lower == verdict.djn_dim_upper == 2 * d - 1,
        f"[{verdict.sarkaria_lower}, {verdict.djn_dim_upper}]",
    )
    report.check(
        "the complex does not embed into the (2d-2)-sphere",
        verdict.embeddable == "no",
        f"{verdict.sarkaria_lower} > {2 * d - 2}",
    )
    f0 = (d + 1) ** d
    report.results["f0_product"] = f0
    report.results["f0_shadow_bound"] = f0 - 1
    report.notes.append(
        "consequence: no realization with this product combinatorics keeps "
        f"all {f0} vertices under a projection to {d}-space; the shadow has "
        f"at most {f0 - 1} vertices"
    )
    return report


def planar_bound_check(P: VPolytope, Q: VPolytope) -> PipelineReport:
    """Verify f0(P + Q) <= f0(P) + f0(Q) for two polygons in the plane."""
    if P.dim != 2 or Q.dim != 2:
        raise WrongDimension("the polygon bound lives in the plane")
    report = PipelineReport(
        "planar_bound_check",
        {"f0_P": P.f0(), "f0_Q": Q.f0()},
    )
    count = len(minkowski_sum_vertices([P, Q]))
    bound = P.f0() + Q.f0()
    report.results["f0_sum"] = count
    report.results["bound"] = bound
    report.check(
        "a planar sum has at most f0(P) + f0(Q) vertices",
        count <= bound,
        f"{count} <= {bound}",
    )
    return report


# ---------------------------------------------------------------------------
# seeded random experiments


def _child_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


def sample_vpolytope(rng: random.Random, d: int, f0: int, max_tries: int = 5000) -> VPolytope:
    """Random rational polytope with exactly f0 vertices, all in convex
    position: integer coordinates in [-100, 100] scaled by 1/10, rejected
    until full-dimensional and redundancy-free.
    """
    for _ in range(max_tries):
        pts: list[tuple] = []
        while len(pts) < f0:
            p = tuple(Fraction(rng.randint(-100, 100), 10) for _ in range(d))
            if p not in pts:
                pts.append(p)
        if affine_rank(pts) != d:
            continue
        if len(hull_vertex_indices(pts)) == f0:
            return VPolytope(pts)
    raise RetriesExhausted(f"no convex-position sample after {max_tries} tries")


def random_experiment(d: int, r: int, f0s: Sequence[int], trials: int, seed: int) -> PipelineReport:
    """Empirical probe of the vertex-count bounds on random instances.

    Deterministic per seed; trial i is reproducible in isolation from the
    derived seed.  For r >= d the sharpened bound is enforced; for r < d
    only the trivial bound applies and attainment is possible, so no
    pass/fail is attached to it.
    """
    if d not in (2, 3):
        raise WrongDimension("experiments are desk-scale: d must be 2 or 3")
    if len(f0s) != r:
        raise HypothesisViolated(f"need one vertex count per summand, got {len(f0s)}")
    report = PipelineReport(
        "random_experiment",
        {"d": d, "r": r, "f0s": list(f0s), "trials": trials, "seed": seed},
    )
    trivial = trivial_upper_bound(f0s)
    bound = minkowski_vertex_bound(d, r, f0s) if r >= d else None
    counts = []
    for t in range(trials):
        rng = random.Random(_child_seed(seed, t))
        polys = [sample_vpolytope(rng, d, f) for f in f0s]
        counts.append(len(minkowski_sum_vertices(polys)))
    max_count = max(counts) if counts else 0
    report.results["counts"] = counts
    report.results["max_observed"] = max_count
    report.results["trivial_bound"] = trivial
    report.check(
        "no trial exceeded the trivial bound (product of vertex counts)",
        all(c <= trivial for c in counts),
        f"max {max_count} <= {trivial}",
    )
    if bound is not None:
        report.results["sharpened_bound"] = rat_str(bound)
        report.check(
            "no trial exceeded the sharpened bound (1 - 1/(d+1)^r) * product",
            all(Fraction(c) <= bound for c in counts),
            f"max {max_count} <= {rat_str(bound)}",
        )
    else:
        report.notes.append(
            "r < d: attainment of the trivial bound is possible in principle; "
            "observed maximum reported without pass/fail"
        )
    if d == 2 and r == 2:
        f0_bound = sum(f0s)
        report.check(
            "planar two-summand sums stayed within f0(P) + f0(Q)",
            all(c <= f0_bound for c in counts),
            f"max {max_count} <= {f0_bound}",
        )
    return report


def _incidence_pattern(P: HPolytope) -> frozenset[frozenset[int]]:
    return frozenset(r.tight_facets for r in h_vertices(P))


def perturb_to_general_position(
    P: HPolytope, seed: int, proj=None, max_tries: int = 64
) -> HPolytope:
    """Jiggle the bounding hyperplanes until the combinatorics is unchanged
    and, when a projection is supplied, the induced g-vectors are in
    general position.

    The strict-survival conditions are open, so small rational
    perturbations of (A, b) preserve them; perturbing b alone cannot break
    parallel facet normals, hence whole rows are jiggled.  Deterministic
    per seed; the unperturbed input is returned if it already qualifies.
    """
    if not is_simple(P):
        raise GaleprojError("perturbation expects a simple polytope")
    target = _incidence_pattern(P)

    def qualifies(Q: HPolytope) -> bool:
        if _incidence_pattern(Q) != target or not is_simple(Q):
            return False
        if proj is None:
            return True
        from .polytopes import recentre

        base = Q if all(x > 0 for x in Q.b) else recentre(Q)
        return general_position(make_setup(base, proj).g_images)

    if qualifies(P):
        return P
    for attempt in range(1, max_tries + 1):
        rng = random.Random(_child_seed(seed, attempt))
        try:
            A = [
                [x + Fraction(rng.randint(-9, 9), 10000) for x in row]
                for row in P.A
            ]
            b = [x + Fraction(rng.randint(-9, 9), 10000) for x in P.b]
            candidate = HPolytope(A, b, P.facet_labels)
            if qualifies(candidate):
                return candidate
        except GaleprojError:
            continue
    raise RetriesExhausted(f"no qualifying perturbation in {max_tries} attempts")
