"""Exception types shared across the package."""


class GaleprojError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(GaleprojError, ValueError):
    """Vectors or constraints with inconsistent ambient dimensions."""


class RankDeficient(GaleprojError, ValueError):
    """A matrix required to have full row rank does not."""


class EmptyPolytope(GaleprojError, ValueError):
    """The inequality system has no solution."""


class UnboundedPolytope(GaleprojError, ValueError):
    """The inequality system has an unbounded solution set."""


class NotFullDimensional(GaleprojError, ValueError):
    """The polytope has empty interior in its ambient space."""


class RedundantRow(GaleprojError, ValueError):
    """An inequality row does not define a facet."""


class DuplicateLabels(GaleprojError, ValueError):
    """Facet or vertex labels are not pairwise distinct."""


class OriginNotInterior(GaleprojError, ValueError):
    """An operation requiring 0 in the interior was applied elsewhere."""


class IndexOutOfRange(GaleprojError, IndexError):
    """A vertex index does not address a point of the polytope."""


class UnknownLabel(GaleprojError, KeyError):
    """A label does not occur in the configuration or complex."""


class LabelOutsideVertexSet(GaleprojError, ValueError):
    """A facet mentions a vertex label the complex does not declare."""


class NotGale(GaleprojError, ValueError):
    """The vector configuration is not a Gale transform."""


class NotAllVerticesSurvive(GaleprojError, ValueError):
    """The projection setup loses at least one vertex."""


class SpanningDefect(GaleprojError, ValueError):
    """A configuration expected to be a Gale transform fails the deletion test."""


class TooLargeForExact(GaleprojError, ValueError):
    """Graph exceeds the size cap of the exact coloring solver."""


class OutOfTheoremRange(GaleprojError, ValueError):
    """Parameters outside the stated range of a closed-form result."""


class HypothesisViolated(GaleprojError, ValueError):
    """Inputs violate the hypotheses of a bound (r < d or too few vertices)."""


class EpsilonOutOfRange(GaleprojError, ValueError):
    """The deformation parameter must satisfy 0 < eps <= 1."""


class WrongDimension(GaleprojError, ValueError):
    """Operation restricted to a specific ambient dimension."""


class RetriesExhausted(GaleprojError, RuntimeError):
    """Seeded perturbation failed to reach its target within the retry cap."""
