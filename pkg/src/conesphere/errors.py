"""Exception taxonomy.

Two broad families matter to callers (and to the CLI exit codes): input that
fails validation, and computations that fail numerically or run out of budget.
"""


class ConesphereError(Exception):
    """Base class for all library errors."""


class InvalidInputError(ConesphereError):
    """Input data violates a structural or metric precondition (CLI exit 1)."""


class NumericFailure(ConesphereError):
    """A computation could not be completed reliably (CLI exit 2)."""


# --- triangulation / metric validation ---------------------------------------

class NonManifold(InvalidInputError):
    """An edge is not shared by exactly two faces, or a vertex link is not a cycle."""


class NotSphere(InvalidInputError):
    """Euler characteristic differs from 2."""


class MissingLength(InvalidInputError):
    """An edge of the triangulation has no assigned length."""


class TriangleInequalityViolation(InvalidInputError):
    """A face's three lengths cannot form a planar triangle."""


class DegenerateFace(InvalidInputError):
    """A face's area is below the degeneracy floor."""


# --- builders -----------------------------------------------------------------

class NonConvexPolygon(InvalidInputError):
    pass


class DegeneratePolygon(InvalidInputError):
    pass


class MismatchedSegmentLengths(InvalidInputError):
    """Paired boundary segments of a gluing differ in length."""


class NotSphereAfterGluing(InvalidInputError):
    """The identified surface does not close up to a sphere."""


# --- polyhedra ------------------------------------------------------------------

class TooFewPoints(InvalidInputError):
    pass


class CollinearInput(InvalidInputError):
    pass


class DegenerateInput(InvalidInputError):
    """All points coplanar; the 3D hull is undefined and the planar route applies."""


# --- geodesics / retriangulation ----------------------------------------------

class SearchBudgetExceeded(NumericFailure):
    """The unfolding search frontier exceeded its configured cap."""


class NumericallyAmbiguous(NumericFailure):
    """Competing local configurations are equal within tolerance; no safe choice."""


class NotFlippable(InvalidInputError):
    """The two faces at the edge do not unfold to a strictly convex quadrilateral,
    or the replacement diagonal would duplicate an existing edge pair."""


# --- surgery --------------------------------------------------------------------

class NotEssential(InvalidInputError):
    """The designated vertex is flat (angle sum 2*pi) where a cone point is required."""


class PatchBaseMismatch(InvalidInputError):
    """The patch base length does not match the cut geodesic's length."""


class AdmissibilityViolated(InvalidInputError):
    """The requested patch would push an angle sum beyond 2*pi."""


class NoLensFound(InvalidInputError):
    """No doubled-triangle region with the requested apex exists."""


class UnsupportedCut(NumericFailure):
    """The cut path has a shape the remesher does not handle (repeated faces
    or passage through a flat vertex)."""


# --- correspondence --------------------------------------------------------------

class WrongVertexCount(InvalidInputError):
    """The metric does not have exactly the number of essential vertices required."""


class FlipSearchExhausted(NumericFailure):
    """No realizable edge-length assignment was found within the flip budget."""


class VerificationFailed(NumericFailure):
    """The embedded polyhedron's surface metric does not round-trip to the input."""
