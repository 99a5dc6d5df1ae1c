"""Exception types shared across the package."""


class OrbitCIError(ValueError):
    """Base class for every error this package raises on bad input."""


class InvalidRank(OrbitCIError):
    """Family/rank pair is not a simple type accepted here."""


class ParseError(OrbitCIError):
    """Malformed marking or type string."""


class FullWhiteMarking(OrbitCIError):
    """I equals the whole vertex set, so the parabolic is the full group."""


class NotBlackVertex(OrbitCIError):
    """The requested reduction vertex is not black."""


class NoWhiteVertex(OrbitCIError):
    """Vertex selection needs at least one white vertex."""


class NotClassical(OrbitCIError):
    """Operation is defined for families A, B, C, D only."""


class InvalidPartition(OrbitCIError):
    """Partition fails the family validity rule or has the wrong total."""


class OutOfRange(OrbitCIError):
    """Argument outside the supported range."""


class TrivialOrbit(OrbitCIError):
    """The zero orbit has no boundary to measure."""


class NotExceptional(OrbitCIError):
    """Operation is defined for families E, F, G only."""


class NotForcedQuadric(OrbitCIError):
    """Representation check only applies when all degrees are forced to 2."""


class Unsupported(OrbitCIError):
    """Requested case is outside the implemented table."""


class TooManyHypersurfaces(OrbitCIError):
    """A complete intersection needs at most codim-many hypersurfaces."""


class InvalidMatrix(OrbitCIError):
    """Matrix entries do not satisfy the algebra's linear membership test."""
