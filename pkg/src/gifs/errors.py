"""Exception hierarchy shared by all gifs modules."""


class GifsError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(GifsError):
    """Invalid user input (bad flag value, unknown shape name, ...)."""


class EmptyMesh(GifsError):
    """Operation requires a mesh with at least one face."""


class DegenerateMesh(GifsError):
    """Mesh has zero area or zero spatial extent."""


class EmptyPointSet(GifsError):
    """Metric computation requires non-empty point sets."""


class FormatError(GifsError):
    """File has wrong magic, unsupported version or malformed structure."""


class TruncatedFile(FormatError):
    """File ends in the middle of a header or record."""


class CorruptRecord(FormatError):
    """A record violates its invariants (non-finite coords, bad flag, ...)."""


class DivergedTraining(GifsError):
    """Training loss became non-finite."""


class RefinementDiverged(GifsError):
    """Mesh refinement produced non-finite vertex coordinates."""
