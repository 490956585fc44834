"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class CornerSyzygyError(Exception):
    """Base class for every error raised by this package."""


# -- linear algebra ---------------------------------------------------------

class ShapeMismatch(CornerSyzygyError):
    """Matrix dimensions are incompatible with the requested operation."""


class CompositionNotZero(CornerSyzygyError):
    """Two maps that should compose to zero do not; the complex is broken."""


# -- simplicial complexes ---------------------------------------------------

class MalformedSimplex(CornerSyzygyError):
    """A simplex specification repeats a vertex or is empty."""


class NotASimplexOfParent(CornerSyzygyError):
    """A subcomplex generator is not a simplex of the ambient complex."""


class NotNested(CornerSyzygyError):
    """The triple (A, B, C) is not nested as C ⊆ B ⊆ A."""


class NotAPairInclusion(CornerSyzygyError):
    """(K', L') is not included in (K, L) as a pair."""


# -- corner models ----------------------------------------------------------

class ValidationFailed(CornerSyzygyError):
    """A corner model violates its structural invariants."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        lines = "; ".join(f"{v.kind}: {v.detail}" for v in self.violations)
        super().__init__(f"corner model invalid: {lines}")


class NotNice(CornerSyzygyError):
    """Some face fails the codimension = facet-count condition."""

    def __init__(self, face_ids, details=""):
        self.face_ids = tuple(face_ids)
        msg = f"model is not nice at faces {list(self.face_ids)}"
        if details:
            msg += f" ({details})"
        super().__init__(msg)


class RankZeroFace(CornerSyzygyError):
    """Restriction to a rank-zero face is not defined."""


# -- filtration pages and abstract input ------------------------------------

class DecompositionMismatch(CornerSyzygyError):
    """A relative basis simplex belongs to no open stratum of the expected rank."""


class PosetInconsistent(CornerSyzygyError):
    """The abstract face poset has a cycle or a rank-reversing containment."""


class RankGap(CornerSyzygyError):
    """An abstract differential block joins faces whose ranks do not differ by one."""


# -- builders ----------------------------------------------------------------

class ResolutionTooSmall(CornerSyzygyError):
    """The requested circle resolution is below the minimum for the builder."""


class UnsupportedResolution(CornerSyzygyError):
    """The requested polygon resolution is not available in exact arithmetic."""


class UnboundedPolytope(CornerSyzygyError):
    """The halfspace system does not bound a polytope."""


class DegenerateDimension(CornerSyzygyError):
    """The halfspace intersection is not full-dimensional."""


# -- input parsing -----------------------------------------------------------

class ParseError(CornerSyzygyError):
    """Input is not valid JSON."""


class SchemaError(CornerSyzygyError):
    """Input JSON does not match the expected schema."""

    def __init__(self, message, path="$"):
        self.path = path
        super().__init__(f"{path}: {message}")
