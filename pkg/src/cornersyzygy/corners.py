"""Corner models: a complex plus labeled facets, and the derived face lattice.

A model of an orbit space is a pure m-dimensional simplicial complex, the
rank n of the acting group, and one subcomplex per facet.  Faces are the
closures of connected components of the open label strata: the label set
of a simplex is the set of facets containing it, and the open stratum of
a label set S consists of the simplices whose label set is exactly S.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import NotNice, RankZeroFace, ValidationFailed
from .scomplex import (
    SimplicialComplex,
    Simplex,
    Subcomplex,
    empty_subcomplex,
)


@dataclass(frozen=True)
class CornerModel:
    """A triangulated m-manifold with n-corners, facets named and labeled."""

    complex: SimplicialComplex
    m: int
    n: int
    facets: tuple[tuple[str, Subcomplex], ...]

    def facet_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.facets)

    def cell_counts(self) -> list[int]:
        return [len(self.complex.simplices(k)) for k in range(self.complex.dim + 1)]


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass(frozen=True)
class Face:
    """One face of the lattice: a closed component of a label stratum."""

    id: int
    label_set: frozenset
    cells: Subcomplex
    codim: int
    rank: int
    boundary: Subcomplex
    contained_in: frozenset  # ids of all faces Q with self <= Q, self included

    def open_stratum(self) -> frozenset:
        return self.cells.members - self.boundary.members

    def sort_key(self):
        return (self.rank, tuple(sorted(self.cells.members)))

    def __repr__(self) -> str:
        labels = ",".join(sorted(self.label_set)) or "-"
        return f"Face(id={self.id}, rank={self.rank}, labels={labels})"


def _is_pure(complex_: SimplicialComplex, dim: int) -> bool:
    """Every simplex is a face of a dim-simplex and nothing exceeds dim."""
    if complex_.dim != dim:
        return False
    covered = set()
    for top in complex_.simplices(dim):
        for k in range(1, len(top) + 1):
            covered.update(itertools.combinations(top, k))
    return covered == set(complex_.all_simplices())


def topological_boundary(complex_: SimplicialComplex) -> Subcomplex:
    """Closure of the (m-1)-simplices lying in exactly one m-simplex."""
    m = complex_.dim
    count: dict[Simplex, int] = {s: 0 for s in complex_.simplices(m - 1)}
    for top in complex_.simplices(m):
        for drop in range(len(top)):
            face = top[:drop] + top[drop + 1 :]
            if face in count:
                count[face] += 1
    boundary_faces = [s for s, c in count.items() if c == 1]
    members = set()
    for s in boundary_faces:
        for k in range(1, len(s) + 1):
            members.update(itertools.combinations(s, k))
    return Subcomplex(complex_, frozenset(members))


def _simplex_labels(model: CornerModel) -> dict[Simplex, frozenset]:
    labels: dict[Simplex, set] = {s: set() for s in model.complex.all_simplices()}
    for name, sub in model.facets:
        for s in sub.members:
            labels[s].add(name)
    return {s: frozenset(l) for s, l in labels.items()}


def validate(model: CornerModel) -> list[Violation]:
    """Check the structural invariants; an empty list means the model is sound."""
    violations: list[Violation] = []
    if not _is_pure(model.complex, model.m):
        violations.append(
            Violation("PurityViolation", f"complex is not pure of dimension {model.m}")
        )
    names = [name for name, _ in model.facets]
    if len(set(names)) != len(names):
        violations.append(Violation("PurityViolation", "facet names are not unique"))
    boundary = topological_boundary(model.complex) if model.complex.dim == model.m else None
    for name, sub in model.facets:
        if sub.parent is not model.complex and sub.parent != model.complex:
            violations.append(
                Violation("PurityViolation", f"facet {name} lives in a different complex")
            )
            continue
        if not _is_pure(sub.as_complex(), model.m - 1):
            violations.append(
                Violation(
                    "PurityViolation",
                    f"facet {name} is not pure of dimension {model.m - 1}",
                )
            )
        if boundary is not None and not sub.members <= boundary.members:
            violations.append(
                Violation(
                    "BoundaryViolation",
                    f"facet {name} is not contained in the topological boundary",
                )
            )
    labels = _simplex_labels(model)
    worst = max((len(l) for l in labels.values()), default=0)
    if worst > model.n:
        violations.append(
            Violation(
                "LabelBoundViolation",
                f"a simplex lies in {worst} facets but n = {model.n}",
            )
        )
    return violations


def _stratum_components(stratum: set[Simplex]) -> list[set[Simplex]]:
    """Components of a (generally non-closed) simplex set.

    Adjacency is the face relation restricted to the set; for an open
    stratum this matches the topological components of the union of the
    open simplices.
    """
    parent: dict[Simplex, Simplex] = {s: s for s in stratum}

    def find(s: Simplex) -> Simplex:
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    def union(a: Simplex, b: Simplex):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for s in stratum:
        for drop in range(len(s)):
            face = s[:drop] + s[drop + 1 :]
            if face in parent:
                union(s, face)
    groups: dict[Simplex, set[Simplex]] = {}
    for s in stratum:
        groups.setdefault(find(s), set()).add(s)
    return list(groups.values())


def face_lattice(model: CornerModel) -> list[Face]:
    """All faces of the model, ordered by (rank, smallest cell set).

    Raises ValidationFailed when the model invariants do not hold.
    """
    violations = validate(model)
    if violations:
        raise ValidationFailed(violations)

    labels = _simplex_labels(model)
    strata: dict[frozenset, set[Simplex]] = {}
    for s, l in labels.items():
        strata.setdefault(l, set()).add(s)

    raw: list[tuple[frozenset, frozenset]] = []  # (label_set, closed cells)
    for label_set, stratum in strata.items():
        for comp in _stratum_components(stratum):
            members: set[Simplex] = set()
            for s in comp:
                for k in range(1, len(s) + 1):
                    members.update(itertools.combinations(s, k))
            raw.append((label_set, frozenset(members)))

    raw.sort(key=lambda t: (model.n - len(t[0]), tuple(sorted(t[1]))))

    faces: list[Face] = []
    for fid, (label_set, members) in enumerate(raw):
        contained = frozenset(
            i for i, (_, other) in enumerate(raw) if members <= other
        )
        boundary = frozenset().union(
            *(other for i, (_, other) in enumerate(raw) if other < members),
        )
        faces.append(
            Face(
                id=fid,
                label_set=label_set,
                cells=Subcomplex(model.complex, members),
                codim=len(label_set),
                rank=model.n - len(label_set),
                boundary=Subcomplex(model.complex, frozenset(boundary)),
                contained_in=contained,
            )
        )
    return faces


def check_nice(model: CornerModel, faces: Sequence[Face]) -> None:
    """Raise NotNice unless every face has dim(cells) = m - codim."""
    offending = []
    details = []
    for face in faces:
        if face.cells.dim != model.m - face.codim:
            offending.append(face.id)
            details.append(
                f"face {face.id} has dimension {face.cells.dim}, "
                f"expected {model.m} - {face.codim}"
            )
    if offending:
        raise NotNice(offending, "; ".join(details))


def restrict(model: CornerModel, faces: Sequence[Face], face: Face) -> CornerModel:
    """The corner model carried by a face: its cells with the covered faces as facets.

    The new corner depth is the rank of the face; the facets are the faces
    one rank down that it contains.
    """
    if face.rank < 1:
        raise RankZeroFace(f"face {face.id} has rank 0; nothing to restrict to")
    new_complex = face.cells.as_complex()
    sub_facets = []
    for other in faces:
        if other.id == face.id:
            continue
        if face.id in other.contained_in and other.rank == face.rank - 1:
            sub_facets.append(
                (f"face{other.id}", new_complex.subcomplex_from_closed(other.cells.members))
            )
    return CornerModel(
        complex=new_complex,
        m=model.m - face.codim,
        n=face.rank,
        facets=tuple(sub_facets),
    )
