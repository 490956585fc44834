"""Ready-made corner models: discs, strips, and the triangle configuration space.

The headline builder realizes the space of planar triangles with side
lengths at most one as a 4-polytope: each unit-disc constraint is
replaced by a regular hexagon, all coordinates live in Q(sqrt 3), and
vertex enumeration, face extraction, and the pulling triangulation are
carried out in exact arithmetic so that the facet labeling (which sides
have length exactly one) is never corrupted by rounding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bcomplex import AbstractBData, AbstractBlock
from .corners import CornerModel, check_nice, face_lattice, validate
from .errors import (
    DegenerateDimension,
    ResolutionTooSmall,
    UnboundedPolytope,
    UnsupportedResolution,
    ValidationFailed,
)
from .gf2 import Gf2Matrix
from .scomplex import SimplicialComplex, build_complex, connected_components, subcomplex


# -- exact arithmetic in Q(sqrt 3) --------------------------------------------

@dataclass(frozen=True)
class QuadraticNumber:
    """a + b*sqrt(3) with rational a, b; all comparisons are exact."""

    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a, b=0) -> "QuadraticNumber":
        return cls(Fraction(a), Fraction(b))

    def __add__(self, other):
        return QuadraticNumber(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return QuadraticNumber(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b)

    def __mul__(self, other):
        return QuadraticNumber(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __truediv__(self, other):
        norm = other.a * other.a - 3 * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 3)")
        inv = QuadraticNumber(other.a / norm, -other.b / norm)
        return self * inv

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(3), by comparing a^2 with 3 b^2."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        lhs, rhs = self.a * self.a, 3 * self.b * self.b
        if self.a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __float__(self):
        return float(self.a) + float(self.b) * 1.7320508075688772


Q0 = QuadraticNumber.of(0)
Q1 = QuadraticNumber.of(1)
SQRT3 = QuadraticNumber.of(0, 1)


@dataclass(frozen=True)
class Halfspace:
    """<normal, x> <= offset, tagged with its disc-constraint group 1..3."""

    normal: tuple
    offset: QuadraticNumber
    group: int


# -- small builders ------------------------------------------------------------

def _checked(model: CornerModel) -> CornerModel:
    violations = validate(model)
    if violations:
        raise ValidationFailed(violations)
    check_nice(model, face_lattice(model))
    return model


def interval() -> CornerModel:
    """A single edge with its two endpoints as facets; n = 1."""
    complex_ = build_complex([(0, 1)])
    facets = (
        ("left", subcomplex(complex_, [(0,)])),
        ("right", subcomplex(complex_, [(1,)])),
    )
    return _checked(CornerModel(complex_, m=1, n=1, facets=facets))


def triangle() -> CornerModel:
    """The 2-simplex with its three edges as facets; n = 2."""
    complex_ = build_complex([(0, 1, 2)])
    facets = (
        ("e01", subcomplex(complex_, [(0, 1)])),
        ("e02", subcomplex(complex_, [(0, 2)])),
        ("e12", subcomplex(complex_, [(1, 2)])),
    )
    return _checked(CornerModel(complex_, m=2, n=2, facets=facets))


def square() -> CornerModel:
    """A fan-triangulated square with its four sides as facets; n = 2."""
    complex_ = build_complex([(0, 1, 4), (1, 2, 4), (2, 3, 4), (0, 3, 4)])
    facets = (
        ("south", subcomplex(complex_, [(0, 1)])),
        ("east", subcomplex(complex_, [(1, 2)])),
        ("north", subcomplex(complex_, [(2, 3)])),
        ("west", subcomplex(complex_, [(0, 3)])),
    )
    return _checked(CornerModel(complex_, m=2, n=2, facets=facets))


def cylinder(resolution: int = 3) -> CornerModel:
    """A triangulated cylinder with each boundary circle a facet; n = 1."""
    if resolution < 3:
        raise ResolutionTooSmall("cylinder needs at least 3 vertices per circle")
    m = resolution
    tris = []
    for i in range(m):
        j = (i + 1) % m
        tris.append((i, j, m + i))
        tris.append((j, m + i, m + j))
    complex_ = build_complex(tris)
    bottom = [(i, (i + 1) % m) for i in range(m)]
    top = [(m + i, m + (i + 1) % m) for i in range(m)]
    facets = (
        ("bottom", subcomplex(complex_, bottom)),
        ("top", subcomplex(complex_, top)),
    )
    return _checked(CornerModel(complex_, m=2, n=1, facets=facets))


def mobius(resolution: int = 5) -> CornerModel:
    """The cyclic strip {i, i+1, i+2 mod m} with its boundary circle as facet.

    Odd resolutions give a one-boundary strip; the build verifies the
    boundary really is a single circle instead of assuming it.
    """
    if resolution < 5:
        raise ResolutionTooSmall("the strip needs at least 5 vertices")
    if resolution % 2 == 0:
        raise UnsupportedResolution(
            "even cyclic strips have two boundary circles; use an odd resolution"
        )
    m = resolution
    tris = [tuple(sorted((i, (i + 1) % m, (i + 2) % m))) for i in range(m)]
    complex_ = build_complex(tris)
    boundary_edges = [tuple(sorted((i, (i + 2) % m))) for i in range(m)]
    boundary = subcomplex(complex_, boundary_edges)
    comps = connected_components(boundary.as_complex())
    if len(comps) != 1:
        raise UnsupportedResolution(
            f"boundary has {len(comps)} components, expected a single circle"
        )
    facets = (("boundary", boundary),)
    return _checked(CornerModel(complex_, m=2, n=1, facets=facets))


# -- the hexagonal triangle-configuration polytope -----------------------------

def mgon_halfspaces(resolution: int = 6) -> list[Halfspace]:
    """Halfspaces for the polygonal triangle-configuration model in R^4.

    Coordinates are (u1, u2) with the third side -u1-u2 eliminated; each
    polygon edge normal yields three constraints, one per side.  Only the
    hexagon (resolution 6) is available in exact Q(sqrt 3) arithmetic.
    """
    if resolution % 6 != 0:
        raise UnsupportedResolution("resolution must be divisible by 6")
    if resolution != 6:
        raise UnsupportedResolution(
            "only the hexagon is realized in exact arithmetic"
        )
    half = Fraction(1, 2)
    # edge normals of the hexagon with vertices at angles k*60 degrees,
    # scaled by 2: (±sqrt3, ±1) and (0, ±2), all with offset sqrt3
    normals2 = [
        (SQRT3, Q1),
        (Q0, QuadraticNumber.of(2)),
        (-SQRT3, Q1),
        (-SQRT3, -Q1),
        (Q0, QuadraticNumber.of(-2)),
        (SQRT3, -Q1),
    ]
    offset = SQRT3
    out = []
    for nx, ny in normals2:
        out.append(Halfspace((nx, ny, Q0, Q0), offset, 1))
    for nx, ny in normals2:
        out.append(Halfspace((Q0, Q0, nx, ny), offset, 2))
    for nx, ny in normals2:
        out.append(Halfspace((nx, ny, nx, ny), offset, 3))
    return out


def _solve4(rows: list[tuple], rhs: list[QuadraticNumber]):
    """Solve a 4x4 system over Q(sqrt 3); None when singular."""
    n = 4
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if not aug[r][col].is_zero()), None
        )
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_lead = aug[col][col]
        aug[col] = [x / inv_lead for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def _dot(normal: tuple, point: tuple) -> QuadraticNumber:
    acc = Q0
    for a, b in zip(normal, point):
        acc = acc + a * b
    return acc


def _affine_rank(points: list[tuple]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [
        [p[i] - base[i] for i in range(4)] for p in points[1:]
    ]
    rank = 0
    cols = 4
    for col in range(cols):
        pivot = next(
            (r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _nullspace_direction(rows: list[tuple]):
    """A nonzero solution of three homogeneous equations in R^4, if the rank is 3."""
    mat = [list(r) for r in rows]
    n = 4
    pivots = []
    rank = 0
    for col in range(n):
        pivot = next(
            (r for r in range(rank, len(mat)) if not mat[r][col].is_zero()), None
        )
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col]
        mat[rank] = [x / lead for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not mat[r][col].is_zero():
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    if rank != 3:
        return None
    free = next(c for c in range(n) if c not in pivots)
    direction = [Q0] * n
    direction[free] = Q1
    for r, col in enumerate(pivots):
        direction[col] = -mat[r][free]
    return tuple(direction)


def _check_bounded(halfspaces: list[Halfspace]):
    normals = [h.normal for h in halfspaces]
    if _affine_rank([(Q0, Q0, Q0, Q0)] + list(normals)) < 4:
        raise UnboundedPolytope("normals do not span R^4")
    for idx in itertools.combinations(range(len(normals)), 3):
        direction = _nullspace_direction([normals[i] for i in idx])
        if direction is None:
            continue
        for d in (direction, tuple(-x for x in direction)):
            if all(_dot(h.normal, d).sign() <= 0 for h in halfspaces):
                raise UnboundedPolytope("recession direction found")


def polytope_model(halfspaces: list[Halfspace]) -> CornerModel:
    """Exact vertex enumeration, pulling triangulation, and facet labeling.

    The corner model is the cone over the triangulated boundary sphere,
    with facet i the subcomplex of boundary simplices whose vertices all
    lie on a common group-i hyperplane.
    """
    _check_bounded(halfspaces)
    count = len(halfspaces)
    normals = [h.normal for h in halfspaces]
    offsets = [h.offset for h in halfspaces]

    points: dict[tuple, None] = {}
    for idx in itertools.combinations(range(count), 4):
        solution = _solve4([normals[i] for i in idx], [offsets[i] for i in idx])
        if solution is None:
            continue
        if all((_dot(normals[i], solution) - offsets[i]).sign() <= 0 for i in range(count)):
            points.setdefault(solution, None)
    vertices = sorted(points, key=lambda p: tuple((c.a, c.b) for c in p))
    if not vertices:
        raise DegenerateDimension("no vertices found")
    if _affine_rank(vertices) < 4:
        raise DegenerateDimension("polytope is not full-dimensional")

    active = [
        frozenset(
            i
            for i in range(count)
            if (_dot(normals[i], v) - offsets[i]).is_zero()
        )
        for v in vertices
    ]

    # polytope faces = intersections of facet vertex sets
    facet_sets = [
        frozenset(j for j in range(len(vertices)) if i in active[j])
        for i in range(count)
    ]
    poly_faces = set(s for s in facet_sets if s)
    frontier = set(poly_faces)
    while frontier:
        fresh = set()
        for s1 in frontier:
            for s2 in facet_sets:
                t = s1 & s2
                if t and t not in poly_faces:
                    fresh.add(t)
        poly_faces |= fresh
        frontier = fresh

    face_dim = {
        f: _affine_rank([vertices[j] for j in sorted(f)]) for f in poly_faces
    }

    # pulling triangulation, coning every face from its least vertex
    by_dim = sorted(poly_faces, key=lambda f: face_dim[f])
    triangulated: dict[frozenset, list[tuple]] = {}
    for f in by_dim:
        d = face_dim[f]
        if d == 0:
            triangulated[f] = [tuple(f)]
            continue
        apex = min(f)
        simplices = []
        for g in poly_faces:
            if g < f and face_dim[g] == d - 1 and apex not in g:
                for s in triangulated[g]:
                    simplices.append(tuple(sorted(s + (apex,))))
        triangulated[f] = simplices

    boundary_cells = sorted(
        set(
            itertools.chain.from_iterable(
                triangulated[f] for f in poly_faces if face_dim[f] == 3
            )
        )
    )
    cone = len(vertices)
    top_cells = [tuple(sorted(t + (cone,))) for t in boundary_cells]
    complex_ = build_complex(top_cells)

    groups = sorted(set(h.group for h in halfspaces))
    facet_subs = []
    for g in groups:
        hyperplanes = [
            frozenset(j for j in range(len(vertices)) if i in active[j])
            for i in range(count)
            if halfspaces[i].group == g
        ]
        members = set()
        for s in complex_.all_simplices():
            if cone in s:
                continue
            if any(set(s) <= hp for hp in hyperplanes):
                members.add(s)
        facet_subs.append((f"F{g}", complex_.subcomplex_from_closed(members)))

    n = len(groups)
    return _checked(CornerModel(complex_, m=4, n=n, facets=tuple(facet_subs)))


def triangle_space(resolution: int = 6) -> CornerModel:
    """The hexagonal model of the space of triangles with sides at most 1."""
    return polytope_model(mgon_halfspaces(resolution))


# -- abstract presets -----------------------------------------------------------

def abstract_presets() -> dict[str, AbstractBData]:
    """Named abstract inputs; block data mirror the geometric computations."""
    one = Gf2Matrix.from_rows([[1]])
    one_one = Gf2Matrix.from_rows([[1, 1]])

    faces = (
        ("P", 0, (2, 2), ()),
        ("Q12", 1, (0, 1, 1), ("P",)),
        ("Q13", 1, (0, 1, 1), ("P",)),
        ("Q23", 1, (0, 1, 1), ("P",)),
        ("F1", 2, (0, 0, 1, 1), ("Q12", "Q13")),
        ("F2", 2, (0, 0, 1, 1), ("Q12", "Q23")),
        ("F3", 2, (0, 0, 1, 1), ("Q13", "Q23")),
        ("M", 3, (0, 0, 0, 0, 1), ("F1", "F2", "F3")),
    )
    blocks = []
    for q_name in ("Q12", "Q13", "Q23"):
        blocks.append(AbstractBlock("P", q_name, 0, one_one))
        blocks.append(AbstractBlock("P", q_name, 1, one_one))
    for q_name, f_names in (
        ("Q12", ("F1", "F2")),
        ("Q13", ("F1", "F3")),
        ("Q23", ("F2", "F3")),
    ):
        for f_name in f_names:
            blocks.append(AbstractBlock(q_name, f_name, 1, one))
            blocks.append(AbstractBlock(q_name, f_name, 2, one))
    for f_name in ("F1", "F2", "F3"):
        # degree-2 block is zero since H^3(M, dM) = 0
        blocks.append(AbstractBlock(f_name, "M", 3, one))
    return {
        "triangle-space-abstract": AbstractBData(n=3, faces=faces, blocks=blocks)
    }
