"""Finite abstract simplicial complexes and mod-2 cohomology of pairs.

Simplices are strictly increasing tuples of non-negative vertex ids.
Within each dimension the simplex list is sorted lexicographically; all
cochain matrices are written in that canonical basis, so every matrix in
the package is reproducible across runs.

Relative cochains of (K, L) are cochains on K vanishing on L; their basis
is the set of simplices of K not in L.  The connecting homomorphism of a
triple is computed literally: extend a relative cocycle by zero, apply the
ambient coboundary, and read the class off in the target basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf2
from .errors import (
    MalformedSimplex,
    NotAPairInclusion,
    NotASimplexOfParent,
    NotNested,
)
from .gf2 import Gf2Matrix

Simplex = tuple[int, ...]


def _canon(simplex: Iterable[int]) -> Simplex:
    vertices = tuple(int(v) for v in simplex)
    if len(vertices) == 0:
        raise MalformedSimplex("empty simplex")
    if len(set(vertices)) != len(vertices):
        raise MalformedSimplex(f"repeated vertex in {vertices}")
    if any(v < 0 for v in vertices):
        raise MalformedSimplex(f"negative vertex id in {vertices}")
    return tuple(sorted(vertices))


class SimplicialComplex:
    """A finite simplicial complex, closed under faces, canonically ordered."""

    __slots__ = ("_by_dim", "_index", "_simplex_set")

    def __init__(self, closed_simplices: Iterable[Simplex]):
        by_dim: dict[int, set[Simplex]] = {}
        for s in closed_simplices:
            by_dim.setdefault(len(s) - 1, set()).add(s)
        top = max(by_dim) if by_dim else -1
        self._by_dim: tuple[tuple[Simplex, ...], ...] = tuple(
            tuple(sorted(by_dim.get(k, ()))) for k in range(top + 1)
        )
        self._index: dict[Simplex, int] = {}
        for cells in self._by_dim:
            for i, s in enumerate(cells):
                self._index[s] = i
        self._simplex_set = frozenset(self._index)

    @property
    def dim(self) -> int:
        return len(self._by_dim) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices(0))

    def simplices(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k < len(self._by_dim):
            return self._by_dim[k]
        return ()

    def all_simplices(self) -> tuple[Simplex, ...]:
        return tuple(itertools.chain.from_iterable(self._by_dim))

    def index_of(self, simplex: Simplex) -> int:
        return self._index[simplex]

    def __contains__(self, simplex: Simplex) -> bool:
        return simplex in self._simplex_set

    def __len__(self) -> int:
        return len(self._index)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplex_set == other._simplex_set

    def __hash__(self):
        return hash(self._simplex_set)

    def __repr__(self) -> str:
        counts = "/".join(str(len(c)) for c in self._by_dim)
        return f"SimplicialComplex(dim={self.dim}, cells={counts or '0'})"

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(cells) for k, cells in enumerate(self._by_dim))

    def subcomplex_from_closed(self, simplices: Iterable[Simplex]) -> "Subcomplex":
        """Wrap an already face-closed simplex set of this complex."""
        members = frozenset(simplices)
        for s in members:
            if s not in self._simplex_set:
                raise NotASimplexOfParent(f"{s} is not a simplex of the parent")
        return Subcomplex(self, members)


def closure(simplices: Iterable[Simplex]) -> set[Simplex]:
    out: set[Simplex] = set()
    for s in simplices:
        for k in range(1, len(s) + 1):
            out.update(itertools.combinations(s, k))
    return out


def build_complex(maximal_simplices: Sequence[Iterable[int]]) -> SimplicialComplex:
    """The face closure of the given simplices."""
    generators = [_canon(s) for s in maximal_simplices]
    return SimplicialComplex(closure(generators))


@dataclass(frozen=True)
class Subcomplex:
    """A face-closed subset of a parent complex's simplices."""

    parent: SimplicialComplex
    members: frozenset

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.members), default=-1)

    def simplices(self, k: int) -> tuple[Simplex, ...]:
        return tuple(s for s in self.parent.simplices(k) if s in self.members)

    def all_simplices(self) -> tuple[Simplex, ...]:
        return tuple(s for s in self.parent.all_simplices() if s in self.members)

    def __contains__(self, simplex: Simplex) -> bool:
        return simplex in self.members

    def __len__(self) -> int:
        return len(self.members)

    def is_subset_of(self, other: "Subcomplex") -> bool:
        return self.members <= other.members

    def union(self, other: "Subcomplex") -> "Subcomplex":
        return Subcomplex(self.parent, self.members | other.members)

    def as_complex(self) -> SimplicialComplex:
        """A standalone complex on the same vertex ids."""
        return SimplicialComplex(self.members)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.members)

    def __repr__(self) -> str:
        return f"Subcomplex({len(self.members)} of {len(self.parent)} cells)"


def empty_subcomplex(parent: SimplicialComplex) -> Subcomplex:
    return Subcomplex(parent, frozenset())


def full_subcomplex(parent: SimplicialComplex) -> Subcomplex:
    return Subcomplex(parent, frozenset(parent.all_simplices()))


def subcomplex(parent: SimplicialComplex, generators: Sequence[Iterable[int]]) -> Subcomplex:
    """The face closure of the generators inside the parent complex."""
    canon = [_canon(g) for g in generators]
    for g in canon:
        if g not in parent:
            raise NotASimplexOfParent(f"{g} is not a simplex of the parent")
    return Subcomplex(parent, frozenset(closure(canon)))


def connected_components(complex_: SimplicialComplex) -> list[Subcomplex]:
    """Partition of the simplices under shared-vertex adjacency.

    Components are returned sorted by their smallest vertex.
    """
    parent_of: dict[int, int] = {v: v for v in complex_.vertices}

    def find(v: int) -> int:
        while parent_of[v] != v:
            parent_of[v] = parent_of[parent_of[v]]
            v = parent_of[v]
        return v

    for edge in complex_.simplices(1):
        ra, rb = find(edge[0]), find(edge[1])
        if ra != rb:
            parent_of[ra] = rb

    groups: dict[int, set[Simplex]] = {}
    for s in complex_.all_simplices():
        groups.setdefault(find(s[0]), set()).add(s)
    comps = [Subcomplex(complex_, frozenset(g)) for g in groups.values()]
    comps.sort(key=lambda c: min(min(s) for s in c.members))
    return comps


# -- cochain machinery --------------------------------------------------------

def relative_basis(complex_: SimplicialComplex, rel: Subcomplex, k: int) -> tuple[Simplex, ...]:
    """Canonically ordered k-simplices of K not in L."""
    return tuple(s for s in complex_.simplices(k) if s not in rel.members)


def _check_pair(complex_: SimplicialComplex, rel: Subcomplex):
    if rel.parent is not complex_ and rel.parent != complex_:
        raise NotASimplexOfParent("subcomplex does not live in the given complex")


def coboundary_matrix(complex_: SimplicialComplex, rel: Subcomplex, k: int) -> Gf2Matrix:
    """Matrix of the mod-2 coboundary C^k(K, L) -> C^{k+1}(K, L).

    Rows are (k+1)-simplices, columns are k-simplices, both restricted to
    K minus L in canonical order; the (sigma, tau) entry is 1 iff tau is a
    facet of sigma.
    """
    _check_pair(complex_, rel)
    lower = relative_basis(complex_, rel, k)
    upper = relative_basis(complex_, rel, k + 1)
    col_of = {s: j for j, s in enumerate(lower)}
    rows = []
    for sigma in upper:
        row = [0] * len(lower)
        for drop in range(len(sigma)):
            tau = sigma[:drop] + sigma[drop + 1 :]
            j = col_of.get(tau)
            if j is not None:
                row[j] = 1
        rows.append(row)
    return Gf2Matrix.from_rows(rows, cols=len(lower))


@dataclass(frozen=True)
class CohomologyVector:
    """A degree together with cocycle representatives of a basis of H^k(K, L).

    `classes` rows are cochains in the canonical relative basis `basis`;
    they are cocycles and independent in cohomology.
    """

    degree: int
    basis: tuple[Simplex, ...]
    classes: Gf2Matrix

    @property
    def dim(self) -> int:
        return self.classes.rows


def _quotient_representatives(cocycles: Gf2Matrix, coboundaries: Gf2Matrix) -> Gf2Matrix:
    """Independent cocycle rows modulo the coboundary row space.

    Each kept row is fully reduced against the coboundaries and the
    previously kept rows, so the output is canonical.
    """
    width = cocycles.cols
    echelon: dict[int, list[int]] = {}

    def reduce_row(bits: list[int]) -> list[int]:
        while True:
            lead = next((i for i, b in enumerate(bits) if b), None)
            if lead is None or lead not in echelon:
                return bits
            other = echelon[lead]
            bits = [a ^ b for a, b in zip(bits, other)]

    def insert(bits: list[int]) -> bool:
        bits = reduce_row(bits)
        lead = next((i for i, b in enumerate(bits) if b), None)
        if lead is None:
            return False
        echelon[lead] = bits
        return True

    for row in coboundaries.to_rows():
        insert(row)
    kept = []
    for row in cocycles.to_rows():
        reduced = reduce_row(row)
        if insert(list(reduced)):
            kept.append(reduced)
    return Gf2Matrix.from_rows(kept, cols=width)


def cohomology_at(
    complex_: SimplicialComplex, rel: Subcomplex, k: int
) -> tuple[CohomologyVector, Gf2Matrix]:
    """Representatives of H^k(K, L) plus rows spanning the coboundaries.

    The second component (image of the degree k-1 coboundary, as rows) is
    what class-coordinate computations reduce against.
    """
    basis = relative_basis(complex_, rel, k)
    delta_k = coboundary_matrix(complex_, rel, k)
    delta_prev = (
        coboundary_matrix(complex_, rel, k - 1)
        if k > 0
        else Gf2Matrix.zeros(len(basis), 0)
    )
    cocycles = gf2.kernel_basis(delta_k)
    image_rows = delta_prev.transpose()
    reps = _quotient_representatives(cocycles, image_rows)
    return CohomologyVector(k, basis, reps), image_rows


def relative_cohomology(
    complex_: SimplicialComplex, rel: Subcomplex
) -> list[CohomologyVector]:
    """H^k(K, L; F2) with explicit representatives, for 0 <= k <= dim K."""
    _check_pair(complex_, rel)
    return [cohomology_at(complex_, rel, k)[0] for k in range(complex_.dim + 1)]


def cohomology_dims(complex_: SimplicialComplex, rel: Subcomplex) -> list[int]:
    return [v.dim for v in relative_cohomology(complex_, rel)]


def _extend_and_cobound(
    ambient: SimplicialComplex, cochains: Gf2Matrix, basis: Sequence[Simplex], k: int
) -> Gf2Matrix:
    """Extend cochain rows by zero to the ambient complex and apply its coboundary.

    Rows are returned in the ambient absolute (k+1)-basis.
    """
    upper = ambient.simplices(k + 1)
    out = [[0] * len(upper) for _ in range(cochains.rows)]
    bits = cochains.to_bool()
    cofacets: dict[Simplex, list[int]] = {s: [] for s in basis}
    for i, sigma in enumerate(upper):
        for drop in range(len(sigma)):
            tau = sigma[:drop] + sigma[drop + 1 :]
            if tau in cofacets:
                cofacets[tau].append(i)
    for j, tau in enumerate(basis):
        for r in range(cochains.rows):
            if bits[r, j]:
                for i in cofacets[tau]:
                    out[r][i] ^= 1
    return Gf2Matrix.from_rows(out, cols=len(upper))


def _classes_in_pair(
    ambient: SimplicialComplex,
    rel: Subcomplex,
    k: int,
    absolute_rows: Gf2Matrix,
    target: tuple[CohomologyVector, Gf2Matrix] | None = None,
) -> Gf2Matrix:
    """Coordinates of absolute k-cochain rows as classes of H^k(ambient, rel).

    The rows must vanish on `rel` and be relative cocycles.
    """
    basis = relative_basis(ambient, rel, k)
    all_k = ambient.simplices(k)
    keep = [i for i, s in enumerate(all_k) if s not in rel.members]
    dropped = [i for i, s in enumerate(all_k) if s in rel.members]
    if dropped and not absolute_rows.take_cols(dropped).is_zero():
        raise NotNested("cochain does not vanish on the subcomplex")
    restricted = absolute_rows.take_cols(keep)
    vec, image_rows = target if target is not None else cohomology_at(ambient, rel, k)
    return gf2.express_rows(vec.classes, image_rows, restricted)


def connecting_data(
    ambient: SimplicialComplex, mid: Subcomplex, low: Subcomplex
) -> list[Gf2Matrix]:
    """All connecting homomorphisms H^k(B, C) -> H^{k+1}(A, B) of a triple.

    Entry k of the result is the matrix of the degree-k connecting map in
    the canonical representative bases.
    """
    _check_pair(ambient, mid)
    _check_pair(ambient, low)
    if not low.is_subset_of(mid):
        raise NotNested("expected C contained in B contained in A")
    mid_complex = mid.as_complex()
    low_in_mid = mid_complex.subcomplex_from_closed(low.members)
    out = []
    for k in range(ambient.dim + 1):
        src, _ = cohomology_at(mid_complex, low_in_mid, k)
        tgt = cohomology_at(ambient, mid, k + 1)
        if src.dim == 0:
            out.append(Gf2Matrix.zeros(tgt[0].dim, 0))
            continue
        absolute = _extend_and_cobound(ambient, src.classes, src.basis, k)
        coords = _classes_in_pair(ambient, mid, k + 1, absolute, tgt)
        out.append(coords.transpose())
    return out


def connecting_matrix(
    ambient: SimplicialComplex, mid: Subcomplex, low: Subcomplex, k: int
) -> Gf2Matrix:
    """Matrix of the connecting homomorphism H^k(B, C) -> H^{k+1}(A, B)."""
    if 0 <= k <= ambient.dim:
        return connecting_data(ambient, mid, low)[k]
    # Out-of-range degrees: both sides are zero-dimensional maps.
    if not low.is_subset_of(mid):
        raise NotNested("expected C contained in B contained in A")
    mid_complex = mid.as_complex()
    low_in_mid = mid_complex.subcomplex_from_closed(low.members)
    src, _ = cohomology_at(mid_complex, low_in_mid, k)
    tgt, _ = cohomology_at(ambient, mid, k + 1)
    return Gf2Matrix.zeros(tgt.dim, src.dim)


def restriction_matrix(
    complex_: SimplicialComplex,
    rel: Subcomplex,
    sub: Subcomplex,
    sub_rel: Subcomplex,
    k: int,
) -> Gf2Matrix:
    """Matrix of H^k(K, L) -> H^k(K', L') induced by the inclusion of pairs."""
    _check_pair(complex_, rel)
    _check_pair(complex_, sub)
    _check_pair(complex_, sub_rel)
    if not sub_rel.is_subset_of(sub):
        raise NotAPairInclusion("L' is not contained in K'")
    if not sub_rel.is_subset_of(rel):
        raise NotAPairInclusion("L' is not contained in L")
    src, _ = cohomology_at(complex_, rel, k)
    sub_complex = sub.as_complex()
    sub_rel_in = sub_complex.subcomplex_from_closed(sub_rel.members)
    tgt = cohomology_at(sub_complex, sub_rel_in, k)
    target_basis = tgt[0].basis
    src_cols = {s: j for j, s in enumerate(src.basis)}
    rows = []
    src_bits = src.classes.to_bool()
    for r in range(src.classes.rows):
        row = []
        for s in target_basis:
            j = src_cols.get(s)
            row.append(int(src_bits[r, j]) if j is not None else 0)
        rows.append(row)
    restricted = Gf2Matrix.from_rows(rows, cols=len(target_basis))
    coords = gf2.express_rows(tgt[0].classes, tgt[1], restricted)
    return coords.transpose()
