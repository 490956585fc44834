"""Rank-filtration pages and the column complexes of every face.

For a face P of a corner model, the filtration P_0 <= ... <= P_rank(P)
by face rank induces a page whose column p is the direct sum of
H^{p+q}(Q, dQ) over the rank-p faces Q below P, with differential the
connecting homomorphism of the triple (P_{p+1}, P_p, P_{p-1}).  The
cohomology of each row complex is the h^{p,q} table of the face; the
largest positive column with nonzero cohomology is its obstruction index.

The same assembly is exposed for abstract input: per-face graded
dimensions plus explicit differential blocks for covering pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import gf2
from .corners import CornerModel, Face
from .errors import (
    CompositionNotZero,
    DecompositionMismatch,
    PosetInconsistent,
    RankGap,
    ShapeMismatch,
)
from .gf2 import Gf2Matrix
from .scomplex import (
    CohomologyVector,
    Subcomplex,
    cohomology_at,
    connecting_data,
)


def filtration(model: CornerModel, faces: Sequence[Face], face: Face) -> list[Subcomplex]:
    """Subcomplexes P_0 <= ... <= P_rank, P_i = union of faces of rank <= i below P."""
    out = []
    members: set = set()
    for i in range(face.rank + 1):
        for other in faces:
            if face.id in other.contained_in and other.rank <= i:
                members |= other.cells.members
        out.append(Subcomplex(model.complex, frozenset(members)))
    return out


@dataclass(frozen=True)
class FiltrationPage:
    """E1 page of the rank filtration of one face, with block bookkeeping.

    `layout[(p, q)]` lists (face id, block dimension) pairs in block
    order; `d1[(p, q)]` maps column p to column p+1 in row q.  The
    geometric path also records representative cocycles in `terms`.
    """

    face: object  # face id (int) or abstract face name (str)
    rank: int
    qmax: int
    columns: tuple[tuple[object, ...], ...]
    layout: Mapping
    d1: Mapping
    terms: Mapping | None = None

    def term_dim(self, p: int, q: int) -> int:
        entry = self.layout.get((p, q))
        return sum(d for _, d in entry) if entry else 0

    def d1_at(self, p: int, q: int) -> Gf2Matrix:
        mat = self.d1.get((p, q))
        if mat is None:
            return Gf2Matrix.zeros(self.term_dim(p + 1, q), self.term_dim(p, q))
        return mat

    def block(self, p: int, q: int, src: object, dst: object) -> Gf2Matrix:
        """The (src, dst) block of d1 at (p, q); src has rank p, dst rank p+1."""
        mat = self.d1_at(p, q)
        col_off = 0
        col_range = None
        for fid, d in self.layout.get((p, q), ()):
            if fid == src:
                col_range = range(col_off, col_off + d)
                break
            col_off += d
        row_off = 0
        row_range = None
        for fid, d in self.layout.get((p + 1, q), ()):
            if fid == dst:
                row_range = range(row_off, row_off + d)
                break
            row_off += d
        if col_range is None or row_range is None:
            raise KeyError(f"no block ({src}, {dst}) at position ({p}, {q})")
        return mat.take_rows(list(row_range)).take_cols(list(col_range))


@dataclass(frozen=True)
class FaceReport:
    """Cohomology table of the column complex of one face."""

    face: object
    rank: int
    h: Mapping  # (p, q) -> dimension
    obstruction: int

    def h_at(self, p: int, q: int) -> int:
        return self.h.get((p, q), 0)

    def h_grid(self, qmax: int | None = None) -> list[list[int]]:
        """Rows indexed by q, columns by p."""
        if qmax is None:
            qmax = max((q for _, q in self.h), default=0)
        return [
            [self.h_at(p, q) for p in range(self.rank + 1)] for q in range(qmax + 1)
        ]


def _stratum_face_of(
    simplex, candidates: Sequence[Face]
) -> Face:
    hits = [f for f in candidates if simplex in f.open_stratum()]
    if len(hits) != 1:
        raise DecompositionMismatch(
            f"simplex {simplex} lies in {len(hits)} open strata of the expected rank"
        )
    return hits[0]


def e1_page(model: CornerModel, faces: Sequence[Face], face: Face) -> FiltrationPage:
    """Assemble the E1 page of a face from the connecting maps of its filtration.

    Bases are grouped by face id: inside column p, the classes of
    H^{p+q}(P_p, P_{p-1}) are permuted so that each rank-p face's block is
    contiguous, in face-id order.
    """
    steps = filtration(model, faces, face)
    qmax = max(model.m - model.n, 0)
    columns = tuple(
        tuple(
            other.id
            for other in faces
            if face.id in other.contained_in and other.rank == p
        )
        for p in range(face.rank + 1)
    )

    # Representatives of H^*(P_p, P_{p-1}), permuted into block order.
    perms: list[dict[int, list[int]]] = []  # per p: degree -> rep order
    layouts: dict = {}
    terms: dict = {}
    prev: Subcomplex | None = None
    for p, step in enumerate(steps):
        ambient = step.as_complex()
        rel = ambient.subcomplex_from_closed(prev.members if prev is not None else frozenset())
        rank_faces = [f for f in faces if f.id in set(columns[p])]
        by_deg: dict[int, CohomologyVector] = {}
        order_by_deg: dict[int, list[int]] = {}
        for q in range(qmax + 1):
            k = p + q
            vec, _ = cohomology_at(ambient, rel, k)
            tags = []
            for r in range(vec.classes.rows):
                support = vec.classes.row_support(r)
                owners = {
                    _stratum_face_of(vec.basis[j], rank_faces).id for j in support
                }
                if len(owners) != 1:
                    raise DecompositionMismatch(
                        f"representative mixes strata of faces {sorted(owners)}"
                    )
                tags.append((owners.pop(), min(support)))
            order = sorted(range(len(tags)), key=lambda r: tags[r])
            order_by_deg[k] = order
            permuted = vec.classes.take_rows(order)
            by_deg[k] = CohomologyVector(k, vec.basis, permuted)
            terms[(p, q)] = by_deg[k]
            sorted_tags = [tags[r] for r in order]
            layouts[(p, q)] = tuple(
                (f.id, sum(1 for t in sorted_tags if t[0] == f.id)) for f in rank_faces
            )
        perms.append(order_by_deg)
        prev = step

    d1: dict = {}
    for p in range(face.rank):
        ambient = steps[p + 1].as_complex()
        mid = ambient.subcomplex_from_closed(steps[p].members)
        low = ambient.subcomplex_from_closed(
            steps[p - 1].members if p > 0 else frozenset()
        )
        deltas = connecting_data(ambient, mid, low)
        for q in range(qmax + 1):
            k = p + q
            delta = deltas[k] if 0 <= k < len(deltas) else Gf2Matrix.zeros(0, 0)
            src_order = perms[p].get(k, [])
            tgt_order = perms[p + 1].get(k + 1, [])
            if delta.rows != len(tgt_order) or delta.cols != len(src_order):
                # degrees beyond the computed range are zero-dimensional
                delta = Gf2Matrix.zeros(len(tgt_order), len(src_order))
            permuted = delta.take_rows(tgt_order).take_cols(src_order)
            d1[(p, q)] = permuted
    for q in range(qmax + 1):
        d1[(face.rank, q)] = Gf2Matrix.zeros(
            0, sum(d for _, d in layouts.get((face.rank, q), ()))
        )

    return FiltrationPage(
        face=face.id,
        rank=face.rank,
        qmax=qmax,
        columns=columns,
        layout=layouts,
        d1=d1,
        terms=terms,
    )


def b_cohomology(page: FiltrationPage) -> FaceReport:
    """Cohomology table and obstruction index of the column complex."""
    h: dict = {}
    for q in range(page.qmax + 1):
        for p in range(page.rank + 1):
            incoming = (
                page.d1_at(p - 1, q)
                if p > 0
                else Gf2Matrix.zeros(page.term_dim(0, q), 0)
            )
            outgoing = page.d1_at(p, q)
            h[(p, q)] = gf2.quotient_dim(incoming, outgoing)
    obstruction = max((p for (p, q), v in h.items() if v and p >= 1), default=0)
    return FaceReport(face=page.face, rank=page.rank, h=h, obstruction=obstruction)


def face_reports(
    model: CornerModel, faces: Sequence[Face]
) -> tuple[list[FiltrationPage], list[FaceReport]]:
    """E1 page and report for every face of the lattice."""
    pages = [e1_page(model, faces, f) for f in faces]
    return pages, [b_cohomology(pg) for pg in pages]


# -- abstract front end -------------------------------------------------------

@dataclass(frozen=True)
class AbstractBlock:
    src: str
    dst: str
    degree: int
    matrix: Gf2Matrix


@dataclass(frozen=True)
class AbstractBData:
    """Face poset with graded dimensions and covering-pair differential blocks."""

    n: int
    faces: tuple  # of (name, rank, dims, contains) tuples
    blocks: tuple  # of AbstractBlock


@dataclass(frozen=True)
class AbstractLatticeFace:
    name: str
    rank: int
    codim: int
    dims: tuple[int, ...]
    below: frozenset

    def dim_at(self, k: int) -> int:
        return self.dims[k] if 0 <= k < len(self.dims) else 0


def _transitive_below(entries) -> dict[str, frozenset]:
    """Reflexive-transitive closure of the 'contains' edges; raises on cycles."""
    direct = {name: set(contains) for name, _, _, contains in entries}
    names = set(direct)
    for name, edges in direct.items():
        for other in edges:
            if other not in names:
                raise PosetInconsistent(f"face {name} contains unknown face {other}")
    below: dict[str, set] = {}

    def visit(name: str, trail: tuple) -> set:
        if name in below:
            return below[name]
        if name in trail:
            raise PosetInconsistent(
                f"containment cycle through {name}: {' > '.join(trail + (name,))}"
            )
        acc = {name}
        for other in direct[name]:
            acc |= visit(other, trail + (name,))
        below[name] = acc
        return acc

    for name in direct:
        visit(name, ())
    return {name: frozenset(s) for name, s in below.items()}


def from_abstract(data: AbstractBData) -> tuple[list[FaceReport], list[AbstractLatticeFace]]:
    """Reports for every abstract face, plus the synthetic lattice.

    Validates the poset, the covering condition on blocks, the block
    shapes, and that the assembled differential squares to zero.
    """
    names = [name for name, _, _, _ in data.faces]
    if len(set(names)) != len(names):
        raise PosetInconsistent("face names are not unique")
    rank_of = {name: rank for name, rank, _, _ in data.faces}
    dims_of = {name: tuple(dims) for name, _, dims, _ in data.faces}
    for name, rank in rank_of.items():
        if not 0 <= rank <= data.n:
            raise PosetInconsistent(f"face {name} has rank {rank} outside 0..{data.n}")
    below = _transitive_below(data.faces)
    for name, others in below.items():
        for other in others:
            if other != name and rank_of[other] >= rank_of[name]:
                raise PosetInconsistent(
                    f"face {name} (rank {rank_of[name]}) contains {other} "
                    f"(rank {rank_of[other]})"
                )

    block_map: dict[tuple[str, str, int], Gf2Matrix] = {}
    for blk in data.blocks:
        if blk.src not in rank_of or blk.dst not in rank_of:
            raise PosetInconsistent(f"block references unknown face {blk.src}->{blk.dst}")
        if rank_of[blk.dst] - rank_of[blk.src] != 1:
            raise RankGap(
                f"block {blk.src}->{blk.dst} spans ranks "
                f"{rank_of[blk.src]}->{rank_of[blk.dst]}"
            )
        if blk.src not in below[blk.dst]:
            raise PosetInconsistent(
                f"block {blk.src}->{blk.dst} joins faces not related by containment"
            )
        expected = (dims_of[blk.dst][blk.degree + 1] if blk.degree + 1 < len(dims_of[blk.dst]) else 0,
                    dims_of[blk.src][blk.degree] if 0 <= blk.degree < len(dims_of[blk.src]) else 0)
        if (blk.matrix.rows, blk.matrix.cols) != expected:
            raise ShapeMismatch(
                f"block {blk.src}->{blk.dst} at degree {blk.degree} has shape "
                f"{(blk.matrix.rows, blk.matrix.cols)}, expected {expected}"
            )
        key = (blk.src, blk.dst, blk.degree)
        if key in block_map:
            raise PosetInconsistent(f"duplicate block {blk.src}->{blk.dst} deg {blk.degree}")
        block_map[key] = blk.matrix

    qmax = max(
        (len(dims) - 1 - rank_of[name] for name, _, dims, _ in data.faces if dims),
        default=0,
    )
    qmax = max(qmax, 0)

    ordered = sorted(names, key=lambda nm: (rank_of[nm], nm))

    def _dim(name: str, k: int) -> int:
        dims = dims_of[name]
        return dims[k] if 0 <= k < len(dims) else 0

    def assemble_page(top: str) -> FiltrationPage:
        cols = tuple(
            tuple(nm for nm in ordered if nm in below[top] and rank_of[nm] == p)
            for p in range(rank_of[top] + 1)
        )
        layout = {}
        d1 = {}
        for p in range(rank_of[top] + 1):
            for q in range(qmax + 1):
                layout[(p, q)] = tuple((nm, _dim(nm, p + q)) for nm in cols[p])
        for p in range(rank_of[top]):
            for q in range(qmax + 1):
                rows_faces = cols[p + 1]
                cols_faces = cols[p]
                blocks_grid = []
                for dst in rows_faces:
                    row_blocks = []
                    for src in cols_faces:
                        mat = block_map.get((src, dst, p + q))
                        if mat is None:
                            mat = Gf2Matrix.zeros(_dim(dst, p + q + 1), _dim(src, p + q))
                        row_blocks.append(mat)
                    blocks_grid.append(row_blocks)
                d1[(p, q)] = _assemble_blocks(
                    blocks_grid,
                    [_dim(dst, p + q + 1) for dst in rows_faces],
                    [_dim(src, p + q) for src in cols_faces],
                )
            # top column maps to nothing
        for q in range(qmax + 1):
            d1[(rank_of[top], q)] = Gf2Matrix.zeros(
                0, sum(d for _, d in layout[(rank_of[top], q)])
            )
        return FiltrationPage(
            face=top,
            rank=rank_of[top],
            qmax=qmax,
            columns=cols,
            layout=layout,
            d1=d1,
            terms=None,
        )

    # Global square-zero validation across the full poset.
    global_cols = tuple(
        tuple(nm for nm in ordered if rank_of[nm] == p) for p in range(data.n + 1)
    )
    for p in range(data.n - 1):
        for q in range(qmax + 1):
            first = _assemble_blocks(
                [
                    [
                        block_map.get((src, dst, p + q))
                        or Gf2Matrix.zeros(_dim(dst, p + q + 1), _dim(src, p + q))
                        for src in global_cols[p]
                    ]
                    for dst in global_cols[p + 1]
                ],
                [_dim(dst, p + q + 1) for dst in global_cols[p + 1]],
                [_dim(src, p + q) for src in global_cols[p]],
            )
            second = _assemble_blocks(
                [
                    [
                        block_map.get((src, dst, p + q + 1))
                        or Gf2Matrix.zeros(_dim(dst, p + q + 2), _dim(src, p + q + 1))
                        for src in global_cols[p + 1]
                    ]
                    for dst in global_cols[p + 2]
                ],
                [_dim(dst, p + q + 2) for dst in global_cols[p + 2]],
                [_dim(src, p + q + 1) for src in global_cols[p + 1]],
            )
            if not gf2.multiply(second, first).is_zero():
                raise CompositionNotZero(
                    f"assembled differential does not square to zero at (p={p}, q={q})"
                )

    reports = []
    lattice = []
    for name in ordered:
        page = assemble_page(name)
        reports.append(b_cohomology(page))
        lattice.append(
            AbstractLatticeFace(
                name=name,
                rank=rank_of[name],
                codim=data.n - rank_of[name],
                dims=dims_of[name],
                below=below[name],
            )
        )
    return reports, lattice


def _assemble_blocks(
    grid: list[list[Gf2Matrix]], row_dims: list[int], col_dims: list[int]
) -> Gf2Matrix:
    """Stack a grid of blocks into one matrix (rows of blocks, then columns)."""
    total_rows = sum(row_dims)
    total_cols = sum(col_dims)
    rows_bits = []
    for i, row_blocks in enumerate(grid):
        for r in range(row_dims[i]):
            bits: list[int] = []
            for j, blk in enumerate(row_blocks):
                if blk.rows != row_dims[i] or blk.cols != col_dims[j]:
                    raise ShapeMismatch(
                        f"block ({i},{j}) has shape {(blk.rows, blk.cols)}, "
                        f"expected {(row_dims[i], col_dims[j])}"
                    )
                bits.extend(blk.to_rows()[r] if blk.cols else [])
            rows_bits.append(bits)
    return Gf2Matrix.from_rows(rows_bits, cols=total_cols)
