"""Exact dense linear algebra over the two-element field.

Every cohomology computation in this package bottoms out here.  Matrices
are immutable, with each row packed into 64-bit words, so a row operation
is a short vectorized XOR; elimination always picks the leftmost pivot in
the topmost row, which makes every derived basis reproducible bit for bit.

Vectors are column vectors: a matrix of shape (r, c) represents a linear
map F2^c -> F2^r.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import CompositionNotZero, ShapeMismatch

_WORD = 64


def _word_count(cols: int) -> int:
    return (cols + _WORD - 1) // _WORD


class Gf2Matrix:
    """Immutable bit-packed matrix over GF(2).

    Zero-row and zero-column shapes are valid and represent zero maps.
    """

    __slots__ = ("rows", "cols", "_words")

    def __init__(self, rows: int, cols: int, words: np.ndarray):
        if rows < 0 or cols < 0:
            raise ShapeMismatch(f"negative shape ({rows}, {cols})")
        expected = (rows, _word_count(cols))
        if words.shape != expected or words.dtype != np.uint64:
            raise ShapeMismatch(
                f"packed storage {words.shape}/{words.dtype} does not match "
                f"shape ({rows}, {cols})"
            )
        self.rows = rows
        self.cols = cols
        words = np.ascontiguousarray(words)
        words.setflags(write=False)
        self._words = words

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols, np.zeros((rows, _word_count(cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        words = np.zeros((n, _word_count(n)), dtype=np.uint64)
        for i in range(n):
            words[i, i // _WORD] = np.uint64(1) << np.uint64(i % _WORD)
        return cls(n, n, words)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "Gf2Matrix":
        """Build from a list of 0/1 rows; `cols` is required when rows is empty."""
        nrows = len(rows)
        if nrows == 0:
            if cols is None:
                raise ShapeMismatch("column count required for an empty row list")
            return cls.zeros(0, cols)
        width = len(rows[0])
        if cols is not None and cols != width:
            raise ShapeMismatch(f"declared {cols} columns, rows have {width}")
        arr = np.asarray(rows, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise ShapeMismatch("ragged row list")
        return cls.from_bool(arr.astype(bool))

    @classmethod
    def from_bool(cls, arr: np.ndarray) -> "Gf2Matrix":
        arr = np.asarray(arr, dtype=bool)
        if arr.ndim != 2:
            raise ShapeMismatch("expected a 2-d array")
        rows, cols = arr.shape
        nw = _word_count(cols)
        if rows == 0 or cols == 0:
            return cls.zeros(rows, cols)
        pad = nw * _WORD - cols
        bits = np.concatenate(
            [arr.astype(np.uint8), np.zeros((rows, pad), dtype=np.uint8)], axis=1
        )
        packed = np.packbits(bits, axis=1, bitorder="little")
        return cls(rows, cols, np.ascontiguousarray(packed).view(np.uint64))

    # -- views ----------------------------------------------------------------

    def to_bool(self) -> np.ndarray:
        if self.rows == 0 or self.cols == 0:
            return np.zeros((self.rows, self.cols), dtype=bool)
        bits = np.unpackbits(self._words.view(np.uint8), axis=1, bitorder="little")
        return bits[:, : self.cols].astype(bool)

    def to_rows(self) -> list[list[int]]:
        return self.to_bool().astype(int).tolist()

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ShapeMismatch(f"index ({i}, {j}) out of range ({self.rows}, {self.cols})")
        return int((self._words[i, j // _WORD] >> np.uint64(j % _WORD)) & np.uint64(1))

    def row_support(self, i: int) -> tuple[int, ...]:
        """Column indices of the 1-entries of row i."""
        if self.cols == 0:
            return ()
        bits = np.unpackbits(self._words[i : i + 1].view(np.uint8), axis=1, bitorder="little")
        return tuple(int(j) for j in np.nonzero(bits[0, : self.cols])[0])

    def is_zero(self) -> bool:
        return not self._words.any()

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix.from_bool(self.to_bool().T)

    def take_rows(self, indices: Sequence[int]) -> "Gf2Matrix":
        idx = list(indices)
        words = self._words[idx].copy() if idx else np.zeros(
            (0, _word_count(self.cols)), dtype=np.uint64
        )
        return Gf2Matrix(len(idx), self.cols, words)

    def take_cols(self, indices: Sequence[int]) -> "Gf2Matrix":
        idx = list(indices)
        if self.rows == 0 or not idx:
            return Gf2Matrix.zeros(self.rows, len(idx))
        return Gf2Matrix.from_bool(self.to_bool()[:, idx])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self._words, other._words))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.rows}x{self.cols})"


def vstack(mats: Iterable[Gf2Matrix], cols: int | None = None) -> Gf2Matrix:
    """Stack matrices vertically; all must share a column count."""
    mats = list(mats)
    if not mats:
        if cols is None:
            raise ShapeMismatch("column count required for an empty stack")
        return Gf2Matrix.zeros(0, cols)
    width = mats[0].cols
    for m in mats:
        if m.cols != width:
            raise ShapeMismatch(f"cannot stack {m.cols} columns onto {width}")
    words = np.concatenate([m._words for m in mats], axis=0)
    return Gf2Matrix(sum(m.rows for m in mats), width, words)


def _rref_words(words: np.ndarray, rows: int, cols: int) -> tuple[np.ndarray, list[int]]:
    """In-place reduced row echelon form on a writable copy of packed words."""
    pivots: list[int] = []
    r = 0
    one = np.uint64(1)
    for c in range(cols):
        if r >= rows:
            break
        w, b = divmod(c, _WORD)
        shift = np.uint64(b)
        col = (words[r:, w] >> shift) & one
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
        full = ((words[:, w] >> shift) & one).astype(bool)
        full[r] = False
        if full.any():
            words[full] ^= words[r]
        pivots.append(c)
        r += 1
    return words, pivots


def row_reduce(matrix: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Deterministic: leftmost pivot, topmost row, full reduction above and
    below each pivot.  The output keeps the input shape (zero rows sink
    to the bottom).
    """
    words = matrix._words.copy()
    words, pivots = _rref_words(words, matrix.rows, matrix.cols)
    return Gf2Matrix(matrix.rows, matrix.cols, words), pivots


def rank(matrix: Gf2Matrix) -> int:
    words = matrix._words.copy()
    _, pivots = _rref_words(words, matrix.rows, matrix.cols)
    return len(pivots)


def kernel_basis(matrix: Gf2Matrix) -> Gf2Matrix:
    """Rows form a basis of the right kernel {v : Mv = 0}.

    One basis vector per free column, in ascending column order, so the
    result is canonical for a given input.
    """
    reduced, pivots = row_reduce(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(matrix.cols) if c not in pivot_set]
    out = np.zeros((len(free), _word_count(matrix.cols)), dtype=np.uint64)
    one = np.uint64(1)
    for row_idx, f in enumerate(free):
        out[row_idx, f // _WORD] |= one << np.uint64(f % _WORD)
        for i, p in enumerate(pivots):
            if reduced.get(i, f):
                out[row_idx, p // _WORD] |= one << np.uint64(p % _WORD)
    return Gf2Matrix(len(free), matrix.cols, out)


def multiply(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise ShapeMismatch(f"inner dimensions differ: {a.cols} vs {b.rows}")
    out = np.zeros((a.rows, _word_count(b.cols)), dtype=np.uint64)
    if a.rows and a.cols and b.cols:
        abits = a.to_bool()
        for i in range(a.rows):
            idx = np.nonzero(abits[i])[0]
            if idx.size:
                out[i] = np.bitwise_xor.reduce(b._words[idx], axis=0)
    return Gf2Matrix(a.rows, b.cols, out)


def quotient_dim(incoming: Gf2Matrix, outgoing: Gf2Matrix) -> int:
    """dim ker(outgoing) - rank(incoming) at the shared middle space.

    `incoming` maps into the space `outgoing` maps out of; the pair must
    compose to zero, otherwise the ambient complex is broken.
    """
    if incoming.rows != outgoing.cols:
        raise ShapeMismatch(
            f"incoming lands in F2^{incoming.rows}, outgoing leaves F2^{outgoing.cols}"
        )
    if not multiply(outgoing, incoming).is_zero():
        raise CompositionNotZero("outgoing o incoming is not the zero map")
    return (outgoing.cols - rank(outgoing)) - rank(incoming)


def express_rows(basis: Gf2Matrix, extra: Gf2Matrix | None, targets: Gf2Matrix) -> Gf2Matrix:
    """Write each target row as x*basis + y*extra and return the x part.

    Used to read off cohomology-class coordinates: `basis` rows are the
    chosen representatives, `extra` rows span the coboundaries.  Raises
    ValueError when a target is outside the combined span.
    """
    width = basis.cols
    if targets.cols != width or (extra is not None and extra.cols != width):
        raise ShapeMismatch("row spaces live in different ambient dimensions")
    stack = [basis] if extra is None else [basis, extra]
    span = vstack(stack, cols=width)
    # Solve span^T . x = target^T by eliminating the augmented matrix.
    n_unknowns = span.rows
    aug_mat = Gf2Matrix.from_bool(
        np.concatenate([span.to_bool().T, targets.to_bool().T], axis=1)
    )
    words = aug_mat._words.copy()
    words, pivots = _rref_words(words, aug_mat.rows, aug_mat.cols)
    reduced = Gf2Matrix(aug_mat.rows, aug_mat.cols, words)
    if any(p >= n_unknowns for p in pivots):
        raise ValueError("target rows are not in the span")
    out = np.zeros((targets.rows, _word_count(basis.rows)), dtype=np.uint64)
    one = np.uint64(1)
    for i, p in enumerate(pivots):
        if p >= basis.rows:
            continue  # coefficient belongs to the extra block
        for j in range(targets.rows):
            if reduced.get(i, n_unknowns + j):
                out[j, p // _WORD] |= one << np.uint64(p % _WORD)
    return Gf2Matrix(targets.rows, basis.rows, out)
