"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately naive (enumeration over all vectors or
row combinations) and shares no code with the implementations it checks.
"""

from __future__ import annotations

import itertools


def span_of_rows(rows: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """All GF(2) combinations of the given rows."""
    width = len(rows[0]) if rows else 0
    out = set()
    for picks in itertools.product((0, 1), repeat=len(rows)):
        acc = [0] * width
        for pick, row in zip(picks, rows):
            if pick:
                acc = [a ^ b for a, b in zip(acc, row)]
        out.add(tuple(acc))
    return out


def brute_rank(rows: list[list[int]]) -> int:
    """log2 of the size of the row span."""
    span = span_of_rows([tuple(r) for r in rows])
    size = len(span)
    return size.bit_length() - 1


def brute_kernel(rows: list[list[int]]) -> set[tuple[int, ...]]:
    """All vectors v with Mv = 0, by exhaustive enumeration."""
    if not rows:
        return set()
    cols = len(rows[0])
    out = set()
    for v in itertools.product((0, 1), repeat=cols):
        if all(sum(a * b for a, b in zip(row, v)) % 2 == 0 for row in rows):
            out.add(v)
    return out


def brute_multiply(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Entry-wise XOR of ANDs."""
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(cols):
            acc = 0
            for j in range(inner):
                acc ^= a[i][j] & b[j][k]
            out[i][k] = acc
    return out


def simplex_closure(simplices) -> set[tuple[int, ...]]:
    out = set()
    for s in simplices:
        s = tuple(sorted(s))
        for k in range(1, len(s) + 1):
            out.update(itertools.combinations(s, k))
    return out


def brute_relative_cohomology_dims(all_simplices, rel_simplices) -> list[int]:
    """Dimensions of H^k(K, L; F2) by rank-nullity on naive coboundaries.

    Works directly with simplex sets; independent of the package's basis
    conventions and elimination code.
    """
    all_set = {tuple(sorted(s)) for s in all_simplices}
    rel_set = {tuple(sorted(s)) for s in rel_simplices}
    top = max((len(s) - 1 for s in all_set), default=-1)
    basis = {
        k: sorted(s for s in all_set if len(s) - 1 == k and s not in rel_set)
        for k in range(top + 2)
    }

    def delta_rank(k: int) -> int:
        lower, upper = basis.get(k, []), basis.get(k + 1, [])
        rows = []
        for sigma in upper:
            row = []
            for tau in lower:
                row.append(1 if set(tau) <= set(sigma) else 0)
            rows.append(row)
        return brute_rank(rows) if rows and lower else 0

    dims = []
    for k in range(top + 1):
        n_k = len(basis.get(k, []))
        dims.append(n_k - delta_rank(k) - delta_rank(k - 1))
    return dims
