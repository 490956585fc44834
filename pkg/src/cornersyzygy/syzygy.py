"""Syzygy order, formality, and Hilbert series from the face reports.

A face P with a nonzero cohomology class in column p >= 1 of its column
complex obstructs the j-th syzygy condition for every j > rank(P) - p.
The global order is therefore min over obstructed faces of
rank(P) - obstruction(P), clamped at 0, and the module is free when no
face is obstructed or the minimum reaches the torus rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bcomplex import FaceReport, face_reports
from .corners import CornerModel, Face, check_nice, face_lattice, restrict

FREE = "free"


@dataclass(frozen=True)
class SyzygyReport:
    order: object  # int in 0..n-1, or the marker FREE
    n: int
    per_face: tuple
    witnesses: tuple  # face ids attaining the order; empty when free

    @property
    def free(self) -> bool:
        return self.order == FREE

    def is_jth_syzygy(self, j: int) -> bool:
        """Whether the j-th syzygy condition holds, 1 <= j <= n."""
        if self.order == FREE:
            return True
        return j <= self.order


def syzygy_order(reports: Sequence[FaceReport], n: int) -> SyzygyReport:
    """Evaluate the vanishing criterion over all faces."""
    obstructed = [r for r in reports if r.obstruction > 0]
    if not obstructed:
        return SyzygyReport(FREE, n, tuple(reports), ())
    value = min(r.rank - r.obstruction for r in obstructed)
    value = max(value, 0)
    if value >= n:
        return SyzygyReport(FREE, n, tuple(reports), ())
    witnesses = tuple(
        r.face for r in obstructed if r.rank - r.obstruction == value
    )
    return SyzygyReport(value, n, tuple(reports), witnesses)


def formality(report: SyzygyReport) -> bool:
    """Free equivariant cohomology is exactly the formal case here."""
    return report.order == FREE


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1 - t)^denominator_exponent, with a truncated expansion."""

    numerator: tuple[int, ...]  # coefficients, degree ascending
    denominator_exponent: int
    coefficients: tuple[int, ...]  # series coefficients 0..D

    def as_string(self) -> str:
        num = _poly_string(self.numerator)
        if self.denominator_exponent == 0:
            return num
        return f"({num})/(1-t)^{self.denominator_exponent}"


def _poly_string(coeffs: Sequence[int]) -> str:
    parts = []
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        if d == 0:
            parts.append(str(c))
        else:
            t = "t" if d == 1 else f"t^{d}"
            parts.append(t if c == 1 else f"{c}{t}")
    return " + ".join(parts) if parts else "0"


def _binom(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    out = 1
    for i in range(b):
        out = out * (a - i) // (i + 1)
    return out


def ab_hilbert_series(
    reports: Sequence[FaceReport],
    lattice: Sequence,
    i: int,
    truncation: int,
) -> HilbertSeries:
    """Hilbert series of the degree-i filtration cohomology.

    A class at position (i, q) of face P contributes
    t^(i+q) * t^c / (1-t)^c with c the codimension of P: the polynomial
    factor accounts for the free polynomial part carried by the face.
    """
    codim_of = {
        (f.id if hasattr(f, "id") else f.name): f.codim for f in lattice
    }
    terms: list[tuple[int, int, int]] = []  # (count, shift degree, codim)
    for report in reports:
        codim = codim_of[report.face]
        for (p, q), value in report.h.items():
            if p == i and value:
                terms.append((value, i + q, codim))
    if not terms:
        return HilbertSeries((0,), 0, tuple([0] * (truncation + 1)))
    common = max(c for _, _, c in terms)
    # numerator over (1-t)^common
    numerator: list[int] = [0]
    for count, shift, codim in terms:
        poly = _poly_shift(_one_minus_t_power(common - codim), shift)
        poly = [count * c for c in poly]
        numerator = _poly_add(numerator, poly)
    numerator, exponent = _reduce(numerator, common)
    coeffs = _expand(numerator, exponent, truncation)
    return HilbertSeries(tuple(numerator), exponent, tuple(coeffs))


def _one_minus_t_power(e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = _poly_add(out + [0], [0] + [-c for c in out])
    return out


def _poly_shift(poly: Sequence[int], shift: int) -> list[int]:
    return [0] * shift + list(poly)


def _poly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    width = max(len(a), len(b))
    out = [0] * width
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _reduce(numerator: list[int], exponent: int) -> tuple[list[int], int]:
    """Cancel (1-t) factors shared by numerator and denominator."""
    while numerator and numerator[-1] == 0:
        numerator.pop()
    if not numerator:
        return [0], 0
    while exponent > 0 and sum(numerator) == 0:
        # synthetic division by (1 - t): q_k = sum of leading coefficients
        quotient = [0] * (len(numerator) - 1)
        acc = 0
        for k in range(len(numerator) - 1):
            acc += numerator[k]
            quotient[k] = acc
        numerator = quotient
        exponent -= 1
        while numerator and numerator[-1] == 0:
            numerator.pop()
        if not numerator:
            return [0], 0
    return numerator, exponent


def _expand(numerator: Sequence[int], exponent: int, truncation: int) -> list[int]:
    out = []
    for d in range(truncation + 1):
        total = 0
        for k, c in enumerate(numerator):
            if k > d:
                break
            total += c * _binom(d - k + exponent - 1, exponent - 1)
        out.append(total)
    return out


@dataclass(frozen=True)
class RestrictionAudit:
    face: object
    face_rank: int
    restricted_order: object
    global_order: object
    violation: bool


def restriction_monotonicity_check(model: CornerModel) -> list[RestrictionAudit]:
    """Re-run the pipeline on every positive-rank face and compare orders.

    The order of a restricted model can only be at least the global
    order; a violation indicates a bug, not a mathematical finding.
    """
    faces = face_lattice(model)
    check_nice(model, faces)
    _, reports = face_reports(model, faces)
    global_report = syzygy_order(reports, model.n)
    global_value = model.n if global_report.order == FREE else global_report.order

    audits = []
    for face in faces:
        if face.rank < 1:
            continue
        sub_model = restrict(model, faces, face)
        sub_faces = face_lattice(sub_model)
        check_nice(sub_model, sub_faces)
        _, sub_reports = face_reports(sub_model, sub_faces)
        sub_order = syzygy_order(sub_reports, sub_model.n)
        sub_value = sub_model.n if sub_order.order == FREE else sub_order.order
        audits.append(
            RestrictionAudit(
                face=face.id,
                face_rank=face.rank,
                restricted_order=sub_order.order,
                global_order=global_report.order,
                violation=sub_value < min(global_value, sub_model.n),
            )
        )
    return audits
