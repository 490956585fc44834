"""GF(2) linear algebra: pinned examples plus brute-force oracle sweeps."""

import random

import pytest

from cornersyzygy import gf2
from cornersyzygy.errors import CompositionNotZero, ShapeMismatch
from cornersyzygy.gf2 import Gf2Matrix

from oracles import brute_kernel, brute_multiply, brute_rank, span_of_rows

# The 3x3 incidence map (a,b,c) -> (a+b, a+c, b+c); rank 2 over F2.
TRIANGLE_MAP = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]


def random_matrix(rng, rows, cols):
    return [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]


class TestRank:
    def test_identity(self):
        assert gf2.rank(Gf2Matrix.identity(3)) == 3

    def test_triangle_map_has_rank_two(self):
        assert gf2.rank(Gf2Matrix.from_rows(TRIANGLE_MAP)) == 2

    def test_empty_shapes(self):
        assert gf2.rank(Gf2Matrix.zeros(0, 5)) == 0
        assert gf2.rank(Gf2Matrix.zeros(5, 0)) == 0

    def test_against_row_span_oracle_5x7(self):
        rng = random.Random(20240501)
        for _ in range(50):
            rows = random_matrix(rng, 5, 7)
            assert gf2.rank(Gf2Matrix.from_rows(rows)) == brute_rank(rows)

    def test_rank_equals_rank_of_transpose(self):
        rng = random.Random(7)
        for _ in range(50):
            m = Gf2Matrix.from_rows(random_matrix(rng, 4, 6))
            assert gf2.rank(m) == gf2.rank(m.transpose())

    def test_rank_of_product_bounded(self):
        rng = random.Random(11)
        for _ in range(50):
            a = Gf2Matrix.from_rows(random_matrix(rng, 4, 5))
            b = Gf2Matrix.from_rows(random_matrix(rng, 5, 3))
            r = gf2.rank(gf2.multiply(a, b))
            assert r <= min(gf2.rank(a), gf2.rank(b))


class TestRowReduce:
    def test_zero_matrix(self):
        reduced, pivots = gf2.row_reduce(Gf2Matrix.zeros(2, 2))
        assert reduced.to_rows() == [[0, 0], [0, 0]]
        assert pivots == []

    def test_duplicate_rows(self):
        reduced, pivots = gf2.row_reduce(Gf2Matrix.from_rows([[1, 1], [1, 1]]))
        assert reduced.to_rows() == [[1, 1], [0, 0]]
        assert pivots == [0]

    def test_row_space_preserved(self):
        rng = random.Random(99)
        for _ in range(30):
            rows = random_matrix(rng, 6, 6)
            reduced, pivots = gf2.row_reduce(Gf2Matrix.from_rows(rows))
            original = span_of_rows([tuple(r) for r in rows])
            after = span_of_rows([tuple(r) for r in reduced.to_rows()])
            assert original == after
            assert len(pivots) == brute_rank(rows)

    def test_deterministic(self):
        rng = random.Random(5)
        rows = random_matrix(rng, 5, 5)
        a = gf2.row_reduce(Gf2Matrix.from_rows(rows))
        b = gf2.row_reduce(Gf2Matrix.from_rows(rows))
        assert a[0] == b[0] and a[1] == b[1]


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert gf2.kernel_basis(Gf2Matrix.identity(3)).rows == 0

    def test_sum_functional(self):
        kb = gf2.kernel_basis(Gf2Matrix.from_rows([[1, 1, 1]]))
        assert kb.to_rows() == [[1, 1, 0], [1, 0, 1]]

    def test_triangle_map_kernel_is_diagonal(self):
        kb = gf2.kernel_basis(Gf2Matrix.from_rows(TRIANGLE_MAP))
        assert kb.to_rows() == [[1, 1, 1]]

    def test_against_enumeration_oracle(self):
        rng = random.Random(321)
        for _ in range(50):
            rows = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            kb = gf2.kernel_basis(Gf2Matrix.from_rows(rows))
            spanned = span_of_rows([tuple(r) for r in kb.to_rows()]) if kb.rows else {
                tuple([0] * len(rows[0]))
            }
            assert spanned == brute_kernel(rows)

    def test_rank_nullity(self):
        rng = random.Random(13)
        for _ in range(50):
            rows = random_matrix(rng, rng.randint(0, 6), rng.randint(1, 6))
            m = Gf2Matrix.from_rows(rows, cols=len(rows[0]) if rows else 4)
            assert gf2.rank(m) + gf2.kernel_basis(m).rows == m.cols


class TestMultiply:
    def test_identity_is_neutral(self):
        rng = random.Random(1)
        a = Gf2Matrix.from_rows(random_matrix(rng, 3, 4))
        assert gf2.multiply(a, Gf2Matrix.identity(4)) == a

    def test_one_plus_one_is_zero(self):
        a = Gf2Matrix.from_rows([[1, 1]])
        b = Gf2Matrix.from_rows([[1], [1]])
        assert gf2.multiply(a, b).to_rows() == [[0]]

    def test_against_xor_of_ands_oracle(self):
        rng = random.Random(17)
        for _ in range(50):
            a = random_matrix(rng, 3, 5)
            b = random_matrix(rng, 5, 4)
            got = gf2.multiply(Gf2Matrix.from_rows(a), Gf2Matrix.from_rows(b))
            assert got.to_rows() == brute_multiply(a, b)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            gf2.multiply(Gf2Matrix.zeros(2, 3), Gf2Matrix.zeros(2, 3))


class TestQuotientDim:
    def test_zero_maps_give_full_dimension(self):
        incoming = Gf2Matrix.zeros(3, 0)
        outgoing = Gf2Matrix.zeros(0, 3)
        assert gf2.quotient_dim(incoming, outgoing) == 3

    def test_triangle_map_leaves_one_dimension(self):
        incoming = Gf2Matrix.from_rows(TRIANGLE_MAP)
        outgoing = Gf2Matrix.zeros(0, 3)
        assert gf2.quotient_dim(incoming, outgoing) == 1

    def test_exact_pair_vanishes(self):
        # im A = ker B by construction: B built from a cokernel basis of A.
        rng = random.Random(23)
        for _ in range(30):
            a = Gf2Matrix.from_rows(random_matrix(rng, 5, 3))
            # rows of ker(A^T) span the annihilator of im A
            b = gf2.kernel_basis(a.transpose())
            assert gf2.multiply(b, a).is_zero()
            assert gf2.quotient_dim(a, b) == 0

    def test_composition_checked(self):
        incoming = Gf2Matrix.identity(2)
        outgoing = Gf2Matrix.identity(2)
        with pytest.raises(CompositionNotZero):
            gf2.quotient_dim(incoming, outgoing)

    def test_shape_checked(self):
        with pytest.raises(ShapeMismatch):
            gf2.quotient_dim(Gf2Matrix.zeros(3, 1), Gf2Matrix.zeros(1, 4))


class TestExpressRows:
    def test_roundtrip(self):
        rng = random.Random(31)
        for _ in range(30):
            basis = Gf2Matrix.from_rows(random_matrix(rng, 3, 6))
            extra = Gf2Matrix.from_rows(random_matrix(rng, 2, 6))
            coeff = Gf2Matrix.from_rows(random_matrix(rng, 4, 3))
            noise = Gf2Matrix.from_rows(random_matrix(rng, 4, 2))
            targets_bits = [
                [a ^ b for a, b in zip(row_c, row_n)]
                for row_c, row_n in zip(
                    brute_multiply(coeff.to_rows(), basis.to_rows()),
                    brute_multiply(noise.to_rows(), extra.to_rows()),
                )
            ]
            targets = Gf2Matrix.from_rows(targets_bits)
            got = gf2.express_rows(basis, extra, targets)
            # reconstructed = got*basis + (something in extra's span)
            recon = brute_multiply(got.to_rows(), basis.to_rows())
            for t_row, r_row in zip(targets_bits, recon):
                diff = tuple(a ^ b for a, b in zip(t_row, r_row))
                assert diff in span_of_rows([tuple(r) for r in extra.to_rows()])

    def test_unsolvable_raises(self):
        basis = Gf2Matrix.from_rows([[1, 0, 0]])
        target = Gf2Matrix.from_rows([[0, 1, 0]])
        with pytest.raises(ValueError):
            gf2.express_rows(basis, None, target)
