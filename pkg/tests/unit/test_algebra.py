"""Tests for GF(2) matrices, binary matroids and sparse polynomials."""

import random
from fractions import Fraction

import pytest
import sympy

from src.core.algebra import (
    BinaryMatroid,
    BitMatrix,
    SparsePoly,
    rank_of_columns,
    rank_of_rows,
    row_reduce,
    span_rank,
)
from src.core.algebra.matroid import cycle_matroid
from src.core.exceptions import BudgetExceeded, InputError


def to_sympy(p: SparsePoly) -> sympy.Expr:
    symbols = [sympy.Symbol(v) for v in p.variables]
    expr = sympy.Integer(0)
    for coefficient, exps in p.sorted_terms():
        term = sympy.Integer(coefficient)
        for s, e in zip(symbols, exps):
            term *= s ** e
        expr += term
    return expr


def random_poly(rng: random.Random, variables=("x", "y")) -> SparsePoly:
    terms = {}
    for _ in range(rng.randint(0, 4)):
        terms[tuple(rng.randint(-2, 3) for _ in variables)] = rng.randint(-5, 5)
    return SparsePoly(variables, terms)


class TestBitMatrix:
    """Tests for packed GF(2) matrices."""

    def test_rows_and_strings(self):
        """Test building from 0/1 strings and reading them back."""
        m = BitMatrix.from_rows(["101", "011"])

        assert m.rows == 2
        assert m.cols == 3
        assert m.to_strings() == ["101", "011"]
        assert m.get(0, 2) == 1
        assert m.column_masks == (0b01, 0b10, 0b11)

    def test_rank(self):
        """Test that dependent rows do not add rank."""
        m = BitMatrix.from_rows(["110", "011", "101"])

        assert m.rank() == 2

    def test_wide_rows_cross_word_boundary(self):
        """Test a matrix wider than one 64-bit word."""
        masks = [(1 << 70) | 1, (1 << 70) | (1 << 3)]
        m = BitMatrix.from_row_masks(masks, 80)

        assert m.row_masks == tuple(masks)
        assert m.rank() == 2
        assert m.get(1, 70) == 1

    def test_row_reduce_pivots(self):
        """Test reduced echelon form and pivot columns."""
        reduced, pivots = row_reduce(BitMatrix.from_rows(["0110", "0011", "0101"]))

        assert pivots == [1, 2]
        assert reduced.to_strings()[2] == "0000"

    def test_inconsistent_rows_rejected(self):
        """Test that ragged rows raise an input error."""
        with pytest.raises(InputError):
            BitMatrix.from_rows(["10", "101"])

    def test_mask_beyond_columns_rejected(self):
        """Test that a row mask wider than the matrix is refused."""
        with pytest.raises(InputError):
            BitMatrix.from_row_masks([0b100], 2)

    def test_span_rank(self):
        """Test the integer bit-vector rank helper."""
        assert span_rank([0b11, 0b01, 0b10]) == 2
        assert span_rank([]) == 0

    def test_rank_of_columns(self):
        """Test the identity, the empty subset and out-of-range indices."""
        eye = BitMatrix.identity(3)

        assert rank_of_columns(eye, {0, 1, 2}) == 3
        assert rank_of_columns(BitMatrix.from_rows(["110", "011"]), set()) == 0
        with pytest.raises(InputError):
            rank_of_columns(eye, [3])
        with pytest.raises(InputError):
            rank_of_rows(eye, [-1])

    def test_column_rank_submodular(self):
        """Test monotonicity and submodularity on sampled subsets."""
        rng = random.Random(7)
        for _ in range(20):
            m = BitMatrix.from_row_masks([rng.getrandbits(12) for _ in range(5)], 12)
            s = {j for j in range(12) if rng.random() < 0.4}
            t = {j for j in range(12) if rng.random() < 0.4}
            assert rank_of_columns(m, s) <= rank_of_columns(m, s | t)
            assert rank_of_columns(m, s | t) + rank_of_columns(m, s & t) <= (
                rank_of_columns(m, s) + rank_of_columns(m, t)
            )

    def test_rank_symmetry(self):
        """Test column selection against rows of the transpose on random 8x24 matrices."""
        rng = random.Random(11)
        for _ in range(20):
            m = BitMatrix.from_row_masks([rng.getrandbits(24) for _ in range(8)], 24)
            subset = [j for j in range(24) if rng.random() < 0.5]
            assert rank_of_columns(m, subset) == rank_of_rows(m.transpose(), subset)


class TestBinaryMatroid:
    """Tests for binary matroids."""

    def triangle(self) -> BinaryMatroid:
        return cycle_matroid(["p", "q", "r"], [("a", "p", "q"), ("b", "q", "r"), ("c", "r", "p")])

    def test_cycle_matroid_ranks(self):
        """Test ranks of a triangle's cycle matroid."""
        m = self.triangle()

        assert m.rank() == 2
        assert m.rank(["a", "b"]) == 2
        assert m.rank(["a"]) == 1
        assert m.is_basis(["a", "c"])
        assert not m.is_independent(["a", "b", "c"])

    def test_loops(self):
        """Test that loop edges are matroid loops."""
        m = cycle_matroid(["p"], [("l", "p", "p")])

        assert m.loops() == ["l"]
        assert m.rank() == 0

    def test_dual_rank_formula(self):
        """Test r*(A) = |A| - r(E) + r(E - A) on every subset."""
        m = self.triangle()
        d = m.dual()

        for mask in m.subsets():
            labels = m.labels_of(mask)
            rest = [g for g in m.ground if g not in labels]
            assert d.rank(labels) == len(labels) - m.rank() + m.rank(rest)

    def test_contract_and_delete(self):
        """Test minors of the triangle."""
        m = self.triangle()

        contracted = m.contract("a")
        deleted = m.delete(["a"])

        assert contracted.ground == ("b", "c")
        assert contracted.rank() == 1
        assert contracted.rank(["b", "c"]) == 1
        assert deleted.rank(["b", "c"]) == 2

    def test_contract_loop_deletes_it(self):
        """Test that contracting a loop equals deleting it."""
        m = cycle_matroid(["p", "q"], [("l", "p", "p"), ("e", "p", "q")])

        assert m.contract("l").same_rank_function(m.delete(["l"]))

    def test_direct_sum_ranks_add(self):
        """Test rank additivity of a direct sum."""
        a = self.triangle()
        b = cycle_matroid(["s", "t"], [("x", "s", "t"), ("y", "s", "t")])
        s = a.direct_sum(b)

        assert s.rank(["a", "b", "x", "y"]) == a.rank(["a", "b"]) + b.rank(["x", "y"])

    def test_same_rank_function_with_bijection(self):
        """Test comparison under a relabelling."""
        m = self.triangle()
        other = m.relabel({"a": "A", "b": "B", "c": "C"})

        assert m.same_rank_function(other, bijection={"a": "A", "b": "B", "c": "C"})

    def test_same_rank_function_budget(self):
        """Test that oversized comparisons raise BudgetExceeded."""
        m = self.triangle()

        with pytest.raises(BudgetExceeded):
            m.same_rank_function(m, limit=2)

    def test_duplicate_labels_rejected(self):
        """Test that ground labels must be distinct."""
        with pytest.raises(InputError):
            BinaryMatroid.from_rows(["a", "a"], ["11"])


class TestSparsePoly:
    """Tests for sparse Laurent polynomials."""

    def test_arithmetic_matches_sympy(self):
        """Test ring operations against sympy on seeded random inputs."""
        rng = random.Random(7)
        for _ in range(40):
            p, q = random_poly(rng), random_poly(rng)
            for ours, theirs in (
                (p + q, to_sympy(p) + to_sympy(q)),
                (p - q, to_sympy(p) - to_sympy(q)),
                (p * q, to_sympy(p) * to_sympy(q)),
            ):
                assert sympy.expand(to_sympy(ours) - theirs) == 0

    def test_power_and_inverse(self):
        """Test integer powers including inverting a monomial."""
        a = SparsePoly.variable("A")

        assert (a ** 3) * (a ** -3) == 1
        assert (-(a ** 2)) ** -1 == -(a ** -2)
        with pytest.raises(InputError):
            (a + 1) ** -1

    def test_pretty(self):
        """Test the human-readable form."""
        z = SparsePoly.variable("ζ")

        assert (3 * z + 3).pretty() == "3ζ+3"
        assert (z ** 2 - 1).pretty() == "ζ^2-1"
        assert SparsePoly.constant(0).pretty() == "0"

    def test_evaluate_exact(self):
        """Test exact evaluation with negative exponents."""
        a = SparsePoly.variable("A")
        p = a ** 2 + a ** -1

        assert p.evaluate(A=2) == Fraction(9, 2)
        assert (a + 1).evaluate(A=3) == 4

    def test_substitute_polynomial(self):
        """Test replacing a variable by a polynomial."""
        x = SparsePoly.variable("x")
        y = SparsePoly.variable("y")
        p = x * y + x

        assert p.substitute(x=y + 1) == y ** 2 + 2 * y + 1

    def test_equality_ignores_unused_variables(self):
        """Test that constants compare equal whatever their variable list."""
        assert SparsePoly.constant(2, ("x", "y")) == SparsePoly.constant(2)
        assert SparsePoly.constant(2, ("x",)) == 2

    def test_dict_round_trip(self):
        """Test the JSON shape."""
        p = SparsePoly.monomial(3, x=2, y=-1) + 1

        data = p.to_dict()

        assert data["vars"] == ["x", "y"]
        assert SparsePoly.from_dict(data) == p

    def test_too_many_variables(self):
        """Test the variable limit."""
        with pytest.raises(InputError):
            SparsePoly(("a", "b", "c", "d"), {})

    def test_malformed_dict(self):
        """Test that a malformed JSON shape raises an input error."""
        with pytest.raises(InputError):
            SparsePoly.from_dict({"vars": ["x"]})
