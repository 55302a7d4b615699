import random

import pytest
from fractions import Fraction

from sigmaforge.ring import (
    ONE, Monomial, Polynomial, basis_words, commutator, parse_monomial,
    parse_poly, render_monomial, render_poly, variable_commutator,
)


def M(*letters):
    return Monomial.from_letters(letters)


class TestMonomial:
    def test_run_length_normalization(self):
        m = M(1, 3, 3, 3, 3, 1, 1, 2)
        assert m.complexion == (1, 3, 1, 2)
        assert m.exponents == (1, 4, 2, 1)
        assert m.degree == 8
        assert m.letters() == (1, 3, 3, 3, 3, 1, 1, 2)

    def test_adjacent_entries_must_differ(self):
        with pytest.raises(ValueError):
            Monomial((1, 1), (2, 3))
        with pytest.raises(ValueError):
            Monomial((1, 2), (0, 1))

    def test_unit(self):
        assert ONE.degree == 0
        assert ONE.is_unit()
        assert ONE * M(1, 2) == M(1, 2)
        assert M(1, 2) * ONE == M(1, 2)

    def test_mul_merges_boundary(self):
        assert M(1, 2) * M(2, 3) == M(1, 2, 2, 3)
        assert M(1, 2) * M(3) == M(1, 2, 3)
        assert (M(1, 2) * M(2, 2)).exponents == (1, 3)

    def test_pow(self):
        assert M(1, 2) ** 2 == M(1, 2, 1, 2)
        assert M(1) ** 3 == Monomial((1,), (3,))
        assert M(1, 2) ** 0 == ONE

    def test_hash_and_eq(self):
        assert hash(M(1, 2, 2)) == hash(Monomial((1, 2), (1, 2)))
        assert M(1, 2) != M(2, 1)


class TestOrder:
    def test_degree_dominates(self):
        assert M(2, 1) > M(1)
        assert M(1) < Monomial((2,), (2,))

    def test_same_exponents_smaller_index_wins(self):
        # x1*x2^2*x3 > x1*x2^2*x4
        assert Monomial((1, 2, 3), (1, 2, 1)) > Monomial((1, 2, 4), (1, 2, 1))
        assert M(1, 2, 1) > M(1, 2, 3) > M(1, 3, 1) > M(1, 3, 2) > M(2, 1, 2)

    def test_different_exponents_larger_first_wins(self):
        # x1*x4^2 > x1*x2*x3
        assert Monomial((1, 4), (1, 2)) > M(1, 2, 3)
        assert Monomial((1,), (3,)) > Monomial((1, 2), (2, 1))
        assert Monomial((1, 2), (2, 1)) > Monomial((1, 2), (1, 2))
        assert Monomial((1, 2), (1, 2)) > M(1, 2, 1)

    def test_strict_total_order_on_degree_words(self):
        for n, d in [(3, 3), (4, 2), (2, 5)]:
            words = basis_words(n, d)
            assert len(words) == n ** d
            for a, b in zip(words, words[1:]):
                assert a > b and b < a
        rng = random.Random(7)
        words = basis_words(3, 4)
        for _ in range(300):
            a, b, c = rng.choices(words, k=3)
            assert (a < b) + (a == b) + (a > b) == 1
            if a <= b and b <= c:
                assert a <= c


class TestPolynomial:
    def test_zero_iff_empty(self):
        assert Polynomial.zero(3).is_zero()
        p = Polynomial.word([1, 2], 3) - Polynomial.word([1, 2], 3)
        assert p.is_zero() and p.terms == {}

    def test_no_zero_coefficients_stored(self):
        p = Polynomial({M(1): Fraction(0), M(2): Fraction(1)}, 3)
        assert list(p.terms) == [M(2)]

    def test_arity_enforced(self):
        with pytest.raises(ValueError):
            Polynomial.word([1, 4], 3)
        with pytest.raises(ValueError):
            Polynomial.variable(1, 3) + Polynomial.variable(1, 4)

    def test_ring_axioms_spot(self):
        rng = random.Random(11)
        words = basis_words(3, 2)

        def rand_poly():
            return Polynomial(
                {w: Fraction(rng.randint(-3, 3)) for w in
                 rng.sample(words, 3)}, 3)

        for _ in range(25):
            p, q, r = rand_poly(), rand_poly(), rand_poly()
            assert (p + q) + r == p + (q + r)
            assert p + q == q + p
            assert (p * q) * r == p * (q * r)
            assert p * (q + r) == p * q + p * r
            assert (q + r) * p == q * p + r * p
            assert p * Polynomial.one(3) == p
            assert p - p == Polynomial.zero(3)

    def test_noncommutativity(self):
        x1, x2 = Polynomial.variable(1, 3), Polynomial.variable(2, 3)
        assert x1 * x2 != x2 * x1
        assert commutator(x1, x2) == x1 * x2 - x2 * x1
        assert variable_commutator(1, 2, 3) == x1 * x2 - x2 * x1

    def test_scalar_ops(self):
        x1 = Polynomial.variable(1, 3)
        assert 2 * x1 == x1 * 2 == x1 + x1
        assert x1 / 2 == Fraction(1, 2) * x1
        assert (x1 * Fraction(0)).is_zero()

    def test_homogeneous_components(self):
        x1 = Polynomial.variable(1, 3)
        p = x1 ** 3 + 2 * x1 - 5
        comps = p.homogeneous_components()
        assert sorted(comps) == [0, 1, 3]
        assert comps[1] == 2 * x1
        assert sum(comps.values(), Polynomial.zero(3)) == p
        assert not p.is_homogeneous()
        assert (x1 ** 3).is_homogeneous(3)

    def test_degree(self):
        assert Polynomial.zero(3).degree() is None
        assert Polynomial.one(3).degree() == 0
        assert (Polynomial.word([1, 2, 1], 3) + 1).degree() == 3


class TestTextFormat:
    def test_render_examples(self):
        assert render_poly(variable_commutator(1, 2, 3)) == "x1*x2 - x2*x1"
        p = Fraction(2, 3) * Polynomial.from_monomial(Monomial((1,), (2,)), 3)
        assert render_poly(p) == "2/3*x1^2"
        assert render_poly(Polynomial.zero(3)) == "0"
        assert render_monomial(M(1, 3, 3, 1, 2)) == "x1*x3^2*x1*x2"

    def test_render_decreasing_order(self):
        p = parse_poly("x2 + x1^2 + 3 + x1*x2", 3)
        assert render_poly(p) == "x1^2 + x1*x2 + x2 + 3"

    def test_parse_examples(self):
        p = parse_poly("x1*x2 - x2*x1", 3)
        assert p == variable_commutator(1, 2, 3)
        assert parse_poly("2/3*x1^2", 3).coefficient(
            Monomial((1,), (2,))) == Fraction(2, 3)
        assert parse_poly("-x1 + 1/2", 2) == \
            Polynomial.constant(Fraction(1, 2), 2) - Polynomial.variable(1, 2)
        assert parse_poly("0", 3).is_zero()
        assert parse_poly("x1* x2 *x1", 3) == Polynomial.word([1, 2, 1], 3)
        assert parse_poly("x1^2*x2", 3) == Polynomial.word([1, 1, 2], 3)

    def test_parse_errors(self):
        for bad in ["", "x0", "x1^0", "x4", "x1 +", "* x1", "1/0", "x1 x2",
                    "x1^", "2*", "y1"]:
            with pytest.raises(ValueError):
                parse_poly(bad, 3)

    def test_round_trip_random(self):
        rng = random.Random(23)
        words = [w for d in range(4) for w in basis_words(3, d)]
        for _ in range(60):
            terms = {w: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                     for w in rng.sample(words, rng.randint(0, 6))}
            p = Polynomial(terms, 3)
            assert parse_poly(render_poly(p), 3) == p

    def test_parse_monomial(self):
        assert parse_monomial("x1*x3^4*x1^2*x2", 4) == \
            M(1, 3, 3, 3, 3, 1, 1, 2)
        with pytest.raises(ValueError):
            parse_monomial("x1 + x2", 3)
        with pytest.raises(ValueError):
            parse_monomial("2*x1", 3)
