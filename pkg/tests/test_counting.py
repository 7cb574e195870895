"""F_q points, counting polynomials, Euler characteristics, zeta functions,
and nonnegative-semifield points."""

import random
from fractions import Fraction

import pytest

from blueforge import catalog
from blueforge.counting import (CountingPolynomial, counting_polynomial,
                                euler_characteristic, fit_polynomial,
                                fq_points, soule_zeta,
                                verify_point_over_ordered_semifield)
from blueforge.fields import SUPPORTED_Q, gf


class TestFields:
    def test_tables_are_fields(self):
        for q in SUPPORTED_Q:
            f = gf(q)
            assert all(f.mul(a, f.inv(a)) == 1 for a in range(1, q))
            assert all(f.add(a, f.neg(a)) == 0 for a in range(q))
            # Frobenius is additive
            p = f.p
            for a in range(q):
                for b in range(q):
                    assert f.pow(f.add(a, b), p) == f.add(f.pow(a, p),
                                                          f.pow(b, p))


class TestFqPoints:
    def test_affine_line(self):
        assert fq_points(catalog.affine_space(1), 3) == 3

    def test_sl2_counts(self, sl2):
        assert fq_points(sl2, 3) == 24
        assert fq_points(sl2, 2) == 6

    def test_torus(self):
        assert fq_points(catalog.torus(1), 5) == 4

    def test_f1n_counts_roots_of_unity(self):
        f14 = catalog.f1n(4)
        assert fq_points(f14, 5) == 2   # Z[i] splits at 5
        assert fq_points(f14, 3) == 0   # inert
        assert fq_points(f14, 2) == 1   # ramified


class TestCountingPolynomial:
    def test_p1(self):
        poly = counting_polynomial(catalog.proj_space(1), 1)
        assert poly.coeffs == (1, 1)
        assert poly.render() == "q + 1"

    def test_sl2(self, sl2):
        poly = counting_polynomial(sl2, 3)
        assert poly.coeffs == (0, -1, 0, 1)
        assert poly.render() == "q^3 - q"

    def test_gr24(self, gr24):
        poly = counting_polynomial(gr24, 4)
        assert poly.render() == "q^4 + q^3 + 2*q^2 + q + 1"

    def test_stability_under_sample_permutation(self, sl2):
        counts = [(q, fq_points(sl2, q)) for q in SUPPORTED_Q]
        rng = random.Random(3)
        for _ in range(5):
            shuffled = counts[:]
            rng.shuffle(shuffled)
            assert fit_polynomial(shuffled).coeffs == (0, -1, 0, 1)

    def test_held_out_rejects_non_polynomial(self):
        pairs = [(2, 4), (3, 9), (4, 16), (5, 25), (7, 50)]
        assert fit_polynomial(pairs) is None

    def test_too_large_degree(self, sl2):
        from blueforge.counting import TooLarge
        with pytest.raises(TooLarge):
            counting_polynomial(sl2, 7)


class TestEulerAndZeta:
    def test_chi_p2(self):
        assert euler_characteristic(catalog.proj_space(2), 2) == 3

    def test_chi_sl2(self, sl2):
        assert euler_characteristic(sl2, 3) == 0

    def test_chi_gr24(self, gr24):
        assert euler_characteristic(gr24, 4) == 6

    def test_zeta_absolute_point(self):
        z = soule_zeta(CountingPolynomial((1,)))
        assert z.render() == "s"

    def test_zeta_affine_line(self):
        z = soule_zeta(CountingPolynomial((0, 1)))
        assert z.render() == "s - 1"

    def test_zeta_p1(self):
        z = soule_zeta(CountingPolynomial((1, 1)))
        assert z.render() == "s (s - 1)"

    def test_zeta_torus_with_pole(self):
        z = soule_zeta(CountingPolynomial((-1, 1)))
        assert z.render() == "s^-1 (s - 1)"
        assert z.as_pairs() == [[0, -1], [1, 1]]


class TestOrderedSemifieldPoints:
    def test_tnn_matrix_accepted(self):
        m = catalog.sl2_minors()
        assert verify_point_over_ordered_semifield(
            m, {"a": 2, "b": 1, "c": 1, "d": 1})

    def test_identity_accepted(self):
        m = catalog.sl2_minors()
        assert verify_point_over_ordered_semifield(
            m, {"a": 1, "b": 0, "c": 0, "d": 1})

    def test_wrong_determinant_rejected(self):
        m = catalog.sl2_minors()
        assert not verify_point_over_ordered_semifield(
            m, {"a": 1, "b": 1, "c": 1, "d": 1})

    def test_negative_entry_rejected(self):
        m = catalog.sl2_minors()
        assert not verify_point_over_ordered_semifield(
            m, {"a": -2, "b": 1, "c": 1, "d": 1})

    def test_sampled_tnn_matrices(self):
        # (a b; c d) >= 0 entrywise with ad - bc = 1 is exactly TNN for 2x2
        m = catalog.sl2_minors()
        rng = random.Random(11)
        for _ in range(1000):
            b = Fraction(rng.randrange(0, 20), rng.randrange(1, 10))
            c = Fraction(rng.randrange(0, 20), rng.randrange(1, 10))
            d = Fraction(rng.randrange(1, 20), rng.randrange(1, 10))
            a = (1 + b * c) / d
            assert verify_point_over_ordered_semifield(
                m, {"a": a, "b": b, "c": c, "d": d})

    def test_random_assignments_accepted_iff_tnn(self):
        m = catalog.sl2_minors()
        rng = random.Random(12)
        for _ in range(300):
            vals = {g: Fraction(rng.randrange(0, 6)) for g in "abcd"}
            accepted = verify_point_over_ordered_semifield(m, vals)
            tnn = (all(v >= 0 for v in vals.values())
                   and vals["a"] * vals["d"] - vals["b"] * vals["c"] == 1)
            assert accepted == tnn
