"""Quiver representations, naive F1-points, subrepresentation counts, and the
Euler-characteristic comparison theorems."""

import random

import numpy as np
import pytest

from blueforge import quivergrass as qg
from blueforge.fields import gf


def rep_1to2(matrix):
    q = qg.Quiver(2, ((0, 1),))
    return qg.IntegralRep(q, (2, 2), [np.asarray(matrix, dtype=int)])


class TestF1Reps:
    def test_identity_singleton(self):
        q = qg.Quiver(2, ((0, 1),))
        rep = qg.F1Rep(q, (1, 1), [{0: 0}])
        integral = qg.f1_rep_to_integral(rep)
        assert integral.matrices[0].tolist() == [[1]]

    def test_fiber_of_size_two_rejected(self):
        q = qg.Quiver(2, ((0, 1),))
        with pytest.raises(ValueError):
            qg.F1Rep(q, (2, 1), [{0: 0, 1: 0}])

    def test_rejection_is_exactly_the_fiber_condition(self):
        # fibres over the base point may be arbitrarily large
        q = qg.Quiver(2, ((0, 1),))
        rep = qg.F1Rep(q, (3, 1), [{0: None, 1: None, 2: 0}])
        mat = qg.f1_rep_to_integral(rep).matrices[0]
        assert mat.tolist() == [[0, 0, 1]]

    def test_map_to_base_point_gives_zero_column(self):
        q = qg.Quiver(2, ((0, 1),))
        rep = qg.F1Rep(q, (1, 1), [{0: None}])
        assert qg.f1_rep_to_integral(rep).matrices[0].tolist() == [[0]]


class TestNaivePoints:
    def test_scaled_identity_has_none(self):
        assert qg.naive_f1_points(rep_1to2([[2, 0], [0, 2]]), (1, 1)) == []

    def test_identity_has_two(self):
        pts = qg.naive_f1_points(rep_1to2([[1, 0], [0, 1]]), (1, 1))
        assert len(pts) == 2

    def test_equioriented_a3(self):
        q = qg.Quiver(3, ((0, 1), (1, 2)))
        rep = qg.IntegralRep(q, (1, 2, 1), [np.array([[1], [0]]),
                                            np.array([[1, 0]])])
        assert len(qg.naive_f1_points(rep, (1, 1, 1))) == 1

    def test_naive_points_are_subreps_over_f2(self):
        rng = random.Random(5)
        field = gf(2)
        for _ in range(20):
            nv = rng.randrange(1, 4)
            arrows = tuple((i, i + 1) for i in range(nv - 1))
            q = qg.Quiver(nv, arrows)
            d = rng.randrange(1, 4)
            mats = []
            for _ in arrows:
                m = np.zeros((d, d), dtype=int)
                cols = list(range(d))
                rng.shuffle(cols)
                for r, c in enumerate(cols):
                    m[r, c] = rng.choice([0, 1])
                mats.append(m)
            rep = qg.IntegralRep(q, (d,) * nv, mats)
            e = tuple(rng.randrange(0, d + 1) for _ in range(nv))
            for family in qg.naive_f1_points(rep, e):
                for (s, t), m in zip(arrows, mats):
                    for b in family[s]:
                        img = [int(x) % 2 for x in m[:, b]]
                        basis_rows = [[1 if k == c else 0 for k in range(d)]
                                      for c in sorted(family[t])]
                        assert not any(qg._reduce_vec(field, basis_rows, img))


class TestSubrepCounts:
    def test_gaussian_binomial(self):
        q = qg.Quiver(1, ())
        rep = qg.IntegralRep(q, (4,), [])
        assert qg.subrep_count_fq(rep, (2,), 2) == 35

    def test_identity_diagonal_of_p1(self):
        assert qg.subrep_count_fq(rep_1to2([[1, 0], [0, 1]]), (1, 1), 3) == 4

    def test_whole_rep(self):
        assert qg.subrep_count_fq(rep_1to2([[1, 0], [0, 1]]), (2, 2), 3) == 1

    def test_arrow_free_factorizes(self):
        q = qg.Quiver(2, ())
        rep = qg.IntegralRep(q, (3, 2), [])
        for qq in (2, 3):
            f = qg.subrep_count_fq(rep, (1, 1), qq)
            single3 = qg.subrep_count_fq(
                qg.IntegralRep(qg.Quiver(1, ()), (3,), []), (1,), qq)
            single2 = qg.subrep_count_fq(
                qg.IntegralRep(qg.Quiver(1, ()), (2,), []), (1,), qq)
            assert f == single3 * single2


class TestChi:
    def test_counterexample_chi_two(self):
        rep = rep_1to2([[2, 0], [0, 2]])
        assert qg.naive_f1_points(rep, (1, 1)) == []
        assert qg.chi_via_interpolation(rep, (1, 1)) == 2

    def test_gaussian_chi(self):
        rep = qg.IntegralRep(qg.Quiver(1, ()), (4,), [])
        assert qg.chi_via_interpolation(rep, (2,)) == 6

    def test_zero_dimension_vector(self):
        rep = rep_1to2([[1, 0], [0, 1]])
        assert qg.chi_via_interpolation(rep, (0, 0)) == 1


class TestWeylCount:
    def test_diag_23(self):
        rep = rep_1to2([[2, 0], [0, 3]])
        assert qg.weyl_count_diagonal_tree(rep, (1, 1)) == 2
        assert qg.naive_f1_points(rep, (1, 1)) == []

    def test_identity_matches_naive(self):
        rep = rep_1to2([[1, 0], [0, 1]])
        assert qg.weyl_count_diagonal_tree(rep, (1, 1)) == \
            len(qg.naive_f1_points(rep, (1, 1)))

    def test_hypothesis_violations(self):
        non_tree = qg.Quiver(2, ((0, 1), (1, 0)))
        rep = qg.IntegralRep(non_tree, (1, 1), [np.eye(1, dtype=int)] * 2)
        with pytest.raises(qg.HypothesisViolated):
            qg.weyl_count_diagonal_tree(rep, (1, 1))
        rep2 = rep_1to2([[0, 1], [1, 0]])
        with pytest.raises(qg.HypothesisViolated):
            qg.weyl_count_diagonal_tree(rep2, (1, 1))
        rep3 = rep_1to2([[0, 0], [0, 2]])
        with pytest.raises(qg.HypothesisViolated):
            qg.weyl_count_diagonal_tree(rep3, (1, 1))

    def test_star_quiver_cross_check(self):
        star = qg.Quiver(3, ((0, 1), (2, 1)))
        rep = qg.IntegralRep(star, (2, 2, 2), [np.eye(2, dtype=int)] * 2)
        e = (1, 1, 1)
        assert qg.weyl_count_diagonal_tree(rep, e) == \
            qg.chi_via_interpolation(rep, e) == \
            len(qg.naive_f1_points(rep, e))


def random_tree_instance(rng, diagonal_pool):
    """A tree quiver with square matrices, small enough that interpolation
    over the good prime powers is exact."""
    while True:
        nv = rng.randrange(1, 5)
        if nv <= 2:
            d = rng.randrange(1, 5)
        else:
            d = rng.randrange(1, 3)
        edges = []
        for child in range(1, nv):
            parent = rng.randrange(0, child)
            if rng.random() < 0.5:
                edges.append((parent, child))
            else:
                edges.append((child, parent))
        quiver = qg.Quiver(nv, tuple(edges))
        mats = [np.diag([rng.choice(diagonal_pool) for _ in range(d)])
                for _ in edges]
        rep = qg.IntegralRep(quiver, (d,) * nv, mats)
        e = tuple(rng.randrange(0, d + 1) for _ in range(nv))
        bound = sum(ei * (d - ei) for ei in e)
        qs = qg.good_sample_q(rep)
        if bound + 2 > len(qs):
            continue
        cost = 1
        for ei in e:
            cost *= _gauss(d, ei, max(qs))
        if cost > 20000:
            continue
        return rep, e


def _gauss(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


class TestRandomizedComparisons:
    def test_corollary_identity_instances(self):
        rng = random.Random(2024)
        for _ in range(12):
            rep, e = random_tree_instance(rng, [1])
            naive = len(qg.naive_f1_points(rep, e))
            weyl = qg.weyl_count_diagonal_tree(rep, e)
            chi = qg.chi_via_interpolation(rep, e)
            assert naive == weyl == chi

    def test_theorem_diagonal_instances(self):
        rng = random.Random(42)
        for _ in range(12):
            rep, e = random_tree_instance(rng, [1, -1, 5, -5])
            weyl = qg.weyl_count_diagonal_tree(rep, e)
            chi = qg.chi_via_interpolation(rep, e)
            assert weyl == chi
