"""Property-based checks with hypothesis."""

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from blueforge import arithcurve as ac
from blueforge import catalog
from blueforge.core import (PROVED, additive_closure, derive,
                            enumerate_morphisms, field_blueprint, _rewrites)
from blueforge.counting import fit_polynomial

rationals = st.fractions(min_value=Fraction(-1000), max_value=Fraction(1000),
                         max_denominator=1000)

place_sets = st.sets(st.sampled_from([2, 3, 5, 7, -1]), max_size=3)


def open_of(places):
    out = []
    for p in places:
        out.append(ac.ARCH if p == -1 else ac.finite_place(p))
    return ac.CurveOpen.without(*out)


class TestArithSheaf:
    @given(a=rationals, u=place_sets, v=place_sets)
    @settings(max_examples=300, deadline=None)
    def test_union_axiom(self, a, u, v):
        U, V = open_of(u), open_of(v)
        both = ac.sheaf_membership(a, U) and ac.sheaf_membership(a, V)
        assert ac.sheaf_membership(a, U.union(V)) == both

    @given(a=rationals, u=place_sets, v=place_sets)
    @settings(max_examples=300, deadline=None)
    def test_restriction_monotone(self, a, u, v):
        U, V = open_of(u), open_of(v.union(u))
        if ac.sheaf_membership(a, U):
            assert ac.sheaf_membership(a, V)


class TestClosureProperties:
    @given(subset=st.sets(st.sampled_from(["T1", "T2", "T3", "T4"]),
                          max_size=4),
           extra=st.sampled_from(["T1", "T2", "T3", "T4"]))
    @settings(max_examples=60, deadline=None)
    def test_monotone_and_contains(self, subset, extra):
        sl2 = catalog.sl2_f1()
        gens = [sl2.backend.gen_element(n) for n in sorted(subset)]
        small = additive_closure(sl2, gens)
        big = additive_closure(sl2, gens + [sl2.backend.gen_element(extra)])
        for g in gens:
            assert small.contains(g)
        for g in small.minimal:
            assert big.contains(g)

    @given(subset=st.sets(st.sampled_from(["T1", "T2", "T3", "T4"]),
                          max_size=2))
    @settings(max_examples=30, deadline=None)
    def test_idempotent(self, subset):
        sl2 = catalog.sl2_f1()
        gens = [sl2.backend.gen_element(n) for n in sorted(subset)]
        once = additive_closure(sl2, gens)
        twice = additive_closure(sl2, list(once.minimal))
        assert once.minimal == twice.minimal


class TestDeriveSoundness:
    def random_walk_relation(self, bp, rng, steps=2):
        """A relation in the generated congruence, by a random rewrite walk."""
        l, r = bp.relations[rng.randrange(len(bp.relations))]
        side = list(l)
        for _ in range(steps):
            succ = list(_rewrites(bp, tuple(side), bp.budget))
            if not succ:
                break
            side = list(succ[rng.randrange(len(succ))])
        return tuple(side), r

    @settings(max_examples=1, deadline=None)
    @given(st.none())
    def test_walked_relations_hold_at_points(self, _):
        rng = random.Random(99)
        for bp in (catalog.sl2_f1(), catalog.f1n(4), catalog.b1()):
            morphisms = {q: enumerate_morphisms(bp, field_blueprint(q))
                         for q in (2, 3)}
            for _ in range(40):
                lhs, rhs = self.random_walk_relation(bp, rng)
                assert derive(bp, lhs, rhs) == PROVED
                for q, fs in morphisms.items():
                    tb = field_blueprint(q).backend
                    for f in fs:
                        assert tb.eval_sum(f.apply_sum(lhs)) == \
                            tb.eval_sum(f.apply_sum(rhs))


class TestCountingStability:
    @given(perm=st.permutations(list(range(7))))
    @settings(max_examples=25, deadline=None)
    def test_fit_stable_under_permutation(self, perm):
        base = [(2, 6), (3, 24), (4, 60), (5, 120), (7, 336), (8, 504),
                (9, 720)]
        shuffled = [base[i] for i in perm]
        poly = fit_polynomial(shuffled)
        assert poly is not None and poly.coeffs == (0, -1, 0, 1)
