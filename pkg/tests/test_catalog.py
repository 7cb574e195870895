"""Catalog constructors and their expected facts."""

import pytest

from blueforge import catalog
from blueforge.core import (derive, is_blue_field, is_cancellative,
                            is_frobenius)
from blueforge.counting import counting_polynomial
from blueforge.schemes import BlueScheme, GradedBlueprint, proj
from blueforge.spectra import spec, weyl_extension


def spec_point_count(obj):
    if isinstance(obj, BlueScheme):
        return len(proj(obj.graded_model))
    if isinstance(obj, GradedBlueprint):
        return len(proj(obj))
    return len(spec(obj))


class TestNamedBlueprints:
    def test_f1(self):
        bp = catalog.f1()
        assert bp.carrier() == ("0", "1")
        assert bp.relations == ()

    def test_f1n2_is_f1_squared(self):
        bp = catalog.f1n(2)
        assert set(bp.carrier()) == {"0", "1", "-1"}
        (l, r) = bp.relations[0]
        assert sorted([l, r], key=len) == [(), ("-1", "1")]

    def test_f1n4_divisor_relations(self):
        bp = catalog.f1n(4)
        assert len(bp.carrier()) == 5
        lengths = sorted(max(len(l), len(r)) for l, r in bp.relations)
        assert lengths == [2, 4]  # divisors 2 and 1
        assert all(min(len(l), len(r)) == 0 for l, r in bp.relations)

    def test_f1n1_is_f1(self):
        assert catalog.f1n(1).carrier() == ("0", "1")

    def test_b1_initial_idempotent(self):
        bp = catalog.b1()
        assert derive(bp, ["1", "1"], ["1"]) == "Proved"

    def test_roots_sums_relations(self):
        bp = catalog.roots_of_unity_sums(4)
        # subgroups of order 2 and 4, each summing to as many ones
        sizes = []
        for l, r in bp.relations:
            ones = l if set(l) == {"1"} else r
            other = r if ones is l else l
            assert set(ones) == {"1"} and len(ones) == len(other)
            sizes.append(len(other))
        assert sorted(sizes) == [2, 4]


class TestGeometricCatalog:
    def test_affine_spectrum_sizes(self):
        assert spec_point_count(catalog.affine_space(2)) == 4
        assert spec_point_count(catalog.torus(1)) == 1
        assert spec_point_count(catalog.proj_space(2)) == 7

    def test_sl2_matches_minors(self):
        a, b = catalog.sl2_f1(), catalog.sl2_minors()
        assert len(spec(a)) == len(spec(b)) == 7
        assert len(spec(a).closed_points()) == len(spec(b).closed_points()) == 2

    def test_sl2_weyl_size(self, sl2_space):
        assert len(weyl_extension(sl2_space)) == 2

    def test_grassmannian_e1_is_projective_space(self):
        g = catalog.grassmannian_f1(1, 4)
        assert g.blueprint.relations == ()
        assert len(proj(g)) == 2 ** 4 - 1

    def test_grassmannian_24(self, gr24):
        assert len(gr24.blueprint.backend.gens) == 6
        assert len(gr24.blueprint.relations) == 1
        poly = counting_polynomial(gr24, 4)
        assert poly.coeffs == (1, 1, 2, 1, 1)
        assert poly(1) == 6

    def test_grassmannian_bounds(self):
        with pytest.raises(Exception):
            catalog.grassmannian_f1(2, 7)

    def test_idempotent(self, idem):
        assert len(idem.carrier()) == 3
        X = spec(idem)
        assert len(X) == 2
        p = next(pt for pt in X.points if pt.label() == "(e)")
        assert p.ideal.is_proper()


class TestExpectedFacts:
    @pytest.mark.parametrize("name", sorted(catalog.CATALOG))
    def test_expected_facts(self, name):
        entry = catalog.CATALOG[name]
        facts = entry.expected_facts
        if not facts:
            pytest.skip("no frozen facts for parameterized entry")
        obj = entry.builder()
        if "carrier" in facts:
            assert len(obj.carrier()) == facts["carrier"]
        if "spec_points" in facts:
            assert spec_point_count(obj) == facts["spec_points"]
        if "closed_points" in facts:
            assert len(spec(obj).closed_points()) == facts["closed_points"]
        if "weyl_size" in facts:
            assert len(weyl_extension(spec(obj))) == facts["weyl_size"]
        if "blue_field" in facts:
            assert is_blue_field(obj) == facts["blue_field"]
        if "cancellative" in facts:
            assert is_cancellative(obj)[0] == facts["cancellative"]
        if "frobenius2" in facts:
            assert is_frobenius(obj, 2)[0] == facts["frobenius2"]
        if "counting_coeffs" in facts:
            poly = counting_polynomial(obj, len(facts["counting_coeffs"]))
            assert poly.coeffs == tuple(facts["counting_coeffs"])
        if "euler" in facts:
            poly = counting_polynomial(obj, 4)
            assert poly(1) == facts["euler"]


class TestBuildInterface:
    def test_uri_style(self):
        assert catalog.build("catalog:sl2").name == "SL2"
        assert catalog.build("affine:3").backend.gens == ("T1", "T2", "T3")
        assert catalog.build("gr:2,4").blueprint.name == "Gr(2,4)"
        assert catalog.build("A2").backend.gens == ("T1", "T2")
        assert catalog.build("P1").name == "P1"
        assert catalog.build("f1n:4").name == "F1^4"

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            catalog.build("no_such_thing")
