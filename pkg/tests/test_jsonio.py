"""JSON round-trips for blueprints, schemes, and quiver representations."""

import json

import numpy as np
import pytest

from blueforge import catalog, jsonio
from blueforge import quivergrass as qg
from blueforge.core import parse_element


CASES = ["f1", "f1_squared", "b1", "sl2", "sl2_minors", "idempotent"]


class TestBlueprintRoundTrip:
    @pytest.mark.parametrize("name", CASES)
    def test_value_round_trip(self, name):
        bp = catalog.build(name)
        text = jsonio.blueprint_dumps(bp)
        back = jsonio.blueprint_loads(text)
        assert back.relations == bp.relations
        if bp.backend.kind == "monomial":
            assert back.backend.gens == bp.backend.gens
            assert back.backend.inverted == bp.backend.inverted
        else:
            assert back.backend.symbols == bp.backend.symbols
            assert back.backend.mul_table == bp.backend.mul_table

    @pytest.mark.parametrize("name", CASES + ["affine:3", "torus:2", "f1n:4"])
    def test_bit_exact_round_trip(self, name):
        bp = catalog.build(name)
        text = jsonio.blueprint_dumps(bp)
        again = jsonio.blueprint_dumps(jsonio.blueprint_loads(text))
        assert text == again

    def test_quotient_with_lattice(self, sl2, sl2_space):
        from blueforge.core import quotient_by_ideal
        p = next(pt for pt in sl2_space.points if pt.label() == "(T2, T3)")
        q = quotient_by_ideal(sl2, p.ideal)
        text = jsonio.blueprint_dumps(q)
        back = jsonio.blueprint_loads(text)
        assert back.backend.lattice == q.backend.lattice
        assert back.backend.inverted == q.backend.inverted

    def test_monomial_grammar(self, sl2):
        assert parse_element(sl2, "T1*T4") == \
            sl2.mul(sl2.backend.gen_element("T1"),
                    sl2.backend.gen_element("T4"))
        assert parse_element(sl2, "T1^2*T2") == \
            sl2.backend.normalize(("1", (2, 1, 0, 0)))
        assert parse_element(sl2, "0") == sl2.zero()
        assert parse_element(sl2, "1") == sl2.one()

    def test_grammar_with_coefficient(self, f12):
        from blueforge.core import Blueprint, MonomialBackend
        bp = Blueprint(MonomialBackend(f12, ("T",)))
        elem = parse_element(bp, "-1*T^2")
        assert elem == ("-1", (2,))
        assert bp.render(elem) == "-1*T^2"


class TestSchemeRoundTrip:
    def test_p2_round_trip(self):
        ps = catalog.proj_space(2)
        data = jsonio.scheme_to_json(ps)
        back = jsonio.scheme_from_json(data)
        assert len(back.charts) == 3
        assert len(back.gluings) == len(ps.gluings)
        assert len(back.point_space()) == 7

    def test_scheme_json_is_json(self):
        text = jsonio.dumps(jsonio.scheme_to_json(catalog.proj_space(1)))
        json.loads(text)


class TestQuiverRoundTrip:
    def test_round_trip(self):
        quiver = qg.Quiver(2, ((0, 1),))
        rep = qg.IntegralRep(quiver, (2, 2), [np.diag([2, 3])])
        data = jsonio.quiver_rep_to_json(rep, e=(1, 1))
        back, e = jsonio.quiver_rep_from_json(data)
        assert e == (1, 1)
        assert back.dims == (2, 2)
        assert (back.matrices[0] == rep.matrices[0]).all()
        again = jsonio.quiver_rep_to_json(back, e=e)
        assert jsonio.dumps(data) == jsonio.dumps(again)
