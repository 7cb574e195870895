"""The command-line interface: outputs, determinism, exit codes."""

import json

import pytest

from blueforge import jsonio
from blueforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicVerbs:
    def test_zeta_affine_line(self, capsys):
        code, out, _ = run(capsys, "zeta", "catalog:A1", "--deg", "1")
        assert code == 0
        assert out.strip() == "s - 1"

    def test_zeta_absolute_point(self, capsys):
        code, out, _ = run(capsys, "zeta", "f1", "--deg", "0")
        assert code == 0
        assert out.strip() == "s"

    def test_spec_sl2_json(self, capsys):
        code, out, _ = run(capsys, "spec", "catalog:sl2", "--json")
        assert code == 0
        data = json.loads(out)
        assert len(data["points"]) == 7

    def test_proj_p2(self, capsys):
        code, out, _ = run(capsys, "proj", "catalog:P2")
        assert code == 0
        assert out.startswith("7 points")

    def test_count(self, capsys):
        code, out, _ = run(capsys, "count", "catalog:P2", "--q", "2,3")
        assert code == 0
        assert "q=2: 7" in out and "q=3: 13" in out

    def test_polyfit_sl2(self, capsys):
        code, out, _ = run(capsys, "polyfit", "sl2", "--deg", "3")
        assert code == 0
        assert out.strip() == "q^3 - q"

    def test_hasse_dot(self, capsys):
        code, out, _ = run(capsys, "hasse", "catalog:A1")
        assert code == 0
        assert out.startswith("digraph")
        assert '"(0)" -> "(T1)";' in out

    def test_catalog_list(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0
        assert "sl2" in out

    def test_catalog_build_round_trips(self, capsys):
        code, out, _ = run(capsys, "catalog", "build", "sl2")
        assert code == 0
        bp = jsonio.blueprint_loads(out)
        assert bp.backend.gens == ("T1", "T2", "T3", "T4")

    def test_coxeter_facets(self, capsys):
        code, out, _ = run(capsys, "coxeter", "A", "2")
        assert code == 0
        assert len(out.strip().splitlines()) == 6

    def test_orbit_plain_flag(self, capsys):
        code, out, _ = run(capsys, "orbit", "D", "3", "--plain")
        assert code == 0

    def test_building(self, capsys):
        code, out, _ = run(capsys, "building", "1", "2")
        assert code == 0
        assert len(out.strip().splitlines()) == 3

    def test_cspec(self, capsys):
        code, out, _ = run(capsys, "cspec", "f1_squared")
        assert code == 0
        assert "-11/0" in out

    def test_k0(self, capsys):
        code, out, _ = run(capsys, "k0", "f1", "--bound", "4")
        assert code == 0
        assert "Z^1" in out


class TestArith:
    def test_member(self, capsys):
        code, out, _ = run(capsys, "arith", "member", "1/2", "--remove", "2")
        assert code == 0 and out.strip() == "true"
        code, out, _ = run(capsys, "arith", "member", "1/2")
        assert code == 0 and out.strip() == "false"

    def test_member_remove_infinity(self, capsys):
        code, out, _ = run(capsys, "arith", "member", "7", "--remove", "inf")
        assert code == 0 and out.strip() == "true"

    def test_classify(self, capsys):
        code, out, _ = run(capsys, "arith", "classify-ideal", "2/3,1/2")
        assert code == 0
        assert "closed ball of radius 2/3" in out

    def test_surface_dim(self, capsys):
        code, out, _ = run(capsys, "arith", "surface-dim", "--primes", "2")
        assert code == 0
        assert out.startswith("dimension 2")


class TestQGrass:
    def test_chi_of_p1_identity(self, capsys, tmp_path):
        payload = {"vertices": 2, "arrows": [[0, 1]], "dims": [2, 2],
                   "matrices": [[[1, 0], [0, 1]]], "e": [1, 1]}
        path = tmp_path / "p1-identity.json"
        path.write_text(json.dumps(payload))
        code, out, _ = run(capsys, "qgrass", "chi", str(path))
        assert code == 0 and out.strip() == "2"
        code, out, _ = run(capsys, "qgrass", "naive", str(path))
        assert code == 0 and out.strip() == "2"
        code, out, _ = run(capsys, "qgrass", "count", str(path), "--q", "3")
        assert code == 0 and "q=3: 4" in out


class TestContracts:
    def test_determinism(self, capsys):
        outs = set()
        for _ in range(3):
            _, out, _ = run(capsys, "spec", "catalog:sl2", "--json")
            outs.add(out)
        assert len(outs) == 1

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "count", "sl2", "--q", "2", "--json")
        data = json.loads(out)
        assert json.loads(jsonio.dumps(data)) == data

    def test_domain_error_exit_code(self, capsys):
        code, _, err = run(capsys, "spec", "catalog:not_a_thing")
        assert code == 1
        assert "error:" in err

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["not_a_verb"])
        assert exc.value.code == 2

    def test_budget_flag(self, capsys):
        code, out, _ = run(capsys, "spec", "sl2", "--budget", "6,8,100000")
        assert code == 0

    def test_blueprint_file_input(self, capsys, tmp_path):
        from blueforge import catalog, jsonio
        path = tmp_path / "sl2.json"
        path.write_text(jsonio.blueprint_dumps(catalog.sl2_f1()))
        code, out, _ = run(capsys, "spec", str(path), "--json")
        assert code == 0
        assert len(json.loads(out)["points"]) == 7

    def test_complex_verb(self, capsys):
        code, out, _ = run(capsys, "complex", "catalog:P2", "--drop-generic")
        assert code == 0
        assert len(out.strip().splitlines()) == 6
        code, out, _ = run(capsys, "complex", "catalog:P1", "--dot")
        assert code == 0
        assert out.startswith("graph")
