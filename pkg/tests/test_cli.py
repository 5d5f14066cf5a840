import json

import pytest

from purecubic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    records = [json.loads(line) for line in out.strip().splitlines()]
    return code, records, err


def assert_no_floats(node):
    assert not isinstance(node, float), f"float leaked into output: {node}"
    if isinstance(node, dict):
        for v in node.values():
            assert_no_floats(v)
    elif isinstance(node, list):
        for v in node:
            assert_no_floats(v)


class TestCurveOps:
    def test_add(self, capsys):
        code, out, _ = run(capsys, "curve-add", "-2", "3", "5", "3", "5")
        assert code == 0
        assert out.strip() == "(129/100, -383/1000)"

    def test_add_negative_rational_coordinates(self, capsys):
        code, out, _ = run(capsys, "curve-add", "-2", "129/100", "-383/1000", "3", "5")
        assert code == 0
        assert out.strip() == "(164323/29241, -66234835/5000211)"

    def test_add_infinity(self, capsys):
        code, out, _ = run(capsys, "curve-add", "-2", "inf", "3", "5")
        assert code == 0
        assert out.strip() == "(3, 5)"

    def test_double(self, capsys):
        code, out, _ = run(capsys, "curve-double", "-4", "2", "-2")
        assert code == 0
        assert out.strip() == "(5, 11)"

    def test_mul(self, capsys):
        code, out, _ = run(capsys, "curve-mul", "-2", "3", "3", "5")
        assert code == 0
        assert out.strip() == "(164323/29241, -66234835/5000211)"

    def test_mul_negative_scalar(self, capsys):
        code, out, _ = run(capsys, "curve-mul", "-2", "-1", "3", "5")
        assert code == 0
        assert out.strip() == "(3, -5)"

    def test_halve(self, capsys):
        code, records, _ = run_json(capsys, "halve", "-4", "5", "11")
        assert code == 0
        assert records[0]["preimages"] == [{"x": "2", "y": "-2"}]

    def test_halve_empty(self, capsys):
        code, out, _ = run(capsys, "halve", "-2", "3", "5")
        assert code == 0
        assert out.strip() == "(none)"

    def test_search(self, capsys):
        code, records, _ = run_json(
            capsys, "search", "-26", "--e-bound", "1", "--a-bound", "40"
        )
        assert code == 0
        points = records[0]["points"]
        assert {"x": "3", "y": "1"} in points
        assert {"x": "35", "y": "-207"} in points

    def test_search_requires_bounds(self, capsys):
        code, _, err = run(capsys, "search", "-26")
        assert code == 2
        assert "e-bound" in err


class TestElementOps:
    def test_from_point(self, capsys):
        code, records, _ = run_json(capsys, "from-point", "2", "1", "3", "5")
        assert code == 0
        assert records[0]["alpha"] == {"r": "-9/10", "s": "3/5", "t": "1/5", "m": "2"}
        assert records[0]["a"] == "129/100"

    def test_to_point(self, capsys):
        code, records, _ = run_json(capsys, "to-point", "2", "-9/10", "3/5", "1/5")
        assert code == 0
        assert records[0]["point"] == {"x": "3", "y": "5"}
        assert records[0]["b"] == "1"

    def test_to_point_not_binomial_is_domain_error(self, capsys):
        code, _, err = run(capsys, "to-point", "2", "1", "1", "1")
        assert code == 1
        assert "NotBinomial" in err

    def test_star_worked_example(self, capsys):
        code, records, _ = run_json(
            capsys,
            "star", "2",
            "9/10", "-3/5", "-1/5",
            "-16641/7660", "1290/383", "1000/383",
        )
        assert code == 0
        rec = records[0]
        assert rec["result"]["s"] == "-28099233/66234835"
        assert rec["result"]["t"] == "-5000211/66234835"
        assert rec["result"]["r"] == "27002048329/22652313570"
        assert rec["parts"]["S_minus"] == "-342/383"
        assert rec["parts"]["Sigma"] == "-6138414/733445"

    def test_square_test_positive(self, capsys):
        code, out, _ = run(capsys, "square-test", "4", "5", "1")
        assert code == 0
        assert "-1 + 1*w + 1/2*w^2" in out

    def test_square_test_negative(self, capsys):
        code, records, _ = run_json(capsys, "square-test", "26", "35", "1")
        assert code == 0
        assert records[0]["square"] is False and records[0]["root"] is None

    def test_norm(self, capsys):
        code, records, _ = run_json(capsys, "norm", "2", "5", "0", "-1")
        assert code == 0
        assert records[0]["norm"] == "121"
        assert records[0]["trace"] == "15"


class TestClassfieldOps:
    def test_kappa(self, capsys):
        code, records, _ = run_json(capsys, "kappa", "47", "1", "6", "13")
        assert code == 0
        rec = records[0]
        assert rec["a"] == "6" and rec["e"] == "1"
        assert rec["norm"] == "169" and rec["norm_sqrt"] == "13"
        assert rec["claims_unramified"] is False  # e is odd

    def test_ext_poly(self, capsys):
        code, out, _ = run(capsys, "ext-poly", "113", "3", "97/4", "847/8")
        assert code == 0
        assert out.strip() == "x^6 - 291x^4 + 28227x^2 - 717409"

    def test_ext_poly_square_alpha(self, capsys):
        code, _, err = run(capsys, "ext-poly", "4", "1", "5", "11")
        assert code == 1
        assert "AlphaIsSquare" in err

    def test_table1(self, capsys):
        code, records, _ = run_json(capsys, "table1")
        assert code == 0
        summary = records[-1]
        assert summary["op"] == "table1-summary"
        assert summary["rows"] == 25 and summary["all_passed"] is True
        m113 = [r for r in records if r.get("m") == "113"]
        assert len(m113) == 3 and all(r["sextic_match"] for r in m113)

    def test_table1_text_prints_sextics(self, capsys):
        code, out, _ = run(capsys, "table1")
        assert code == 0
        assert "x^6 - 291x^4 + 28227x^2 - 717409" in out
        assert "x^6 + 261x^4 + 22707x^2 - 3404025" in out


class TestCliContract:
    def test_unknown_command(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 2
        assert "usage" in err

    def test_no_command(self, capsys):
        assert run(capsys, "--json")[0] == 2

    def test_malformed_rational(self, capsys):
        code, _, err = run(capsys, "curve-add", "-2", "3.5", "5", "3", "5")
        assert code == 2

    def test_domain_error_names_on_stderr(self, capsys):
        code, _, err = run(capsys, "curve-add", "-2", "3", "4", "3", "5")
        assert code == 1
        assert err.startswith("InvalidPoint")

    @pytest.mark.parametrize(
        "argv",
        [
            ("curve-add", "-2", "3", "5", "129/100", "-383/1000"),
            ("halve", "-4", "5", "11"),
            ("from-point", "2", "1", "3", "5"),
            ("square-test", "20", "-19", "-7"),
            ("kappa", "113", "3", "97/4", "847/8"),
            ("table1",),
        ],
    )
    def test_json_roundtrip_and_exactness(self, capsys, argv):
        code, out, _ = run(capsys, "--json", *argv)
        assert code == 0
        for line in out.strip().splitlines():
            rec = json.loads(line)
            assert_no_floats(rec)
            # parse -> re-render is the identity
            assert json.dumps(rec) == line
