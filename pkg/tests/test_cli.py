import json

import pytest

from realspec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBasicCommands:
    def test_real_radical(self, capsys):
        code, out, _ = run(capsys, "real-radical", "--ring", "Q[x]", "x^2*(x^2+1)")
        assert code == 0
        assert out.strip() == "x"

    def test_classify(self, capsys):
        code, out, _ = run(capsys, "classify", "--ring", "Q[x]/(x^2)")
        assert code == 0
        assert out.strip() == "real=false semireal=true"

    def test_sturm(self, capsys):
        code, out, _ = run(capsys, "sturm", "x^3-x")
        assert (code, out.strip()) == (0, "3")

    def test_factor_json(self, capsys):
        code, out, _ = run(capsys, "factor", "--json", "x^4-1")
        doc = json.loads(out)
        assert code == 0
        assert doc["unit"] == "1"
        assert [f["poly"] for f in doc["factors"]] == ["x - 1", "x + 1", "x^2 + 1"]

    def test_primes(self, capsys):
        code, out, _ = run(capsys, "primes", "--ring", "Q[x]/(x^2-x)")
        assert code == 0
        assert out.splitlines() == ["(x - 1)", "(x)"]

    def test_real_part(self, capsys):
        code, out, _ = run(capsys, "real-part", "x^2*(x^2+1)")
        assert (code, out.strip()) == (0, "x")

    def test_vset(self, capsys):
        code, out, _ = run(capsys, "vset", "union", "x-1", "x+1")
        assert (code, out.strip()) == (0, "x^2 - 1")
        code, out, _ = run(capsys, "vset", "subset", "x-1", "x^2-1")
        assert (code, out.strip()) == (0, "true")
        code, out, _ = run(capsys, "vset", "intersect", "x^2-1", "x*(x-1)")
        assert (code, out.strip()) == (0, "x - 1")


class TestExitCodes:
    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "sturm", "x^^2")
        assert code == 2
        assert "column 3" in err

    def test_precondition_violation(self, capsys):
        code, _, err = run(capsys, "subcover", "--f", "x^2-1", "x+2")
        assert code == 3

    def test_zero_input(self, capsys):
        code, _, err = run(capsys, "sturm", "0")
        assert code == 3

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "no-such-command")
        assert exc.value.code == 2

    def test_bad_ring_flag(self, capsys):
        code, _, err = run(capsys, "classify", "--ring", "Q[x]/(2*x)")
        assert code == 3


class TestSections:
    def test_glue_worked_example(self, capsys):
        code, out, _ = run(
            capsys,
            "section", "glue",
            "--ring", "Q[x]/(x^2-x)",
            "--f", "1",
            "--patch", "x:x",
            "--patch", "x-1:0",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "x / 1"
        assert "coeffs=[1, -1]" in lines[1]

    def test_validate(self, capsys):
        code, out, _ = run(
            capsys,
            "section", "validate", "--f", "1",
            "--patch", "1:x", "--patch", "1:x+1",
        )
        assert code == 0
        assert "valid: false" in out
        assert "(0, 1)" in out

    def test_stalk(self, capsys):
        code, out, _ = run(
            capsys,
            "section", "stalk",
            "--ring", "Q[x]/(x^2-x)",
            "--f", "1",
            "--patch", "x:x", "--patch", "x-1:0",
            "--prime", "x-1",
        )
        assert code == 0
        assert out.startswith("x / x at (x - 1)")

    def test_stalk_out_of_domain(self, capsys):
        code, _, err = run(
            capsys,
            "section", "stalk",
            "--ring", "Q[x]/(x^2-x)",
            "--f", "x",
            "--patch", "x:1",
            "--prime", "x",
        )
        assert code == 3

    def test_section_eq(self, capsys):
        code, out, _ = run(
            capsys,
            "section", "eq", "--f", "1",
            "--patch", "1:x",
            "--other", "1:x+1",
        )
        assert (code, out.strip()) == (0, "false")

    def test_sigma_eq(self, capsys):
        code, out, _ = run(
            capsys,
            "sigma-eq",
            "--ring", "Q[x]/(x^2)",
            "--f", "x",
            "--num1", "x", "--m1", "1",
            "--num2", "0", "--m2", "1",
        )
        assert (code, out.strip()) == (0, "true")


class TestCertificates:
    def test_cert_find_and_verify(self, capsys, tmp_path):
        code, out, _ = run(capsys, "cert", "find", "--json", "x^2+1", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "real-radical"
        assert doc["m"] == 1 and doc["sos"] == ["x"] and doc["cofactor"] == "1"
        path = tmp_path / "cert.json"
        path.write_text(out)
        code, out, _ = run(capsys, "cert", "verify", str(path))
        assert (code, out.strip()) == (0, "verified: true")

    def test_cert_not_member(self, capsys):
        code, out, _ = run(capsys, "cert", "find", "x^2-1", "x")
        assert code == 0
        assert out.strip() == "member: false"

    def test_subcover_json_verifies(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "subcover", "--json", "--f", "x^2-1", "x-1", "x+1", "x"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "subcover"
        assert doc["indices"] == [0, 1]
        path = tmp_path / "sub.json"
        path.write_text(out)
        code, out, _ = run(capsys, "cert", "verify", str(path))
        assert (code, out.strip()) == (0, "verified: true")

    def test_glue_json_verifies(self, capsys, tmp_path):
        code, out, _ = run(
            capsys,
            "section", "glue", "--json",
            "--ring", "Q[x]/(x^2-x)",
            "--f", "1",
            "--patch", "x:x", "--patch", "x-1:0",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "glue"
        path = tmp_path / "glue.json"
        path.write_text(out)
        code, out, _ = run(capsys, "cert", "verify", str(path))
        assert (code, out.strip()) == (0, "verified: true")

    def test_tampered_certificate_fails(self, capsys, tmp_path):
        code, out, _ = run(capsys, "cert", "find", "--json", "x^2+1", "1")
        doc = json.loads(out)
        doc["cofactor"] = "2"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "cert", "verify", str(path))
        assert (code, out.strip()) == (0, "verified: false")


class TestExplore:
    def test_deterministic(self, capsys):
        args = ["explore-question", "--rings", "4", "--trials", "2", "--seed", "9"]
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_empty_report(self, capsys):
        code, out, _ = run(capsys, "explore-question", "--trials", "0")
        assert code == 0
        assert "totals: glued=0" in out

    def test_never_claims_counterexample(self, capsys):
        code, out, _ = run(
            capsys, "explore-question", "--rings", "6", "--trials", "3", "--seed", "3"
        )
        assert code == 0
        assert "counterexample" not in out.lower()
