import json

import pytest

from gammalab import cli
from gammalab import families as fam
from gammalab.polynomial import UniPoly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_family_text_output(capsys):
    code, out = run(capsys, "family", "eulerian_a", "--n", "6")
    assert code == 0
    assert out.strip() == "1 57 302 302 57 1"


def test_family_rational_output(capsys):
    code, out = run(capsys, "family", "boros_moll", "--n", "5")
    assert code == 0
    assert out.split()[0] == "4389/256"


def test_family_bipoly_json(capsys):
    code, out = run(capsys, "family", "biv_des_exc", "--n", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"t_coeffs": [["1"], ["0", "3", "1"], ["0", "1"]]}


def test_expand_alt_gamma(capsys):
    code, out = run(
        capsys, "expand", "--basis", "alt-gamma", "--poly", "1 0 2 0 1", "--center", "4"
    )
    assert code == 0
    assert out.strip().endswith("1 4 4")
    code, out = run(
        capsys, "expand", "--basis", "alt-gamma", "--poly", "1 0 2 0 1", "--center", "4", "--json"
    )
    assert json.loads(out) == {"coeffs": ["1", "4", "4"], "n": 4, "sign": "-"}


def test_expand_classify(capsys):
    code, out = run(capsys, "expand", "--basis", "classify", "--poly", "1 4 1", "--json")
    assert code == 0
    assert json.loads(out)["gamma_positive"] == "yes"


def test_expand_default_center_is_degree(capsys):
    code, out = run(capsys, "expand", "--basis", "gamma", "--poly", "1 11 11 1")
    assert code == 0
    assert out.strip().endswith("1 8")


def test_oracle_stats(capsys):
    code, out = run(capsys, "oracle", "stats", "--n", "3", "--weight", "des")
    assert code == 0
    assert out.strip() == "1 4 1"


def test_oracle_orbit(capsys):
    code, out = run(capsys, "oracle", "orbit", "--perm", "3,1,2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [3, 1, 2] in payload["orbit"]
    assert payload["des_poly"] == ["1", "2", "1"]


def test_stability_json(capsys):
    code, out = run(capsys, "stability", "--poly", "1 3 4 3 1", "--json")
    assert code == 0
    assert json.loads(out)["status"] == "stable"


def test_stability_family(capsys):
    code, out = run(capsys, "stability", "--family", "mn-combination", "--n", "4", "--json")
    assert code == 0
    assert json.loads(out)["status"] == "stable"


def test_stability_usage_errors(capsys):
    code, _ = run(capsys, "stability", "--poly", "1 1", "--family", "mn-combination")
    assert code == 2
    code, _ = run(capsys, "stability", "--family", "mn-combination")
    assert code == 2


def test_verify_single_pass(capsys):
    code, out = run(capsys, "verify", "ANXBNX", "--bound", "4")
    assert code == 0
    assert "pass" in out


def test_verify_unknown_identity(capsys):
    assert cli.main(["verify", "NOT_REAL"]) == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    fam.eulerian_a(8)
    original = fam.eulerian_a

    def corrupted(n):
        poly = original(n)
        return poly + UniPoly.monomial(1) if n == 4 else poly

    monkeypatch.setattr(fam, "eulerian_a", corrupted)
    code, out = run(capsys, "verify", "ANXBNX", "--bound", "4")
    assert code == 1
    assert "fail" in out and "witness" in out


def test_verify_json_byte_stable(capsys):
    _, first = run(capsys, "verify", "CUBE", "--bound", "5", "--json")
    _, second = run(capsys, "verify", "CUBE", "--bound", "5", "--json")
    assert first.encode() == second.encode()
    payload = json.loads(first)
    assert payload[0]["status"] == "pass" and payload[0]["witness"] is None


def test_conjecture_cli(capsys):
    code, out = run(capsys, "conjecture", "boros-moll", "--max-m", "3", "--json")
    assert code == 0
    assert json.loads(out)["status"] == "holds-to-bound"
    code, out = run(
        capsys, "conjecture", "des-exc", "--max-n", "4", "--s", "1", "--s", "3/2"
    )
    assert code == 0
    assert "holds-to-bound" in out


def test_unknown_flag_is_an_error(capsys):
    assert cli.main(["family", "eulerian_a", "--n", "3", "--wat"]) == 2


def test_polynomial_text_round_trip_via_cli(capsys):
    _, out = run(capsys, "family", "l_poly", "--n", "4")
    assert UniPoly.from_text(out.strip()) == fam.l_poly(4)
