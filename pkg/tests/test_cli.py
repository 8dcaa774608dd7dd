"""Tests for the command-line interface and the identity registry."""

import io
import json
from fractions import Fraction as F

import pytest

from modwron.cli import (IDENTITIES, _assess, default_precision,
                         format_ratpoly_x, main, symcheck_report, verify)
from modwron.qseries import QSeries


# ---- identity registry -----------------------------------------------------------

@pytest.mark.parametrize("name", sorted(IDENTITIES))
def test_identity_passes(name):
    rep = verify(name, 25)
    assert rep.status == "pass"
    assert rep.precision >= 25
    assert rep.first_fail is None


def test_verify_unknown_identity():
    with pytest.raises(ValueError, match="unknown identity"):
        verify("nope", 10)


def test_assess_reports_fail_with_exponent():
    lhs = QSeries.from_fractions(0, [F(1), F(2), F(3)], 1, F(10))
    rhs = QSeries.from_fractions(0, [F(1), F(2), F(4)], 1, F(10))
    rep = _assess("demo", [(lhs, rhs)], F(10), 0.0)
    assert rep.status == "fail"
    assert rep.first_fail == 2


def test_assess_insufficient_precision():
    lhs = QSeries.one(F(5))
    rhs = QSeries.one(F(5))
    rep = _assess("demo", [(lhs, rhs)], F(50), 0.0)
    assert rep.status == "insufficient-precision"
    assert rep.precision == 5


def test_assess_pass_at_target():
    lhs = QSeries.one(F(50))
    rep = _assess("demo", [(lhs, QSeries.one(F(50)))], F(50), 0.0)
    assert rep.status == "pass" and rep.precision == 50


def test_default_precision_env(monkeypatch):
    monkeypatch.delenv("MODWRON_PREC", raising=False)
    assert default_precision() == 100
    monkeypatch.setenv("MODWRON_PREC", "35")
    assert default_precision() == 35
    monkeypatch.setenv("MODWRON_PREC", "bogus")
    with pytest.raises(ValueError, match="MODWRON_PREC"):
        default_precision()


def test_report_json_shape():
    rep = verify("chprod", 20)
    d = rep.to_json()
    assert set(d) == {"identity", "status", "precision", "first_fail"}
    assert d["status"] == "pass" and d["first_fail"] is None


# ---- symcheck -----------------------------------------------------------------------

@pytest.mark.parametrize("pair", ["rr", "weber", "a1"])
def test_symcheck_small(pair):
    rep = symcheck_report(pair, 2, F(20))
    assert rep.status == "pass"


# ---- main() end-to-end ----------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "series", "ch1", "--prec", "10", "--json")
    assert code == 0
    s = QSeries.from_json(json.loads(out))
    assert s.valuation() == F(11, 60)
    assert s.prec == 10


def test_series_human(capsys):
    code, out, _ = run_cli(capsys, "series", "weber8_2", "--prec", "4")
    assert code == 0
    assert out.startswith("weber8_2 = q^(1/3)")


def test_verify_cli_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "rw2_char", "f1f2",
                           "--prec", "25", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [d["identity"] for d in payload] == ["rw2_char", "f1f2"]
    assert all(d["status"] == "pass" for d in payload)


def test_verify_cli_deterministic_json(capsys):
    _, out1, _ = run_cli(capsys, "verify", "chprod", "--prec", "15", "--json")
    _, out2, _ = run_cli(capsys, "verify", "chprod", "--prec", "15", "--json")
    assert out1 == out2


def test_wronskian_cli(capsys):
    code, out, _ = run_cli(capsys, "wronskian", "--basis", "ch2,ch1",
                           "--prec", "10", "--json")
    assert code == 0
    w = QSeries.from_json(json.loads(out)["wronskian"])
    assert w.valuation() == F(1, 6)
    assert w.leading_coefficient() == F(1, 5)


def test_wronskian_cli_sym_spec(capsys):
    code, out, _ = run_cli(capsys, "wronskian", "--basis", "sym:weber:2",
                           "--prec", "12")
    assert code == 0
    assert out.startswith("W = ")


def test_wronskian_cli_bad_spec(capsys):
    code, _, err = run_cli(capsys, "wronskian", "--basis", "sym:weber")
    assert code == 2
    assert "malformed basis spec" in err


def test_symcheck_cli(capsys):
    code, out, _ = run_cli(capsys, "symcheck", "--m", "2", "--pair", "weber",
                           "--prec", "20")
    assert code == 0
    assert "pass" in out


def test_kz_cli_variants_match(capsys):
    _, out1, _ = run_cli(capsys, "kz", "--l", "4", "--alpha", "5/3",
                         "--prec", "8", "--json")
    _, out2, _ = run_cli(capsys, "kz", "--l", "4", "--alpha", "5/3",
                         "--variant", "recursion", "--prec", "8", "--json")
    d1, d2 = json.loads(out1), json.loads(out2)
    assert d1["terms"] == d2["terms"]
    assert d1["series"] == d2["series"]


def test_ssing_cli_golden(capsys):
    code, out, _ = run_cli(capsys, "ssing", "--p", "13", "--json")
    assert code == 0
    assert json.loads(out) == {
        "p": 13,
        "polynomial": [8, 1],
        "fp_roots": [5],
        "quadratic_factors": [],
        "routes_agree": True,
        "oracle_match": True,
        "epsilon": [0, 0],
    }


def test_ssing_cli_routes(capsys):
    for route in ("deligne", "wronskian"):
        code, out, _ = run_cli(capsys, "ssing", "--p", "7",
                               "--route", route, "--json")
        assert code == 0
        assert json.loads(out)["polynomial"] == [1, 1]
    code, out, _ = run_cli(capsys, "ssing", "--p", "7", "--route", "oracle",
                           "--json")
    assert code == 0
    assert json.loads(out)["fp_roots"] == [6]


def test_ssing_cli_bad_prime(capsys):
    code, _, err = run_cli(capsys, "ssing", "--p", "9")
    assert code == 2
    assert "prime" in err


def test_partitions_cli(capsys):
    code, out, _ = run_cli(capsys, "partitions", "--check", "ssss",
                           "--upto", "30", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["ssss"]["counterexamples"] == []
    assert "p27" not in payload


def test_divpoly_cli_stdin(capsys, monkeypatch):
    from modwron.modpoly import eisenstein
    blob = json.dumps(eisenstein(12, "E", 30).to_json())
    monkeypatch.setattr("sys.stdin", io.StringIO(blob))
    code, out, _ = run_cli(capsys, "divpoly", "--weight", "12")
    assert code == 0
    assert out.strip() == "F(f, x) = x - 432000/691"


def test_identify_cli_stdin(capsys, monkeypatch):
    from modwron.modpoly import eisenstein
    blob = json.dumps(eisenstein(6, "E", 30).to_json())
    monkeypatch.setattr("sys.stdin", io.StringIO(blob))
    code, out, _ = run_cli(capsys, "identify", "--weight", "6", "--json")
    assert code == 0
    assert json.loads(out)["terms"] == {"0,1": "1"}


def test_identify_cli_rejects_nonform(capsys, monkeypatch):
    blob = json.dumps(QSeries.from_fractions(0, [F(1), F(1)], 1,
                                             F(30)).to_json())
    monkeypatch.setattr("sys.stdin", io.StringIO(blob))
    code, _, err = run_cli(capsys, "identify", "--weight", "4")
    assert code == 2
    assert "not identifiable" in err


def test_run_all_cli_restricted(capsys):
    code, out, _ = run_cli(capsys, "run-all", "--prec", "20",
                           "--primes", "5,7", "--json")
    assert code == 0
    payload = json.loads(out)
    ids = [d["identity"] for d in payload]
    assert "ssing_p5" in ids and "ssing_p7" in ids and "ssing_p11" not in ids
    assert "sym_weber_m12" in ids and "r12_roots" in ids
    assert all(d["status"] == "pass" for d in payload)


def test_run_all_cli_bad_primes(capsys):
    code, _, err = run_cli(capsys, "run-all", "--primes", "5,x")
    assert code == 2
    assert "malformed --primes" in err


def test_format_ratpoly_x():
    assert format_ratpoly_x((F(-432000, 691), F(1))) == "x - 432000/691"
    assert format_ratpoly_x((F(0), F(-1728), F(1))) == "x^2 - 1728*x"
    assert format_ratpoly_x((F(1),)) == "1"
    assert format_ratpoly_x((F(0),)) == "0"
    assert format_ratpoly_x((F(5, 2), F(0), F(-1))) == "-x^2 + 5/2"
