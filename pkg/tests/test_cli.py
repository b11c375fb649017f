import io
import json

import pytest

from chowmot.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code, _ = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--json")
    return code, json.loads(out)


def test_euler():
    code, out, _ = call("euler", "P2", "O", "O(3)")
    assert code == 0 and out.strip() == "10"
    code, report = call_json("euler", "P1", "O(1)", "O")
    assert report["result"]["chi"] == "0"


def test_nm():
    code, report = call_json("nm", "P1xP2")
    res = report["result"]
    assert code == 0 and res["rank"] == 6 and res["unitriangular"]
    assert len(res["euler"]) == 6 and all(len(r) == 6 for r in res["euler"])


@pytest.mark.parametrize("a, b, expected", [("1+L", "1+1", "true"), ("1+1", "1", "false")])
def test_orbit_iso(a, b, expected):
    code, out, _ = call("orbit-iso", a, b)
    assert code == 0 and out.strip() == expected


def test_chow_eval_and_fm_act():
    assert call("chow-eval", "P2", "sqrt(td())")[1].splitlines()[0] == "1 + 3/4*h1 + 7/32*h1^2"
    assert call("fm-act", "corr P1 -> P1 : h2", "3 + 5*h1")[1].strip() == "5*h1"


def test_corr_compose_report():
    code, report = call_json("corr-compose", "corr P1 -> P1 : h1", "corr P1 -> P1 : h1 + h2")
    comp = report["result"]["composite"]
    assert comp["source"] == "P1" and comp["target"] == "P1"
    assert comp["terms"] == [{"exponent": [1, 0], "coeff": "1"}]


def test_motive_decompose():
    code, out, _ = call("motive-decompose", "3")
    assert code == 0 and out.splitlines()[0] == "M(P3) = 1 + 1(-1) + 1(-2) + 1(-3)"
    code, report = call_json("motive-decompose", "P1xP1")
    assert report["result"]["verified"] and len(report["result"]["summands"]) == 4


def test_verify_and_nu_check():
    code, report = call_json("verify", "nu", "--seed", "7", "--count", "5")
    assert code == 0 and report["result"]["passed"] and report["result"]["checks"] > 0
    code, report = call_json("nu-check", "P1,P2,P1", "--count", "4")
    res = report["result"]
    assert code == 0 and res["checks"] == 4 and len(res["pairs"]) == 4
    assert all(set(e) == {"pair", "lhs", "rhs", "equal"} and e["equal"] for e in res["pairs"])
    code, out, _ = call("verify", "ring", "--seed", "1", "--count", "10")
    assert code == 0 and out.startswith("ring: pass")


def test_timing_is_opt_in():
    _, plain = call_json("euler", "P1", "O", "O")
    assert "timing" not in plain
    _, out, _ = call("euler", "P1", "O", "O", "--json", "--timing")
    assert "seconds" in json.loads(out)["timing"]


@pytest.mark.parametrize("argv, needle", [
    (["chow-eval", "P2", "h1 + * 2"], "position 5"),
    (["euler", "P2", "O(", "O"], "position 2"),
    (["chow-eval", "Q2", "1"], "'Q2'"),
    (["verify", "nope"], "unknown suite"),
    (["nu-check", "P1,P1"], "three"),
])
def test_usage_errors_exit_2(argv, needle):
    code, _, err = call(*argv)
    assert code == 2 and needle in err


def test_unknown_command_exits_2(capsys):
    code, _, _ = call("frobnicate")
    assert code == 2


def test_failed_sweep_exits_1(monkeypatch):
    from chowmot import cli

    def broken(triples, seed, count):
        return [{"pair": ["a", "b"], "lhs": "O", "rhs": "2*O", "equal": False}]

    monkeypatch.setattr(cli, "nu_entries", broken)
    code, out, _ = call("nu-check", "P1,P1,P1")
    assert code == 1 and "counterexample: " in out
