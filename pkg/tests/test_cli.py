import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from parkvol.cli import main
from parkvol.combinatorics import beta_bruteforce
from parkvol.polynomials import MultiPoly
from parkvol.polytope import volume_polynomial


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_invenum_plain():
    code, text = run("invenum", "--n", "2")
    assert code == 0
    assert text.splitlines() == ["I_2(q) = 2 + q", "I_2(1) = 3", "I_2(-1) = 1 = E_2"]
    code, text = run("invenum", "--n", "1")
    assert text.startswith("I_1(q) = 1\n")
    code, text = run("invenum", "--n", "4", "--format", "json")
    rec = json.loads(text)
    assert (code, rec["at_minus_one"], rec["euler"], rec["at_one"]) == (0, 5, 5, 125)


def test_invenum_cap_refused():
    code, _ = run("invenum", "--n", "9")
    assert code == 2
    code, _ = run("invenum", "--n", "5", "--cap", "9")
    assert code == 2


def test_sumenum():
    code, text = run("sumenum", "--a", "1,2")
    assert code == 0
    assert "I_a(q) = 1 + 2q" in text and "I_a(-1) = -1" in text
    rec = json.loads(run("sumenum", "--a", "2,2", "--format", "json")[1])
    assert rec["at_minus_one"] == 0 and rec["ok"]
    rec = json.loads(run("sumenum", "--a", "1,2,3,4", "--format", "json")[1])
    assert abs(rec["at_minus_one"]) == 5
    assert run("sumenum", "--a", "2,1")[0] == 2


def test_involution():
    code, text = run("involution", "--a", "1,2,3,4")
    assert code == 0 and "fixed points: 5 (predicted 5)" in text
    rec = json.loads(run("involution", "--a", "1", "--format", "json")[1])
    assert (rec["fixed_points"], rec["pairs"]) == (1, 0)


def test_involution_draws_strip():
    code, text = run("involution", "--a", "1,2,3,4", "--b", "1,2,1,3")
    assert code == 0 and "s = 3" in text


def test_volume_json_schema_round_trip():
    code, text = run("volume", "--n", "5", "--set", "4", "--d", "1,2,3", "--format", "json")
    assert code == 0
    rec = json.loads(text)
    assert list(rec) == ["n", "S", "d", "volume", "n_factorial_volume_polynomial"]
    assert rec["S"] == [4] and rec["d"] == ["1", "2", "3"]
    poly = MultiPoly.from_text(("d1", "d2", "d3"), rec["n_factorial_volume_polynomial"])
    assert poly == volume_polynomial(5, {4})
    assert Fraction(rec["volume"]) * 120 == poly.substitute({"d1": 1, "d2": 2, "d3": 3})


def test_volume_examples():
    code, text = run("volume", "--n", "2", "--d", "1,1")
    assert code == 0 and "volume (multinomial sum) = 1/2" in text
    rec = json.loads(run("volume", "--n", "5", "--set", "4", "--d", "1,1,1", "--format", "json")[1])
    assert Fraction(rec["volume"]) == Fraction(beta_bruteforce(5, {4}), 120)
    code, text = run("volume", "--n", "5", "--set", "4")
    assert code == 0
    assert "5! * Vol = -1 * d1^5 + 5 * d1^4 d2" in text


@pytest.mark.parametrize(
    "argv",
    [
        ("volume", "--n", "3", "--d", "2,1"),
        ("volume", "--n", "3", "--set", "1", "--d", "1,1,1"),
        ("volume", "--n", "3", "--d", "0.5,1"),
        ("volume", "--n", "3", "--d", "1,2", "--q", "2"),
        ("kappa",),
    ],
)
def test_invalid_input_exit_2(argv):
    assert run(*argv)[0] == 2


def test_volume_q():
    rec = json.loads(run("volume", "--n", "2", "--q", "2", "--format", "json")[1])
    assert rec["d"] == ["1", "2"] and rec["volume"] == "3/2"


def test_small_commands():
    assert run("beta", "--n", "4", "--set", "2") == (0, "5\n")
    assert run("euler", "--n", "8") == (0, "1385\n")
    code, text = run("kappa", "--gamma", "1,3,1", "--format", "csv")
    assert code == 0
    assert text.splitlines()[1].startswith("1;3;1,1;2;2;2;3,9,")
    code, text = run("kappa", "--n", "5", "--set", "4")
    assert text.splitlines()[-1] == "5 0 0"


def test_pitman_stanley():
    code, text = run("pitman-stanley", "--c", "1,1,1")
    assert code == 0 and "Vol(Pi_n(c)) = 8/3" in text


def test_verify_all_small():
    code, text = run("verify-all", "--n", "1")
    assert code == 0 and text.endswith("ALL PASS\n")
    assert run("verify-all", "--n", "10")[0] == 2


def test_deterministic_plain_output():
    argv = ("verify-all", "--n", "3")
    first = run(*argv)
    assert first == run(*argv)
    assert run("volume", "--n", "4", "--set", "3", "--d", "1/2,3/4,2") == run(
        "volume", "--n", "4", "--set", "3", "--d", "1/2,3/4,2"
    )


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "parkvol", "euler", "--n", "5"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "16\n"
