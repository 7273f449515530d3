import io
import json
import subprocess
import sys

import pytest

from chiralbwb.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_bwb_pass():
    code, out, _ = call("verify-bwb", "--cartan", "A1", "--weight", "1", "--N", "8", "--D", "8")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_denominator_plain():
    code, out, _ = call("denominator", "--cartan", "A2", "--weight", "1,1", "--output", "plain")
    assert code == 0
    assert "lhs: 1 - 2q^2 + 2q^6 - q^8" in out and "rhs: 1 - 2q^2 + 2q^6 - q^8" in out


@pytest.mark.parametrize("argv", [
    ["verify-bwb", "--cartan", "A1", "--weight", "0", "--N", "4"],
    ["euler", "--cartan", "A2", "--weight", "1"],
    ["euler", "--cartan", "X2", "--weight", "1"],
    ["euler", "--cartan", "A1", "--weight", "a"],
    ["nonsense"],
    ["ds-verma", "--cartan", "A2", "--weight", "1,1"],
    ["ds-restricted", "--weight", "0", "--chi", "1"],
])
def test_invalid_input_exit_2(argv):
    assert call(*argv)[0] == 2


def test_genus_csv():
    code, out, _ = call("genus", "--cartan", "A1", "--weight", "1", "--N", "4", "--output", "csv")
    assert code == 0
    assert out == "degree,coefficient\n0,2\n1,4\n2,10\n3,20\n4,40\n"


def test_tail_is_echoed_and_ignored():
    code, out, err = call("irreducible", "--weight", "1", "--N", "3", "--tail", "5,-1")
    assert code == 0 and "warning" in err
    data = json.loads(out)
    assert data["discarded_tail"] == ["5", "-1"]
    assert data["q_dimension"] == ["2", "4", "12", "24"]


@pytest.mark.parametrize("argv", [
    ["shifts", "--cartan", "A2", "--weight", "1,1"],
    ["euler", "--cartan", "A1", "--weight", "2", "--N", "3"],
    ["char", "--cartan", "A1", "--weight", "1", "--N", "2", "--kind", "wakimoto", "--w", "s1"],
    ["char", "--cartan", "A2", "--weight", "1,1", "--kind", "weyl"],
    ["ds-verma", "--weight", "0", "--cutoff", "3"],
    ["ds-restricted", "--weight", "0", "--cutoff", "2"],
    ["kk", "--weight", "-3", "--cutoff", "2"],
    ["denominator", "--cartan", "B2", "--weight", "1,1", "--random", "4", "--seed", "3"],
])
def test_commands_succeed_and_are_deterministic(argv):
    a = call(*argv)
    b = call(*argv)
    assert a[0] == 0 and a[1] == b[1]
    data = json.loads(a[1])
    if "pass" in data:
        assert data["pass"] is True


def test_kk_reports_marked_weight():
    code, out, _ = call("kk", "--weight", "-3", "--cutoff", "2")
    data = json.loads(out)
    assert data["marked_found"] == [["1", 2]]
    assert data["block_representative"] == {"singular": False, "weight": ["1"]}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chiralbwb", "shifts", "--weight", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["shifts"] == {"0": [0], "1": [2]}
