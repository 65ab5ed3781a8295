import io
import json
import subprocess
import sys

import pytest

from thetaroot import checks, cli
from thetaroot.series import QSeries, series_from_dict


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    try:
        config = cli.parse_args(list(argv))
    except SystemExit as exc:
        return exc.code, "", ""
    return cli.run(config, out, err), out.getvalue(), err.getvalue()


def test_xi_plain():
    code, out, _ = _run("xi", "--order", "9", "--method", "theta", "--format", "plain")
    assert code == 0
    assert out.strip() == "1 1 2 4 9 21 52 133 351 948"


@pytest.mark.parametrize("method", ["fix1", "fix2"])
def test_xi_methods(method):
    assert _run("xi", "--order", "9", "--method", method)[1].strip() == "1 1 2 4 9 21 52 133 351 948"


def test_xi_json_round_trip():
    code, out, _ = _run("xi", "--order", "12", "--format", "json")
    assert code == 0
    series = series_from_dict(json.loads(out))
    assert isinstance(series, QSeries) and series.order == 12


def test_refine_json_round_trip():
    _, out, _ = _run("refine", "--order", "7", "--sigma", "1", "--format", "json")
    series = series_from_dict(json.loads(out))
    assert series.coefficient(7, 3) == 8


def test_refine_csv():
    _, out, _ = _run("refine", "--order", "7", "--format", "csv")
    assert "7,5,6" in out.splitlines()


def test_sigma_plain():
    _, out, _ = _run("sigma", "--sigma", "110", "--order", "3")
    assert out.strip() == "t + t^2q + (t^3+t^2)q^2 + (3t^3+t^2)q^3 + O(q^4)"


def test_trees_area_zero():
    code, out, _ = _run("trees", "--sigma", "0", "--max-area", "0")
    assert code == 0
    assert out.splitlines() == ["area,vertices,count", "0,1,1"]


def test_trees_dot_limit():
    code, out, _ = _run("trees", "--max-area", "3", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    assert _run("trees", "--max-area", "6", "--format", "dot")[0] == 2


def test_polyomino_tables():
    _, out, _ = _run("stacks", "--max-area", "3")
    assert out.splitlines()[0] == "area,width,height,rise,count"
    assert len(out.splitlines()) == 1 + 7
    _, out, _ = _run("ferrers", "--max-area", "4")
    assert out.splitlines()[0] == "area,width,height,count"
    _, out_all, _ = _run("ferrers", "--max-area", "4", "--unconstrained")
    assert len(out_all.splitlines()) > len(out.splitlines())


def test_mu_output():
    code, out, _ = _run("mu")
    assert code == 0
    assert out.startswith("mu         3.23363666")
    assert "reference  3.2336366652450763" in out


def test_verify_passes():
    code, out, _ = _run("verify", "--order", "50")
    assert code == 0
    lines = out.splitlines()
    assert lines == [f"PASS {c.name}" for c in checks.CHECKS]


@pytest.mark.parametrize("name", [c.name for c in checks.CHECKS if c.name != "growth-rate"])
def test_verify_catches_each_fault(name):
    code, out, _ = _run("verify", "--order", "30", "--inject-fault", name)
    assert code == 1
    assert f"FAIL {name}" in out.splitlines()


def test_verify_catches_growth_rate_fault():
    code, out, _ = _run("verify", "--order", "160", "--inject-fault", "growth-rate")
    assert code == 1
    assert "FAIL growth-rate" in out.splitlines()


def test_invalid_arguments_exit_two():
    assert _run("xi", "--bogus")[0] == 2
    assert _run("xi", "--order", "-1")[0] == 2
    assert _run("sigma", "--sigma", "012")[0] == 2
    assert _run("refine", "--sigma", "01")[0] == 2
    assert _run("verify", "--inject-fault", "nope")[0] == 2
    assert _run("stacks", "--format", "plain")[0] == 2


def test_unwritable_output(tmp_path):
    assert _run("xi", "--out", str(tmp_path / "missing" / "x.txt"))[0] == 2


def test_computation_error_exits_one():
    code, _, err = _run("mu", "--order", "50", "--window", "10:80")
    assert code == 1
    assert "insufficient coefficients" in err


def test_out_file(tmp_path):
    target = tmp_path / "xi.txt"
    assert _run("xi", "--order", "4", "--out", str(target))[0] == 0
    assert target.read_text().strip() == "1 1 2 4 9"


def test_deterministic_output():
    assert _run("trees", "--sigma", "10", "--format", "json")[1] == _run("trees", "--sigma", "10", "--format", "json")[1]


def test_module_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "thetaroot", "xi", "--order", "3"], capture_output=True, text=True
    )
    assert done.returncode == 0
    assert done.stdout.strip() == "1 1 2 4"


def test_main_returns_usage_status():
    assert cli.main(["nope"]) == 2
