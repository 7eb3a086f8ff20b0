import json

import pytest

from fusiontransfer.burnside import parse_element
from fusiontransfer.catalog import catalog_group
from fusiontransfer.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, InputError, RunConfig, main, run
from fusiontransfer.fusion import fusion_system


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_analyze_s4(capsys):
    code, rep = run_json(capsys, "analyze", "symmetric:4", "--p", "2")
    assert code == EXIT_OK
    assert set(rep) == {
        "group", "p", "sylow_order", "focal", "hyperfocal", "elementary_focal",
        "T_F", "controls_NFS", "yoshida", "tate",
    }
    assert rep["focal"]["order"] == 4 and rep["T_F"]["order"] == 4
    assert rep["focal"]["generators"] == ["(1 3)(2 4)", "(1 4)(2 3)"]
    assert rep["controls_NFS"] is False
    assert rep["yoshida"]["kernel"]["order"] == 1
    assert [row["state"] for row in rep["tate"]] == ["all differ", "all equal"]


def test_analyze_full_lists_members(capsys):
    code, rep = run_json(capsys, "analyze", "symmetric:4", "--p", "2", "--full")
    assert code == EXIT_OK
    assert len(rep["focal"]["members"]) == 4


def test_analyze_cyclic_text(capsys):
    assert main(["analyze", "cyclic:8"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "focal: <1> of order 1" in out
    assert "controls_NFS: True" in out


def test_analyze_with_precision(capsys):
    code, rep = run_json(capsys, "analyze", "symmetric:4", "--p", "2", "--precision", "3")
    assert code == EXIT_OK and rep["T_F"]["order"] == 4


def test_inline_permutation_group(capsys):
    code, rep = run_json(capsys, "analyze", "perm 3; (1 2 3); (1 2)", "--p", "3")
    assert code == EXIT_OK
    assert rep["sylow_order"] == 3 and rep["focal"]["order"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "no-such-group"],
        ["analyze", "symmetric:4", "--p", "4"],
        ["analyze", "cyclic:4", "--precision", "1"],
        ["analyze", "symmetric:5", "--max-order", "100"],
        ["idempotent", "wreath:3", "--p", "3"],
        ["frobnicate"],
    ],
)
def test_input_errors(argv, capsys):
    assert main(argv) == EXIT_INPUT
    assert capsys.readouterr().err


def test_prime_not_dividing_order_warns(capsys):
    assert main(["analyze", "cyclic:8", "--p", "3"]) == EXIT_OK
    assert "warning" in capsys.readouterr().err


def test_idempotent_round_trip(capsys):
    code, rep = run_json(capsys, "idempotent", "symmetric:4", "--p", "2")
    assert code == EXIT_OK and rep["modulus"] == 8 and rep["terms"] == 3
    F = fusion_system(catalog_group("symmetric:4"), 2)
    w = parse_element(rep["idempotent"], F.S, F.S, rep["modulus"])
    assert (w @ w) == w


def test_tate_and_yoshida_commands(capsys):
    code, rep = run_json(capsys, "tate", "GL23", "--p", "2")
    assert code == EXIT_OK and all(row["verdict"] for row in rep["tate"])
    code, rep = run_json(capsys, "yoshida", "GL23", "--p", "2")
    assert code == EXIT_OK and rep["yoshida"]["kernel"]["order"] == 2


def test_verify_suite(capsys):
    code, rep = run_json(capsys, "verify-suite", "--max-order", "100")
    assert code == EXIT_OK
    assert [r["criterion"] for r in rep["results"]] == [1, 2, 3, 4, 5, 6, 7, 8, 9, 0]
    assert all(r["passed"] for r in rep["results"])


def test_catalog_command(capsys):
    code, rep = run_json(capsys, "catalog", "--max-order", "8")
    assert code == EXIT_OK
    assert {"name": "dihedral:8", "order": 8} in rep["catalog"]


def test_config_validation():
    with pytest.raises(InputError):
        RunConfig("analyze", "cyclic:4", p=6)
    with pytest.raises(InputError):
        RunConfig("analyze", "cyclic:4", max_order=10_000)
    assert run(RunConfig("analyze"))[0] == EXIT_INPUT
    assert EXIT_FAIL == 1
