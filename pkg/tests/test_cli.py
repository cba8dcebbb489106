import json

import pytest

from sympcoh.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_text(capsys):
    code, out, _ = run_cli(capsys, "info", "(0,0,12,13,14,15)")
    assert code == 0
    assert "step 5" in out and "(1, 2, 3, 4, 3, 2, 1)" in out


def test_info_json(capsys):
    code, out, _ = run_cli(capsys, "info", "(0,0,0,12)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["betti"] == [1, 3, 4, 3, 1]
    assert payload["dim_S"] == 5
    assert payload["nilpotent"] and payload["step"] == 2


def test_compute_kodaira_thurston(capsys):
    code, out, _ = run_cli(capsys, "compute", "(0,0,0,12)", "--omega", "13+24", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["harmonic"] == [1, 3, 4, 2, 1]
    assert payload["relations"]["passed"] is True
    assert payload["hlc"] is False


def test_compute_restricted_k(capsys):
    code, out, _ = run_cli(capsys, "compute", "(0,0,0,12)", "--omega", "13+24",
                           "--k", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert list(payload["c_hat"]) == ["1"]
    assert list(payload["filtered"]) == ["1"]


def test_compute_index_out_of_range_is_input_error(capsys):
    code, _, err = run_cli(capsys, "compute", "(0,0)", "--omega", "12+34")
    assert code == 2
    assert "out of range" in err


def test_compute_non_symplectic_is_input_error(capsys):
    code, _, err = run_cli(capsys, "compute", "(0,0,0,0,0,0)", "--omega", "12+34")
    assert code == 2
    assert "omega" in err


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "(0,0,0,12,14,15+23+24)",
                           "--omega", "13+26-45")
    assert code == 0
    assert "all relations pass" in out


def test_scan_json(capsys):
    code, out, _ = run_cli(capsys, "scan", "(0,0,0,12,14,15+23+24)",
                           "--max-samples", "5", "--witness=-16-25+34",
                           "--witness", "13+26-45", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["c_flexible"] and payload["f_flexible"] and payload["h_flexible"]
    assert payload["dim_S"] == 8
    assert payload["value_sets"]["h3"]["4"] == "witness"


def test_scan_catalog_witnesses(capsys):
    code, out, _ = run_cli(capsys, "scan", "(0,0,12,13,23,14-25)", "--max-samples", "0",
                           "--catalog-witnesses", "--json")
    assert code == 0
    payload = json.loads(out)
    assert sorted(payload["value_sets"]["h4"]) == ["2", "3", "4"]


def test_scan_config_file(tmp_path, capsys):
    cfg = tmp_path / "config.json"
    cfg.write_text(json.dumps({"coefficient_set": [-1, 0, 1], "max_samples": 4,
                               "seed": 1, "witnesses": ["13+24"]}))
    code, out, _ = run_cli(capsys, "scan", "(0,0,0,12)", "--config", str(cfg), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["symplectic_found"]


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "info", "(0,23,13)")
    assert code == 2 and "d^2" in err


def test_table1_help_exists():
    with pytest.raises(SystemExit) as exc:
        main(["table1", "--help"])
    assert exc.value.code == 0
