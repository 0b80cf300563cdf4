import json

from genusbounds.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound_castelnuovo(capsys):
    code, out, _ = run(capsys, "bound", "castelnuovo", "--ambient", "7", "--d", "217")
    assert code == 0
    assert "value=3780" in out


def test_bound_no_quadrics_p4(capsys):
    code, out, _ = run(capsys, "bound", "no-quadrics", "--r", "4", "--d", "24")
    assert code == 0
    assert "value=55" in out
    assert "Veronese" in out


def test_bound_no_quadrics_high_r_interval(capsys):
    code, out, _ = run(capsys, "bound", "no-quadrics", "--r", "7", "--d", "100000")
    assert code == 0
    assert "s=11" in out
    assert "interval=(" in out


def test_bound_no_quadrics_r6_bracket(capsys):
    code, out, _ = run(capsys, "bound", "no-quadrics", "--r", "6", "--d", "9999")
    assert code == 0
    assert "182" in out


def test_bound_no_cubics(capsys):
    code, out, _ = run(capsys, "bound", "no-cubics", "--r", "9", "--d", "100000")
    assert code == 0
    assert "s=36" in out


def test_bound_eh_pi2(capsys):
    code, out, _ = run(capsys, "bound", "eh-pi2", "--d", "19")
    assert code == 0
    assert "value=31" in out


def test_bound_degree_sweep(capsys):
    code, out, _ = run(capsys, "bound", "castelnuovo", "--ambient", "4", "--d-range", "10..14")
    assert code == 0
    assert len(out.strip().splitlines()) == 5


def test_bound_out_of_validity_warning(capsys):
    code, out, _ = run(capsys, "bound", "no-quadrics", "--r", "4", "--d", "10")
    assert code == 0
    assert "outside the stated validity range" in out


def test_bound_structured_output(capsys):
    code, out, _ = run(capsys, "bound", "castelnuovo", "--ambient", "7", "--d", "217",
                       "--format", "structured")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][0]["value"] == "3780"


def test_bound_parameter_error_exits_2(capsys):
    code, _, err = run(capsys, "bound", "castelnuovo", "--ambient", "7", "--d", "3")
    assert code == 2
    assert "degenerate" in err


def test_usage_error_exits_2(capsys):
    assert run(capsys, "bound", "nonsense", "--d", "4")[0] == 2
    assert run(capsys, "bound", "castelnuovo")[0] == 2  # no degree given


def test_search_case_file(tmp_path, capsys):
    path = tmp_path / "case.json"
    path.write_text(json.dumps({
        "d": 30, "N": 3, "fixed": {"1": 4, "2": 9},
        "lower": {"3": 14, "4": 19}, "strict": True, "label": "degree-5 case",
    }))
    code, out, _ = run(capsys, "search", "--constraints", str(path))
    assert code == 0
    assert "[1, 4, 9, 14, 19, 22, 27, 30]" in out
    assert "p_a < 85" in out


def test_search_unconstrained_recovers_castelnuovo(tmp_path, capsys):
    path = tmp_path / "plain.json"
    path.write_text(json.dumps({"d": 21, "N": 3}))
    code, out, _ = run(capsys, "search", "--constraints", str(path))
    assert code == 0
    assert "p_a <= 57" in out


def test_search_infeasible_exits_3(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"d": 30, "N": 3, "fixed": {"2": 6}}))
    code, _, err = run(capsys, "search", "--constraints", str(path))
    assert code == 3
    assert "h(2)" in err


def test_search_decay_branches(tmp_path, capsys):
    path = tmp_path / "decay.json"
    path.write_text(json.dumps({
        "d": 17, "N": 3, "fixed": {"1": 4, "2": 9},
        "decay": [{"i": 3, "drop": 2}], "strict": True,
    }))
    code, out, _ = run(capsys, "search", "--constraints", str(path))
    assert code == 0
    assert "overall bound: 24" in out


def test_surface_h0(capsys):
    code, out, _ = run(capsys, "surface", "h0", "--kind", "scroll", "--a", "3", "--b", "3",
                       "--k", "2", "--seed", "7")
    assert code == 0
    assert "kernel_dim=15" in out


def test_surface_certify_projected(capsys):
    code, out, _ = run(capsys, "surface", "certify", "--kind", "veronese2",
                       "--target-dim", "4", "--k", "2", "--seed", "7")
    assert code == 0
    assert "verdict=certified" in out


def test_surface_descriptor_json(capsys):
    desc = json.dumps({"kind": "scroll", "a": 2, "b": 3, "seed": 11})
    code, out, _ = run(capsys, "surface", "h0", "--k", "1", "--descriptor", desc)
    assert code == 0
    assert "kernel_dim=0" in out


def test_verify_engine_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "paper", "--only", "engine")
    assert code == 0
    assert "2/2 checks passed" in out


def test_verify_structured_round_trips(capsys):
    code, out, _ = run(capsys, "verify", "paper", "--only", "engine", "--format", "structured")
    assert code == 0
    payload = json.loads(out)
    rendered = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    assert rendered == out
    assert payload["passed"] is True
    row = payload["checks"][0]
    assert set(row) == {"name", "inputs", "expected", "provenance", "computed", "citation", "pass"}
