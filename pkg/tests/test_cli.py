import json

import pytest

from seqlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as excinfo:
        main(list(argv))
    capsys.readouterr()
    return excinfo.value.code


def test_generate_fibonacci(capsys):
    code, out = run(capsys, "generate", "--sequence", "fibonacci", "--length", "13")
    assert code == 0
    assert out == "abaababaabaab\n"


def test_generate_colouring(capsys):
    code, out = run(capsys, "generate", "--sequence", "colouring",
                    "--delta", "3", "--length", "8")
    assert code == 0
    assert out == "1 1' 3 2 3' 3 2' 1\n"


def test_generate_zero_length(capsys):
    code, out = run(capsys, "generate", "--sequence", "fibonacci", "--length", "0")
    assert code == 0
    assert out == ""


def test_generate_constant_gap_hatted(capsys):
    code, out = run(capsys, "generate", "--sequence", "constant-gap",
                    "--delta", "3", "--hatted", "--length", "4")
    assert code == 0
    assert out == "1' 3' 2' 3'\n"


def test_generate_json_letters(capsys):
    code, out = run(capsys, "generate", "--sequence", "colouring",
                    "--delta", "2", "--length", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["text"] == "1 1' 2"
    assert doc["letters"] == [
        {"index": 1, "hat": False},
        {"index": 1, "hat": True},
        {"index": 2, "hat": False},
    ]


def test_generate_usage_errors(capsys):
    assert run_usage_error(capsys, "generate", "--sequence", "colouring",
                           "--length", "5") == 2
    assert run_usage_error(capsys, "generate", "--sequence", "colouring",
                           "--delta", "12", "--length", "5") == 2
    assert run_usage_error(capsys, "generate", "--sequence", "fibonacci",
                           "--hatted", "--length", "5") == 2
    assert run_usage_error(capsys, "generate", "--sequence", "fibonacci",
                           "--length", "-1") == 2


def test_analyze_returns(capsys):
    code, out = run(capsys, "analyze", "returns", "--word", "aba",
                    "--sequence", "fibonacci")
    assert code == 0
    assert 'returns: "aba" "ab"' in out
    assert "complete: true" in out


def test_analyze_returns_missing_factor(capsys):
    code = main(["analyze", "returns", "--word", "bb", "--sequence", "fibonacci"])
    captured = capsys.readouterr()
    assert code == 1
    assert "error:" in captured.err


def test_analyze_balanced_colouring(capsys):
    code, out = run(capsys, "analyze", "balanced", "--delta", "2",
                    "--horizon", "10000", "--max-window", "200")
    assert code == 0
    assert "balanced: true" in out


def test_analyze_balanced_word_witness(capsys):
    code, out = run(capsys, "analyze", "balanced", "--word", "aabb")
    assert code == 1
    assert "balanced: false" in out
    assert "windows of length 2" in out


def test_analyze_power_word(capsys):
    code, out = run(capsys, "analyze", "power", "--word", "kabelka")
    assert code == 0
    assert 'root: "kabel"' in out
    assert "exponent: 7/5 = 1.400000" in out


def test_analyze_power_json(capsys):
    code, out = run(capsys, "analyze", "power", "--word", "kabelka",
                    "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["exponent"] == {"numerator": 7, "denominator": 5}
    assert doc["root"]["text"] == "kabel"
    assert doc["period"] == 5


def test_analyze_occurrences_json(capsys):
    code, out = run(capsys, "analyze", "occurrences", "--word", "ab",
                    "--sequence", "fibonacci", "--horizon", "100",
                    "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["positions"][:4] == [0, 3, 5, 8]
    assert doc["count"] == len(doc["positions"])


def test_analyze_bispecial(capsys):
    code, out = run(capsys, "analyze", "bispecial", "--sequence", "fibonacci",
                    "--horizon", "2000", "--max-len", "12")
    assert code == 0
    assert 'len 3: "aba"' in out
    assert 'len 11: "abaababaaba"' in out


def test_analyze_derived(capsys):
    code, out = run(capsys, "analyze", "derived", "--word", "a",
                    "--sequence", "fibonacci", "--horizon", "500")
    assert code == 0
    assert "alphabet: 2 return words" in out
    assert "derived: 12112121" in out


def test_bound_delta(capsys):
    code, out = run(capsys, "bound", "--delta", "4")
    assert code == 0
    assert "bound: 5/4 - 1/8*tau" in out
    assert "decimal: 1.047746" in out


def test_bound_d_even(capsys):
    code, out = run(capsys, "bound", "--d", "6")
    assert code == 0
    assert "decimal: 1.250000" in out


def test_bound_delta_one(capsys):
    code, out = run(capsys, "bound", "--delta", "1")
    assert code == 0
    assert "bound: 2 + tau" in out
    assert "decimal: 3.618034" in out


def test_bound_coarse_check(capsys):
    code, out = run(capsys, "bound", "--delta", "5", "--check-coarse-bound")
    assert code == 0
    assert "within coarse bound: true" in out


def test_bound_json(capsys):
    code, out = run(capsys, "bound", "--delta", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["bound_exact"] == {"a_num": 1, "a_den": 1, "b_num": 1, "b_den": 2}
    assert doc["H"] == 2
    assert doc["N0"] == 0


def test_bound_usage_errors(capsys):
    assert run_usage_error(capsys, "bound", "--d", "7") == 2
    assert run_usage_error(capsys, "bound", "--delta", "0") == 2
    assert run_usage_error(capsys, "bound", "--delta", "2", "--d", "4") == 2
    assert run_usage_error(capsys, "bound") == 2


def test_table_text_markers(capsys):
    code, out = run(capsys, "table")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    markers = [line.split()[-1] for line in lines[1:]]
    assert markers == ["=", "=", "<", "=", "<"]


def test_table_csv_row_count(capsys):
    code, out = run(capsys, "table", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d,H,level,bound_decimal,rtb_star_decimal,marker"
    assert len(lines) == 6


def test_table_json_first_row_exact(capsys):
    code, out = run(capsys, "table", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["d"] == 2
    assert rows[0]["bound_exact"]["a_num"] == 2
    assert rows[0]["bound_exact"]["b_num"] == 1


def test_table_validation(capsys):
    assert run_usage_error(capsys, "table", "--d-max", "12") == 2
    assert run_usage_error(capsys, "table", "--d-max", "5") == 2


def test_csv_only_for_table(capsys):
    assert run_usage_error(capsys, "bound", "--delta", "1",
                           "--format", "csv") == 2


def test_verify_fib_properties(capsys):
    code, out = run(capsys, "verify", "--suite", "fib-properties", "--n", "200")
    assert code == 0
    assert "result: pass" in out
    assert "ok: cassini" in out


def test_verify_coefficient_bounds(capsys):
    code, out = run(capsys, "verify", "--suite", "coefficient-bounds",
                    "--n", "1..10")
    assert code == 0
    assert "result: pass (10 checks)" in out


def test_verify_golden_sign_deterministic(capsys):
    code1, out1 = run(capsys, "verify", "--suite", "golden-sign",
                      "--samples", "200", "--seed", "7")
    code2, out2 = run(capsys, "verify", "--suite", "golden-sign",
                      "--samples", "200", "--seed", "7")
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_parikh_membership_quick(capsys):
    code, out = run(capsys, "verify", "--suite", "parikh-membership",
                    "--max", "25", "--horizon", "3000")
    assert code == 0
    assert "result: pass" in out


def test_verify_self_similarity_quick(capsys):
    code, out = run(capsys, "verify", "--suite", "self-similarity", "--n", "1..3")
    assert code == 0
    assert "result: pass (3 checks)" in out


def test_verify_return_words_quick(capsys):
    code, out = run(capsys, "verify", "--suite", "return-words",
                    "--n", "1..4", "--horizon", "2000", "--max-len", "8")
    assert code == 0
    assert "result: pass" in out


def test_verify_json_shape(capsys):
    code, out = run(capsys, "verify", "--suite", "fib-properties", "--n", "50",
                    "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["suite"] == "fib-properties"
    assert doc["passed"] is True
    assert doc["failures"] == 0
    assert all(check["passed"] for check in doc["checks"])


def test_verify_unknown_suite(capsys):
    assert run_usage_error(capsys, "verify", "--suite", "nonsense") == 2


def test_generate_deterministic(capsys):
    _, first = run(capsys, "generate", "--sequence", "colouring",
                   "--delta", "4", "--length", "50")
    _, second = run(capsys, "generate", "--sequence", "colouring",
                    "--delta", "4", "--length", "50")
    assert first == second


def test_horizon_guard(capsys, monkeypatch):
    monkeypatch.setenv("SEQLAB_MAX_HORIZON", "100")
    assert run_usage_error(capsys, "analyze", "balanced", "--delta", "1",
                           "--horizon", "200") == 2
    monkeypatch.setenv("SEQLAB_MAX_HORIZON", "500")
    code, out = run(capsys, "analyze", "balanced", "--delta", "1",
                    "--horizon", "200")
    assert code == 0


def test_default_guard_blocks_huge_horizon(capsys, monkeypatch):
    monkeypatch.delenv("SEQLAB_MAX_HORIZON", raising=False)
    assert run_usage_error(capsys, "analyze", "power", "--delta", "1",
                           "--horizon", str(2 * 10**7)) == 2


def test_output_to_file(capsys, tmp_path):
    target = tmp_path / "prefix.txt"
    code, out = run(capsys, "generate", "--sequence", "fibonacci",
                    "--length", "5", "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "abaab\n"
