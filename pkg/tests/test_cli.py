"""CLI plumbing: grammar, formats, exit codes, round-trips."""

import csv
import json
import math

import pytest

from neglab.cli import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_negate_golden(capsys):
    code, doc = run_json(capsys, "negate", "--dist", "1/3,1/6,1/6,1/3")
    assert code == EXIT_OK
    assert doc["command"] == "negate"
    assert doc["all_hold"] is True
    rec = doc["results"][0]
    assert max(abs(a - b) for a, b in zip(rec["negation"], [2 / 9, 5 / 18, 5 / 18, 2 / 9])) <= 1e-14
    assert max(abs(a - b) for a, b in zip(rec["double_negation"], [7 / 27, 13 / 54, 13 / 54, 7 / 27])) <= 1e-14


def test_negate_uniform_fixed_point(capsys):
    code, doc = run_json(capsys, "negate", "--dist", "uniform:4")
    assert code == EXIT_OK
    rec = doc["results"][0]
    assert rec["negation"] == rec["distribution"]


def test_negate_bad_sum_exits_2(capsys):
    code, doc = run_json(capsys, "negate", "--dist", "0.5,0.6")
    assert code == EXIT_VALIDATION
    assert doc["error"]["kind"] == "validation"
    assert abs(doc["error"]["report"]["sum_error"] - 0.1) < 1e-12
    assert doc["all_hold"] is False


def test_out_of_range_entry_exits_2(capsys):
    code, doc = run_json(capsys, "negate", "--dist", "1.5,-0.5")
    assert code == EXIT_VALIDATION
    assert doc["error"]["report"]["bad_indices"] == [0, 1]


def test_single_entry_exits_2(capsys):
    code, _, _ = run(capsys, "negate", "--dist", "1.0")
    assert code == EXIT_VALIDATION


def test_unparseable_value_exits_4(capsys):
    code, _, err = run(capsys, "negate", "--dist", "abc,0.5")
    assert code == EXIT_USAGE
    assert "error" in err


def test_missing_input_exits_4(capsys):
    code, _, err = run(capsys, "entropy")
    assert code == EXIT_USAGE


def test_unknown_flag_exits_4(capsys):
    code, _, _ = run(capsys, "negate", "--bogus", "1")
    assert code == EXIT_USAGE


def test_unknown_function_exits_4(capsys):
    code, _, err = run(capsys, "verify", "--dist", "uniform:3", "--fn", "septic")
    assert code == EXIT_USAGE
    assert "neg_log" in err


def test_entropy_values(capsys):
    code, doc = run_json(capsys, "entropy", "--dist", "uniform:4")
    assert code == EXIT_OK
    rec = doc["results"][0]
    assert rec["entropy_bits"] == 2.0
    assert rec["gap_bits"] == 0.0


def test_converge_trace(capsys):
    code, doc = run_json(capsys, "converge", "--dist", "1/3,1/6,1/6,1/3", "--tol", "1e-6")
    assert code == EXIT_OK
    rec = doc["results"][0]
    assert rec["converged"] is True
    assert rec["steps"] == 11
    assert len(rec["iterates"]) == 12


def test_converge_oscillation_marker(capsys):
    code, doc = run_json(capsys, "converge", "--dist", "0.9,0.1", "--tol", "1e-6")
    assert code == EXIT_OK  # non-convergence is a reported state, not an error
    rec = doc["results"][0]
    assert rec["oscillating"] is True
    assert rec["converged"] is False


def test_verify_all_hold(capsys):
    code, doc = run_json(capsys, "verify", "--dist", "1/3,1/6,1/6,1/3", "--fn", "neg_log")
    assert code == EXIT_OK
    rec = doc["results"][0]
    assert rec["all_hold"] is True
    assert rec["failing"] == []
    names = {c["name"] for c in rec["certificates"]}
    assert "mixture_bound" in names
    assert "self_information_bound" in names
    assert "double_negation_mixture_bound" in names
    assert "concave_mixture_bound" in names
    assert "cross_entropy" in names
    assert "entropy_chain" in names
    assert "pointwise_bound[i=0]" in names
    assert "partial_mean_chain[i=0]" in names


def test_verify_uniform_equality_flags(capsys):
    code, doc = run_json(capsys, "verify", "--dist", "uniform:6", "--fn", "neg_log")
    assert code == EXIT_OK
    for cert in doc["results"][0]["certificates"]:
        assert cert["holds"]
        if cert["name"] != "cross_entropy":
            continue
        assert cert["equality"]


def test_verify_symmetric_peak_reports_equality(capsys):
    code, doc = run_json(capsys, "verify", "--dist", "1/8,1/8,1/2,1/8,1/8", "--fn", "neg_log")
    assert code == EXIT_OK
    certs = {c["name"]: c for c in doc["results"][0]["certificates"]}
    # the chain that excludes the central peak collapses to equality at 3 bits
    peak = certs["partial_mean_chain[i=2]"]
    assert peak["equality"] and peak["lhs"] == 3.0


def test_verify_two_outcomes_skips_chain(capsys):
    code, doc = run_json(capsys, "verify", "--dist", "0.7,0.3", "--fn", "square")
    assert code == EXIT_OK
    rec = doc["results"][0]
    assert not any(c["name"].startswith("partial_mean_chain") for c in rec["certificates"])
    assert any("skipped" in note for note in rec["notes"])


def test_verify_concave_function_flips_roles(capsys):
    code, doc = run_json(capsys, "verify", "--dist", "1/3,1/6,1/6,1/3", "--fn", "x_log_x")
    assert code == EXIT_OK
    assert doc["results"][0]["all_hold"] is True


def test_dissim_profile(capsys):
    code, doc = run_json(capsys, "dissim", "--dist", "1/3,1/6,1/6,1/3", "--alpha", "0,1,2")
    assert code == EXIT_OK
    rec = doc["results"][0]
    values = [r["value"] for r in rec["profile"]]
    assert abs(values[0] - 0.16992500144231236) <= 1e-12
    assert abs(values[1] - 0.08246216019197295) <= 1e-12
    assert values[0] > values[1] > values[2]
    assert rec["properties"]["holds"] is True
    assert len(rec["iterated"]["results"]) == 3  # default depth


def test_dissim_flag_validation(capsys):
    code, _, _ = run(capsys, "dissim", "--dist", "uniform:3", "--alpha", "2,1")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "dissim", "--dist", "uniform:3", "--alpha", "0", "--depth", "0")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "dissim", "--dist", "uniform:3", "--alpha", "x")
    assert code == EXIT_USAGE


def test_report_passes(capsys):
    code, doc = run_json(capsys, "report")
    assert code == EXIT_OK
    assert doc["all_hold"] is True
    names = [f["name"] for f in doc["results"]]
    assert "negation_golden_four_outcomes" in names
    assert "symmetric_peak_equality" in names
    assert "dissimilarity_golden" in names
    assert all(f["passed"] for f in doc["results"])
    dis = next(f for f in doc["results"] if f["name"] == "dissimilarity_golden")
    assert dis["claimed_non_decreasing_direction_holds"] is False


def test_env_tolerance_override(capsys, monkeypatch):
    monkeypatch.setenv("NEGLAB_TOL", "1e-2")
    # off by 1e-3 in mass: passes at the env tolerance
    code, doc = run_json(capsys, "negate", "--dist", "0.5,0.501")
    assert code == EXIT_OK
    assert doc["input"]["tolerance"] == 1e-2
    # an explicit flag wins over the env var
    monkeypatch.setenv("NEGLAB_TOL", "1e-12")
    code, _, _ = run(capsys, "negate", "--dist", "0.5,0.501", "--tol", "1e-2")
    assert code == EXIT_OK


def test_env_tolerance_invalid_exits_4(capsys, monkeypatch):
    monkeypatch.setenv("NEGLAB_TOL", "not-a-number")
    code, _, _ = run(capsys, "negate", "--dist", "0.5,0.5")
    assert code == EXIT_USAGE


def test_text_format_uses_15_digits(capsys):
    code, out, _ = run(capsys, "entropy", "--dist", "1/3,1/6,1/6,1/3")
    assert code == EXIT_OK
    assert "1.91829583405449" in out
    assert "1.918295834054489" not in out  # 16th digit must not appear


def test_csv_format(capsys):
    code, out, _ = run(capsys, "negate", "--dist", "uniform:3", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["dist", "index", "p", "negation", "double_negation"]
    assert len(rows) == 4


def test_csv_verify_flattens_certificates(capsys):
    code, out, _ = run(capsys, "verify", "--dist", "uniform:4", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(out.splitlines()))
    assert {"name", "lhs", "rhs", "slack", "holds"} <= set(rows[0])
    assert any(r["name"].startswith("entropy_chain/") for r in rows)


def test_json_file_input(capsys, tmp_path):
    path = tmp_path / "batch.json"
    path.write_text(json.dumps([[0.5, 0.5], [0.25, 0.25, 0.25, 0.25]]))
    code, doc = run_json(capsys, "entropy", "--file", str(path))
    assert code == EXIT_OK
    assert [r["entropy_bits"] for r in doc["results"]] == [1.0, 2.0]


def test_csv_file_input(capsys, tmp_path):
    path = tmp_path / "batch.csv"
    path.write_text("1/2,1/2\n1/4,1/4,1/4,1/4\n")
    code, doc = run_json(capsys, "entropy", "--file", str(path))
    assert code == EXIT_OK
    assert len(doc["results"]) == 2


def test_file_with_bad_row_exits_2(capsys, tmp_path):
    path = tmp_path / "batch.json"
    path.write_text(json.dumps([[0.5, 0.5], [0.9, 0.3]]))
    code, doc = run_json(capsys, "entropy", "--file", str(path))
    assert code == EXIT_VALIDATION
    assert doc["error"]["index"] == 1


def test_missing_file_exits_4(capsys, tmp_path):
    code, _, _ = run(capsys, "entropy", "--file", str(tmp_path / "nope.json"))
    assert code == EXIT_USAGE


def test_json_round_trip_bit_for_bit(capsys, tmp_path):
    first = tmp_path / "first.json"
    code, _, _ = run(
        capsys, "negate", "--dist", "0.20000001,0.3,0.2,0.29999999",
        "--format", "json", "--out", str(first),
    )
    assert code == EXIT_OK
    doc1 = json.loads(first.read_text())

    second = tmp_path / "second.json"
    code, _, _ = run(
        capsys, "negate", "--file", str(first), "--format", "json", "--out", str(second),
    )
    assert code == EXIT_OK
    doc2 = json.loads(second.read_text())
    assert doc1["results"] == doc2["results"]
    assert doc1["input"]["distributions"] == doc2["input"]["distributions"]


def test_emitted_negation_reingests_exactly(capsys):
    # feed a result distribution back in: values survive JSON unchanged
    code, doc = run_json(capsys, "negate", "--dist", "1/3,1/6,1/6,1/3")
    neg = doc["results"][0]["negation"]
    code, doc2 = run_json(capsys, "negate", "--dist", ",".join(repr(v) for v in neg))
    assert code == EXIT_OK
    assert doc2["input"]["distributions"][0] == neg
    assert doc2["results"][0]["distribution"] == neg


def test_out_file_writing(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "report", "--format", "json", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["all_hold"] is True


def test_help_exits_0(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == EXIT_OK
    assert "negate" in out
