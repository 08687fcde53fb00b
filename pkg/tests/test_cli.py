import csv
import io
import json

from skewbrace.cli import main
from skewbrace.oracle import SkewBrace, verify_skew_brace


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_groups_listing(capsys):
    code, out, _ = run_cli(["groups", "6"], capsys)
    assert code == 0
    assert out.count("G(") == 2
    code, out, _ = run_cli(["groups", "42"], capsys)
    assert code == 0
    assert out.count("\n") == 7  # header + 6 rows


def test_groups_rejects_non_squarefree(capsys):
    code, _, err = run_cli(["groups", "12"], capsys)
    assert code == 2
    assert "2^2" in err


def test_count_totals(capsys):
    code, out, _ = run_cli(["count", "6"], capsys)
    assert code == 0 and "total 6" in out
    code, out, _ = run_cli(["count", "21"], capsys)
    assert code == 0 and "total 8" in out


def test_count_single_entry_and_selector_forms(capsys):
    for selector in ("1", "2:3:2", "G(2,3,2)"):
        code, out, _ = run_cli(["count", "6", "--m", "0", "--a", selector], capsys)
        assert code == 0 and out.strip() == "2"
    code, _, err = run_cli(["count", "6", "--m", "5", "--a", "0"], capsys)
    assert code == 2 and "out of range" in err
    code, _, err = run_cli(["count", "6", "--m", "2:3:1", "--a", "0"], capsys)
    assert code == 2


def test_count_json_and_csv_agree(capsys):
    code, json_out, _ = run_cli(["count", "42", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(json_out)
    assert payload["total"] == 78
    code, csv_out, _ = run_cli(["count", "42", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(csv_out)))
    labels = rows[0][1:-1]
    assert labels == payload["groups"]
    numeric = [[int(v) for v in row[1:-1]] for row in rows[1:]]
    assert numeric == payload["matrix"]
    assert "\r" not in csv_out


def test_table_always_full_matrix(capsys):
    code, out, _ = run_cli(["table", "6", "--m", "0", "--a", "0", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["matrix"] == [[1, 2], [1, 2]]


def test_oracle_command(capsys):
    code, out, _ = run_cli(["oracle", "10", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert all(p["b_formula"] == p["b_oracle_quintuple"] for p in payload["pairs"])


def test_verify_command_exit_codes(capsys):
    code, out, _ = run_cli(["verify", "10"], capsys)
    assert code == 0
    assert "all checks passed" in out
    code, _, err = run_cli(["verify", "4"], capsys)
    assert code == 2
    code, _, err = run_cli(["verify", "34", "--strategy", "both"], capsys)
    assert code == 3  # above the default generic bound


def test_verify_json_schema(capsys):
    code, out, _ = run_cli(["verify", "6", "--format", "json", "--strategy", "both"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["total_formula"] == payload["total_oracle"] == 6
    assert {p["m"] for p in payload["pairs"]} == {"G(1,6,1)", "G(2,3,2)"}


def test_brace_dump_roundtrip(capsys):
    code, out, _ = run_cli(["brace", "6", "--m", "G(2,3,2)", "--a", "G(2,3,2)", "--index", "0"], capsys)
    assert code == 0
    payload = json.loads(out)
    brace = SkewBrace.from_dict(payload)
    assert verify_skew_brace(brace)
    assert payload["lambda_table"] == [list(r) for r in brace.lambda_table]
    # indices 0 and 1 give distinct braces; index 2 is out of range
    code, out2, _ = run_cli(["brace", "6", "--m", "1", "--a", "1", "--index", "1"], capsys)
    assert code == 0
    assert json.loads(out2)["mul_table"] != payload["mul_table"]
    code, _, err = run_cli(["brace", "6", "--m", "1", "--a", "1", "--index", "2"], capsys)
    assert code == 2 and "out of range" in err
    # b = 0 pair: any index is out of range
    code, _, err = run_cli(["brace", "42", "--m", "G(2,21,20)", "--a", "G(6,7,3)"], capsys)
    assert code == 2


def test_trivial_brace_tables_coincide(capsys):
    code, out, _ = run_cli(["brace", "6", "--m", "0", "--a", "0", "--index", "0"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["add_table"] == payload["mul_table"]


def test_outputs_deterministic(capsys):
    first = run_cli(["verify", "6", "--format", "json", "--workers", "1"], capsys)
    second = run_cli(["verify", "6", "--format", "json", "--workers", "2"], capsys)
    assert first == second
