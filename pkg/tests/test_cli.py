import json
import subprocess
import sys

from invol.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_ok(capsys):
    code, out, _ = run(
        capsys, "verify", "--algebra", "mat:4:symplectic", "--field", "q",
        "--theorem", "s2_equals_r",
    )
    assert code == 0
    assert "Verified" in out


def test_verify_quaternions_k2(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "quat", "--theorem", "k2_equals_r")
    assert code == 0 and "Verified" in out


def test_verify_mismatch_is_a_negative(capsys):
    code, out, _ = run(
        capsys, "verify", "--algebra", "mat:2:symplectic", "--theorem", "s3_equals_r"
    )
    assert code == 1
    assert "HypothesisFailed" in out


def test_verify_with_expect_file(capsys, tmp_path):
    expect = tmp_path / "expect.json"
    expect.write_text(json.dumps({"s3_equals_r": "HypothesisFailed"}))
    code, out, _ = run(
        capsys, "verify", "--algebra", "mat:2:symplectic",
        "--theorem", "s3_equals_r", "--expect", str(expect),
    )
    assert code == 0


def test_verify_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "--algebra", "mat:3:symplectic", "--theorem", "s3_equals_r")
    assert code == 2 and "even n" in err
    code, _, err = run(capsys, "verify", "--algebra", "mat:3:transpose", "--theorem", "nope")
    assert code == 2 and "unknown theorem" in err
    code, _, err = run(capsys, "verify", "--algebra", "oct:3", "--theorem", "s3_equals_r")
    assert code == 2


def test_verify_all_theorems_with_expectations(capsys, tmp_path):
    # on the quaternions every non-Verified entry is a HypothesisFailed
    code, out, _ = run(capsys, "verify", "--algebra", "quat", "--format", "json")
    assert code == 1
    payload = json.loads(out)
    statuses = {r["theorem"]: r["status"] for r in payload["reports"]}
    assert set(statuses.values()) <= {"Verified", "HypothesisFailed"}
    expect = tmp_path / "expect.json"
    expect.write_text(json.dumps(statuses))
    code, out, _ = run(capsys, "verify", "--algebra", "quat", "--expect", str(expect))
    assert code == 0


def test_span_command(capsys):
    code, out, _ = run(capsys, "span", "--algebra", "mat:2:symplectic", "--expr", "S^3")
    assert code == 0
    assert "dim 1 of 4" in out


def test_witness_search_command(capsys):
    code, out, _ = run(
        capsys, "witness-search", "--algebra", "mat:3:transpose", "--criterion", "first"
    )
    assert code == 0 and "found" in out
    code, out, _ = run(
        capsys, "witness-search", "--algebra", "mat:2:symplectic", "--criterion", "first"
    )
    assert code == 1 and "exhausted" in out
    code, out, _ = run(
        capsys, "witness-search", "--algebra", "mat:3:transpose",
        "--criterion", "g", "--pool", "basis",
    )
    assert code == 1 and "exhausted" in out
    code, _, err = run(
        capsys, "witness-search", "--algebra", "mat:3:transpose", "--criterion", "zz"
    )
    assert code == 2


def test_decompose_writes_certificate(capsys, tmp_path):
    out_path = tmp_path / "cert.json"
    code, out, _ = run(
        capsys, "decompose", "--scheme", "s3", "--algebra", "mat:2:transpose",
        "--witness", "paper:s3_transpose_even", "--target", "e12",
        "--out", str(out_path),
    )
    assert code == 0 and "valid" in out
    certificate = json.loads(out_path.read_text())
    assert len(certificate["terms"]) <= 5

    from invol.decompose import certificate_from_json, verify_certificate

    assert verify_certificate(certificate_from_json(certificate)).valid


def test_decompose_s2_seeded(capsys):
    code, out, _ = run(
        capsys, "decompose", "--scheme", "s2", "--algebra", "mat:2:transpose",
        "--witness", "paper:s2_transpose", "--target", "random", "--seed", "7",
    )
    assert code == 0
    terms = int(out.split("certificate valid:")[1].split("terms")[0])
    assert terms <= 7


def test_decompose_obstruction_exit_code(capsys):
    code, out, _ = run(
        capsys, "decompose", "--scheme", "k_plus_k2", "--algebra", "mat:2:transpose",
        "--target", "random", "--seed", "1",
    )
    assert code == 1 and "obstruction" in out and "K^2" in out


def test_decompose_witness_file(capsys, tmp_path):
    from invol.criteria import named_witness
    from invol.fields import Rationals
    from invol.algebras import parse_algebra

    A = parse_algebra("mat:2:transpose", Rationals())
    x, y = named_witness(A, "s3_transpose_even")
    witness_path = tmp_path / "w.json"
    witness_path.write_text(json.dumps({"x": x.to_json(), "y": y.to_json()}))
    code, out, _ = run(
        capsys, "decompose", "--scheme", "s3", "--algebra", "mat:2:transpose",
        "--witness", f"file:{witness_path}", "--target", "e21",
    )
    assert code == 0 and "valid" in out


def test_decompose_bad_witness_name(capsys):
    code, _, err = run(
        capsys, "decompose", "--scheme", "s3", "--algebra", "mat:3:transpose",
        "--witness", "paper:s3_transpose_even", "--target", "e12",
    )
    assert code == 2 and "even n" in err


def test_identity_command(capsys, tmp_path):
    code, out, _ = run(capsys, "identity")
    assert code == 0 and "identities hold" in out
    code, out, _ = run(capsys, "identity", "--mutated")
    assert code == 1
    code, _, err = run(capsys, "identity", "--corpus", str(tmp_path / "missing.txt"))
    assert code == 2 and "not found" in err

    corpus = tmp_path / "tiny.txt"
    corpus.write_text("sym a b\na b = a b\n")
    code, out, _ = run(capsys, "identity", "--corpus", str(corpus))
    assert code == 0 and "1/1" in out


def test_reports_are_byte_identical_across_runs(capsys):
    argv = [
        "verify", "--algebra", "mat:3:transpose", "--theorem", "s2_equals_r",
        "--theorem", "k6", "--format", "json",
    ]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_json_output_has_sorted_keys(capsys):
    code, out, _ = run(
        capsys, "span", "--algebra", "quat", "--expr", "K^2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == sorted(payload)


def test_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "invol.cli", "span", "--algebra", "quat", "--expr", "S"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "dim 1 of 4" in result.stdout


def test_usage_error_from_argparse(capsys):
    assert main(["frobnicate"]) == 2
