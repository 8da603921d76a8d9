from __future__ import annotations

import subprocess
import sys

import numpy as np
import pytest

from psmcodes import example1 as ex
from psmcodes.bounds import verify_gv
from psmcodes.cli import BOUNDS_HEADER, GV_HEADER, main, parse_range
from psmcodes.matrix import load_matrix


@pytest.fixture(scope="module")
def scheme_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "example.scheme"
    assert main(["example1", "--write-scheme", str(path), "--out", str(path) + ".report"]) == 2
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("0..3") == [0, 1, 2, 3]
    assert parse_range("1,4..5") == [1, 4, 5]
    assert parse_range("") == []


def test_bounds_default_grid(capsys):
    code, out, _ = run(capsys, "bounds")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == BOUNDS_HEADER
    assert len(lines) == 1 + 546
    first = lines[1].split(",")
    assert first[:6] == ["121", "3", "0", "0", "1", "non_overlapping"]
    assert float(first[-1]) == 121.0


def test_bounds_empty_grid(capsys):
    code, out, _ = run(capsys, "bounds", "--u", "")
    assert code == 0 and out == BOUNDS_HEADER + "\n"


def test_bounds_human_and_invalid(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "10", "--u", "2", "--t", "1", "--format", "human")
    assert code == 0 and "max_cardinality" in out.splitlines()[0]
    code, _, err = run(capsys, "bounds", "--q", "2", "--model", "overlap", "--u", "1")
    assert code == 2 and "error:" in err


def test_gv_table(capsys):
    code, out, _ = run(capsys, "gv", "--nf", "127", "--kf", "1..127", "--q", "2")
    rows = [list(map(int, r.split(","))) for r in out.splitlines()[1:]]
    assert out.splitlines()[0] == GV_HEADER
    assert len(rows) == 127
    ds = [r[3] for r in rows]
    assert all(a >= b for a, b in zip(ds, ds[1:]))
    assert rows[-1] == [127, 127, 2, 1]


def test_gv_construct(capsys, tmp_path):
    path = tmp_path / "H.txt"
    code, out, _ = run(capsys, "gv", "--construct", "--n", 7, "--k", 4, "--d", 3, "--q", 2, "--out", path)
    assert code == 0 and "verify=ok" in out
    H = load_matrix(path)
    assert verify_gv(H, 7, 4, 3).ok


def test_verify_example(capsys, scheme_file):
    code, out, _ = run(capsys, "verify", "--scheme", scheme_file)
    assert code == 0
    assert "FAIL" not in out
    assert out.splitlines()[-1] == "valid scheme: d=3 d0=3 u0=2"


def test_verify_reports_failure(capsys, scheme_file, tmp_path):
    bad = tmp_path / "bad.scheme"
    lines = scheme_file.read_text().splitlines()
    lines[1] = "14 4 2 4 6 4"  # t = 2 exceeds what d = 3 allows
    bad.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", "--scheme", bad)
    assert code == 2
    assert "FAIL  distance" in out


def test_encode_decode_files(capsys, scheme_file, tmp_path):
    msg = tmp_path / "msg.txt"
    msg.write_text(" ".join(map(str, list(ex.M) + list(ex.M_PRIME))) + "\n")
    cw = tmp_path / "cw.txt"
    assert run(capsys, "encode", "--scheme", scheme_file, "--message", msg,
               "--stuck", "1,2,9,14", "--out", cw)[0] == 0
    c = np.array(cw.read_text().split(), dtype=int)
    assert np.all(c[[1, 2, 9, 14]] != 0)
    c[5] ^= 2
    cw.write_text(" ".join(map(str, c)) + "\n")
    code, out, _ = run(capsys, "decode", "--scheme", scheme_file, "--input", cw)
    assert code == 0
    assert out.split() == [str(v) for v in list(ex.M) + list(ex.M_PRIME)]


def test_decode_failure_exit_code(capsys, scheme_file, tmp_path):
    from psmcodes.code import error_patterns
    from psmcodes.errors import DecodeFailure
    from psmcodes.psmc import load_scheme
    S = load_scheme(scheme_file)
    c = S.encode(ex.M, ex.M_PRIME, ex.PHI)
    for pos, vals in error_patterns(15, 4, 2):
        y = c.copy()
        y[list(pos)] ^= np.array(vals)
        try:
            S.decode(y)
        except DecodeFailure:
            break
    else:
        pytest.fail("every weight-2 error decoded")
    path = tmp_path / "y.txt"
    path.write_text(" ".join(map(str, y)) + "\n")
    assert run(capsys, "decode", "--scheme", scheme_file, "--input", path)[0] == 3


def test_format_errors(capsys, scheme_file, tmp_path):
    assert run(capsys, "verify", "--scheme", tmp_path / "missing")[0] == 4
    junk = tmp_path / "junk.scheme"
    junk.write_text("field 2 2 7\nnot numbers\n")
    assert run(capsys, "verify", "--scheme", junk)[0] == 4
    short = tmp_path / "short.txt"
    short.write_text("1 2 3\n")
    assert run(capsys, "decode", "--scheme", scheme_file, "--input", short)[0] == 4


def test_budget_exit_code(capsys, tmp_path):
    # GF(16) with k = l + k1 + 1 = 7 needs 16^7 = 2^28 codewords for the exact sweep
    path = tmp_path / "big.scheme"
    path.write_text(
        "field 2 4 19\n"
        "9 1 1 2 4 3\n"
        "field 2 1 2\n2 9\n1 0 1 1 0 1 1 0 1\n0 1 1 0 1 1 0 1 1\n"
        "field 2 4 19\n4 3\n1 2 3\n4 5 6\n7 8 9\n10 11 12\n")
    code, _, err = run(capsys, "verify", "--scheme", path)
    assert code == 5
    assert "budget" in err


def test_simulate_reproducible(capsys, scheme_file, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert run(capsys, "simulate", "--scheme", scheme_file, "--trials", 300,
                   "--t", "0..1", "--seed", 5, "--model", "overlap", "--out", path)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "trials,t_actual,model,seed,masking_violations,decode_failures,message_mismatches"
    assert lines[1:] == ["300,0,overlapping,5,0,0,0", "300,1,overlapping,5,0,0,0"]


def test_example1_report(capsys):
    code, out, _ = run(capsys, "example1")
    assert "Construction 1: 4^8 > prior: 4^7" in out
    assert "PASS  roundtrip under all errors of weight <= 1  46/46" in out
    assert "PASS  prior generator distance >= 3  d=3" in out
    # the two printed generator matrices do not share a reduced echelon form
    assert "FAIL  RREF(G) == RREF(G')" in out
    assert code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "psmcodes", "gv", "--nf", "8", "--kf", "4"],
                         capture_output=True, text=True, check=True).stdout
    assert out == "n_f,k_f,q,d_max\n8,4,2,2\n"
