import json

import pytest

from vpfbetti.cli import main
from vpfbetti.rees import ci_shifts, serialize


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_count_basic(capsys):
    rc, out, _ = run(capsys, "count", "--degrees", "2,3,6,7", "9,2")
    assert rc == 0 and out.strip() == "2"


def test_count_origin(capsys):
    rc, out, _ = run(capsys, "count", "--degrees", "2,3,6,7", "0,0")
    assert rc == 0 and out.strip() == "1"


def test_count_outside(capsys):
    rc, out, _ = run(capsys, "count", "--degrees", "2,3,6,7", "1,0")
    assert rc == 0 and out.strip() == "0"


def test_count_matrix_file(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"rows": [[1, 0, 1], [0, 1, 1]]}))
    rc, out, _ = run(capsys, "count", "--matrix", str(path), "2,2")
    # (2,2) = 2*(1,1) = (1,0)+(0,1)+(1,1) = 2*(1,0)+2*(0,1): three ways
    assert rc == 0 and out.strip() == "3"


def test_count_usage_error(capsys):
    rc, _, err = run(capsys, "count", "9,2")
    assert rc == 2 and "error" in err


def test_count_bad_point(capsys):
    rc, _, err = run(capsys, "count", "--degrees", "2,3", "a,b")
    assert rc == 2


def test_hilbert_ring(capsys):
    rc, out, _ = run(capsys, "hilbert", "--degrees", "2,3,6", "12,2")
    assert rc == 0
    assert out.startswith("1")
    assert "chamber=C2" in out


def test_hilbert_module(capsys, tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(serialize(ci_shifts((2, 3, 6))))
    rc, out, _ = run(capsys, "hilbert", "--spec", str(path), "--index", "1", "28,10")
    assert rc == 0 and out.strip() == "3"


def test_chambers_table(capsys):
    rc, out, _ = run(capsys, "chambers", "--degrees", "2,3,6")
    assert rc == 0
    assert "mu - 2t >= 0, 3t - mu >= 0" in out
    assert "global lattice det: 12" in out


def test_chambers_structured_deterministic(capsys):
    rc1, out1, _ = run(capsys, "chambers", "--degrees", "2,3,6", "--format", "structured")
    rc2, out2, _ = run(capsys, "chambers", "--degrees", "2,3,6", "--format", "structured")
    assert rc1 == rc2 == 0 and out1 == out2
    doc = json.loads(out1)
    assert doc["global_lattice"]["det"] == 12


def test_chambers_csv(capsys):
    rc, out, _ = run(capsys, "chambers", "--degrees", "2,3,6", "--format", "csv")
    assert rc == 0 and out.splitlines()[0] == "chamber,lo,hi,ineq1,ineq2,det"


def test_regions_tor2_lines(capsys):
    rc, out, _ = run(capsys, "regions", "--degrees", "2,3,6", "--index", "2")
    assert rc == 0
    for text in ("mu = 2t + 9", "mu = 3t + 8", "mu = 6t + 5"):
        assert text in out


def test_regions_tor0_lines(capsys):
    rc, out, _ = run(capsys, "regions", "--degrees", "2,3,6", "--index", "0")
    assert rc == 0
    for text in ("mu = 2t", "mu = 3t", "mu = 6t"):
        assert text in out


def test_regions_ci_12(capsys):
    rc, out, _ = run(capsys, "regions", "--degrees", "1,2", "--index", "1")
    assert rc == 0
    assert "mu = 1t + 2" in out and "mu = 2t + 1" in out


def test_regions_empty_index(capsys):
    rc, out, _ = run(capsys, "regions", "--degrees", "2,3,6", "--index", "3")
    assert rc == 0 and "empty decomposition" in out


def test_regions_structured_reingestable_lattice(capsys):
    rc, out, _ = run(
        capsys, "regions", "--degrees", "2,3,6", "--index", "1", "--format", "structured"
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["t0"] == 5 and doc["modulus"] == 12
    assert len(doc["lines"]) == 12


def test_regions_svg(capsys, tmp_path):
    out_file = tmp_path / "fig.svg"
    rc, _, _ = run(
        capsys,
        "regions", "--degrees", "2,3,6", "--index", "1",
        "--format", "svg", "--tmax", "12", "--out", str(out_file),
    )
    assert rc == 0
    svg = out_file.read_text()
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert "polygon" in svg and "mu = 6t + 3" in svg


def test_rees_ci_roundtrip(capsys):
    rc, out, _ = run(capsys, "rees-ci", "--degrees", "2,3,6")
    assert rc == 0
    from vpfbetti.rees import ingest

    assert ingest(out) == ci_shifts((2, 3, 6))


def test_rees_ci_deterministic(capsys):
    _, out1, _ = run(capsys, "rees-ci", "--degrees", "2,3,6")
    _, out2, _ = run(capsys, "rees-ci", "--degrees", "2,3,6")
    assert out1 == out2


def test_verify_pass(capsys):
    rc, out, _ = run(capsys, "verify", "--degrees", "2,3,6", "--tmax", "12")
    assert rc == 0
    assert "all checks passed" in out
    assert "[FAIL]" not in out


def test_verify_corrupted_fails_with_witness(capsys, tmp_path):
    doc = json.loads(serialize(ci_shifts((2, 3, 6))))
    for entry in doc["tor"]:
        if entry["index"] == 1:
            for shift in entry["shifts"]:
                if shift["a"] == [5, 1]:
                    shift["c"] = -1  # sign flip: no genuine module has this
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    rc, out, _ = run(capsys, "verify", "--spec", str(path), "--tmax", "10")
    assert rc == 1
    assert "[FAIL]" in out and "witness=" in out


def test_verify_tmax_zero_warns(capsys):
    rc, out, err = run(capsys, "verify", "--degrees", "2,3,6", "--tmax", "0")
    assert rc == 0
    assert "warning" in err
    assert "nothing checked" in out


def test_verify_structured(capsys):
    rc, out, _ = run(
        capsys, "verify", "--degrees", "2,3,6", "--tmax", "8", "--format", "structured"
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert all(c["passed"] for c in doc["checks"])


def test_reproduce(capsys):
    rc, out, _ = run(capsys, "reproduce", "--tmax", "8")
    assert rc == 0
    assert "[[1, 0, 0], [0, 1, 0]]" in out
    assert "mu - 2t >= 0, 3t - mu >= 0" in out
    assert "(28, 10), index 1: 3" in out
    assert "(Q2 + Q2)" in out and "(8, -1)" in out
    assert "all checks passed" in out


def test_reproduce_unknown_id(capsys):
    rc, _, err = run(capsys, "reproduce", "9.99")
    assert rc == 2 and "unknown example id" in err


def test_missing_file(capsys):
    rc, _, err = run(capsys, "verify", "--spec", "/nonexistent/x.json")
    assert rc == 2


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    rc, out, _ = run(capsys, "count", "--degrees", "2,3", "5,2", "--out", str(target))
    assert rc == 0 and out == ""
    assert target.read_text().strip() == "1"


def test_regions_degenerate_single_degree(capsys):
    rc, out, _ = run(capsys, "regions", "--degrees", "1,1", "--index", "1")
    assert rc == 0
    assert "single-degree support" in out
    assert "mu = 1t + 1" in out


def test_regions_degenerate_svg(capsys, tmp_path):
    target = tmp_path / "ray.svg"
    rc, _, _ = run(
        capsys, "regions", "--degrees", "1,1", "--index", "1",
        "--format", "svg", "--out", str(target),
    )
    assert rc == 0
    assert target.read_text().startswith("<svg")
