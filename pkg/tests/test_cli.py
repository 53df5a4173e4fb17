import io
import json
from math import comb
from pathlib import Path

from colorcomplex.cli import main
from colorcomplex.jsonutil import canonical_json

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def homology_rows(stdout):
    """Parse table rows into {r: (basis, rank_down, rank_up, h)}."""
    rows = {}
    for line in stdout.splitlines():
        parts = line.split()
        if len(parts) == 5 and parts[0].lstrip("-").isdigit():
            r, basis, down, up, h = map(int, parts)
            rows[r] = (basis, down, up, h)
    return rows


def test_homology_complete_delta_json(capsys):
    code, out, _ = run(
        capsys,
        "homology",
        "--family",
        "complete",
        "--n",
        "5",
        "--k",
        "3",
        "--complex",
        "delta",
        "--format",
        "json",
    )
    assert code == 0
    report = json.loads(out)
    dims = {d["r"]: d["h"] for d in report["degrees"]}
    assert dims[1] == 10
    assert canonical_json(report) == out.strip()  # byte-identical round trip


def test_homology_diagonal_complement_table(capsys):
    code, out, _ = run(
        capsys,
        "homology",
        "--family",
        "diagonal",
        "--n",
        "5",
        "--k",
        "4",
        "--complex",
        "delta-complement",
    )
    assert code == 0
    rows = homology_rows(out)
    assert rows[0][3] == 2


def test_homology_full_cyclic_table(capsys):
    code, out, _ = run(capsys, "homology", "--n", "4", "--complex", "full-cyclic")
    assert code == 0
    rows = homology_rows(out)
    assert {r: v[3] for r, v in rows.items()} == {
        r: comb(3, r + 1) for r in range(-1, 3)
    }
    assert "euler 0" in out


def test_homology_restricted(capsys):
    code, out, _ = run(
        capsys,
        "homology",
        "--complex",
        "restricted",
        "--n",
        "5",
        "--forbidden",
        "2,3",
    )
    assert code == 0
    rows = homology_rows(out)
    assert {r: v[3] for r, v in rows.items()} == {-1: 0, 0: 1, 1: 3, 2: 3, 3: 1}


def test_homology_degree_filter(capsys):
    code, out, _ = run(
        capsys, "homology", "--n", "4", "--complex", "full-cyclic", "--degrees", "0:1"
    )
    assert code == 0
    assert set(homology_rows(out)) == {0, 1}
    code, out, _ = run(
        capsys,
        "homology",
        "--n",
        "4",
        "--complex",
        "full-cyclic",
        "--degrees",
        "2",
        "--format",
        "json",
    )
    assert code == 0
    degrees = json.loads(out)["degrees"]
    assert [d["r"] for d in degrees] == [2]


def test_homology_modular_warns(capsys):
    code, out, _ = run(
        capsys,
        "homology",
        "--n",
        "4",
        "--complex",
        "full-cyclic",
        "--method",
        "modular",
        "--prime",
        "1073741789",
    )
    assert code == 0
    assert "method modular prime 1073741789" in out
    assert "not certified" in out


def test_homology_jobs_do_not_change_output(capsys):
    args = ["homology", "--n", "5", "--complex", "full-cyclic", "--format", "json"]
    code1, out1, _ = run(capsys, *args, "--jobs", "1")
    code2, out2, _ = run(capsys, *args, "--jobs", "3")
    assert code1 == code2 == 0
    assert out1 == out2


def test_homology_dump_complex(capsys, tmp_path):
    target = tmp_path / "dump.txt"
    code, _, _ = run(
        capsys,
        "homology",
        "--n",
        "3",
        "--complex",
        "full-cyclic",
        "--dump-complex",
        str(target),
    )
    assert code == 0
    assert target.read_text() == (GOLDEN / "full_cyclic_3.dump").read_text()


def test_homology_dump_to_stdout(capsys):
    code, out, _ = run(
        capsys,
        "homology",
        "--n",
        "3",
        "--complex",
        "full-cyclic",
        "--dump-complex",
        "-",
    )
    assert code == 0
    assert out.startswith('complex {"kind":"full-cyclic","n":3}')


def test_homology_from_file(capsys, tmp_path):
    src = tmp_path / "h.json"
    src.write_text('{"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [1, 4], [1, 3], [2, 4]]}')
    code, out, _ = run(
        capsys, "homology", "--file", str(src), "--complex", "lambda", "--format", "json"
    )
    assert code == 0
    dims = {d["r"]: d["h"] for d in json.loads(out)["degrees"]}
    assert dims == {-1: 0, 0: 0, 1: 23, 2: 0}


def test_homology_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"n": 3, "edges": [[1, 2, 3]]}'))
    code, out, _ = run(
        capsys, "homology", "--file", "-", "--complex", "delta", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["complex"]["hypergraph"] == {"n": 3, "edges": [[1, 2, 3]]}


def test_usage_errors_exit_2(capsys):
    cases = [
        ("homology", "--complex", "delta"),  # no hypergraph source
        ("homology", "--family", "complete", "--n", "5"),  # missing --k
        ("homology", "--family", "nosuch", "--n", "5", "--k", "2"),
        ("homology", "--complex", "restricted", "--n", "5"),  # no --forbidden
        ("homology", "--n", "4", "--complex", "full-cyclic", "--degrees", "x"),
        ("homology", "--file", "/nonexistent/path.json", "--complex", "delta"),
        ("homology", "--family", "complete", "--file", "x.json", "--n", "4", "--k", "2"),
        ("verify",),  # needs --all or --theorem
        ("chromatic", "--family", "looped-complete", "--n", "3"),  # loops
        ("nosuchcommand",),
    ]
    for argv in cases:
        code, _, _ = run(capsys, *argv)
        assert code == 2, argv


def test_resource_ceiling_exits_3(capsys):
    code, _, err = run(
        capsys, "homology", "--family", "complete", "--n", "17", "--k", "2"
    )
    assert code == 3
    assert "exceeds" in err
    code, _, _ = run(
        capsys,
        "homology",
        "--family",
        "complete",
        "--n",
        "6",
        "--k",
        "2",
        "--max-n",
        "5",
    )
    assert code == 3


def test_verify_single_pass(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "3.4", "--n", "7", "--k", "4")
    assert code == 0
    assert "pass" in out


def test_verify_out_of_hypothesis(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "5.3", "--n", "5", "--k", "3")
    assert code == 0
    assert "out-of-hypothesis" in out


def test_verify_failure_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "3.4", "--n", "4", "--k", "2")
    assert code == 1
    assert "fail" in out


def test_verify_missing_instance_params(capsys):
    code, _, _ = run(capsys, "verify", "--theorem", "3.1", "--n", "5")
    assert code == 2


def test_verify_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "5.2", "--format", "json", "--max-n", "5"
    )
    assert code == 0
    parsed = json.loads(out)
    assert parsed["ok"] is True
    assert canonical_json(parsed) == out.strip()


def test_chromatic_eval(capsys):
    code, out, _ = run(
        capsys,
        "chromatic",
        "--family",
        "complete",
        "--n",
        "4",
        "--k",
        "2",
        "--eval",
        "-1",
    )
    assert code == 0
    assert "coeffs [0, -6, 11, -6, 1]" in out
    assert "chi(-1) = 24" in out


def test_chromatic_from_file(capsys, tmp_path):
    src = tmp_path / "h.json"
    src.write_text('{"n": 3, "edges": [[1, 2, 3]]}')
    code, out, _ = run(capsys, "chromatic", "--file", str(src))
    assert code == 0
    assert "coeffs [0, -1, 0, 1]" in out


def test_chromatic_edgeless_json(capsys, tmp_path):
    src = tmp_path / "h.json"
    src.write_text('{"n": 3, "edges": []}')
    code, out, _ = run(capsys, "chromatic", "--file", str(src), "--format", "json")
    assert code == 0
    assert json.loads(out) == {"coeffs": [0, 0, 0, 1]}
