import json

from weil.cli import main

SO3_FILE = """
{
  "dim": 3,
  "f": [[1, 2, 3, "1"], [2, 3, 1, "1"], [1, 3, 2, "-1"]],
  "B": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
}
"""

# one structure constant's target corrupted: [e2,e3] = e2 instead of e1
CORRUPTED_FILE = """
{
  "dim": 3,
  "f": [[1, 2, 3, "1"], [2, 3, 2, "1"], [1, 3, 2, "-1"]],
  "B": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
}
"""


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_builtin(capsys):
    code, out, _ = run(["validate", "--builtin", "so3"], capsys)
    assert code == 0
    assert "ok    lie algebra so3" in out
    assert "orthonormal" in out


def test_validate_file(tmp_path, capsys):
    path = tmp_path / "so3.json"
    path.write_text(SO3_FILE)
    code, out, _ = run(["validate", str(path)], capsys)
    assert code == 0


def test_validate_corrupted_file_names_triple(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(CORRUPTED_FILE)
    code, out, _ = run(["validate", str(path)], capsys)
    assert code == 1
    assert "jacobi violation at (1,2,3)" in out


def test_check_classical_exit_zero(capsys):
    code, out, _ = run(
        ["check", "--builtin", "so3", "--rep", "adjoint", "--classical", "--samples", "10"],
        capsys,
    )
    assert code == 0
    assert "pass  cartan formula" in out
    assert "all identities hold" in out


def test_check_quantum_exit_zero(capsys):
    code, out, _ = run(
        ["check", "--builtin", "so3", "--rep", "adjoint", "--quantum", "--samples", "10"],
        capsys,
    )
    assert code == 0
    assert "gamma" in out
    assert "all identities hold" in out


def test_check_corrupted_file_exits_one(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(CORRUPTED_FILE)
    code, out, _ = run(
        ["check", "--file", str(path), "--rep", "adjoint", "--classical"], capsys
    )
    assert code == 1
    assert "jacobi violation at (1,2,3)" in out


def test_eval_golden(capsys):
    code, out, _ = run(
        ["eval", "--builtin", "so3", "--rep", "adjoint", "--classical", "d(C)"], capsys
    )
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(
        ["eval", "--builtin", "so3", "--rep", "trivial", "--quantum", "gamma*gamma"],
        capsys,
    )
    assert code == 0 and out.strip() == "-1/8"
    code, out, _ = run(
        ["eval", "--builtin", "abelian(2)", "--rep", "trivial", "--classical", "d(d(y1))"],
        capsys,
    )
    assert code == 0 and out.strip() == "0"


def test_eval_error_position(capsys):
    code, _, err = run(
        ["eval", "--builtin", "so3", "--rep", "adjoint", "--classical", "u1"], capsys
    )
    assert code == 1
    assert "1:1" in err and "classical" in err


def test_flat_json_schema(capsys):
    code, out, _ = run(
        ["flat", "--builtin", "so3", "--rep", "adjoint", "--quantum",
         "--max-degree", "1", "--json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["algebra"] == "quantum"
    assert data["lie"] == "so3"
    assert data["N"] == 1
    assert {row["deg"] for row in data["per_degree"]} == {0, 1}
    for row in data["per_degree"]:
        assert set(row) == {"deg", "dim_basic", "dim_flat", "basic_subset_flat",
                            "s_basic_equals_flat"}
    assert "decomposition" in data and "closure" in data
    assert data["seed"] == 0


def test_flat_text_output(capsys):
    code, out, _ = run(
        ["flat", "--builtin", "so3", "--rep", "adjoint", "--classical",
         "--max-degree", "1"],
        capsys,
    )
    assert code == 0
    assert "decomposition factor" in out


def test_flat_deterministic(capsys):
    args = ["flat", "--builtin", "so3", "--rep", "adjoint", "--quantum",
            "--max-degree", "1", "--json", "--seed", "7"]
    code1, out1, _ = run(args, capsys)
    code2, out2, _ = run(args, capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_usage_errors_exit_two(capsys):
    code, _, err = run(["check", "--builtin", "e8", "--classical"], capsys)
    assert code == 2 and "unknown builtin" in err
    code, _, err = run(["check", "--rep", "adjoint", "--classical"], capsys)
    assert code == 2
    code, _, err = run(
        ["check", "--builtin", "sl2", "--rep", "adjoint", "--quantum"], capsys
    )
    assert code == 2 and "orthonormal" in err
    code, _, err = run(
        ["eval", "--builtin", "so3", "--file", "x.json", "--classical", "C"], capsys
    )
    assert code == 2


def test_unknown_rep_exits_two(capsys):
    code, _, err = run(
        ["check", "--builtin", "heisenberg3", "--rep", "spin", "--classical"], capsys
    )
    assert code == 2 and "unknown representation" in err


def test_report_single_builtin(capsys):
    code, out, _ = run(
        ["report", "--builtin", "abelian(2)", "--samples", "3", "--max-degree", "1"],
        capsys,
    )
    assert code == 0
    assert "report: all pass" in out


def test_report_all_builtins(capsys):
    code, out, _ = run(
        ["report", "--all-builtins", "--samples", "2", "--max-degree", "1"], capsys
    )
    assert code == 0
    assert "report: all pass" in out
    for name in ("abelian(2)", "heisenberg3", "so3", "sl2"):
        assert f"== {name} ==" in out
    # quantum sections only exist where an orthonormal form ships
    assert "sl2 rep adjoint (quantum)" not in out
    assert "so3 rep adjoint (quantum)" in out
