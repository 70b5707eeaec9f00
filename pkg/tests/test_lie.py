from fractions import Fraction

import pytest

from weil.lie import (
    BilinearForm,
    LieData,
    RepData,
    adjoint_rep,
    builtin,
    load_algebra_file,
    trivial_rep,
    validate_form,
    validate_lie,
    validate_rep,
)
from weil.linalg import Matrix


def jacobi_oracle(lie):
    """Direct expansion of the Jacobi sum over every index quadruple."""
    n = lie.dim
    worst = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    s = sum(
                        lie.f(a, b, m) * lie.f(m, c, d)
                        + lie.f(b, c, m) * lie.f(m, a, d)
                        + lie.f(c, a, m) * lie.f(m, b, d)
                        for m in range(n)
                    )
                    if s != 0:
                        worst.append((a, b, c, d))
    return worst


def test_abelian_is_valid():
    alg = builtin("abelian(2)")
    assert validate_lie(alg.lie).ok
    assert alg.lie.dim == 2
    assert not alg.lie.entries


def test_so3_is_valid(so3):
    assert validate_lie(so3.lie).ok
    assert jacobi_oracle(so3.lie) == []
    assert so3.lie.f(0, 1, 2) == 1
    assert so3.lie.f(1, 0, 2) == -1
    assert so3.lie.f(1, 2, 0) == 1
    assert so3.lie.f(2, 0, 1) == 1


def test_antisymmetry_violation_reported():
    bad = LieData(3, {(0, 1, 2): Fraction(1), (1, 0, 2): Fraction(1)})
    report = validate_lie(bad)
    assert not report.ok
    assert any("antisymmetry violation at (1,2,3)" in v for v in report.violations)


def test_rescaled_epsilon_bracket_still_satisfies_jacobi():
    # scaling one constant of so(3) only rescales the basis: still a Lie algebra
    scaled = LieData(3, {(0, 1, 2): Fraction(2), (1, 2, 0): Fraction(1),
                         (0, 2, 1): Fraction(-1)})
    assert validate_lie(scaled).ok
    assert jacobi_oracle(scaled) == []


def test_jacobi_violation_reported():
    # so(3) with one target index corrupted: [e2,e3] = e2 instead of e1
    bad = LieData(3, {(0, 1, 2): Fraction(1), (1, 2, 1): Fraction(1),
                      (0, 2, 1): Fraction(-1)})
    report = validate_lie(bad)
    assert not report.ok
    assert any("jacobi violation at (1,2,3)" in v for v in report.violations)
    assert jacobi_oracle(bad) != []


def invariance_oracle(lie, B):
    """Direct expansion of f^c_ab B_cd + f^c_ad B_bc over all triples."""
    n = lie.dim
    bad = []
    for a in range(n):
        for b in range(n):
            for d in range(n):
                s = sum(lie.f(a, b, c) * B[c, d] + lie.f(a, d, c) * B[b, c]
                        for c in range(n))
                if s != 0:
                    bad.append((a, b, d))
    return bad


def test_so3_form_valid_and_orthonormal(so3):
    report = validate_form(so3.lie, so3.form)
    assert report.ok
    assert report.orthonormal
    assert invariance_oracle(so3.lie, so3.form.matrix) == []


def test_abelian_form_valid(abelian2):
    report = validate_form(abelian2.lie, abelian2.form)
    assert report.ok and report.orthonormal


def test_sl2_with_identity_form_fails_invariance(sl2):
    report = validate_form(sl2.lie, BilinearForm(Matrix.identity(3)))
    assert not report.ok
    assert any("invariance violation" in v for v in report.violations)
    assert invariance_oracle(sl2.lie, Matrix.identity(3)) != []


def test_sl2_ships_no_form(sl2):
    assert sl2.form is None


def test_validate_form_non_orthonormal_flag(so3):
    B = BilinearForm(Matrix.from_rows([[2, 0, 0], [0, 2, 0], [0, 0, 2]]))
    report = validate_form(so3.lie, B)
    assert report.ok
    assert not report.orthonormal


def test_trivial_rep_valid(so3):
    assert validate_rep(so3.lie, trivial_rep(so3.lie)).ok


def test_so3_adjoint_valid_and_explicit(so3):
    ad = adjoint_rep(so3.lie)
    assert validate_rep(so3.lie, ad).ok
    assert ad.matrices[0] == Matrix.from_rows([[0, 0, 0], [0, 0, -1], [0, 1, 0]])


def test_scaled_generator_breaks_rep(so3):
    ad = adjoint_rep(so3.lie)
    broken = RepData("broken", (ad.matrices[0], ad.matrices[1], ad.matrices[2] * 2))
    report = validate_rep(so3.lie, broken)
    assert not report.ok
    assert any("pair (1,2)" in v for v in report.violations)


def test_heisenberg_adjoint_nilpotent(heis3):
    ad = heis3.reps["adjoint"]
    assert validate_rep(heis3.lie, ad).ok
    for m in ad.matrices:
        assert (m * m).trace() == 0
        assert (m * m).is_zero


def test_sl2_brackets_and_standard_rep(sl2):
    lie = sl2.lie
    # [e,f] = h, [h,e] = 2e, [h,f] = -2f
    assert lie.f(0, 1, 2) == 1
    assert lie.f(2, 0, 0) == 2
    assert lie.f(2, 1, 1) == -2
    std = sl2.reps["standard"]
    assert validate_rep(lie, std).ok
    assert std.matrices[0] == Matrix.from_rows([[0, 1], [0, 0]])
    assert std.matrices[1] == Matrix.from_rows([[0, 0], [1, 0]])
    assert std.matrices[2] == Matrix.from_rows([[1, 0], [0, -1]])


@pytest.mark.parametrize("name", ["abelian(2)", "abelian(3)", "heisenberg3", "so3", "sl2"])
def test_every_builtin_fully_validates(name):
    alg = builtin(name)
    assert validate_lie(alg.lie).ok
    if alg.form is not None:
        assert validate_form(alg.lie, alg.form).ok
    for rep in alg.reps.values():
        assert validate_rep(alg.lie, rep).ok
    ad = adjoint_rep(alg.lie)
    assert validate_rep(alg.lie, ad).ok


def test_unknown_builtin():
    with pytest.raises(ValueError):
        builtin("e8")


SO3_JSON = """
{
  "dim": 3,
  "f": [[1, 2, 3, "1"], [2, 3, 1, "1"], [1, 3, 2, "-1"]],
  "B": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
  "reps": {"standard": {"dim_v": 3, "matrices": [
    [[0, 0, 0], [0, 0, -1], [0, 1, 0]],
    [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
    [[0, -1, 0], [1, 0, 0], [0, 0, 0]]
  ]}}
}
"""


def test_file_loader_round_trip(tmp_path, so3):
    path = tmp_path / "so3.json"
    path.write_text(SO3_JSON)
    alg = load_algebra_file(path)
    assert validate_lie(alg.lie).ok
    assert alg.lie.f(0, 1, 2) == 1
    assert alg.form is not None and alg.form.is_orthonormal
    assert validate_rep(alg.lie, alg.reps["standard"]).ok
    # trivial and adjoint are synthesized for files too
    assert set(alg.reps) >= {"trivial", "adjoint", "standard"}
    assert alg.reps["adjoint"].matrices == adjoint_rep(so3.lie).matrices


def test_file_loader_rejects_bad_orientation(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 2, "f": [[2, 1, 1, "1"]]}')
    with pytest.raises(ValueError, match="a < b"):
        load_algebra_file(path)


def test_file_loader_rejects_duplicates(tmp_path):
    path = tmp_path / "dup.json"
    path.write_text('{"dim": 3, "f": [[1, 2, 3, "1"], [1, 2, 3, "2"]]}')
    with pytest.raises(ValueError, match="duplicate"):
        load_algebra_file(path)
