import random
from fractions import Fraction

import pytest

from weil import quantum as qw
from weil.checks import quantum_structure_suite, quantum_suite, random_quantum_element
from weil.lie import BilinearForm, LieData, trivial_rep
from weil.linalg import Matrix
from weil.render import render_quantum


@pytest.fixture(scope="module")
def ctx(so3):
    return so3.lie, so3.reps["adjoint"]


def so3_plus_so3():
    """Block sum of two copies of so(3); dim 6 with B = identity."""
    entries = {}
    eps = {(0, 1, 2): 1, (1, 2, 0): 1, (0, 2, 1): -1}
    for (a, b, c), v in eps.items():
        entries[(a, b, c)] = Fraction(v)
        entries[(a + 3, b + 3, c + 3)] = Fraction(v)
    return LieData(6, entries, form=BilinearForm(Matrix.identity(6)), name="so3+so3")


def test_quantum_requires_orthonormal_form(sl2, heis3):
    with pytest.raises(ValueError, match="orthonormal"):
        qw.unit(sl2.lie, sl2.reps["standard"])
    with pytest.raises(ValueError, match="orthonormal"):
        qw.distinguished(heis3.lie, heis3.reps["trivial"])


def test_product_examples(ctx):
    lie, rep = ctx
    u1, u2 = qw.u_gen(lie, rep, 0), qw.u_gen(lie, rep, 1)
    x1 = qw.x_gen(lie, rep, 0)
    assert (u1 * x1).terms == {((1, 0, 0), (0,)): Matrix.identity(3)}
    # Clifford generator squares are 1/2 for an orthonormal form
    assert x1 * x1 == qw.scalar(lie, rep, Fraction(1, 2))
    # u2 u1 = u1 u2 - u3
    assert u2 * u1 == u1 * u2 - qw.u_gen(lie, rep, 2)


def test_distinguished_elements_so3(ctx):
    lie, rep = ctx
    dist = qw.distinguished(lie, rep)
    x = [qw.x_gen(lie, rep, a) for a in range(3)]
    assert dist.g[0] == -(x[1] * x[2])
    assert dist.gamma == -(x[0] * x[1] * x[2])
    u = [qw.u_gen(lie, rep, a) for a in range(3)]
    expected_dirac = u[0] * x[0] + u[1] * x[1] + u[2] * x[2] + dist.gamma
    assert dist.dirac == expected_dirac


def test_distinguished_elements_abelian(abelian2):
    lie, rep = abelian2.lie, abelian2.reps["trivial"]
    dist = qw.distinguished(lie, rep)
    assert all(g.is_zero for g in dist.g)
    assert dist.gamma.is_zero
    expected = qw.u_gen(lie, rep, 0) * qw.x_gen(lie, rep, 0) + \
        qw.u_gen(lie, rep, 1) * qw.x_gen(lie, rep, 1)
    assert dist.dirac == expected


def test_gamma_squared_values(so3, abelian2):
    assert qw.gamma_squared(so3.lie) == Fraction(-1, 8)
    assert qw.gamma_squared(abelian2.lie) == 0
    assert qw.gamma_squared(so3_plus_so3()) == Fraction(-1, 4)


def test_gamma_squared_by_direct_expansion(so3):
    """Independent route: gamma = -x1x2x3, so gamma^2 = (x1x2x3)^2 = -1/8."""
    lie = so3.lie
    rep = trivial_rep(lie)
    x = [qw.x_gen(lie, rep, a) for a in range(3)]
    top = x[0] * x[1] * x[2]
    assert top * top == qw.scalar(lie, rep, Fraction(-1, 8))
    dist = qw.distinguished(lie, rep)
    assert dist.gamma * dist.gamma == qw.scalar(lie, rep, Fraction(-1, 8))


def test_structure_lemmas(so3, abelian2):
    for alg in (so3, abelian2):
        for result in quantum_structure_suite(alg.lie):
            assert result.passed, (alg.name, result.name, result.detail)


def test_lie_derivative_matches_lowered_constants(ctx):
    """L_a x_b = f_cab x_c, equivalent to the structure-constant form."""
    lie, rep = ctx
    n = lie.dim
    for a in range(n):
        for b in range(n):
            lhs = qw.lie_derivative(a, qw.x_gen(lie, rep, b))
            rhs = qw.zero(lie, rep)
            for c in range(n):
                q = lie.f(a, b, c)  # f_cab = f^c_ab with an orthonormal form
                if q:
                    rhs = rhs + qw.x_gen(lie, rep, c) * q
            assert lhs == rhs, (a, b)
            lhs_u = qw.lie_derivative(a, qw.u_gen(lie, rep, b))
            rhs_u = qw.zero(lie, rep)
            for c in range(n):
                q = lie.f(a, b, c)
                if q:
                    rhs_u = rhs_u + qw.u_gen(lie, rep, c) * q
            assert lhs_u == rhs_u, (a, b)


def test_operator_generator_values(ctx):
    lie, rep = ctx
    x = [qw.x_gen(lie, rep, a) for a in range(3)]
    u = [qw.u_gen(lie, rep, a) for a in range(3)]
    # iota_a x_b = delta_ab
    for a in range(3):
        for b in range(3):
            img = qw.contraction(a, x[b])
            assert img == (qw.unit(lie, rep) if a == b else qw.zero(lie, rep))
            assert qw.contraction(a, u[b]).is_zero
    # d u_1 = -f_1bc x_b u_c = -x_2 u_3 + x_3 u_2
    assert qw.differential(u[0]) == -(x[1] * u[2]) + x[2] * u[1]
    # d_W x_1 = u_1 - x_2 x_3
    assert qw.weil_differential(x[0]) == u[0] - x[1] * x[2]


def test_restriction_formula(ctx):
    """On identity-matrix-part elements d = d_W + iota_a tau_a, and the two
    differentials genuinely differ at x_1 for the adjoint representation."""
    lie, rep = ctx
    x1 = qw.x_gen(lie, rep, 0)
    assert qw.differential(x1) == qw.weil_differential(x1) + qw.tau(lie, rep, 0)
    assert qw.differential(x1) != qw.weil_differential(x1)
    rng = random.Random(31)
    for _ in range(20):
        raw = random_quantum_element(lie, rep, rng)
        elem = qw.QuantumElement(lie, rep, {
            m: Matrix.identity(rep.dim) * mat[0, 0] for m, mat in raw.terms.items()
        })
        rhs = qw.weil_differential(elem)
        for a in range(3):
            rhs = rhs + qw.contraction(a, elem) * qw.tau(lie, rep, a)
        assert qw.differential(elem) == rhs
    # L_a and iota_a agree with the uncoupled operators on such elements
    for a in range(3):
        elem = qw.u_gen(lie, rep, 1) * qw.x_gen(lie, rep, 2)
        uncoupled = qw.supercommutator(
            qw.u_gen(lie, rep, a) + qw.distinguished(lie, rep).g[a], elem)
        assert qw.lie_derivative(a, elem) == uncoupled


def test_curvature_trivial_cases(so3, abelian2):
    lie, rep = abelian2.lie, abelian2.reps["trivial"]
    curv = qw.curvature(lie, rep)
    half_cas = qw.zero(lie, rep)
    for a in range(2):
        half_cas = half_cas + qw.u_gen(lie, rep, a) * qw.u_gen(lie, rep, a)
    assert curv == half_cas * Fraction(1, 2)

    lie, rep = so3.lie, so3.reps["trivial"]
    curv = qw.curvature(lie, rep)
    half_cas = qw.zero(lie, rep)
    for a in range(3):
        half_cas = half_cas + qw.u_gen(lie, rep, a) * qw.u_gen(lie, rep, a)
    assert curv == half_cas * Fraction(1, 2) + qw.scalar(lie, rep, Fraction(-1, 8))


def test_curvature_closed_and_squares(ctx):
    lie, rep = ctx
    curv = qw.curvature(lie, rep)
    assert qw.differential(curv).is_zero
    rng = random.Random(41)
    for _ in range(15):
        x = random_quantum_element(lie, rep, rng)
        assert qw.differential(qw.differential(x)) == qw.supercommutator(curv, x)


def test_casimir_report(so3, abelian2):
    rep = qw.casimir_report(so3.lie)
    assert rep["casimir_central"]
    assert rep["dirac_square_matches"]
    assert rep["gamma_squared"] == Fraction(-1, 8)
    rep = qw.casimir_report(abelian2.lie)
    assert rep["casimir_central"]
    assert rep["dirac_square_matches"]
    assert rep["gamma_squared"] == 0


def test_filtration_degrees_of_operators(ctx):
    lie, rep = ctx
    rng = random.Random(43)
    for _ in range(25):
        x = random_quantum_element(lie, rep, rng, max_degree=3, max_terms=1)
        if x.is_zero:
            continue
        top = max(x.degrees())
        dx = qw.differential(x)
        if not dx.is_zero:
            assert max(dx.degrees()) <= top + 1
        for a in range(3):
            la = qw.lie_derivative(a, x)
            if not la.is_zero:
                assert max(la.degrees()) <= top
            ia = qw.contraction(a, x)
            if not ia.is_zero:
                assert max(ia.degrees()) <= top - 1


def test_full_suite_passes(so3):
    results = quantum_suite(so3.lie, so3.reps["adjoint"], samples=25, seed=3)
    for r in results:
        assert r.passed, (r.name, r.detail)


def test_render_golden(ctx):
    lie, rep = ctx
    elem = qw.QuantumElement(lie, rep, {
        ((1, 1, 0), (0, 2)): Matrix.identity(3),
    })
    assert render_quantum(elem) == "u1*u2 ⊗ x1*x3 ⊗ I"
    assert render_quantum(qw.zero(lie, rep)) == "0"
    gamma = qw.distinguished(lie, rep).gamma
    assert render_quantum(gamma * gamma) == "-1/8*I"
