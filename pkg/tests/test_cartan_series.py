from fractions import Fraction

import pytest
import sympy as sp

from qtheta.cartan_series import (CommPoly, SeriesZ, extract_h_from_phi, gklo_residual,
                                  h_to_phi_roundtrip, phi_minus_series, run_gklo_suite,
                                  run_s_series_suite, s_log_residual, shift_series, solve_gklo,
                                  solve_s_series, t_series_coefficients, t_to_h_matrix)
from qtheta.scalars import QMINUS, RatFuncQ, mat_inverse, mat_mul, q_bracket, quantum_cartan_inverse

xi = lambda i, m: CommPoly.var("xi", i, m)


def test_shift_examples():
    s = SeriesZ({1: 1}, 5)
    assert shift_series(s, 0)[1] == 1
    got = shift_series(s, -1)
    assert all(got[d] == 1 for d in range(1, 6))
    got = shift_series(SeriesZ({2: 1}, 4), Fraction(-1, 2))
    assert [got[d] for d in range(5)] == [0, 0, 1, 1, Fraction(3, 4)]


def test_shift_matches_binomial_oracle():
    z, c = sp.symbols("z c")
    for k in (1, 2, 3):
        expansion = sp.series((z + sp.Rational(2, 3)) ** (-k), z, sp.oo, 7).removeO()
        got = shift_series(SeriesZ({k: 1}, 6), Fraction(2, 3))
        for d in range(k, 7):
            coeff = sp.Rational(expansion.coeff(z, -d))
            assert got[d] == Fraction(int(coeff.p), int(coeff.q))


def _oracle_gklo_n1(order):
    """Solve xi(z) A(z) A(z-1) = 1 for n = 1 with sympy, in w = 1/z."""
    w = sp.Symbol("w")
    a = sp.symbols(f"a0:{order}")
    x = sp.symbols(f"x0:{order}")
    l = sum(a[m] * w ** (m + 1) for m in range(order))
    l_shift = sum(a[m] * (w / (1 - w)) ** (m + 1) for m in range(order))  # z -> z - 1
    logxi = sp.log(1 + sum(x[m] * w ** (m + 1) for m in range(order)))
    eq = sp.series(logxi + l + l_shift, w, 0, order + 1).removeO()
    sol = sp.solve([sp.expand(eq).coeff(w, d) for d in range(1, order + 1)], a, dict=True)[0]
    return x, [sp.expand(sol[a[m]]) for m in range(order)]


def _to_sympy(p: CommPoly, x):
    out = 0
    for mono, c in p.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for (fam, i, m), e in mono:
            term *= x[m] ** e
        out += term
    return sp.expand(out)


def test_gklo_n1_against_oracle():
    sol = solve_gklo(1, 3)
    x, expected = _oracle_gklo_n1(3)
    for m in range(3):
        assert _to_sympy(sol.a[(1, m)], x) == expected[m]
    # frozen from the oracle
    assert sol.a[(1, 0)] == xi(1, 0) * Fraction(-1, 2)
    assert sol.a[(1, 1)] == xi(1, 1) * Fraction(-1, 2) + xi(1, 0) * xi(1, 0) * Fraction(1, 4) + xi(1, 0) * Fraction(1, 4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gklo_residual_vanishes(n):
    sol = solve_gklo(n, 6)
    assert all(r.is_zero() for r in gklo_residual(sol).values())
    assert all(p.is_polynomial() for p in sol.a.values())


def test_gklo_rejects_bad_args():
    with pytest.raises(ValueError):
        solve_gklo(0, 3)


def test_s_series_leading_coefficient():
    gk = solve_gklo(1, 4)
    sol = solve_s_series(1, 3, gk)
    assert sol.solvability[1].is_zero()
    assert sol.logs[1][0].is_zero()
    assert sol.logs[1][1] == -gk.a[(1, 1)] - gk.a[(1, 0)] * Fraction(1, 2)
    assert all(r.is_zero() for r in s_log_residual(sol, gk).values())


def test_s_series_needs_deeper_gklo():
    with pytest.raises(ValueError):
        solve_s_series(1, 4, solve_gklo(1, 4))


def test_suites_pass_small():
    assert run_gklo_suite(2, 5).ok
    assert run_s_series_suite(1, 4).ok
    assert run_s_series_suite(2, 4, points=2).ok


def test_h_from_phi():
    h = extract_h_from_phi(3)
    expect = CommPoly.var("phi-", 1, -1) * CommPoly.var("phi+", 1, 0) * (-(RatFuncQ.coerce(1) / QMINUS))
    assert h[(1, 1)] == expect
    syms = h[(1, 2)].symbols()
    assert {("phi-", 1, -2), ("phi-", 1, -1), ("phi+", 1, 0)} == syms
    rt = h_to_phi_roundtrip(4)
    ref = phi_minus_series(1, 4)
    assert all((rt[d] - ref[d]).is_zero() for d in range(5))


def test_t_series_first_coefficient():
    T = t_series_coefficients(2)
    two, three = RatFuncQ.coerce(q_bracket(2)), RatFuncQ.coerce(q_bracket(3))
    h1, h2 = CommPoly.var("h", 1, -1), CommPoly.var("h", 2, -1)
    assert T[1][0] == 1
    assert T[1][1] == h1 * (two / three) + h2 * (1 / three)
    assert T[2][1] == h1 * (1 / three) + h2 * (two / three)
    M = t_to_h_matrix()
    # h_{1,-1} = [2] T_{1,1} - T_{2,1}
    assert T[1][1] * M[0][0] + T[2][1] * M[0][1] == h1
    assert mat_mul(M, quantum_cartan_inverse(2)) == [[1, 0], [0, 1]]
    assert mat_inverse(M) == quantum_cartan_inverse(2)
