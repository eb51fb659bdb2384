import pytest

from qtheta.ncalg import TensorElement
from qtheta.rmatrix_theta import (_D, _difference_in_ideal, _exp_factor, _normal, _xm, _xp,
                                  assemble_theta1, compare_theta_closed, exponent_terms,
                                  monodromy_tables, psi_drinfeld, symbolic_entry_checks,
                                  theta1_closed, theta2_closed, theta2_via_psi, verify_exponential_commutation,
                                  verify_ft_compatibility, verify_psi_against_dictionary, verify_tables,
                                  x_plus, y_minus, z_parity_failures)
from qtheta.scalars import QMINUS, RatFuncQ, q_factorial_round, qpow


@pytest.fixture(scope="module")
def tables():
    return monodromy_tables(4)


@pytest.fixture(scope="module")
def theta1(tables):
    return assemble_theta1(tables, 4)


def test_low_entries(tables):
    assert tables.plus_entries[(0, 0)] == _D.a.one()
    assert tables.plus_entries[(0, 1)] == _normal(y_minus().scale(QMINUS))
    assert tables.plus_entries[(1, 0)] == _xm(1).scale(-QMINUS)
    assert tables.minus_entries[(1, 0)] == (_normal(-(_xp(1, -1) * _D.K(1))), 1)
    assert tables.minus_entries[(0, 0)] == (_D.a.one(), 0)


def test_tables_match_closed_formulas(tables):
    checks = verify_tables(tables)
    assert all(c.ok for c in checks), [c.name for c in checks if not c.ok]


def test_symbolic_entries():
    checks = symbolic_entry_checks()
    assert len(checks) == 8
    assert all(c.ok for c in checks), [c.name for c in checks if not c.ok]


def test_theta_low_components(theta1):
    one = _D.a.one()
    assert theta1.component(z=0) == TensorElement.pure(one, one, 0, 4, "z")
    z1 = theta1.component(z=1)
    alpha1 = TensorElement.pure(_xm(1).scale(QMINUS), _xp(1, -1), 1, 4, "z")
    assert z1.component(lw=(0, -1, 0)) == alpha1


def test_closed_form_second_order():
    closed = theta1_closed(2)
    coeff = QMINUS ** 2 / RatFuncQ.coerce(q_factorial_round(2))
    key = ((0, 0), (_D.a.letter(_D.a.find("x+", 1, -1)),) * 2, 2)
    left = _xm(1) ** 2
    lw = next(iter(left.terms))
    assert closed.terms[(lw, key[1], 2)] == coeff


@pytest.mark.parametrize("depth", [3, 4])
def test_assembled_equals_closed(depth):
    th = assemble_theta1(monodromy_tables(depth), depth)
    checks = compare_theta_closed(th, depth, 12)
    assert all(c.ok for c in checks), [c.detail for c in checks if not c.ok]


def test_swapped_exponentials_are_rejected(theta1):
    # negative control: the two factors in the other order give a different series
    swapped = _exp_factor(y_minus(), x_plus(), 4) * _exp_factor(_xm(1), _xp(1, -1), 4)
    ok, _ = _difference_in_ideal(theta1.component(z=2) - swapped.component(z=2), 4)
    assert not ok


def test_theta2_via_psi(theta1):
    th2 = theta2_via_psi(theta1)
    checks = compare_theta_closed(th2, 4, 12, node=2)
    assert all(c.ok for c in checks)
    one = _D.a.one()
    assert th2.component(z=0) == TensorElement.pure(one, one, 0, 4, "z")
    first = TensorElement.pure(_xm(2).scale(QMINUS), _xp(2, -1), 1, 4, "z")
    assert th2.component(z=1).component(lw=(0, 0, -1)) == first


def test_psi_sign_parity(theta1):
    assert z_parity_failures(theta1) == []
    f = psi_drinfeld()
    from qtheta.ncalg import apply_morphism
    assert apply_morphism(_xp(1, -1), f) == -_xp(2, -1)
    assert apply_morphism(_xp(1, 0), f) == _xp(2, 0)
    assert verify_psi_against_dictionary().ok


def test_exponential_commutation_outcome():
    checks = {c.name: c for c in verify_exponential_commutation(6)}
    by_start = lambda s: [c for n, c in checks.items() if n.startswith(s)]
    assert all(c.ok for c in by_start("x-_{1,0} [x-_{1,0}, x-_{2,0}]_q"))
    q_version = checks["x+_{1,-1} [x+_{2,0}, x+_{1,-1}]_{q^-1} = q [x+_{2,0}, x+_{1,-1}]_{q^-1} x+_{1,-1}"]
    qinv_version = checks["x+_{1,-1} [x+_{2,0}, x+_{1,-1}]_{q^-1} = q^-1 [x+_{2,0}, x+_{1,-1}]_{q^-1} x+_{1,-1}"]
    # the right-hand q-commutation holds with q^-1, so the exponents only q^-2-commute
    assert not q_version.ok and qinv_version.ok
    assert not checks["the two q-exponentials of Theta_1 commute modulo relations"].ok
    assert checks["the exponents of Theta_1 satisfy A B = q^-2 B A"].ok


def test_exponent_terms_shape():
    A, B = exponent_terms(1)
    assert all(z == 1 for _, _, z in A.terms) and all(z == 1 for _, _, z in B.terms)


def test_ft_compatibility():
    checks = verify_ft_compatibility(4)
    assert all(c.ok for c in checks), [c.name for c in checks if not c.ok]
    assert any("q^-3" in c.name for c in checks)


def test_depth_guard():
    from qtheta.prefund import build_l1
    from qtheta.rmatrix_theta import rplus_monodromy
    with pytest.raises(ValueError):
        rplus_monodromy(build_l1(3), 5)


def _evaluation_square():
    """Generators of U_q(sl3^) on V(u) (x) V(w), V the vector representation; a sympy oracle."""
    import sympy as sp
    q, u, w = sp.symbols("q u w", nonzero=True)

    def unit(j, k):
        m = sp.zeros(3)
        m[j - 1, k - 1] = 1
        return m

    def vec(par):
        E = {1: unit(1, 2), 2: unit(2, 3), 0: par * unit(3, 1)}
        F = {1: unit(2, 1), 2: unit(3, 2), 0: unit(1, 3) / par}
        K = {1: sp.diag(q, 1 / q, 1), 2: sp.diag(1, q, 1 / q), 0: sp.diag(1 / q, 1, q)}
        return E, F, K

    (E1, F1, K1), (E2, F2, K2) = vec(u), vec(w)
    kp, one = sp.kronecker_product, sp.eye(3)
    E = {i: kp(E1[i], one) + kp(K1[i], E2[i]) for i in range(3)}
    F = {i: kp(F1[i], K2[i].inv()) + kp(one, F2[i]) for i in range(3)}
    K = {i: kp(K1[i], K2[i]) for i in range(3)}
    return q, E, F, K


def test_q_commutation_in_a_representation():
    # x+_{1,-1} = [F2, F0]_q K1^-1 and X = [x+_{2,0}, x+_{1,-1}]_{q^-1} as 9 x 9 matrices:
    # only the q^-1 version of the q-commutation survives
    q, E, F, K = _evaluation_square()
    xm = (F[2] * F[0] - q * F[0] * F[2]) * K[1].inv()
    X = E[2] * xm - xm * E[2] / q
    assert (xm * X - X * xm / q).applyfunc(lambda v: v.simplify()).is_zero_matrix
    assert not (xm * X - q * X * xm).applyfunc(lambda v: v.simplify()).is_zero_matrix
