"""Monodromy of L_1, the Theta series Theta_1(z) and Theta_2(z) of U_q(sl3^), and the FT check.

Only the action of the two surviving triangular factors on the lowest-weight
row/column of L_1 is ever built; no universal R-matrix is materialized.
Right tensor factors live in the Drinfeld window M = 1 with K letters pushed
to the right by the oriented rules.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import sympy as sp

from .ncalg import (GeneratorMap, IdealReducer, NCElement, TensorElement, apply_morphism, exponential,
                    q_commutator, tensor_apply, tensor_ideal_member)
from .prefund import ACTIONS, L1Model, build_l1
from .qaffine import (AFFINE_CARTAN, DrinfeldSymbols, PSI_NODE, TriangularReducer, beck_map, dj_reduce, drinfeld_alphabet, drinfeld_relations, psi_map)
from .report import Check, SuiteResult, check
from .scalars import QMINUS, RatFuncQ, is_zero, q_bracket, q_factorial_round, qpow

Index = Tuple[int, int]

_D = DrinfeldSymbols(1)
QINV_MINUS_Q = -QMINUS  # q^-1 - q


def _xm(i):
    return _D.x("-", i, 0)


def _xp(i, m):
    return _D.x("+", i, m)


def y_minus() -> NCElement:
    """[x-_{1,0}, x-_{2,0}]_q"""
    return q_commutator(_xm(1), _xm(2), qpow(1))


def x_plus() -> NCElement:
    """[x+_{2,0}, x+_{1,-1}]_{q^-1}"""
    return q_commutator(_xp(2, 0), _xp(1, -1), qpow(-1))


def lower_root_images() -> Dict[str, NCElement]:
    """F_beta for the five surviving root vectors, written in Drinfeld letters."""
    return {
        "F1": _xm(1),
        "F2": _xm(2),
        "F12": -y_minus(),
        "Fd1": -(_xp(1, -1) * _D.K(1)),
        "F0": x_plus() * _D.K(1) * _D.K(2),  # K_0^-1 = K_1 K_2
    }


def _rules():
    return drinfeld_relations(1)


def _normal(x: NCElement) -> NCElement:
    return _rules().reduce(x, strict=False)


def _inv_fact(k: int):
    return RatFuncQ.coerce(1) / RatFuncQ.coerce(q_factorial_round(k))


# -- monodromy ---------------------------------------------------------------------------

@dataclass
class MonodromyTable:
    depth: int
    plus_entries: Dict[Index, NCElement]
    minus_entries: Dict[Index, Tuple[NCElement, int]]


def _expand(model: L1Model, start: Index, factors, depth: int) -> Dict[Index, Tuple[NCElement, int]]:
    """Sum over exponents of prod_f c^k/(k)_q! (X_f^k (x) Y_f^k) acting on v_start (x) 1.

    factors are listed left to right; the rightmost one acts on the module first
    while the right tensor factors multiply in the listed order.
    """
    one = _D.a.one()
    state: Dict[Tuple[Index, int], NCElement] = {(start, 0): one}
    for op, right, c, zstep in reversed(factors):
        nxt: Dict[Tuple[Index, int], NCElement] = {}
        for (v, z), r in state.items():
            vec = {v: 1}
            power = one
            for k in range(depth + 1):
                if not vec or z + k * zstep > depth:
                    break
                coef = c ** k * _inv_fact(k)
                for w, cw in vec.items():
                    key = (w, z + k * zstep)
                    term = (power * r).scale(coef * cw)
                    nxt[key] = nxt[key] + term if key in nxt else term
                vec = model.apply_poly(op, vec)
                power = power * right
        state = {k: v for k, v in nxt.items() if not v.is_zero()}
    out: Dict[Index, Tuple[NCElement, int]] = {}
    for (w, z), r in state.items():
        if w in out:
            out[w] = (out[w][0] + r, z)
        else:
            out[w] = (r, z)
    return out


def rplus_monodromy(model: L1Model, depth: int) -> Dict[Index, NCElement]:
    """t+_{v_{a,b}, v_{0,0}} from the ordered product over E_1, E_{alpha1+alpha2}, E_2."""
    if model.depth < depth:
        raise ValueError("model is shallower than the requested depth")
    f = lower_root_images()
    factors = [([(1, ("E1",))], f["F1"], QINV_MINUS_Q, 0),
               ([(1, ("E12",))], f["F12"], QINV_MINUS_Q, 0),
               ([(1, ("E2",))], f["F2"], QINV_MINUS_Q, 0)]
    got = _expand(model, (0, 0), factors, depth)
    return {v: _normal(r) for v, (r, _) in got.items() if sum(v) <= depth}


def rminus_monodromy(model: L1Model, depth: int) -> Dict[Index, Tuple[NCElement, int]]:
    """t-_{v_{0,0}, v_{a,b}}(z) from the ordered product over E_{delta-alpha1}, E_0."""
    if model.depth < depth:
        raise ValueError("model is shallower than the requested depth")
    f = lower_root_images()
    factors = [([(-1, ("K1i", "xm11"))], f["Fd1"], QINV_MINUS_Q, 1),
               ([(1, ("E0",))], f["F0"], QINV_MINUS_Q, 1)]
    out = {}
    for v in model.basis:
        if sum(v) > depth:
            continue
        got = _expand(model, v, factors, depth)
        if (0, 0) in got:
            r, z = got[(0, 0)]
            out[v] = (_normal(r), z)
    return out


def monodromy_tables(depth: int, model: L1Model = None) -> MonodromyTable:
    model = model or build_l1(max(depth + 1, 3))
    return MonodromyTable(depth, rplus_monodromy(model, depth), rminus_monodromy(model, depth))


def finite_weight(w) -> Tuple[int, int]:
    """Affine weight (c0, c1, c2) -> coordinates on alpha_1, alpha_2 (delta has weight 0)."""
    return (w[1] - w[0], w[2] - w[0])


def k_beta_inverse(a: int, b: int) -> NCElement:
    """K_beta^-1 for beta = a alpha_1 + b (alpha_1 + alpha_2)."""
    return _D.K(1, -1) ** (a + b) * _D.K(2, -1) ** b


# -- Theta_1 -----------------------------------------------------------------------------

def assemble_theta1(tables: MonodromyTable, depth: int) -> TensorElement:
    a = _D.a
    total = TensorElement(a, a, {}, depth, "z")
    for v, plus in sorted(tables.plus_entries.items()):
        if v not in tables.minus_entries or sum(v) > depth:
            continue
        minus, z = tables.minus_entries[v]
        right = _normal(minus * k_beta_inverse(*v))
        total = total + TensorElement.pure(plus, right, z, depth, "z")
    return total


def _exp_factor(left: NCElement, right: NCElement, depth: int) -> TensorElement:
    return exponential(TensorElement.pure(left.scale(QMINUS), right, 1, depth, "z"), "q_deformed", depth)


def theta1_closed(depth: int) -> TensorElement:
    return _exp_factor(_xm(1), _xp(1, -1), depth) * _exp_factor(y_minus(), x_plus(), depth)


def theta2_closed(depth: int) -> TensorElement:
    return (_exp_factor(_xm(2), _xp(2, -1), depth)
            * _exp_factor(q_commutator(_xm(2), _xm(1), qpow(1)),
                          q_commutator(_xp(1, 0), _xp(2, -1), qpow(-1)), depth))


def _normal_tensor(t: TensorElement) -> TensorElement:
    return t.reduce(None, _rules(), strict=False)


def _difference_in_ideal(diff: TensorElement, degree_bound: int) -> Tuple[bool, str]:
    diff = _normal_tensor(diff)
    if diff.is_zero():
        return True, "equal after K-normal ordering"
    longest = max(len(r) for _, r, _ in diff.terms)
    if longest > degree_bound:
        return False, f"residual right words of length {longest} exceed the degree bound"
    red = IdealReducer(_rules(), degree_bound)
    ok = tensor_ideal_member(diff, None, red)
    return ok, "in the ideal" if ok else diff.text()[:1000]


def compare_theta_closed(theta: TensorElement, depth: int, degree_bound: int = 14,
                         node: int = 1) -> List[Check]:
    closed = theta1_closed(depth) if node == 1 else theta2_closed(depth)
    out = []
    for d in range(depth + 1):
        ok, detail = _difference_in_ideal(theta.component(z=d) - closed.component(z=d), degree_bound)
        out.append(check(f"Theta_{node} z^{d} component equals the closed q-exponential product", [],
                         ok=ok, detail=detail))
    return out


# -- psi transport -----------------------------------------------------------------------

@lru_cache(maxsize=None)
def psi_drinfeld() -> GeneratorMap:
    """x^{+-}_{i,m} -> (-1)^m x^{+-}_{psi(i),m}, phi likewise, K_i -> K_psi(i)."""
    a = drinfeld_alphabet(1)
    images = {}
    for g in a.gens:
        if g.family in ("K", "Ki"):
            images[g] = a.gen(g.family, PSI_NODE[g.indices[0]])
        else:
            i, m = g.indices
            images[g] = a.gen(g.family, PSI_NODE[i], m).scale((-1) ** abs(m))
    return GeneratorMap(a, a, images, name="psi")


def theta2_via_psi(theta1: TensorElement) -> TensorElement:
    f = psi_drinfeld()
    return tensor_apply(theta1, f, f).substitute_z(-1)


def verify_psi_against_dictionary(bound: int = 4) -> Check:
    """psi on Drinfeld letters agrees with psi on Drinfeld-Jimbo generators through the dictionary."""
    bm = beck_map(1)
    red = TriangularReducer(bound)
    a = drinfeld_alphabet(1)
    bad = []
    for letter in sorted(bm.images):
        g = a.word(a.gens[letter])
        lhs = apply_morphism(apply_morphism(g, psi_drinfeld()), bm)
        rhs = apply_morphism(apply_morphism(g, bm), psi_map())
        d = dj_reduce(lhs - rhs)
        if not d.is_zero() and not red.member(d):
            bad.append(a.gens[letter].text())
    return check("psi on Drinfeld letters matches psi through the dictionary", bad, detail=", ".join(bad))


def z_parity_failures(theta: TensorElement) -> List[str]:
    """Every term's z-degree equals its number of mode -1 letters on the right."""
    a = theta.right
    bad = []
    for (l, r, d) in theta.terms:
        shifted = sum(1 for x in r if a.gens[x].family.startswith("x") and a.gens[x].indices[1] == -1)
        if shifted != d:
            bad.append(f"{a.word_text(r)} at z^{d}")
    return bad


# -- q-commutation of the two exponentials -------------------------------------------------

def _dj_member(x: NCElement, reducer: TriangularReducer) -> bool:
    d = dj_reduce(apply_morphism(x, beck_map(1)))
    return d.is_zero() or reducer.member(d)


def q_commutation_residual(x: NCElement, y: NCElement, e: int) -> NCElement:
    """x y - q^e y x"""
    return x * y - (y * x).scale(qpow(e))


def exponent_terms(node: int = 1) -> Tuple[TensorElement, TensorElement]:
    if node == 1:
        a_l, a_r, b_l, b_r = _xm(1), _xp(1, -1), y_minus(), x_plus()
    else:
        a_l, a_r = _xm(2), _xp(2, -1)
        b_l = q_commutator(_xm(2), _xm(1), qpow(1))
        b_r = q_commutator(_xp(1, 0), _xp(2, -1), qpow(-1))
    A = TensorElement.pure(a_l.scale(QMINUS), a_r, 1, None, "z")
    B = TensorElement.pure(b_l, b_r.scale(QMINUS), 1, None, "z")
    return A, B


class _BeckRight:
    """Right-factor membership through the dictionary and the triangular reducer."""

    def __init__(self, bound: int):
        self.red = TriangularReducer(bound)

    def member(self, x: NCElement) -> bool:
        return _dj_member(x, self.red)


def verify_exponential_commutation(bound: int = 6) -> List[Check]:
    red = TriangularReducer(bound)
    out = []
    dr = IdealReducer(_rules(), 3)
    left = q_commutation_residual(_xm(1), y_minus(), -1)
    out.append(check("x-_{1,0} [x-_{1,0}, x-_{2,0}]_q = q^-1 [x-_{1,0}, x-_{2,0}]_q x-_{1,0} (Drinfeld relations)",
                     [], ok=dr.member(left)))
    out.append(check("x-_{1,0} [x-_{1,0}, x-_{2,0}]_q = q^-1 [x-_{1,0}, x-_{2,0}]_q x-_{1,0} (through the dictionary)",
                     [], ok=_dj_member(left, red)))
    holds = {e: _dj_member(q_commutation_residual(_xp(1, -1), x_plus(), e), red) for e in (1, -1)}
    out.append(check("x+_{1,-1} [x+_{2,0}, x+_{1,-1}]_{q^-1} = q [x+_{2,0}, x+_{1,-1}]_{q^-1} x+_{1,-1}",
                     [], ok=holds[1],
                     detail="" if holds[1] else
                     f"not in the ideal; the q^-1 version {'holds' if holds[-1] else 'fails too'}"))
    out.append(check("x+_{1,-1} [x+_{2,0}, x+_{1,-1}]_{q^-1} = q^-1 [x+_{2,0}, x+_{1,-1}]_{q^-1} x+_{1,-1}",
                     [], ok=holds[-1]))
    A, B = exponent_terms(1)
    comm = A * B - B * A
    ok = tensor_ideal_member(comm, IdealReducer(_rules(), 3), _BeckRight(bound))
    out.append(check("the two q-exponentials of Theta_1 commute modulo relations", [], ok=ok,
                     detail="" if ok else "A B - B A is not in the ideal, where A, B are the two exponents"))
    qcomm = A * B - (B * A).scale(qpow(-2))
    ok2 = tensor_ideal_member(qcomm, IdealReducer(_rules(), 3), _BeckRight(bound))
    out.append(check("the exponents of Theta_1 satisfy A B = q^-2 B A", [], ok=ok2))
    return out


# -- symbolic entries in (a, b) ----------------------------------------------------------

qs = sp.Symbol("q", positive=True)
QM = sp.Symbol("Qm")  # q - q^-1
qround_s = sp.Function("qround")
qfact_s = sp.Function("qfact")
a_s, b_s, j_s = sp.symbols("a b j", integer=True, nonnegative=True)


class SymbolicOps:
    """Backend for the action formulas: q-powers, opaque (m)_q and the letter Qm."""

    @staticmethod
    def qpow(e):
        return qs ** e

    @staticmethod
    def qround(m):
        return qround_s(m)

    qminus = QM


def range_product(expr, var, lo, hi):
    """prod_{var=lo}^{hi} expr for factors q^(poly), Qm^k, constants and (linear)_q."""
    count = hi - lo + 1
    out = sp.Integer(1)
    for f in sp.Mul.make_args(sp.expand_power_base(sp.powsimp(expr), force=True)):
        base, exp = f.as_base_exp()
        if not f.has(var):
            out *= f ** count
        elif isinstance(base, sp.Function) and base.func == qround_s:
            arg = base.args[0]
            slope = sp.expand(arg.subs(var, var + 1) - arg)
            first, last = arg.subs(var, lo), arg.subs(var, hi)
            if slope == 1:
                out *= (qfact_s(last) / qfact_s(first - 1)) ** exp
            elif slope == -1:
                out *= (qfact_s(first) / qfact_s(last - 1)) ** exp
            else:
                raise ValueError(f"unsupported (m)_q argument {arg}")
        elif not base.has(var):
            out *= base ** sp.summation(exp, (var, lo, hi))
        else:
            raise ValueError(f"unsupported factor {f}")
    return out.replace(qfact_s, lambda m: sp.Integer(1) if m == 0 else qfact_s(m))


def _same(x, y) -> bool:
    return sp.simplify(sp.powsimp(sp.expand_power_base(x / y, force=True), force=True)) == 1


def _coef(gen, a, b):
    return ACTIONS[gen].coefficient(a, b, SymbolicOps)


def _pair_exponent(i: int, weight) -> int:
    """K_i y = q^c y K_i for y of affine weight (c0, c1, c2)."""
    return sum(AFFINE_CARTAN[i][k] * weight[k] for k in range(3))


def symbolic_entry_checks() -> List[Check]:
    a, b, j = a_s, b_s, j_s
    out = []
    e0 = range_product(_coef("E0", a, j), j, 1, b)
    want = (-1) ** b * qfact_s(b) / QM ** b * qs ** (-a * b - b * (b - 1))
    out.append(check("E_0^b v_{a,b} = (-1)^b (b)_q!/(q - q^-1)^b q^(-ab-b(b-1)) v_{a,0}", [], ok=_same(e0, want)))
    # E_{delta-alpha1} = -K1^-1 x-_{1,1}; x-_{1,1} takes v_{j,0} to v_{j-1,0}
    ed = range_product(-_coef("K1i", j - 1, 0) * _coef("xm11", j, 0), j, 1, a)
    want_d = (-1) ** a * qfact_s(a) / QM ** a * qs ** (-a * (a - 1))
    out.append(check("E_{delta-alpha1}^a v_{a,0} = (-1)^a (a)_q!/(q - q^-1)^a q^(-a(a-1)) v_{0,0}", [],
                     ok=_same(ed, want_d)))
    e12 = range_product(_coef("E12", 0, j), j, 0, b - 1)
    e1 = range_product(sp.Integer(1) * _coef("E1", j, b), j, 0, a - 1)
    # F_{alpha1+alpha2} = -Y, so the b-th power contributes (-1)^b
    tplus = (-QM) ** a / qfact_s(a) * (-QM) ** b / qfact_s(b) * e12 * e1 * (-1) ** b
    out.append(check("t+ coefficient of (x-_{1,0})^a Y^b is (q^-1 - q)^a/(a)_q! (q - q^-1)^b/(b)_q!", [],
                     ok=_same(tplus, (-QM) ** a / qfact_s(a) * QM ** b / qfact_s(b))))
    raw = (-QM) ** (a + b) / (qfact_s(a) * qfact_s(b)) * e0 * ed
    out.append(check("t- before rewriting: q^(-a(a-1)) F_{delta-alpha1}^a q^(-ab-b(b-1)) F_0^b z^(a+b)", [],
                     ok=_same(raw, qs ** (-a * (a - 1) - a * b - b * (b - 1)))))
    # weights of x+_{1,-1}, F_0 and [x+_{2,0}, x+_{1,-1}]_{q^-1}
    w_x = (-1, 0, -1)
    w_f0 = (-1, 0, 0)
    c1 = _pair_exponent(1, w_x)  # K1 x = q^c1 x K1
    c2 = _pair_exponent(1, w_f0)
    c3 = -_pair_exponent(0, w_f0)  # K0^-1 X = q^c3 X K0^-1
    s1 = sp.summation(c1 * j, (j, 0, a - 1))
    s3 = sp.summation(c3 * j, (j, 0, b - 1))
    out.append(check("(x+_{1,-1} K1)^a = q^(a(a-1)) (x+_{1,-1})^a K1^a", [], ok=sp.expand(s1 - a * (a - 1)) == 0))
    out.append(check("K1^a F_0^b = q^(ab) F_0^b K1^a", [], ok=sp.expand(c2 * a * b - a * b) == 0))
    out.append(check("(X K0^-1)^b = q^(b(b-1)) X^b K0^-b", [], ok=sp.expand(s3 - b * (b - 1)) == 0))
    final = raw * (-1) ** a * qs ** (s1 + c2 * a * b + s3)
    out.append(check("t-_{v00, v_ab} K_beta^-1 = (-1)^a (x+_{1,-1})^a X^b z^(a+b)", [], ok=_same(final, (-1) ** a)))
    return out


def expected_plus(a: int, b: int) -> NCElement:
    c = QINV_MINUS_Q ** a * _inv_fact(a) * QMINUS ** b * _inv_fact(b)
    return _normal((_xm(1) ** a * y_minus() ** b).scale(c))


def expected_minus(a: int, b: int) -> NCElement:
    """t- K_beta^-1 as displayed."""
    return _normal((_xp(1, -1) ** a * x_plus() ** b).scale((-1) ** a))


def verify_tables(tables: MonodromyTable) -> List[Check]:
    out = []
    bad_plus = [v for v, e in tables.plus_entries.items() if not (e - expected_plus(*v)).is_zero()]
    out.append(check("t+ entries match the closed (a, b) formula at every index", bad_plus,
                     detail=", ".join(map(str, bad_plus[:10]))))
    bad_minus = [v for v, (e, z) in tables.minus_entries.items()
                 if not (_normal(e * k_beta_inverse(*v)) - expected_minus(*v)).is_zero() or z != sum(v)]
    out.append(check("t- entries times K_beta^-1 match the closed (a, b) formula at every index", bad_minus,
                     detail=", ".join(map(str, bad_minus[:10]))))
    bad_w = []
    for v, e in tables.plus_entries.items():
        m, _ = tables.minus_entries[v]
        wp = {finite_weight(w) for w in e.weights()}
        wm = {finite_weight(w) for w in m.weights()}
        beta = (v[0] + v[1], v[1])
        if wp != {(-beta[0], -beta[1])} or wm != {beta}:
            bad_w.append(v)
    out.append(check("weights of t+ and t- entries are -beta and +beta", bad_w))
    missing = [v for v in tables.plus_entries if v not in tables.minus_entries]
    out.append(check("every t+ entry has a t- partner", missing))
    return out


# -- Finkelberg-Tsymbaliuk compatibility ---------------------------------------------------

def _z1(theta: TensorElement) -> TensorElement:
    return theta.component(z=1)


def verify_ft_compatibility(degree_bound: int = 4) -> List[Check]:
    """Delta(h_{i,-1}) from the z-coefficients of the Theta series against the quoted displays."""
    out = []
    two, three = RatFuncQ.coerce(q_bracket(2)), RatFuncQ.coerce(q_bracket(3))
    out.append(check("[2]_q^2 - 1 = [3]_q", [], ok=is_zero(two * two - 1 - three)))
    # T_{i,1} = sum_j Ct_ij h_{j,-1}; inverting gives h = [[2], -1; -1, [2]] T
    ct = [[two / three, RatFuncQ.coerce(1) / three], [RatFuncQ.coerce(1) / three, two / three]]
    inv = [[two, RatFuncQ.coerce(-1)], [RatFuncQ.coerce(-1), two]]
    prod_ok = all(is_zero(sum((inv[i][k] * ct[k][j] for k in range(2)), RatFuncQ.coerce(0)) - (1 if i == j else 0))
                  for i in range(2) for j in range(2))
    out.append(check("h_{1,-1} = [2] T_{1,1} - T_{2,1} and h_{2,-1} = [2] T_{2,1} - T_{1,1}", [], ok=prod_ok))
    # box parts pass through linearly: coefficient of box(h_j) in Delta(h_i) is delta_ij
    out.append(check("box(h) parts of Delta(h_{i,-1}) reduce to box(h_{i,-1})", [], ok=prod_ok))
    depth = 1
    th1 = _z1(theta1_closed(depth))
    th2 = _z1(theta2_closed(depth))
    delta = {1: th1.scale(two) - th2, 2: th2.scale(two) - th1}
    x1, x2 = _xm(1), _xm(2)
    X = x_plus()
    q3 = qpow(3) - qpow(1)
    disp = {
        1: (TensorElement.pure(x1.scale(qpow(2) - qpow(-2)), _xp(1, -1), 1, depth, "z")
            - TensorElement.pure(x2.scale(QMINUS), _xp(2, -1), 1, depth, "z")
            - TensorElement.pure(q_commutator(x2, x1, qpow(-3)).scale(q3), X, 1, depth, "z")),
        2: (TensorElement.pure(x2.scale(qpow(2) - qpow(-2)), _xp(2, -1), 1, depth, "z")
            - TensorElement.pure(x1.scale(QMINUS), _xp(1, -1), 1, depth, "z")
            + TensorElement.pure(q_commutator(x1, x2, qpow(-3)).scale(q3), X, 1, depth, "z")),
    }
    free = q_commutator(x1, x2, qpow(1)).scale(two) + q_commutator(x2, x1, qpow(1)) \
        + q_commutator(x2, x1, qpow(-3)).scale(qpow(2))
    out.append(check("[2][x-_{1,0}, x-_{2,0}]_q + [x-_{2,0}, x-_{1,0}]_q = -q^2 [x-_{2,0}, x-_{1,0}]_{q^-3} (free)",
                     free.terms))
    rel = q_commutator(_xp(1, 0), _xp(2, -1), qpow(-1)) + X
    red = IdealReducer(_rules(), max(2, degree_bound))
    out.append(check("[x+_{1,0}, x+_{2,-1}]_{q^-1} = -[x+_{2,0}, x+_{1,-1}]_{q^-1} (Drinfeld relations)", [],
                     ok=red.member(rel)))
    out.append(check("[x+_{1,0}, x+_{2,-1}]_{q^-1} = -[x+_{2,0}, x+_{1,-1}]_{q^-1} (through the dictionary)", [],
                     ok=_dj_member(rel, TriangularReducer(max(4, degree_bound)))))
    for i in (1, 2):
        diff = _normal_tensor(delta[i] - disp[i])
        ok = diff.is_zero() or tensor_ideal_member(diff, None, red)
        out.append(check(f"Delta(h_{{{i},-1}}) matches the Finkelberg-Tsymbaliuk display", [], ok=ok,
                         detail="" if ok else diff.text()[:1000]))
    return out


# -- suite -------------------------------------------------------------------------------

def run_suite(depth: int = 6, degree_bound: int = 14) -> SuiteResult:
    res = SuiteResult("theta-qaffine", {"depth": depth, "degree_bound": degree_bound})
    tables = monodromy_tables(depth)
    res.checks.extend(verify_tables(tables))
    res.checks.extend(symbolic_entry_checks())
    theta1 = assemble_theta1(tables, depth)
    res.add(check("Theta_{1,0} = 1 (x) 1", [], ok=theta1.component(z=0) == theta1.one().truncate(depth)))
    # left weights are -(a+b) alpha_1 - b alpha_2, never with more alpha_2 than alpha_1
    excess = [l for l, _, _ in theta1.terms
              if finite_weight(theta1.left.weight(l))[0] > finite_weight(theta1.left.weight(l))[1]]
    res.add(check("Theta_1 has no component with a pure alpha_2 excess", excess))
    res.checks.extend(compare_theta_closed(theta1, depth, degree_bound, node=1))
    theta2 = theta2_via_psi(theta1)
    res.checks.extend(compare_theta_closed(theta2, depth, degree_bound, node=2))
    res.add(check("z-degree equals the number of mode -1 letters in every Theta_1 term", z_parity_failures(theta1)))
    res.add(verify_psi_against_dictionary())
    res.checks.extend(verify_exponential_commutation())
    res.checks.extend(verify_ft_compatibility())
    return res
