"""Commutative truncated series over the Drinfeld-Cartan polynomial ring.

Everything works in log coordinates: the multiplicative difference equations
for A_i(z) and S_i(z) become triangular linear systems, solved one z-order
at a time.  Residuals are checked on the multiplicative side, through exp
and shifts of the exponentiated series, which is a different route from the
solve.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

from .report import Check, SuiteResult, check
from .scalars import (QMINUS, RatFuncQ, cartan_matrix_A, is_zero, q_bracket, quantum_cartan,
                      quantum_cartan_inverse, mat_inverse)

Symbol = Tuple  # e.g. ("xi", i, m), ("phi-", i, s), ("h", i, s)


def _acc(d, k, c):
    s = d.get(k)
    s = c if s is None else s + c
    if is_zero(s):
        d.pop(k, None)
    else:
        d[k] = s


@lru_cache(maxsize=1 << 20)
def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for s, e in b:
        d[s] = d.get(s, 0) + e
    return tuple(sorted((s, e) for s, e in d.items() if e))


class CommPoly:
    """Polynomial in commuting symbols; monomials are sorted (symbol, exp) tuples."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if not is_zero(c)}

    @classmethod
    def const(cls, c) -> "CommPoly":
        return cls({(): c})

    @classmethod
    def var(cls, *sym, power: int = 1) -> "CommPoly":
        return cls({((tuple(sym), power),): 1})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, CommPoly):
            other = CommPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return CommPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, CommPoly):
            other = CommPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return CommPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, CommPoly):
            if is_zero(other):
                return CommPoly()
            return CommPoly({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _acc(out, _mono_mul(m1, m2), c1 * c2)
        return CommPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CommPoly):
            other = CommPoly.const(other)
        return (self - other).is_zero()

    __hash__ = None

    def symbols(self) -> set:
        return {sym for m in self.terms for sym, _ in m}

    def evaluate(self, values: dict) -> "CommPoly":
        """Substitute numbers for the symbols in values; other symbols stay."""
        out: dict = {}
        for m, c in self.terms.items():
            rest = []
            for sym, e in m:
                if sym in values:
                    c = c * Fraction(values[sym]) ** e
                else:
                    rest.append((sym, e))
            _acc(out, tuple(rest), c)
        return CommPoly(out)

    def is_polynomial(self) -> bool:
        return all(e > 0 for m in self.terms for _, e in m)

    def q_free(self) -> bool:
        return all(not isinstance(c, RatFuncQ) or (c.is_laurent() and set(c.num.coeffs) <= {0})
                   for c in self.terms.values())

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(e for _, e in m), m)):
            c = self.terms[m]
            cs = str(c) if not isinstance(c, Fraction) else (
                str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
            mon = "*".join(_sym_text(s) + (f"^{e}" if e != 1 else "") for s, e in m)
            parts.append(f"({cs})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"CommPoly({self.text()})"


def _sym_text(s) -> str:
    return f"{s[0]}[{','.join(str(x) for x in s[1:])}]"


class SeriesZ:
    """sum_{d=0..order} c_d w^d with w = z^-1 (inverse=True) or w = z."""

    __slots__ = ("coeffs", "order", "inverse")

    def __init__(self, coeffs: Dict[int, object], order: int, inverse: bool = True):
        self.order = order
        self.inverse = inverse
        self.coeffs = {}
        for d, c in coeffs.items():
            if not isinstance(c, CommPoly):
                c = CommPoly.const(c)
            if 0 <= d <= order and not c.is_zero():
                self.coeffs[d] = c

    def __getitem__(self, d: int) -> CommPoly:
        return self.coeffs.get(d, CommPoly())

    def like(self, coeffs) -> "SeriesZ":
        return SeriesZ(coeffs, self.order, self.inverse)

    def __add__(self, other):
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] + c if d in out else c
        return self.like(out)

    def __neg__(self):
        return self.like({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SeriesZ":
        return self.like({d: v * c for d, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, SeriesZ):
            return self.scale(other)
        out: dict = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                if d1 + d2 <= self.order:
                    out[d1 + d2] = out[d1 + d2] + c1 * c2 if d1 + d2 in out else c1 * c2
        return self.like(out)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs.values())

    def exp(self) -> "SeriesZ":
        """Coefficient recursion n f_n = sum_k k g_k f_{n-k} (from f' = g' f)."""
        if not self[0].is_zero():
            raise ValueError("exp needs a series without constant term")
        f = {0: CommPoly.const(1)}
        for m in range(1, self.order + 1):
            acc = CommPoly()
            for k in range(1, m + 1):
                g = self.coeffs.get(k)
                if g is not None and not f[m - k].is_zero():
                    acc = acc + g * f[m - k] * k
            f[m] = acc * Fraction(1, m)
        return self.like(f)

    def log(self) -> "SeriesZ":
        """Inverse recursion n g_n = n f_n - sum_{k<n} k g_k f_{n-k}."""
        if not (self[0] - 1).is_zero():
            raise ValueError("log needs constant term 1")
        g: Dict[int, CommPoly] = {}
        for m in range(1, self.order + 1):
            acc = self[m] * m
            for k in range(1, m):
                fk = self.coeffs.get(m - k)
                if fk is not None and not g[k].is_zero():
                    acc = acc - g[k] * fk * k
            g[m] = acc * Fraction(1, m)
        return self.like(g)

    def evaluate(self, values: dict) -> "SeriesZ":
        return self.like({d: c.evaluate(values) for d, c in self.coeffs.items()})

    def text(self) -> str:
        var = "z^-" if self.inverse else "z^"
        return " + ".join(f"[{c.text()}]{'' if d == 0 else var + str(d)}" for d, c in sorted(self.coeffs.items())) or "0"


def shift_series(s: SeriesZ, c, M: Optional[int] = None) -> SeriesZ:
    """Substitute z -> z + c in a series in z^-1 and re-expand to order M."""
    if not s.inverse:
        raise ValueError("shift_series expects a series in z^-1")
    M = s.order if M is None else M
    c = Fraction(c)
    out: dict = {}
    for d, coef in s.coeffs.items():
        if d == 0:
            out[0] = out.get(0, CommPoly()) + coef
            continue
        for j in range(0, M - d + 1):
            b = _binom_neg(d, j) * c ** j
            if b:
                out[d + j] = out.get(d + j, CommPoly()) + coef * b
    return SeriesZ(out, M, True)


def _binom_neg(k: int, j: int) -> int:
    """binom(-k, j) = (-1)^j binom(k+j-1, j)."""
    return (-1) ** j * comb(k + j - 1, j)


# -- GKLO --------------------------------------------------------------------

class GKLOSolution:
    def __init__(self, n: int, order: int, a: Dict[Tuple[int, int], CommPoly]):
        self.n, self.order, self.a = n, order, a

    def log_series(self, i: int) -> SeriesZ:
        """l_i(z) = sum_m a_{i,m} z^{-m-1}; zero outside 1..n."""
        if not 1 <= i <= self.n:
            return SeriesZ({}, self.order)
        return SeriesZ({m + 1: self.a[(i, m)] for m in range(self.order)}, self.order)

    def series(self, i: int) -> SeriesZ:
        return self.log_series(i).exp()


def xi_series(i: int, M: int) -> SeriesZ:
    return SeriesZ({0: 1, **{m + 1: CommPoly.var("xi", i, m) for m in range(M)}}, M)


def solve_gklo(n: int, M: int) -> GKLOSolution:
    """a_{i,m} for m < M from log xi_i(z) = l_{i-1}(z-1/2) + l_{i+1}(z-1/2) - l_i(z) - l_i(z-1)."""
    if n < 1 or M < 1:
        raise ValueError("need n >= 1 and M >= 1")
    half = Fraction(-1, 2)
    logxi = {i: xi_series(i, M).log() for i in range(1, n + 1)}
    C = cartan_matrix_A(n)
    negC = [[Fraction(-x) for x in row] for row in C]
    inv = _rational_inverse(negC)
    a: Dict[Tuple[int, int], CommPoly] = {}
    for m in range(M):
        d = m + 1
        # contributions of already known a_{., m'} with m' < m at order d
        known = GKLOSolution(n, M, {**a, **{(i, mm): CommPoly() for i in range(1, n + 1) for mm in range(m, M)}})
        rhs = []
        for i in range(1, n + 1):
            lower = (shift_series(known.log_series(i - 1), half)[d] + shift_series(known.log_series(i + 1), half)[d]
                     - known.log_series(i)[d] - shift_series(known.log_series(i), -1)[d])
            rhs.append(logxi[i][d] - lower)
        for i in range(n):
            acc = CommPoly()
            for j in range(n):
                if inv[i][j]:
                    acc = acc + rhs[j] * inv[i][j]
            a[(i + 1, m)] = acc
    return GKLOSolution(n, M, a)


def _rational_inverse(m):
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def gklo_residual(sol: GKLOSolution) -> Dict[int, SeriesZ]:
    """xi_i(z) A_i(z) A_i(z-1) - A_{i-1}(z-1/2) A_{i+1}(z-1/2), to the solved order."""
    n, M = sol.n, sol.order
    A = {i: sol.series(i) for i in range(0, n + 2)}
    out = {}
    for i in range(1, n + 1):
        lhs = xi_series(i, M) * A[i] * shift_series(A[i], -1)
        rhs = shift_series(A[i - 1], Fraction(-1, 2)) * shift_series(A[i + 1], Fraction(-1, 2))
        out[i] = lhs - rhs
    return out


# -- S-series ----------------------------------------------------------------

def s_rhs(sol: GKLOSolution, i: int, M: int) -> SeriesZ:
    """log A_i(z) + a_{i,0} sum_{k>0} (-z)^-k / k, to order M."""
    a0 = sol.a[(i, 0)]
    corr = SeriesZ({k: a0 * Fraction((-1) ** k, k) for k in range(1, M + 1)}, M)
    return SeriesZ(sol.log_series(i).coeffs, M) + corr


class SSeriesSolution:
    def __init__(self, n: int, order: int, logs: Dict[int, SeriesZ], solvability: Dict[int, CommPoly]):
        self.n, self.order, self.logs, self.solvability = n, order, logs, solvability

    def series(self, i: int) -> SeriesZ:
        return self.logs[i].exp()


def solve_s_series(n: int, M: int, gklo: GKLOSolution) -> SSeriesSolution:
    """log S_i(z+1) - log S_i(z) = RHS, solved for coefficients up to z^-M."""
    if gklo.order < M + 1:
        raise ValueError(f"need the GKLO solution to order {M + 1}")
    logs, solv = {}, {}
    for i in range(1, n + 1):
        rhs = s_rhs(gklo, i, M + 1)
        solv[i] = rhs[1]
        if not rhs[1].is_zero():
            raise ArithmeticError(f"z^-1 coefficient of the S-equation is nonzero at node {i}")
        s: Dict[int, CommPoly] = {}
        for N in range(2, M + 2):
            acc = rhs[N]
            for p in range(1, N - 1):
                acc = acc - s[p] * _binom_neg(p, N - p)
            s[N - 1] = acc * Fraction(-1, N - 1)
        logs[i] = SeriesZ(s, M)
    return SSeriesSolution(n, M, logs, solv)


def s_residual(sol: SSeriesSolution, gklo: GKLOSolution, values: Optional[dict] = None) -> Dict[int, SeriesZ]:
    """S_i(z+1) - S_i(z) A_i(z) exp(a_{i,0} sum (-z)^-k/k).

    With values, the xi symbols are specialized before exponentiating; this
    keeps the check exact while avoiding the very large symbolic S_i(z).
    """
    M = sol.order
    out = {}
    for i in range(1, sol.n + 1):
        logS, logA = sol.logs[i], SeriesZ(gklo.log_series(i).coeffs, M)
        a0 = gklo.a[(i, 0)]
        corr = SeriesZ({k: a0 * Fraction((-1) ** k, k) for k in range(1, M + 1)}, M)
        if values is not None:
            logS, logA, corr = logS.evaluate(values), logA.evaluate(values), corr.evaluate(values)
        S = logS.exp()
        out[i] = shift_series(S, 1) - S * logA.exp() * corr.exp()
    return out


def s_log_residual(sol: SSeriesSolution, gklo: GKLOSolution) -> Dict[int, SeriesZ]:
    """Additive form: log S_i(z+1) - log S_i(z) - log A_i(z) - a_{i,0} sum (-z)^-k/k."""
    M = sol.order
    return {i: shift_series(sol.logs[i], 1) - sol.logs[i] - s_rhs(gklo, i, M) for i in range(1, sol.n + 1)}


def xi_sample(n: int, M: int, seed: int) -> dict:
    """Seeded rational values for xi_{i,m}, i <= n, m <= M."""
    rng = random.Random(seed)
    return {("xi", i, m): Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            for i in range(1, n + 1) for m in range(M + 1)}


# -- quantum side: h from phi, T-series ------------------------------------------------

def phi_minus_series(i: int, M: int) -> SeriesZ:
    """phi+_{i,0} phi-_i(z) = 1 + sum_s phi+_{i,0} phi-_{i,-s} z^-s."""
    p0 = CommPoly.var("phi+", i, 0)
    return SeriesZ({0: 1, **{s: p0 * CommPoly.var("phi-", i, -s) for s in range(1, M + 1)}}, M)


def extract_h_from_phi(M: int, nodes=(1, 2)) -> Dict[Tuple[int, int], CommPoly]:
    """h_{i,-s} as polynomials in phi-_{i,-k} and phi+_{i,0} = (phi-_{i,0})^-1."""
    inv = RatFuncQ.coerce(1) / QMINUS
    out = {}
    for i in nodes:
        lg = phi_minus_series(i, M).log()
        for s in range(1, M + 1):
            out[(i, s)] = lg[s] * (-inv)
    return out


def h_to_phi_roundtrip(M: int, i: int = 1) -> SeriesZ:
    """phi+_{i,0} phi-_i(z) rebuilt from the extracted h: should match phi_minus_series."""
    h = extract_h_from_phi(M, (i,))
    series = SeriesZ({s: h[(i, s)] * (-QMINUS) for s in range(1, M + 1)}, M)
    return series.exp()


def t_series_coefficients(M: int, n: int = 2) -> Dict[int, SeriesZ]:
    """T_i(z) = exp(sum_s sum_j C~_ij(q^s) h_{j,-s} z^s / [s]_q) as series in z."""
    out = {}
    inverses = {s: quantum_cartan_inverse(n, s) for s in range(1, M + 1)}
    for i in range(1, n + 1):
        expo = {}
        for s in range(1, M + 1):
            acc = CommPoly()
            br = RatFuncQ.coerce(q_bracket(s))
            for j in range(1, n + 1):
                acc = acc + CommPoly.var("h", j, -s) * (inverses[s][i - 1][j - 1] / br)
            expo[s] = acc
        out[i] = SeriesZ(expo, M, inverse=False).exp()
    return out


def t_to_h_matrix():
    """Rows express h_{1,-1}, h_{2,-1} through T_{1,1}, T_{2,1}: the inverse of C~(q)."""
    return quantum_cartan(2, 1)


# -- suites -------------------------------------------------------------------------

def run_gklo_suite(n: int, M: int) -> SuiteResult:
    res = SuiteResult("solve-gklo", {"n": n, "order": M})
    sol = solve_gklo(n, M)
    for i, r in gklo_residual(sol).items():
        res.add(check(f"multiplicative residual vanishes to order {M} at node {i}", r.coeffs,
                      detail="" if r.is_zero() else r.text()[:500]))
    poly = all(p.is_polynomial() for p in sol.a.values())
    res.add(check("coefficients are polynomial in xi with rational coefficients", [], ok=poly))
    for (i, m), p in sorted(sol.a.items()):
        res.add(Check(f"a[{i},{m}]", "pass", p.text(), 0))
    return res


def run_s_series_suite(n: int, M: int, symbolic_up_to: int = 1, points: int = 3) -> SuiteResult:
    """Symbolic multiplicative residual for n <= symbolic_up_to, seeded specializations beyond."""
    res = SuiteResult("solve-s-series", {"n": n, "order": M})
    gk = solve_gklo(n, M + 1)
    try:
        sol = solve_s_series(n, M, gk)
    except ArithmeticError as exc:
        res.add(Check("z^-1 solvability coefficient vanishes", "fail", str(exc), 1))
        return res
    for i in range(1, n + 1):
        res.add(check(f"z^-1 solvability coefficient vanishes at node {i}", sol.solvability[i].terms))
    for i, r in s_log_residual(sol, gk).items():
        res.add(check(f"additive S-equation holds symbolically to order {M} at node {i}", r.coeffs,
                      detail="" if r.is_zero() else r.text()[:500]))
    if n <= symbolic_up_to:
        runs = [("symbolic", None)]
    else:
        runs = [(f"xi specialization seed {k}", xi_sample(n, M + 1, k)) for k in range(points)]
    for label, values in runs:
        for i, r in s_residual(sol, gk, values).items():
            res.add(check(f"S-series residual vanishes to order {M} at node {i} ({label})", r.coeffs,
                          detail="" if r.is_zero() else r.text()[:500]))
    for i in range(1, n + 1):
        res.add(check(f"log S_{i} has no constant term", [], ok=sol.logs[i][0].is_zero()))
        for d in range(1, M + 1):
            res.add(Check(f"log S[{i}] coefficient of z^-{d}", "pass", sol.logs[i][d].text(), 0))
    return res
