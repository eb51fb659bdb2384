"""Exact scalars: rationals, Laurent polynomials in q, rational functions in q.

Everything here is immutable.  RatFuncQ keeps a canonical form so that
``==`` is mathematical equality, which all the verification code relies on.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

Rational = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


# -- dense polynomial helpers over Q (index = degree) ------------------------

def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: List[Fraction], b: List[Fraction]):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], _trim(a)
    quot = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lead
        quot[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return _trim(quot), _trim(a[:db])


def _poly_gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


class LaurentQ:
    """Finite sum  sum_e c_e q^e  with rational c_e (no zero entries stored)."""

    __slots__ = ("_c", "_h")

    def __init__(self, coeffs=None):
        c: Dict[int, Fraction] = {}
        if coeffs:
            for e, v in coeffs.items():
                v = _frac(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._h = None

    @classmethod
    def _raw(cls, c: Dict[int, Fraction]) -> "LaurentQ":
        obj = cls.__new__(cls)
        obj._c = c
        obj._h = None
        return obj

    @classmethod
    def const(cls, v) -> "LaurentQ":
        v = _frac(v)
        return cls._raw({0: v} if v else {})

    @classmethod
    def monomial(cls, e: int, v=1) -> "LaurentQ":
        v = _frac(v)
        return cls._raw({e: v} if v else {})

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return len(self._c) == 1 and self._c.get(0) == 1

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def __add__(self, other):
        if not isinstance(other, LaurentQ):
            other = LaurentQ.const(other)
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentQ._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentQ):
            other = LaurentQ.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentQ.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentQ):
            v = _frac(other)
            if not v:
                return LaurentQ._raw({})
            return LaurentQ._raw({e: x * v for e, x in self._c.items()})
        c: Dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentQ._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            return LaurentQ.monomial(e * k, v ** k)
        out = LaurentQ.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentQ):
            return self._c == other._c
        if isinstance(other, RatFuncQ):
            return other == self
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._c.items()))
        return self._h

    def subs_power(self, s: int) -> "LaurentQ":
        """q -> q^s."""
        return LaurentQ._raw({e * s: v for e, v in self._c.items()})

    def invert_q(self) -> "LaurentQ":
        return self.subs_power(-1)

    def at_one(self) -> Fraction:
        return sum(self._c.values(), Fraction(0))

    def evaluate(self, x):
        x = _frac(x)
        return sum((v * x ** e for e, v in self._c.items()), Fraction(0))

    def eval_mod(self, x: int, p: int) -> int:
        out = 0
        for e, v in self._c.items():
            t = v.numerator * pow(v.denominator, -1, p) % p
            out += t * pow(x, e, p)
        return out % p

    def to_poly(self) -> Tuple[int, List[Fraction]]:
        """(shift, dense coefficients) with self = q^shift * poly(q)."""
        if not self._c:
            return 0, []
        lo, hi = min(self._c), max(self._c)
        return lo, [self._c.get(lo + i, Fraction(0)) for i in range(hi - lo + 1)]

    @classmethod
    def from_poly(cls, shift: int, poly: List[Fraction]) -> "LaurentQ":
        return cls._raw({shift + i: v for i, v in enumerate(poly) if v})

    def __str__(self):
        return _laurent_text(self._c)

    def __repr__(self):
        return f"LaurentQ({self})"


def _coef_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _laurent_text(c: Dict[int, Fraction]) -> str:
    if not c:
        return "0"
    parts = []
    for e in sorted(c, reverse=True):
        v = c[e]
        if e == 0:
            parts.append(_coef_text(v))
            continue
        mon = "q" if e == 1 else f"q^{e}"
        if v == 1:
            parts.append(mon)
        elif v == -1:
            parts.append("-" + mon)
        else:
            parts.append(f"{_coef_text(v)}*{mon}")
    return " + ".join(parts).replace("+ -", "- ")


_ONE = LaurentQ.const(1)


class RatFuncQ:
    """num/den in lowest terms; den has constant term 1 and no negative powers."""

    __slots__ = ("num", "den", "_h")

    def __init__(self, num, den=None):
        if not isinstance(num, LaurentQ):
            num = LaurentQ.const(num)
        if den is None:
            den = _ONE
        elif not isinstance(den, LaurentQ):
            den = LaurentQ.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _canonical(num, den)
        self._h = None

    @classmethod
    def _raw(cls, num: LaurentQ, den: LaurentQ) -> "RatFuncQ":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._h = None
        return obj

    @classmethod
    def coerce(cls, x) -> "RatFuncQ":
        if isinstance(x, RatFuncQ):
            return x
        if isinstance(x, LaurentQ):
            return cls._raw(x, _ONE)
        return cls._raw(LaurentQ.const(x), _ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFuncQ._raw(self.num + o.num, _ONE)
        if self.den == o.den:
            return RatFuncQ(self.num + o.num, self.den)
        return RatFuncQ(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ._raw(-self.num, self.den)

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RatFuncQ.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFuncQ._raw(LaurentQ.const(0), _ONE)
            return RatFuncQ._raw(self.num * other, self.den)
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFuncQ._raw(self.num * o.num, _ONE)
        if o.den.is_one() and o.num.is_monomial():
            return RatFuncQ._raw(self.num * o.num, self.den)
        if self.den.is_one() and self.num.is_monomial():
            return RatFuncQ._raw(self.num * o.num, o.den)
        return RatFuncQ._raw(*_mul_general(self.num, self.den, o.num, o.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFuncQ":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.num.is_monomial() and self.den.is_one():
            return RatFuncQ._raw(self.num ** -1, _ONE)
        return RatFuncQ(self.den, self.num)

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RatFuncQ.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFuncQ._raw(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.num, self.den))
        return self._h

    def subs_power(self, s: int) -> "RatFuncQ":
        """q -> q^s (s may be negative)."""
        return RatFuncQ(self.num.subs_power(s), self.den.subs_power(s))

    def invert_q(self) -> "RatFuncQ":
        return self.subs_power(-1)

    def at_one(self) -> Fraction:
        d = self.den.at_one()
        if d == 0:
            raise ZeroDivisionError("pole at q=1")
        return self.num.at_one() / d

    def evaluate(self, x) -> Fraction:
        return self.num.evaluate(x) / self.den.evaluate(x)

    def eval_mod(self, x: int, p: int) -> int:
        d = self.den.eval_mod(x, p)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this residue")
        return self.num.eval_mod(x, p) * pow(d, -1, p) % p

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFuncQ({self})"


def _coerce_or_none(x):
    if isinstance(x, RatFuncQ):
        return x
    if isinstance(x, LaurentQ):
        return RatFuncQ._raw(x, _ONE)
    if isinstance(x, (int, Fraction)):
        return RatFuncQ._raw(LaurentQ.const(x), _ONE)
    return None


@lru_cache(maxsize=1 << 16)
def _mul_general(n1: LaurentQ, d1: LaurentQ, n2: LaurentQ, d2: LaurentQ):
    # the same few coefficients get multiplied over and over inside exponentials
    return _canonical(n1 * n2, d1 * d2)


def _canonical(num: LaurentQ, den: LaurentQ):
    if num.is_zero():
        return LaurentQ.const(0), _ONE
    if den.is_monomial():
        (e, v), = den.coeffs.items()
        return LaurentQ._raw({k - e: c / v for k, c in num._c.items()}), _ONE
    a, pn = num.to_poly()
    b, pd = den.to_poly()
    g = _poly_gcd(pn, pd)
    if len(g) > 1:
        pn, _ = _poly_divmod(pn, g)
        pd, _ = _poly_divmod(pd, g)
    c0 = pd[0]
    pn = [c / c0 for c in pn]
    pd = [c / c0 for c in pd]
    return LaurentQ.from_poly(a - b, pn), LaurentQ.from_poly(0, pd)


def rational_normalize(x: RatFuncQ) -> RatFuncQ:
    """Canonical form of a rational function (construction already canonicalizes)."""
    return RatFuncQ(x.num, x.den)


def is_zero(c) -> bool:
    if isinstance(c, (LaurentQ, RatFuncQ)):
        return c.is_zero()
    return c == 0


q = RatFuncQ.coerce(LaurentQ.monomial(1))


def qpow(e: int) -> RatFuncQ:
    return RatFuncQ.coerce(LaurentQ.monomial(e))


# -- q-combinatorics ----------------------------------------------------------

@lru_cache(maxsize=None)
def q_bracket(m: int) -> LaurentQ:
    """[m]_q = (q^m - q^-m)/(q - q^-1) = q^(m-1) + q^(m-3) + ... + q^(1-m)."""
    if m == 0:
        return LaurentQ.const(0)
    if m < 0:
        return -q_bracket(-m)
    return LaurentQ._raw({m - 1 - 2 * k: Fraction(1) for k in range(m)})


@lru_cache(maxsize=None)
def q_round(m: int) -> LaurentQ:
    """(m)_q = (q^2m - 1)/(q^2 - 1)."""
    if m == 0:
        return LaurentQ.const(0)
    if m < 0:
        # (q^-2k - 1)/(q^2 - 1) = -q^-2k (k)_q
        return -(LaurentQ.monomial(2 * m) * q_round(-m))
    return LaurentQ._raw({2 * k: Fraction(1) for k in range(m)})


@lru_cache(maxsize=None)
def q_factorial_bracket(m: int) -> LaurentQ:
    out = LaurentQ.const(1)
    for s in range(1, m + 1):
        out = out * q_bracket(s)
    return out


@lru_cache(maxsize=None)
def q_factorial_round(m: int) -> LaurentQ:
    """(m)_q! = (1)_q (2)_q ... (m)_q, the factorial used by exp_q."""
    out = LaurentQ.const(1)
    for s in range(1, m + 1):
        out = out * q_round(s)
    return out


@lru_cache(maxsize=None)
def q_falling(m: int, k: int) -> LaurentQ:
    out = LaurentQ.const(1)
    for s in range(1, k + 1):
        out = out * q_bracket(m - s + 1)
    return out


@lru_cache(maxsize=None)
def q_binomial(m: int, k: int) -> RatFuncQ:
    """Gaussian binomial  prod_{s=1..k} [m-s+1]_q / [k]_q!."""
    return RatFuncQ(q_falling(m, k), q_factorial_bracket(k))


QMINUS = RatFuncQ.coerce(LaurentQ({1: 1, -1: -1}))  # q - q^-1


# -- Cartan data and the quantum Cartan matrix -------------------------------

def cartan_matrix_A(n: int) -> List[List[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)]
            for i in range(n)]


def quantum_cartan(n: int, s: int = 1) -> List[List[RatFuncQ]]:
    """C(q^s) = ([c_ij]_{q^s})."""
    c = cartan_matrix_A(n)
    return [[RatFuncQ.coerce(q_bracket(c[i][j]).subs_power(s)) for j in range(n)]
            for i in range(n)]


def mat_mul(a, b):
    n, m, k = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = RatFuncQ.coerce(0)
            for t in range(m):
                if not is_zero(a[i][t]) and not is_zero(b[t][j]):
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_inverse(a):
    """Gauss-Jordan inverse over the field of rational functions."""
    n = len(a)
    aug = [[RatFuncQ.coerce(x) for x in row] + [RatFuncQ.coerce(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def quantum_cartan_inverse(n: int, s: int = 1) -> List[List[RatFuncQ]]:
    """C~(q^s), checked against C(q^s) before returning."""
    if n < 1 or s < 1:
        raise ValueError("need n >= 1 and s >= 1")
    c = quantum_cartan(n, s)
    inv = mat_inverse(c)
    prod = mat_mul(c, inv)
    for i in range(n):
        for j in range(n):
            if prod[i][j] != int(i == j):
                raise ArithmeticError("quantum Cartan inverse failed its check")
    return inv
