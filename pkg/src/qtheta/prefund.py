"""The positive prefundamental module L_1 of the Borel subalgebra, truncated at a + b <= D.

Actions are stored as (shift, coefficient formula) pairs.  A formula takes
(a, b, ops) where ops supplies qpow, qround and qminus, so the same table is
evaluated exactly on integers here and symbolically elsewhere.
"""
from __future__ import annotations

from typing import Callable, Dict, List, NamedTuple, Tuple

from .qaffine import AFFINE_CARTAN
from .report import Check, SuiteResult, check
from .scalars import QMINUS, RatFuncQ, is_zero, q_binomial, q_round, qpow

Index = Tuple[int, int]
Vector = Dict[Index, object]


class ExactOps:
    """Integer backend: RatFuncQ values."""

    @staticmethod
    def qpow(e):
        return qpow(e)

    @staticmethod
    def qround(m):
        return RatFuncQ.coerce(q_round(m))

    qminus = QMINUS


class Action(NamedTuple):
    shift: Index
    coefficient: Callable
    text: str


def _e2_derived(a, b, o):
    return -o.qpow(1 - a) * o.qround(a)


def _e2_literal(a, b, o):
    return -o.qpow(-a) * o.qround(a)


ACTIONS: Dict[str, Action] = {
    "E1": Action((1, 0), lambda a, b, o: 1, "x+_{1,0} v_{a,b} = v_{a+1,b}"),
    "E12": Action((0, 1), lambda a, b, o: o.qpow(a), "E_{alpha1+alpha2} v_{a,b} = q^a v_{a,b+1}"),
    "E2": Action((-1, 1), _e2_derived, "x+_{2,0} v_{a,b} = -q^{1-a} (a)_q v_{a-1,b+1}"),
    "xm11": Action((-1, 0), lambda a, b, o: o.qpow(b) * o.qround(a) / o.qminus,
                   "x-_{1,1} v_{a,b} = q^b (a)_q/(q - q^-1) v_{a-1,b}"),
    "E0": Action((0, -1), lambda a, b, o: -o.qpow(-a - 2 * (b - 1)) * o.qround(b) / o.qminus,
                 "E_0 v_{a,b} = -q^{-a-2(b-1)} (b)_q/(q - q^-1) v_{a,b-1}"),
    "K0": Action((0, 0), lambda a, b, o: o.qpow(-2 * b - a), "K_0 = q^{-2b-a}"),
    "K1": Action((0, 0), lambda a, b, o: o.qpow(2 * a + b), "K_1 = q^{2a+b}"),
    "K2": Action((0, 0), lambda a, b, o: o.qpow(b - a), "K_2 = q^{b-a}"),
    "K0i": Action((0, 0), lambda a, b, o: o.qpow(2 * b + a), "K_0^-1"),
    "K1i": Action((0, 0), lambda a, b, o: o.qpow(-2 * a - b), "K_1^-1"),
    "K2i": Action((0, 0), lambda a, b, o: o.qpow(a - b), "K_2^-1"),
    "phi+11": Action((0, 0), lambda a, b, o: -o.qpow(2 * a + b), "phi+_{1,1} = -K_1"),
}
# generators acting by zero within the modes we use
ZERO_GENERATORS = ("xm21", "xp11", "xp21", "xp12", "xp22", "phi+12", "phi+21", "phi+22", "xm12", "xm22")

LITERAL_E2 = Action((-1, 1), _e2_literal, "x+_{2,0} v_{a,b} = -q^{-a} (a)_q v_{a-1,b+1} (as displayed)")


class L1Model:
    """Basis v_{a,b}, a, b >= 0, a + b <= depth."""

    def __init__(self, depth: int, actions: Dict[str, Action]):
        self.depth = depth
        self.actions = actions
        self.basis = [(a, s - a) for s in range(depth + 1) for a in range(s + 1)]

    def coefficient(self, gen: str, a: int, b: int):
        act = self.actions[gen]
        return act.coefficient(a, b, ExactOps)

    def apply(self, gen: str, vec: Vector) -> Vector:
        if gen in ZERO_GENERATORS:
            return {}
        act = self.actions[gen]
        out: Vector = {}
        for (a, b), c in vec.items():
            na, nb = a + act.shift[0], b + act.shift[1]
            if na < 0 or nb < 0 or na + nb > self.depth:
                continue
            coef = act.coefficient(a, b, ExactOps)
            if is_zero(coef):
                continue
            s = out.get((na, nb))
            s = c * coef if s is None else s + c * coef
            if is_zero(s):
                out.pop((na, nb), None)
            else:
                out[(na, nb)] = s
        return out

    def apply_word(self, word, vec: Vector) -> Vector:
        """word = (g1, ..., gr) acts as the product g1 ... gr, so gr first."""
        for g in reversed(word):
            vec = self.apply(g, vec)
            if not vec:
                break
        return vec

    def apply_poly(self, poly, vec: Vector) -> Vector:
        """poly: list of (scalar, word)."""
        out: Vector = {}
        for c, word in poly:
            for k, v in self.apply_word(word, vec).items():
                s = out.get(k)
                s = c * v if s is None else s + c * v
                if is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def weight(self, a: int, b: int) -> Tuple[int, int]:
        """(K_1, K_2) exponents."""
        return (2 * a + b, b - a)


def build_l1(depth: int, literal_e2: bool = False) -> L1Model:
    """L_1 truncated at depth; literal_e2 installs the x+_{2,0} coefficient exactly as displayed."""
    if depth < 3:
        raise ValueError("depth must be at least 3")
    actions = dict(ACTIONS)
    if literal_e2:
        actions["E2"] = LITERAL_E2
    return L1Model(depth, actions)


# -- relation checks ---------------------------------------------------------------------

def _qc(x, y, p):
    """[x, y]_p as a polynomial in words."""
    return [(1, (x, y)), (-p, (y, x))]


def _serre(i: str, j: str):
    two = q_binomial(2, 1)
    return [(1, (i, i, j)), (-two, (i, j, i)), (1, (j, i, i))]


def _neg(poly):
    return [(-c, w) for c, w in poly]


def _mul_words(p1, p2):
    return [(c1 * c2, w1 + w2) for c1, w1 in p1 for c2, w2 in p2]


def relation_table() -> List[Tuple[str, list]]:
    """Each entry is (name, polynomial that must act by zero)."""
    qi, q1 = qpow(-1), qpow(1)
    inv = RatFuncQ.coerce(1) / QMINUS
    gens = {0: "E0", 1: "E1", 2: "E2"}
    rels = []
    for i in (0, 1, 2):
        for j in (0, 1, 2):
            rels.append((f"K{i} E{j} = q^({AFFINE_CARTAN[i][j]}) E{j} K{i}",
                         [(1, (f"K{i}", gens[j])), (-qpow(AFFINE_CARTAN[i][j]), (gens[j], f"K{i}"))]))
    rels.append(("K0 K1 K2 = 1", [(1, ("K0", "K1", "K2")), (-1, ())]))
    for i in (0, 1, 2):
        rels.append((f"K{i} K{i}^-1 = 1", [(1, (f"K{i}", f"K{i}i")), (-1, ())]))
    rels.append(("[x+_{1,0}, x-_{1,1}] = phi+_{1,1}/(q - q^-1)",
                 [(1, ("E1", "xm11")), (-1, ("xm11", "E1")), (-inv, ("phi+11",))]))
    rels.append(("phi+_{1,1} = -K1", [(1, ("phi+11",)), (1, ("K1",))]))
    rels.append(("E_{alpha1+alpha2} E1 = q E1 E_{alpha1+alpha2}", [(1, ("E12", "E1")), (-q1, ("E1", "E12"))]))
    rels.append(("E2 E_{alpha1+alpha2} = q E_{alpha1+alpha2} E2", [(1, ("E2", "E12")), (-q1, ("E12", "E2"))]))
    rels.append(("E_{alpha1+alpha2} = q^-1 E1 E2 - E2 E1", [(1, ("E12",)), (-qi, ("E1", "E2")), (1, ("E2", "E1"))]))
    rels.append(("E0 E1 = q^-1 E1 E0 - K2^-1 x-_{2,1}",
                 [(1, ("E0", "E1")), (-qi, ("E1", "E0")), (1, ("K2i", "xm21"))]))
    rels.append(("E0 E2 = q^-1 E2 E0 + K1^-1 x-_{1,1}",
                 [(1, ("E0", "E2")), (-qi, ("E2", "E0")), (-1, ("K1i", "xm11"))]))
    rels.append(("x-_{1,1} = K1 [E0, E2]_{q^-1}",
                 [(1, ("xm11",))] + _neg(_mul_words([(1, ("K1",))], _qc("E0", "E2", qi)))))
    rels.append(("x-_{1,1} E_{alpha1+alpha2} = -E2 x-_{1,1} E1 + q^-1 x-_{1,1} E1 E2",
                 [(1, ("xm11", "E12")), (1, ("E2", "xm11", "E1")), (-qi, ("xm11", "E1", "E2"))]))
    rels.append(("E0 E_{alpha1+alpha2} = q^-2 E_{alpha1+alpha2} E0 - K1^-1 x-_{1,1} E1 + q^-2 E1 K1^-1 x-_{1,1}"
                 " - q^-1 K2^-1 x-_{2,1} E2 + q^-1 E2 K2^-1 x-_{2,1}",
                 [(1, ("E0", "E12")), (-qpow(-2), ("E12", "E0")), (1, ("K1i", "xm11", "E1")),
                  (-qpow(-2), ("E1", "K1i", "xm11")), (qi, ("K2i", "xm21", "E2")), (-qi, ("E2", "K2i", "xm21"))]))
    for i in (0, 1, 2):
        for j in (0, 1, 2):
            if i != j:
                rels.append((f"Serre(E{i}, E{j})", _serre(gens[i], gens[j])))
    return rels


def verify_l1_relations(model: L1Model, margin: int = 3) -> SuiteResult:
    res = SuiteResult("prefund-relations", {"depth": model.depth, "margin": margin})
    interior = [(a, b) for a, b in model.basis if a + b <= model.depth - margin]
    for name, poly in relation_table():
        bad = []
        for v in interior:
            out = model.apply_poly(poly, {v: 1})
            if out:
                bad.append(v)
        res.add(check(name, bad, detail=f"fails on v_{bad[0]}" if bad else ""))
    weights = [model.weight(a, b) for a, b in model.basis]
    res.add(check("weights (K1, K2 exponents) are pairwise distinct", [],
                  ok=len(set(weights)) == len(weights)))
    bad = [v for v in model.basis
           if model.apply("K1", {v: 1}) != {v: qpow(model.weight(*v)[0])}
           or model.apply("K2", {v: 1}) != {v: qpow(model.weight(*v)[1])}]
    res.add(check("v_{a,b} has weight a alpha1 + b (alpha1 + alpha2)", bad))
    bad = []
    for a, b in interior:
        out = model.apply_word(("xm11", "E1"), {(a, b): 1})
        want = qpow(b) * RatFuncQ.coerce(q_round(a + 1)) / QMINUS
        if out != {(a, b): want}:
            bad.append((a, b))
    res.add(check("x-_{1,1} x+_{1,0} acts by q^b (a+1)_q/(q - q^-1)", bad))
    return res


def verify_lowest_weight(model: L1Model) -> SuiteResult:
    res = SuiteResult("prefund-lowest-weight", {"depth": model.depth})
    v0 = {(0, 0): 1}
    res.add(check("phi+_{1,0} v_{0,0} = v_{0,0}", [], ok=model.apply("K1", v0) == v0))
    res.add(check("phi+_{1,1} v_{0,0} = -v_{0,0}", [], ok=model.apply("phi+11", v0) == {(0, 0): -1}))
    res.add(check("phi+_{2,0} v_{0,0} = v_{0,0}", [], ok=model.apply("K2", v0) == v0))
    for g in ("phi+12", "phi+21", "phi+22"):
        res.add(check(f"{g} v_{{0,0}} = 0", [], ok=not model.apply(g, v0)))
    qi = qpow(-1)
    lowering = {
        "E_0 = E_{delta-alpha1-alpha2}": [(1, ("E0",))],
        "E_{delta-alpha1} = -K1^-1 x-_{1,1}": [(-1, ("K1i", "xm11"))],
        "E_{delta-alpha2} = -[E0, E1]_{q^-1}": _neg(_qc("E0", "E1", qi)),
        "x-_{2,1}": [(1, ("xm21",))],
        "E2": [(1, ("E2",))],
    }
    for name, poly in lowering.items():
        res.add(check(f"{name} annihilates v_{{0,0}}", [], ok=not model.apply_poly(poly, v0)))
    res.add(check("x-_{1,1} v_{0,b} = 0 (lambda_{0,b} = 0)", [],
                  ok=all(not model.apply("xm11", {(0, b): 1}) for b in range(model.depth + 1))))
    return res


def run_suite(depth: int = 12, margin: int = 3) -> SuiteResult:
    model = build_l1(depth)
    res = SuiteResult("prefund", {"depth": depth, "margin": margin})
    for part in (verify_l1_relations(model, margin), verify_lowest_weight(model)):
        res.checks.extend(part.checks)
    return res
