"""U_q of affine sl_3: Drinfeld-Jimbo and Drinfeld presentations, braid action, root vectors.

Weights live in Z^3 over (alpha_0, alpha_1, alpha_2); delta = (1, 1, 1).
K_0 is eliminated through K_0 K_1 K_2 = 1, so every word over the
Drinfeld-Jimbo alphabet rewrites to F-word * K_1^a K_2^b * E-word.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Tuple

from .ncalg import (Alphabet, GeneratorId, GeneratorMap, IdealReducer, NCElement, RelationSet,
                    TensorElement, _acc, apply_morphism, critical_pair_failures, q_commutator,
                    tensor_ideal_member)
from .report import Check, SuiteResult, check
from .scalars import QMINUS, RatFuncQ, q_binomial, qpow

AFFINE_CARTAN = ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
DELTA = (1, 1, 1)
NODES = (0, 1, 2)
PSI_NODE = {0: 0, 1: 2, 2: 1}
POSITIVE_FINITE = ((1, 0), (0, 1), (1, 1))  # alpha_1, alpha_2, alpha_1 + alpha_2


def _unit(i: int) -> tuple:
    return tuple(int(j == i) for j in NODES)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _scale(a, k):
    return tuple(k * x for x in a)


# -- roots --------------------------------------------------------------------------

class AffineRoot(NamedTuple):
    c0: int
    c1: int
    c2: int

    @classmethod
    def simple(cls, i: int) -> "AffineRoot":
        return cls(*_unit(i))

    def reflect(self, i: int) -> "AffineRoot":
        pairing = sum(AFFINE_CARTAN[i][j] * self[j] for j in NODES)
        return AffineRoot(*(self[j] - pairing * int(j == i) for j in NODES))

    def decompose(self):
        """(m, finite part) with self = m*delta + c1' alpha_1 + c2' alpha_2."""
        m = self.c0
        return m, (self.c1 - m, self.c2 - m)

    def kind(self) -> Optional[str]:
        """'+' for m delta + alpha, '-' for r delta - alpha (alpha a positive root of sl_3)."""
        m, fin = self.decompose()
        if fin in POSITIVE_FINITE and m >= 0:
            return "+"
        neg = (-fin[0], -fin[1])
        if neg in POSITIVE_FINITE and m >= 1:
            return "-"
        return None

    def text(self) -> str:
        m, (a, b) = self.decompose()
        parts = []
        if m:
            parts.append("delta" if m == 1 else f"{m}delta")
        for c, name in ((a, "alpha1"), (b, "alpha2")):
            if c:
                sign = "-" if c < 0 else ("+" if parts else "")
                parts.append(f"{sign}{'' if abs(c) == 1 else abs(c)}{name}")
        return "".join(parts) or "0"


_IOTA = (1, 0, 1, 2, 1, 0, 1, 2)  # i_8 = i_0, i_1, ..., i_7


def iota(k: int) -> int:
    """The period-8 node sequence (0,1,2,1,0,1,2,1) starting at k = 1."""
    return _IOTA[k % 8]


def damiani_root(k: int) -> AffineRoot:
    if k >= 1:
        word = [iota(j) for j in range(1, k)]
    else:
        word = [iota(j) for j in range(0, k, -1)]
    beta = AffineRoot.simple(iota(k))
    for i in reversed(word):
        beta = beta.reflect(i)
    return beta


def damiani_order_key(k: int) -> tuple:
    """beta_1 < beta_2 < ... < beta_-2 < beta_-1 < beta_0."""
    return (0, k) if k >= 1 else (1, k)


class DamianiData(NamedTuple):
    roots: Dict[int, AffineRoot]

    def ordered(self) -> List[int]:
        return sorted(self.roots, key=damiani_order_key)


def damiani_roots(k_min: int, k_max: int) -> DamianiData:
    if not k_min <= 0 < k_max:
        raise ValueError("need k_min <= 0 < k_max")
    return DamianiData({k: damiani_root(k) for k in range(k_min, k_max + 1)})


# -- Drinfeld-Jimbo side ---------------------------------------------------------------

def _dj_weight(family: str, i: int) -> tuple:
    if family == "E":
        return _unit(i)
    if family == "F":
        return _scale(_unit(i), -1)
    return (0, 0, 0)


@lru_cache(maxsize=None)
def dj_alphabet() -> Alphabet:
    tag = "dj"
    names = [("F", 0), ("F", 1), ("F", 2), ("K", 0), ("Ki", 0), ("K", 1), ("Ki", 1), ("K", 2), ("Ki", 2),
             ("E", 0), ("E", 1), ("E", 2)]
    gens = [GeneratorId(tag, f, (i,)) for f, i in names]
    weights = {g: _dj_weight(g.family, g.indices[0]) for g in gens}
    return Alphabet(tag, gens, weights, lambda w: sum(w), 3)


def K(i: int, power: int = 1) -> NCElement:
    """K_i^power in the Drinfeld-Jimbo alphabet."""
    a = dj_alphabet()
    g = a.gen("K" if power > 0 else "Ki", i)
    return g ** abs(power)


def k_of_root(beta) -> NCElement:
    """K_beta = prod K_j^{c_j} for beta = sum c_j alpha_j."""
    out = dj_alphabet().one()
    for j in NODES:
        if beta[j]:
            out = out * K(j, beta[j])
    return out


def E(i: int) -> NCElement:
    return dj_alphabet().gen("E", i)


def F(i: int) -> NCElement:
    return dj_alphabet().gen("F", i)


def serre_element(x: NCElement, y: NCElement) -> NCElement:
    """x^2 y - [2] x y x + y x^2 (the c = -1 quantum Serre element)."""
    return x * x * y - (x * y * x).scale(q_binomial(2, 1)) + y * x * x


@lru_cache(maxsize=None)
def dj_relations() -> RelationSet:
    a = dj_alphabet()
    c = AFFINE_CARTAN
    swaps = {}
    for i in NODES:
        for j in NODES:
            swaps[(a.find("E", i), a.find("F", j))] = (
                F(j) * E(i) + ((K(i) - K(i, -1)).scale(RatFuncQ.coerce(1) / QMINUS) if i == j else 0))
            # K_j E_i = q^{c_ji} E_i K_j, K_j F_i = q^{-c_ji} F_i K_j
            swaps[(a.find("E", i), a.find("K", j))] = (K(j) * E(i)).scale(qpow(-c[j][i]))
            swaps[(a.find("E", i), a.find("Ki", j))] = (K(j, -1) * E(i)).scale(qpow(c[j][i]))
            swaps[(a.find("K", j), a.find("F", i))] = (F(i) * K(j)).scale(qpow(-c[j][i]))
            swaps[(a.find("Ki", j), a.find("F", i))] = (F(i) * K(j, -1)).scale(qpow(c[j][i]))
    for j in (1, 2):
        swaps[(a.find("K", j), a.find("Ki", j))] = a.one()
        swaps[(a.find("Ki", j), a.find("K", j))] = a.one()
    for g in ("K", "Ki"):
        for h in ("K", "Ki"):
            swaps[(a.find(g, 2), a.find(h, 1))] = a.gen(h, 1) * a.gen(g, 2)
    subs = {a.find("K", 0): K(1, -1) * K(2, -1), a.find("Ki", 0): K(1) * K(2)}
    serre = []
    for i in NODES:
        for j in NODES:
            if i != j:
                serre.append(serre_element(E(i), E(j)))
                serre.append(serre_element(F(i), F(j)))
    return RelationSet(a, swaps, serre, subs, name="drinfeld-jimbo")


def dj_reduce(x: NCElement) -> NCElement:
    return dj_relations().reduce(x, strict=False)


@lru_cache(maxsize=None)
def _half_alphabet(family: str) -> Alphabet:
    tag = f"dj{family}"
    gens = [GeneratorId(tag, family, (i,)) for i in NODES]
    return Alphabet(tag, gens, {g: _dj_weight(family, g.indices[0]) for g in gens}, lambda w: sum(w), 3)


@lru_cache(maxsize=None)
def _half_relations(family: str) -> RelationSet:
    a = _half_alphabet(family)
    gens = [serre_element(a.gen(family, i), a.gen(family, j)) for i in NODES for j in NODES if i != j]
    return RelationSet(a, {}, gens, {}, name=f"serre-{family}")


class TriangularReducer:
    """Ideal membership for the Drinfeld-Jimbo relations, factor by factor.

    Every word rewrites to (F-word) K (E-word).  The Serre ideal is then
    I_F (x) U^0 (x) U_E + U_F (x) U^0 (x) I_E, provided F_k commutes with each
    E-Serre element (and E_k with each F-Serre element) modulo the oriented
    rules; ``decomposition_failures`` checks exactly that.
    """

    def __init__(self, bound: int):
        self.bound = bound
        self.rules = dj_relations()
        self.minus = IdealReducer(_half_relations("F"), bound)
        self.plus = IdealReducer(_half_relations("E"), bound)
        a = self.rules.alphabet
        self._kind = {i: g.family for i, g in enumerate(a.gens)}
        self._to_half = {}
        for fam in ("E", "F"):
            h = _half_alphabet(fam)
            for i in NODES:
                self._to_half[a.letter(a.find(fam, i))] = h.letter(h.find(fam, i))

    def split(self, x: NCElement) -> Dict[tuple, TensorElement]:
        """Group the normal form by its K-monomial; each group is an F (x) E tensor."""
        pi = self.rules.reduce(x, strict=False)
        groups: Dict[tuple, dict] = {}
        for w, c in pi.terms.items():
            fw = tuple(self._to_half[l] for l in w if self._kind[l] == "F")
            ew = tuple(self._to_half[l] for l in w if self._kind[l] == "E")
            kw = tuple(l for l in w if self._kind[l] not in ("E", "F"))
            _acc(groups.setdefault(kw, {}), (fw, ew, 0), c)
        return {kw: TensorElement(_half_alphabet("F"), _half_alphabet("E"), t) for kw, t in groups.items()}

    def member(self, x: NCElement) -> bool:
        for t in self.split(x).values():
            if t.is_zero():
                continue
            longest = max(max(len(l), len(r)) for l, r, _ in t.terms)
            if longest > self.bound:
                raise ValueError(f"degree bound {self.bound} is below a factor of length {longest}")
            if not tensor_ideal_member(t, self.minus, self.plus):
                return False
        return True


def decomposition_failures() -> List[str]:
    """[F_k, S] and [E_k, S'] for Serre elements S in E's and S' in F's must rewrite to 0."""
    rules = dj_relations()
    bad = []
    for i in NODES:
        for j in NODES:
            if i == j:
                continue
            se, sf = serre_element(E(i), E(j)), serre_element(F(i), F(j))
            for k in NODES:
                if not rules.reduce(F(k) * se - se * F(k), strict=False).is_zero():
                    bad.append(f"[F{k}, serre(E{i},E{j})]")
                if not rules.reduce(E(k) * sf - sf * E(k), strict=False).is_zero():
                    bad.append(f"[E{k}, serre(F{i},F{j})]")
    return bad


# -- automorphisms and braid action ------------------------------------------------------

def _k_images(f) -> dict:
    a = dj_alphabet()
    out = {}
    for j in NODES:
        out[a.find("K", j)] = f(j, 1)
        out[a.find("Ki", j)] = f(j, -1)
    return out


@lru_cache(maxsize=None)
def phi_map() -> GeneratorMap:
    """Phi: E_i <-> F_i, K_i fixed, q -> 1/q (algebra automorphism)."""
    a = dj_alphabet()
    images = {a.find("E", i): F(i) for i in NODES}
    images.update({a.find("F", i): E(i) for i in NODES})
    images.update(_k_images(K))
    return GeneratorMap(a, a, images, multiplicative=True, invert_q=True, name="Phi")


@lru_cache(maxsize=None)
def omega_map() -> GeneratorMap:
    """Omega: E_i <-> F_i, K_i -> K_i^-1, q -> 1/q (anti-automorphism)."""
    a = dj_alphabet()
    images = {a.find("E", i): F(i) for i in NODES}
    images.update({a.find("F", i): E(i) for i in NODES})
    images.update(_k_images(lambda j, p: K(j, -p)))
    return GeneratorMap(a, a, images, multiplicative=False, invert_q=True, name="Omega")


@lru_cache(maxsize=None)
def psi_map() -> GeneratorMap:
    """psi: exchange nodes 1 and 2."""
    a = dj_alphabet()
    images = {a.find("E", i): E(PSI_NODE[i]) for i in NODES}
    images.update({a.find("F", i): F(PSI_NODE[i]) for i in NODES})
    images.update(_k_images(lambda j, p: K(PSI_NODE[j], p)))
    return GeneratorMap(a, a, images, name="psi")


@lru_cache(maxsize=None)
def braid_map(i: int) -> GeneratorMap:
    a = dj_alphabet()
    c = AFFINE_CARTAN
    images = {}
    for j in NODES:
        if j == i:
            images[a.find("E", j)] = -(F(i) * K(i))
            images[a.find("F", j)] = -(K(i, -1) * E(i))
        else:
            m = -c[i][j]
            e_img, f_img = a.zero(), a.zero()
            for s in range(m + 1):
                sign = (-1) ** (s + m)
                e_img = e_img + (E(i) ** (m - s) * E(j) * E(i) ** s).scale(sign * qpow(-s))
                f_img = f_img + (F(i) ** s * F(j) * F(i) ** (m - s)).scale(sign * qpow(s))
            images[a.find("E", j)] = e_img
            images[a.find("F", j)] = f_img
    images.update(_k_images(lambda j, p: k_of_root(_scale(AffineRoot.simple(j).reflect(i), p))))
    return GeneratorMap(a, a, images, name=f"T{i}")


def braid_apply(i: int, x: NCElement, inverse: bool = False) -> NCElement:
    """T_i(x), or T_i^-1(x) = Phi T_i Phi (x); the result is rewritten by the oriented rules."""
    if inverse:
        y = apply_morphism(apply_morphism(apply_morphism(x, phi_map()), braid_map(i)), phi_map())
    else:
        y = apply_morphism(x, braid_map(i))
    return dj_reduce(y)


def braid_word(word, x: NCElement, inverse: bool = False) -> NCElement:
    """T_{w_1} ... T_{w_r}(x): the rightmost letter acts first."""
    for i in reversed(list(word)):
        x = braid_apply(i, x, inverse)
    return x


def root_vector(k: int) -> NCElement:
    """E_{beta_k} from the Damiani braid words."""
    if k >= 1:
        return braid_word([iota(j) for j in range(1, k)], E(iota(k)))
    return braid_word([iota(j) for j in range(0, k, -1)], E(iota(k)), inverse=True)


def root_vector_lower(k: int) -> NCElement:
    """F_{beta_k} = Omega(E_{beta_k})."""
    return dj_reduce(apply_morphism(root_vector(k), omega_map()))


# -- Drinfeld new realization ----------------------------------------------------------

def _dr_weight(family: str, i: int, m: int) -> tuple:
    base = _add(_scale(DELTA, m), (0, 0, 0))
    if family == "x+":
        return _add(base, _unit(i))
    if family == "x-":
        return _add(base, _scale(_unit(i), -1))
    return base


@lru_cache(maxsize=None)
def drinfeld_alphabet(M: int) -> Alphabet:
    """x-_{i,m} < x+_{i,m} < phi+_{i,m>0}, phi-_{i,m<0} < K_1, K_1^-1, K_2, K_2^-1."""
    tag = f"dr{M}"
    gens = []
    for fam in ("x-", "x+"):
        for i in (1, 2):
            for m in range(-M, M + 1):
                gens.append(GeneratorId(tag, fam, (i, m)))
    for i in (1, 2):
        for m in range(1, M + 1):
            gens.append(GeneratorId(tag, "phi+", (i, m)))
            gens.append(GeneratorId(tag, "phi-", (i, -m)))
    for i in (1, 2):
        gens.append(GeneratorId(tag, "K", (i,)))
        gens.append(GeneratorId(tag, "Ki", (i,)))
    weights = {}
    for g in gens:
        if g.family in ("K", "Ki"):
            weights[g] = (0, 0, 0)
        else:
            weights[g] = _dr_weight(g.family, g.indices[0], g.indices[1])
    return Alphabet(tag, gens, weights, lambda w: sum(w), 3)


class DrinfeldSymbols:
    """Element constructors for a Drinfeld window, with the mode conventions built in."""

    def __init__(self, M: int):
        self.M = M
        self.a = drinfeld_alphabet(M)

    def x(self, sign: str, i: int, m: int) -> NCElement:
        if abs(m) > self.M:
            raise KeyError(f"mode {m} outside the window {self.M}")
        return self.a.gen("x" + sign, i, m)

    def phi(self, sign: str, i: int, m: int) -> NCElement:
        """phi^{+-}_{i,m}; zero on the wrong side, K_i^{+-1} at m = 0."""
        if (sign == "+" and m < 0) or (sign == "-" and m > 0):
            return self.a.zero()
        if m == 0:
            return self.a.gen("K" if sign == "+" else "Ki", i)
        if abs(m) > self.M:
            raise KeyError(f"mode {m} outside the window {self.M}")
        return self.a.gen("phi" + sign, i, m)

    def K(self, i: int, power: int = 1) -> NCElement:
        return self.a.gen("K" if power > 0 else "Ki", i) ** abs(power)


def _cartan_finite(i: int, j: int) -> int:
    return AFFINE_CARTAN[i][j]


@lru_cache(maxsize=None)
def drinfeld_relations(M: int = 1) -> RelationSet:
    """Every displayed relation instance with all modes in [-M, M]."""
    if M < 1:
        raise ValueError("need M >= 1")
    d = DrinfeldSymbols(M)
    a = d.a
    swaps = {}
    for j in (1, 2):
        for i in (1, 2):
            c = _cartan_finite(j, i)
            for m in range(-M, M + 1):
                for sign, e in (("+", 1), ("-", -1)):
                    x = d.x(sign, i, m)
                    g = a.find("x" + sign, i, m)
                    swaps[(a.find("K", j), g)] = (x * d.K(j)).scale(qpow(e * c))
                    swaps[(a.find("Ki", j), g)] = (x * d.K(j, -1)).scale(qpow(-e * c))
        swaps[(a.find("K", j), a.find("Ki", j))] = a.one()
        swaps[(a.find("Ki", j), a.find("K", j))] = a.one()
    # the Drinfeld-Cartan letters commute with each other
    cartan = [g for g in a.gens if g.family in ("phi+", "phi-", "K", "Ki")]
    for g in cartan:
        for h in cartan:
            if a.letter(g) > a.letter(h) and (a.letter(g), a.letter(h)) not in {
                    (a.letter(x), a.letter(y)) for x, y in swaps}:
                swaps[(g, h)] = NCElement(a, {(a.letter(h), a.letter(g)): 1})
    gens = []
    inv = RatFuncQ.coerce(1) / QMINUS
    modes = range(-M, M + 1)
    for i in (1, 2):
        for m in modes:
            for p in modes:
                if abs(m + p) > M:
                    continue
                cross = q_commutator(d.x("+", i, m), d.x("-", i, p))
                gens.append(cross - (d.phi("+", i, m + p) - d.phi("-", i, m + p)).scale(inv))
                j = 3 - i
                gens.append(q_commutator(d.x("+", i, m), d.x("-", j, p)))
    for i in (1, 2):
        for j in (1, 2):
            c = _cartan_finite(i, j)
            for sign, e in (("+", 1), ("-", -1)):
                qc = qpow(e * c)
                for m in range(-M - 1, M):
                    for p in range(-M, M):
                        for eps in ("+", "-"):
                            try:
                                lhs = (d.phi(eps, i, m + 1) * d.x(sign, j, p)
                                       - (d.phi(eps, i, m) * d.x(sign, j, p + 1)).scale(qc))
                                rhs = ((d.x(sign, j, p) * d.phi(eps, i, m + 1)).scale(qc)
                                       - d.x(sign, j, p + 1) * d.phi(eps, i, m))
                            except KeyError:
                                continue
                            gens.append(lhs - rhs)
                for m in range(-M, M):
                    for p in range(-M, M):
                        lhs = d.x(sign, i, m + 1) * d.x(sign, j, p) - (d.x(sign, i, m) * d.x(sign, j, p + 1)).scale(qc)
                        rhs = (d.x(sign, j, p) * d.x(sign, i, m + 1)).scale(qc) - d.x(sign, j, p + 1) * d.x(sign, i, m)
                        gens.append(lhs - rhs)
    for sign in ("+", "-"):
        for i, j in ((1, 2), (2, 1)):
            gens.append(serre_element(d.x(sign, i, 0), d.x(sign, j, 0)))
    return RelationSet(a, swaps, gens, {}, name=f"drinfeld-{M}")


# -- Beck dictionary -------------------------------------------------------------------

def beck_images() -> Dict[Tuple[str, int, int], NCElement]:
    """Drinfeld generators with |m| <= 1 as Drinfeld-Jimbo elements.

    Node 2 entries at m = +-1 are the psi-images of the node 1 entries with
    the sign psi(x+_{1,-1}) = -x+_{2,-1}.
    """
    qi = qpow(-1)
    out = {}
    for i in (1, 2):
        out[("x+", i, 0)] = E(i)
        out[("x-", i, 0)] = F(i)
    out[("x-", 1, 1)] = K(1) * q_commutator(E(0), E(2), qi)
    out[("x+", 1, -1)] = q_commutator(F(2), F(0), qpow(1)) * K(1, -1)
    out[("x-", 2, 1)] = -dj_reduce(apply_morphism(out[("x-", 1, 1)], psi_map()))
    out[("x+", 2, -1)] = -dj_reduce(apply_morphism(out[("x+", 1, -1)], psi_map()))
    for i in (1, 2):
        # [x+_{i,0}, x-_{i,1}] = phi+_{i,1}/(q - q^-1), [x+_{i,-1}, x-_{i,0}] = -phi-_{i,-1}/(q - q^-1)
        out[("phi+", i, 1)] = dj_reduce(q_commutator(out[("x+", i, 0)], out[("x-", i, 1)]).scale(QMINUS))
        out[("phi-", i, -1)] = dj_reduce(q_commutator(out[("x+", i, -1)], out[("x-", i, 0)]).scale(-QMINUS))
    return {k: dj_reduce(v) for k, v in out.items()}


def e0_from_dictionary() -> Tuple[NCElement, NCElement]:
    """The two displayed Drinfeld expressions for E_0, expanded."""
    b = beck_images()
    e0a = K(0) * q_commutator(b[("x-", 1, 1)], b[("x-", 2, 0)], qpow(1))
    e0b = -(K(0) * q_commutator(b[("x-", 2, 1)], b[("x-", 1, 0)], qpow(1)))
    return dj_reduce(e0a), dj_reduce(e0b)


def f0_from_dictionary() -> NCElement:
    b = beck_images()
    return dj_reduce(q_commutator(b[("x+", 2, 0)], b[("x+", 1, -1)], qpow(-1)) * K(0, -1))


@lru_cache(maxsize=None)
def beck_map(M: int = 1) -> GeneratorMap:
    """Drinfeld window letters -> Drinfeld-Jimbo elements (only the letters with a dictionary entry)."""
    a = drinfeld_alphabet(M)
    b = beck_images()
    images = {}
    for g in a.gens:
        if g.family in ("K", "Ki"):
            images[g] = K(g.indices[0], 1 if g.family == "K" else -1)
        elif (g.family, *g.indices) in b:
            images[g] = b[(g.family, *g.indices)]
    return GeneratorMap(a, dj_alphabet(), images, name="Beck")


def beck_terms(M: int = 1) -> List[str]:
    a = drinfeld_alphabet(M)
    return [a.gens[i].text() for i in sorted(beck_map(M).images)]


def beck_modes_for_omega() -> Tuple[NCElement, NCElement]:
    """(Omega(x-_{1,1}), x+_{1,-1}) in the Drinfeld-Jimbo alphabet."""
    b = beck_images()
    return dj_reduce(apply_morphism(b[("x-", 1, 1)], omega_map())), b[("x+", 1, -1)]


def beck_from_braid() -> Dict[str, Tuple[NCElement, NCElement]]:
    """x-_{1,1} = T_0 T_2 (F_2) and x+_{1,-1} = T_0 T_2 (E_2): braid side vs dictionary side."""
    b = beck_images()
    return {
        "x-[1,1] = T0 T2 (F2)": (braid_word([0, 2], F(2)), b[("x-", 1, 1)]),
        "x+[1,-1] = T0 T2 (E2)": (braid_word([0, 2], E(2)), b[("x+", 1, -1)]),
    }


# -- verification ----------------------------------------------------------------------

def _identity(res: SuiteResult, name: str, diff: NCElement, reducer: TriangularReducer):
    diff = dj_reduce(diff)
    if diff.is_zero():
        return res.add(Check(name, "pass", "equal after rewriting", 0))
    ok = reducer.member(diff)
    return res.add(check(name, diff.terms, ok=ok,
                         detail="in the Serre ideal" if ok else diff.text()[:1000]))


def root_vector_identities() -> List[Tuple[str, NCElement, NCElement]]:
    """(name, braid-side element, dictionary-side element) for the root-vector formulas."""
    b = beck_images()
    qi = qpow(-1)
    omega = lambda x: dj_reduce(apply_morphism(x, omega_map()))
    psi = lambda x: dj_reduce(apply_morphism(x, psi_map()))
    e_a2 = root_vector(-2)
    e_a12 = root_vector(-1)
    e_d1 = braid_word([0, 1, 2], E(1))
    e_d2 = root_vector(2)
    rows = [
        ("E_alpha1 = x+_{1,0}", root_vector(0), b[("x+", 1, 0)]),
        ("E_alpha2 = x+_{2,0}", e_a2, b[("x+", 2, 0)]),
        ("E_alpha0 = E_0", root_vector(1), E(0)),
        ("E_alpha1+alpha2 = -[x+_{2,0}, x+_{1,0}]_{q^-1}", e_a12,
         -q_commutator(b[("x+", 2, 0)], b[("x+", 1, 0)], qi)),
        ("E_alpha1+alpha2 = T1^-1(E2) = q^-1 E1 E2 - E2 E1", e_a12, (E(1) * E(2)).scale(qi) - E(2) * E(1)),
        ("T1 T2 (E1) = E2", braid_word([1, 2], E(1)), E(2)),
        ("E_delta-alpha1 = T0 T1 T2 (E1) = -K1^-1 x-_{1,1}", e_d1, -(K(1, -1) * b[("x-", 1, 1)])),
        ("E_delta-alpha1 = T0(E2) = -[E0, E2]_{q^-1}", e_d1, -q_commutator(E(0), E(2), qi)),
        ("E_delta-alpha2 = T0(E1) = psi(E_delta-alpha1)", e_d2, psi(e_d1)),
        ("E_delta-alpha2 = -K2^-1 psi(x-_{1,1})", e_d2, -(K(2, -1) * psi(b[("x-", 1, 1)]))),
        ("F_alpha1 = x-_{1,0}", omega(root_vector(0)), b[("x-", 1, 0)]),
        ("F_alpha2 = x-_{2,0}", omega(e_a2), b[("x-", 2, 0)]),
        ("F_alpha0 = F_0", omega(root_vector(1)), F(0)),
        ("F_alpha1+alpha2 = -[x-_{1,0}, x-_{2,0}]_q", omega(e_a12),
         -q_commutator(b[("x-", 1, 0)], b[("x-", 2, 0)], qpow(1))),
        ("Omega(x-_{1,1}) = x+_{1,-1}", *beck_modes_for_omega()),
        ("F_delta-alpha1 = -x+_{1,-1} K1", omega(e_d1), -(b[("x+", 1, -1)] * K(1))),
        ("F_delta-alpha2 = psi(F_delta-alpha1)", omega(e_d2), psi(omega(e_d1))),
        ("E_0 = K0 [x-_{1,1}, x-_{2,0}]_q", e0_from_dictionary()[0], E(0)),
        ("E_0 = -K0 [x-_{2,1}, x-_{1,0}]_q", e0_from_dictionary()[1], E(0)),
        ("F_0 = [x+_{2,0}, x+_{1,-1}]_{q^-1} K0^-1", f0_from_dictionary(), F(0)),
    ]
    for name, (lhs, rhs) in beck_from_braid().items():
        rows.append((name, lhs, rhs))
    return rows


def literal_node2_delta_identity() -> NCElement:
    """E_delta-alpha2 + K2^-1 x-_{2,1} with the dictionary's node-2 sign: equals 2 E_delta-alpha2."""
    b = beck_images()
    return dj_reduce(root_vector(2) + K(2, -1) * b[("x-", 2, 1)])


EXPECTED_ROOTS = {
    1: (1, 0, 0), 2: (1, 1, 0), 3: (2, 1, 1), 4: (1, 0, 1),
    0: (0, 1, 0), -1: (0, 1, 1), -2: (0, 0, 1),
}


def verify_damiani(k_min: int = -8, k_max: int = 8) -> List[Check]:
    data = damiani_roots(k_min, k_max)
    out = []
    for k, coords in sorted(EXPECTED_ROOTS.items()):
        got = data.roots[k]
        out.append(check(f"beta_{k} = {AffineRoot(*coords).text()}", [], ok=tuple(got) == coords,
                         detail=f"computed {got.text()}"))
    plus = [k for k in data.roots if data.roots[k].kind() == "+"]
    minus = [k for k in data.roots if data.roots[k].kind() == "-"]
    out.append(check("beta_k in the positive family exactly for k <= 0", [],
                     ok=sorted(plus) == list(range(k_min, 1)) and sorted(minus) == list(range(1, k_max + 1))))
    out.append(check("beta_k pairwise distinct", [], ok=len(set(data.roots.values())) == len(data.roots)))
    return out


def verify_automorphisms() -> List[Check]:
    a = dj_alphabet()
    out = []
    letters = [g for g in a.gens]
    for name, f in (("Phi", phi_map()), ("Omega", omega_map()), ("psi", psi_map())):
        bad = [g.text() for g in letters
               if not dj_reduce(apply_morphism(apply_morphism(a.word(g), f), f) - a.word(g)).is_zero()]
        out.append(check(f"{name} is an involution on generators", bad, detail=", ".join(bad)))
    bad = []
    for i in NODES:
        for g in letters:
            x = a.word(g)
            lhs = dj_reduce(apply_morphism(braid_apply(i, x), psi_map()))
            rhs = braid_apply(PSI_NODE[i], dj_reduce(apply_morphism(x, psi_map())))
            if not dj_reduce(lhs - rhs).is_zero():
                bad.append(f"T{i} on {g.text()}")
    out.append(check("psi T_i = T_psi(i) psi on generators", bad, detail=", ".join(bad)))
    return out


def verify_braid_inverse(bound: int = 4) -> List[Check]:
    """T_i^-1 T_i (g) - g in the defining ideal for every generator."""
    red = TriangularReducer(bound)
    out = []
    for i in NODES:
        bad = []
        for fam in ("E", "F", "K", "Ki"):
            for j in NODES:
                x = dj_alphabet().gen(fam, j)
                d = dj_reduce(braid_apply(i, braid_apply(i, x), inverse=True) - x)
                if not d.is_zero() and not red.member(d):
                    bad.append(x.text())
        out.append(check(f"T{i}^-1 T{i} = id modulo relations", bad, detail=", ".join(bad)))
    return out


def verify_root_vectors(degree_bound: int = 6) -> SuiteResult:
    if degree_bound < 4:
        raise ValueError("degree bound must be at least 4")
    res = SuiteResult("qaffine-roots", {"degree_bound": degree_bound})
    fails = decomposition_failures()
    res.add(check("F_k commutes with E-Serre elements (and E_k with F-Serre) by rewriting", fails,
                  detail=", ".join(fails)))
    cp = critical_pair_failures(dj_relations())
    res.add(check("oriented Drinfeld-Jimbo rules are locally confluent", cp, detail=", ".join(cp[:20])))
    red = TriangularReducer(degree_bound)
    for name, lhs, rhs in root_vector_identities():
        _identity(res, name, lhs - rhs, red)
    b = beck_images()
    _identity(res, "E_delta-alpha2 = +K2^-1 x-_{2,1} (node 2 carries the sign of psi(x+_{1,-1}) = -x+_{2,-1})",
              root_vector(2) - K(2, -1) * b[("x-", 2, 1)], red)
    for c in verify_damiani():
        res.add(c)
    for c in verify_automorphisms():
        res.add(c)
    for c in verify_braid_inverse(max(4, min(degree_bound, 5))):
        res.add(c)
    return res
