"""Weight-graded free algebras, rewriting, ideal membership and tensors.

Words are stored as tuples of integer ranks into an Alphabet, so word
comparison is the alphabet order and hashing stays cheap.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import linalg
from .scalars import LaurentQ, RatFuncQ, is_zero, q_factorial_round


class GeneratorId(NamedTuple):
    alphabet: str
    family: str
    indices: Tuple[int, ...]

    def text(self) -> str:
        if not self.indices:
            return self.family
        return f"{self.family}[{','.join(str(i) for i in self.indices)}]"


class AlgebraError(Exception):
    pass


class MissingRule(AlgebraError):
    pass


class StepCapExceeded(AlgebraError):
    pass


def _add_weight(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg_weight(a):
    return tuple(-x for x in a)


class Alphabet:
    """An ordered finite generator set with weights in Z^d and a height map."""

    def __init__(self, tag: str, gens: Sequence[GeneratorId], weights: Dict[GeneratorId, tuple],
                 height: Callable[[tuple], int], dim: int):
        self.tag = tag
        self.gens = list(gens)
        self.rank = {g: i for i, g in enumerate(self.gens)}
        if len(self.rank) != len(self.gens):
            raise ValueError("duplicate generator")
        self.dim = dim
        self.zero_weight = (0,) * dim
        self._w = [tuple(weights[g]) for g in self.gens]
        self.height = height

    def __repr__(self):
        return f"Alphabet({self.tag}, {len(self.gens)} generators)"

    def __contains__(self, g):
        return g in self.rank

    def find(self, family: str, *indices) -> GeneratorId:
        return GeneratorId(self.tag, family, tuple(indices))

    def letter(self, g) -> int:
        if isinstance(g, int):
            return g
        if g not in self.rank:
            raise KeyError(f"{g} not in alphabet {self.tag}")
        return self.rank[g]

    def weight_of_letter(self, i: int) -> tuple:
        return self._w[i]

    def weight(self, word: Sequence[int]) -> tuple:
        w = self.zero_weight
        for i in word:
            w = _add_weight(w, self._w[i])
        return w

    def word_text(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        return " ".join(self.gens[i].text() for i in word)

    # element constructors
    def one(self) -> "NCElement":
        return NCElement(self, {(): 1})

    def zero(self) -> "NCElement":
        return NCElement(self, {})

    def scalar(self, c) -> "NCElement":
        return NCElement(self, {(): c})

    def gen(self, family: str, *indices) -> "NCElement":
        return NCElement(self, {(self.letter(self.find(family, *indices)),): 1})

    def word(self, *gids) -> "NCElement":
        return NCElement(self, {tuple(self.letter(g) for g in gids): 1})


def scalar_text(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def _clean(terms: dict) -> dict:
    return {w: c for w, c in terms.items() if not is_zero(c)}


def _acc(out: dict, key, c) -> None:
    s = out.get(key)
    s = c if s is None else s + c
    if is_zero(s):
        out.pop(key, None)
    else:
        out[key] = s


class NCElement:
    """Finite linear combination of words."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=None):
        self.alphabet = alphabet
        self.terms = _clean(terms or {})

    def _check(self, other):
        if other.alphabet is not self.alphabet:
            raise AlgebraError(f"alphabet mismatch: {self.alphabet.tag} vs {other.alphabet.tag}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        if not isinstance(other, NCElement):
            other = self.alphabet.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return NCElement(self.alphabet, out)

    __radd__ = __add__

    def __neg__(self):
        return NCElement(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NCElement):
            other = self.alphabet.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.alphabet.scalar(other) - self

    def scale(self, c) -> "NCElement":
        if is_zero(c):
            return self.alphabet.zero()
        return NCElement(self.alphabet, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCElement):
            return self.scale(other)
        return nc_multiply(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = self.alphabet.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NCElement):
            if other.alphabet is not self.alphabet:
                return False
            return (self - other).is_zero()
        if isinstance(other, (int, Fraction, RatFuncQ, LaurentQ)):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def weights(self) -> set:
        return {self.alphabet.weight(w) for w in self.terms}

    def weight(self) -> tuple:
        ws = self.weights()
        if len(ws) != 1:
            raise AlgebraError("element is not weight-homogeneous")
        return ws.pop()

    def component(self, weight: tuple) -> "NCElement":
        a = self.alphabet
        return NCElement(a, {w: c for w, c in self.terms.items() if a.weight(w) == weight})

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def map_scalars(self, f) -> "NCElement":
        return NCElement(self.alphabet, {w: f(c) for w, c in self.terms.items()})

    def text(self) -> str:
        if not self.terms:
            return "0"
        a = self.alphabet
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            parts.append(f"({scalar_text(self.terms[w])})*{a.word_text(w)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"NCElement[{self.alphabet.tag}]({self.text()})"


def nc_multiply(a: NCElement, b: NCElement) -> NCElement:
    a._check(b)
    out: dict = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            _acc(out, wa + wb, ca * cb)
    return NCElement(a.alphabet, out)


def q_commutator(a: NCElement, b: NCElement, p=1) -> NCElement:
    """ab - p*ba."""
    return a * b - (b * a).scale(p)


def commutator(a, b):
    return a * b - b * a


# -- rewriting -----------------------------------------------------------------

class RelationSet:
    """Oriented pair rules, single-letter substitutions and unoriented generators.

    ``swap_rules`` maps an adjacent pair (g, h) to its replacement.  Most pairs
    have g > h; cancellation pairs such as K K^-1 -> 1 may be in order.  The
    oriented part must be confluent; ideal membership relies on that.
    """

    def __init__(self, alphabet: Alphabet, swap_rules=None, ideal_generators=(), substitutions=None,
                 name: str = "", step_cap: int = 2_000_000):
        self.alphabet = alphabet
        self.name = name or alphabet.tag
        self.swap_rules: Dict[Tuple[int, int], NCElement] = {}
        for (g, h), tgt in (swap_rules or {}).items():
            self.swap_rules[(alphabet.letter(g), alphabet.letter(h))] = tgt
        self.substitutions: Dict[int, NCElement] = {}
        for g, tgt in (substitutions or {}).items():
            self.substitutions[alphabet.letter(g)] = tgt
        self.ideal_generators: List[NCElement] = [g for g in ideal_generators if not g.is_zero()]
        self.step_cap = step_cap
        self._memo: Dict[Tuple[Tuple[int, ...], int, bool], dict] = {}
        self._steps = 0

    def check_weights(self) -> List[str]:
        """Every rule target must carry the weight of its source."""
        a = self.alphabet
        bad = []
        for (g, h), tgt in self.swap_rules.items():
            w = a.weight((g, h))
            if any(a.weight(x) != w for x in tgt.terms):
                bad.append(a.word_text((g, h)))
        for g, tgt in self.substitutions.items():
            w = a.weight((g,))
            if any(a.weight(x) != w for x in tgt.terms):
                bad.append(a.word_text((g,)))
        for r in self.ideal_generators:
            if len(r.weights()) != 1:
                bad.append(r.text())
        return bad

    def with_generators(self, extra: Iterable[NCElement], name: str = "") -> "RelationSet":
        rs = RelationSet(self.alphabet, {}, list(self.ideal_generators) + list(extra), {},
                         name or self.name, self.step_cap)
        rs.swap_rules = self.swap_rules
        rs.substitutions = self.substitutions
        return rs

    # normal form of (normal word u) * letter
    def _insert(self, u: Tuple[int, ...], x: int, strict: bool) -> dict:
        key = (u, x, strict)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self._steps += 1
        if self._steps > self.step_cap:
            raise StepCapExceeded(f"rewriting in {self.name} exceeded {self.step_cap} steps")
        sub = self.substitutions.get(x)
        if sub is not None:
            out = self._append_element({u: 1}, sub, strict)
        elif u and (u[-1], x) in self.swap_rules:
            out = self._append_element({u[:-1]: 1}, self.swap_rules[(u[-1], x)], strict)
        else:
            if strict and u and u[-1] > x:
                a = self.alphabet
                raise MissingRule(f"no rule for {a.word_text((u[-1], x))} in {self.name}")
            out = {u + (x,): 1}
        self._memo[key] = out
        return out

    def _append_word(self, d: dict, word: Sequence[int], strict: bool) -> dict:
        for x in word:
            nd: dict = {}
            for u, c in d.items():
                for v, cv in self._insert(u, x, strict).items():
                    _acc(nd, v, c * cv)
            d = nd
        return d

    def _append_element(self, d: dict, elem: NCElement, strict: bool) -> dict:
        out: dict = {}
        for w, c in elem.terms.items():
            for v, cv in self._append_word(d, w, strict).items():
                _acc(out, v, c * cv)
        return out

    def reduce_word(self, word: Sequence[int], strict: bool = True) -> dict:
        self._steps = 0
        return self._append_word({(): 1}, word, strict)

    def reduce(self, x: NCElement, strict: bool = True) -> NCElement:
        if x.alphabet is not self.alphabet:
            raise AlgebraError("alphabet mismatch")
        out: dict = {}
        for w, c in x.terms.items():
            for v, cv in self.reduce_word(w, strict).items():
                _acc(out, v, c * cv)
        return NCElement(self.alphabet, out)

    def is_normal(self, word: Sequence[int]) -> bool:
        if any(x in self.substitutions for x in word):
            return False
        return not any((a, b) in self.swap_rules for a, b in zip(word, word[1:]))


def reduce_pbw(x: NCElement, rules: RelationSet, strict: bool = True) -> NCElement:
    """Normal form under the oriented rules of ``rules``."""
    return rules.reduce(x, strict)


def critical_pair_failures(rules: RelationSet) -> List[str]:
    """Resolve every overlap g h k of two pair rules both ways and compare."""
    a = rules.alphabet
    fails = []
    firsts: Dict[int, List[int]] = {}
    for (g, h) in rules.swap_rules:
        firsts.setdefault(g, []).append(h)
    for (g, h) in list(rules.swap_rules):
        for k in firsts.get(h, []):
            left = NCElement(a, {(): 1}) * rules.swap_rules[(g, h)] * NCElement(a, {(k,): 1})
            right = NCElement(a, {(g,): 1}) * rules.swap_rules[(h, k)]
            d = rules.reduce(left) - rules.reduce(right)
            if not d.is_zero():
                fails.append(a.word_text((g, h, k)))
    return fails


# -- bounded-degree ideal membership --------------------------------------------

def _word_key(w):
    return (len(w), w)


class IdealReducer:
    """Decides membership in the two-sided ideal up to a word-length bound.

    Rows are rewritten products u*r*v with u, v normal words and r an ideal
    generator, restricted to the weight of the query.  Pair-rule differences
    contribute nothing after rewriting because the oriented rules are
    confluent.  A modular shadow picks the rows that matter and the final
    verdict is reached by exact elimination over the scalar field.
    """

    def __init__(self, rules: RelationSet, bound: int, seed: int = 20240601):
        self.rules = rules
        self.bound = bound
        self.seed = seed
        self._normal_by_len: Optional[List[Dict[tuple, List[tuple]]]] = None
        self._rows: Dict[tuple, List[dict]] = {}
        self._exact: Dict[tuple, linalg.Echelon] = {}

    def _normal_words(self):
        if self._normal_by_len is None:
            a = self.rules.alphabet
            letters = [i for i in range(len(a.gens)) if i not in self.rules.substitutions]
            levels = [[()]]
            for _ in range(self.bound):
                nxt = []
                for w in levels[-1]:
                    for x in letters:
                        if w and (w[-1], x) in self.rules.swap_rules:
                            continue
                        nxt.append(w + (x,))
                levels.append(nxt)
            by_len = []
            for lev in levels:
                d: Dict[tuple, List[tuple]] = {}
                for w in lev:
                    d.setdefault(a.weight(w), []).append(w)
                by_len.append(d)
            self._normal_by_len = by_len
        return self._normal_by_len

    def rows(self, weight: tuple) -> List[dict]:
        if weight in self._rows:
            return self._rows[weight]
        a = self.rules.alphabet
        levels = self._normal_words()
        rows = []
        seen = set()
        for g in self.rules.ideal_generators:
            glen = g.max_length()
            if glen > self.bound:
                continue
            gw = g.weight()
            free = self.bound - glen
            for lu in range(free + 1):
                for wu, us in levels[lu].items():
                    need = tuple(x - y - z for x, y, z in zip(weight, wu, gw))
                    for lv in range(free - lu + 1):
                        vs = levels[lv].get(need)
                        if not vs:
                            continue
                        for u in us:
                            for v in vs:
                                elem = NCElement(a, {u: 1}) * g * NCElement(a, {v: 1})
                                r = self.rules.reduce(elem, strict=False).terms
                                if not r:
                                    continue
                                sig = frozenset(r.items())
                                if sig in seen:
                                    continue
                                seen.add(sig)
                                rows.append(r)
        self._rows[weight] = rows
        return rows

    def _modular(self, rows, target):
        for attempt in range(6):
            x0 = linalg.sample_point(self.seed + attempt)
            try:
                mrows = [linalg.vector_mod(r, x0) for r in rows]
                mt = linalg.vector_mod(target, x0)
            except ZeroDivisionError:
                continue
            return linalg.modular_solve(mrows, mt, _word_key, x0)
        raise ArithmeticError("could not find a good evaluation point")

    def _full_echelon(self, weight, rows, independent):
        ech = self._exact.get(weight)
        if ech is None:
            ech = linalg.Echelon(_word_key)
            for idx in independent:
                ech.add(rows[idx])
            self._exact[weight] = ech
        return ech

    def member(self, x: NCElement, exact_negative: bool = True) -> bool:
        if x.is_zero():
            return True
        if x.max_length() > self.bound:
            raise ValueError(f"degree bound {self.bound} is smaller than a word of the input")
        pi = self.rules.reduce(x, strict=False)
        if pi.is_zero():
            return True
        weight = pi.weight()
        rows = self.rows(weight)
        independent, support = self._modular(rows, pi.terms)
        if support is not None:
            ech = linalg.Echelon(_word_key)
            for idx in sorted(support):
                ech.add(rows[idx])
            if not ech.reduce(pi.terms):
                return True
        ech = self._full_echelon(weight, rows, independent)
        if not ech.reduce(pi.terms):
            return True
        if exact_negative:
            for r in rows:
                if ech.reduce(r):
                    raise ArithmeticError("modular rank fell short of the exact rank")
        return False

    def normal_form(self, x: NCElement) -> NCElement:
        """Canonical representative of x modulo the truncated ideal."""
        pi = self.rules.reduce(x, strict=False)
        out: dict = {}
        for wt in pi.weights():
            comp = pi.component(wt)
            rows = self.rows(wt)
            independent, _ = self._modular(rows, comp.terms)
            ech = self._full_echelon(wt, rows, independent)
            for w, c in ech.reduce(comp.terms).items():
                _acc(out, w, c)
        return NCElement(self.rules.alphabet, out)


def ideal_member(x: NCElement, rules: RelationSet, degree_bound: int) -> bool:
    return IdealReducer(rules, degree_bound).member(x)


# -- morphisms -------------------------------------------------------------------

def _invert_q(c):
    if isinstance(c, (RatFuncQ, LaurentQ)):
        return c.invert_q()
    return c


class GeneratorMap:
    """Generator images extended (anti-)multiplicatively; optionally q -> 1/q."""

    def __init__(self, source: Alphabet, target: Alphabet, images, multiplicative: bool = True,
                 invert_q: bool = False, name: str = ""):
        self.source = source
        self.target = target
        self.images = {source.letter(g): v for g, v in images.items()}
        self.multiplicative = multiplicative
        self.invert_q = invert_q
        self.name = name

    def image_of_word(self, w) -> NCElement:
        out = self.target.one()
        letters = w if self.multiplicative else reversed(w)
        for x in letters:
            img = self.images.get(x)
            if img is None:
                raise KeyError(f"{self.name or 'map'} has no image for {self.source.gens[x].text()}")
            out = out * img
        return out

    def __call__(self, x):
        if isinstance(x, TensorElement):
            raise TypeError("use tensor_apply for tensors")
        return apply_morphism(x, self)


def apply_morphism(x: NCElement, f: GeneratorMap) -> NCElement:
    out: dict = {}
    for w, c in x.terms.items():
        cc = _invert_q(c) if f.invert_q else c
        for v, cv in f.image_of_word(w).terms.items():
            _acc(out, v, cc * cv)
    return NCElement(f.target, out)


# -- tensors ---------------------------------------------------------------------

class TensorElement:
    """Sum of c * (left word) (x) (right word) * z^d, truncated at a bound.

    grading="height" bounds the height of the right weight, grading="z"
    bounds the z-degree.  Products silently drop anything past the bound.
    """

    __slots__ = ("left", "right", "terms", "bound", "grading")

    def __init__(self, left: Alphabet, right: Alphabet, terms=None, bound: Optional[int] = None,
                 grading: str = "height"):
        self.left = left
        self.right = right
        self.bound = bound
        self.grading = grading
        self.terms = {k: c for k, c in (terms or {}).items() if not is_zero(c) and self._keep(k)}

    def grade(self, key) -> int:
        if self.grading == "z":
            return key[2]
        return self.right.height(self.right.weight(key[1]))

    def _keep(self, key) -> bool:
        return self.bound is None or self.grade(key) <= self.bound

    def like(self, terms) -> "TensorElement":
        return TensorElement(self.left, self.right, terms, self.bound, self.grading)

    @staticmethod
    def pure(a: NCElement, b: NCElement, z: int = 0, bound=None, grading="height") -> "TensorElement":
        terms: dict = {}
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                _acc(terms, (wa, wb, z), ca * cb)
        return TensorElement(a.alphabet, b.alphabet, terms, bound, grading)

    def one(self) -> "TensorElement":
        return self.like({((), (), 0): 1})

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return self.like(out)

    def __neg__(self):
        return self.like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        if is_zero(c):
            return self.like({})
        return self.like({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        bound = self.bound if other.bound is None else (other.bound if self.bound is None
                                                         else min(self.bound, other.bound))
        out: dict = {}
        probe = TensorElement(self.left, self.right, {}, bound, self.grading)
        for (l1, r1, z1), c1 in self.terms.items():
            for (l2, r2, z2), c2 in other.terms.items():
                key = (l1 + l2, r1 + r2, z1 + z2)
                if probe._keep(key):
                    _acc(out, key, c1 * c2)
        return TensorElement(self.left, self.right, out, bound, self.grading)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def reduce(self, left_rules: Optional[RelationSet], right_rules: Optional[RelationSet],
               strict: bool = True) -> "TensorElement":
        out: dict = {}
        lcache: dict = {}
        rcache: dict = {}
        for (wl, wr, z), c in self.terms.items():
            if wl not in lcache:
                lcache[wl] = left_rules.reduce_word(wl, strict) if left_rules else {wl: 1}
            if wr not in rcache:
                rcache[wr] = right_rules.reduce_word(wr, strict) if right_rules else {wr: 1}
            for ul, cl in lcache[wl].items():
                for ur, cr in rcache[wr].items():
                    _acc(out, (ul, ur, z), c * cl * cr)
        return self.like(out)

    def weights(self) -> set:
        return {(self.left.weight(l), self.right.weight(r)) for l, r, _ in self.terms}

    def component(self, lw=None, rw=None, z=None) -> "TensorElement":
        out = {}
        for (l, r, d), c in self.terms.items():
            if lw is not None and self.left.weight(l) != lw:
                continue
            if rw is not None and self.right.weight(r) != rw:
                continue
            if z is not None and d != z:
                continue
            out[(l, r, d)] = c
        return self.like(out)

    def truncate(self, bound: int) -> "TensorElement":
        return TensorElement(self.left, self.right, self.terms, bound, self.grading)

    def substitute_z(self, c) -> "TensorElement":
        """z -> c*z."""
        return self.like({(l, r, d): v * c ** d for (l, r, d), v in self.terms.items()})

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda k: (k[2], len(k[0]) + len(k[1]), k)):
            l, r, d = k
            zt = "" if d == 0 else (" z" if d == 1 else f" z^{d}")
            parts.append(f"({scalar_text(self.terms[k])})*{self.left.word_text(l)} (x) "
                         f"{self.right.word_text(r)}{zt}")
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorElement({self.text()})"


def tensor_apply(t: TensorElement, f: GeneratorMap, g: GeneratorMap) -> TensorElement:
    out: dict = {}
    for (wl, wr, z), c in t.terms.items():
        cc = _invert_q(c) if f.invert_q else c
        for ul, cl in f.image_of_word(wl).terms.items():
            for ur, cr in g.image_of_word(wr).terms.items():
                _acc(out, (ul, ur, z), cc * cl * cr)
    return TensorElement(f.target, g.target, out, t.bound, t.grading)


def tensor_ideal_member(t: TensorElement, left: Optional[IdealReducer], right: IdealReducer,
                        right_map: Optional[GeneratorMap] = None) -> bool:
    """Is t in I (x) B + A (x) J ?

    Left words are replaced by canonical representatives modulo I (or kept
    as they are when ``left`` is None), then each right coefficient must lie
    in J, optionally after pushing it through ``right_map``.
    """
    groups: Dict[Tuple[tuple, int], dict] = {}
    lnf: dict = {}
    for (wl, wr, z), c in t.terms.items():
        if wl not in lnf:
            if left is None:
                lnf[wl] = {wl: 1}
            else:
                lnf[wl] = left.normal_form(NCElement(t.left, {wl: 1})).terms
        for ul, cl in lnf[wl].items():
            _acc(groups.setdefault((ul, z), {}), wr, c * cl)
    for coeff in groups.values():
        if not coeff:
            continue
        elem = NCElement(t.right, coeff)
        if right_map is not None:
            elem = apply_morphism(elem, right_map)
        for wt in elem.weights():
            if not right.member(elem.component(wt)):
                return False
    return True


# -- exponentials ------------------------------------------------------------------

def _grade_nc(x: NCElement, w) -> int:
    a = x.alphabet
    return a.height(a.weight(w))


def exponential(x, flavor: str = "classical", depth: int = 4, rules=None, cap: Optional[int] = None):
    """Truncated exp(x) or exp_q(x) = sum x^k / (k)_q!.

    For tensors ``rules`` is a (left, right) pair applied after every
    multiplication; for plain elements it is a single RelationSet.
    """
    if flavor not in ("classical", "q_deformed"):
        raise ValueError(f"unknown flavor {flavor!r}")
    if isinstance(x, TensorElement):
        if cap is None and any(x.grade(k) <= 0 for k in x.terms):
            raise AlgebraError("zero-grade term in exponent; pass an explicit cap")
        base = x if x.bound is not None else x.truncate(depth)
        one = base.one()
        power, total = one, one
        for k in range(1, (cap if cap is not None else depth) + 1):
            power = power * base
            if rules is not None:
                power = power.reduce(rules[0], rules[1])
            if power.is_zero():
                break
            total = total + power.scale(_inv_factorial(k, flavor))
        return total
    if cap is None and any(_grade_nc(x, w) <= 0 for w in x.terms):
        raise AlgebraError("zero-height term in exponent; pass an explicit cap")
    a = x.alphabet
    n_max = cap if cap is not None else depth
    keep = (lambda w: True) if cap is not None else (lambda w: a.height(a.weight(w)) <= depth)
    power, total = a.one(), a.one()
    for k in range(1, n_max + 1):
        power = power * x
        if rules is not None:
            power = rules.reduce(power)
        power = NCElement(a, {w: c for w, c in power.terms.items() if keep(w)})
        if power.is_zero():
            break
        total = total + power.scale(_inv_factorial(k, flavor))
    return total


def _inv_factorial(k: int, flavor: str):
    if flavor == "classical":
        f = Fraction(1)
        for s in range(1, k + 1):
            f /= s
        return f
    return RatFuncQ(LaurentQ.const(1), q_factorial_round(k))


# -- free algebra helper -------------------------------------------------------------

def free_alphabet(tag: str, names: Sequence[str], weights=None, dim: int = 1) -> Alphabet:
    gens = [GeneratorId(tag, n, ()) for n in names]
    if weights is None:
        weights = {g: (1,) * dim for g in gens}
    else:
        weights = {g: tuple(weights[g.family]) for g in gens}
    return Alphabet(tag, gens, weights, lambda w: sum(w), dim)
