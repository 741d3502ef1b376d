"""The algebra R_n(d, dp): elements, products, decorated basis, relations."""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from . import diagram as D
from .diagram import Diagram, compose
from .kernels import compose_batch
from .report import Report
from .scalar import ONE, ZERO, Scalar, evaluate, format_scalar, parse_scalar


class Element:
    """Finite Scalar combination of rank-``n`` diagrams."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Diagram, Scalar] | None = None):
        self.n = n
        clean = {}
        for d, c in (terms or {}).items():
            if d.n != n:
                raise ValueError(f"diagram of rank {d.n} in an element of rank {n}")
            c = Scalar.coerce(c)
            if c:
                clean[d] = c
        self.terms = clean

    @classmethod
    def _trusted(cls, n, terms):
        x = cls.__new__(cls)
        x.n = n
        x.terms = terms
        return x

    @classmethod
    def of(cls, d: Diagram, c=ONE) -> "Element":
        return cls(d.n, {d: c})

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls._trusted(n, {})

    @classmethod
    def one(cls, n: int) -> "Element":
        return cls.of(D.identity(n))

    def items(self):
        return sorted(self.terms.items(), key=lambda t: D.sort_key(t[0]))

    def coeff(self, d: Diagram) -> Scalar:
        return self.terms.get(d, ZERO)

    def support(self) -> list:
        return sorted(self.terms, key=D.sort_key)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            v = out.get(d, ZERO) + c
            if v:
                out[d] = v
            else:
                out.pop(d, None)
        return Element._trusted(self.n, out)

    def __neg__(self):
        return Element._trusted(self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Element":
        c = Scalar.coerce(c)
        if not c:
            return Element.zero(self.n)
        return Element._trusted(self.n, {d: v * c for d, v in self.terms.items() if v * c})

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        if isinstance(other, Diagram):
            return multiply(self, Element.of(other))
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Diagram):
            return multiply(Element.of(other), self)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.n == other.n and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def star(self) -> "Element":
        return Element._trusted(self.n, {D.star(d): c for d, c in self.terms.items()})

    def evaluate(self, delta, delta_prime) -> dict:
        """Diagram -> Fraction at the given parameter point, zeros pruned."""
        out = {}
        for d, c in self.terms.items():
            v = evaluate(c, delta, delta_prime)
            if v:
                out[d] = v
        return out

    def at_dp_zero(self) -> "Element":
        return Element(self.n, {d: c.at_dp_zero() for d, c in self.terms.items()})

    def __repr__(self):
        return f"Element({self.n}, {format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def as_element(x) -> Element:
    if isinstance(x, Element):
        return x
    if isinstance(x, Diagram):
        return Element.of(x)
    raise TypeError(f"cannot treat {x!r} as an element")


def multiply(x, y) -> Element:
    x, y = as_element(x), as_element(y)
    x._check(y)
    acc: dict = {}
    for d1, c1 in x.terms.items():
        t1 = c1.terms
        for d2, c2 in y.terms.items():
            loops, strings, res = compose(d1, d2)
            bucket = acc.get(res)
            if bucket is None:
                bucket = acc[res] = {}
            for (a1, b1), v1 in t1.items():
                for (a2, b2), v2 in c2.items():
                    key = (a1 + a2 + loops, b1 + b2 + strings)
                    bucket[key] = bucket.get(key, 0) + v1 * v2
    out = {}
    for d, bucket in acc.items():
        s = Scalar(bucket)
        if s:
            out[d] = s
    return Element._trusted(x.n, out)


def product(*xs) -> Element:
    out = as_element(xs[0])
    for x in xs[1:]:
        out = multiply(out, x)
    return out


def power(x: Element, e: int) -> Element:
    out = Element.one(x.n)
    for _ in range(e):
        out = multiply(out, x)
    return out


# -- numeric (evaluated) elements ---------------------------------------------


def multiply_at(x: Mapping, y: Mapping, delta, delta_prime) -> dict:
    """Product of Diagram -> Fraction maps at fixed parameters."""
    delta = Fraction(delta)
    delta_prime = Fraction(delta_prime)
    out: dict = {}
    for d1, c1 in x.items():
        for d2, c2 in y.items():
            loops, strings, res = compose(d1, d2)
            if strings and not delta_prime:
                continue
            w = c1 * c2 * delta ** loops * delta_prime ** strings
            if w:
                v = out.get(res, 0) + w
                if v:
                    out[res] = v
                else:
                    out.pop(res, None)
    return out


# -- distinguished elements ---------------------------------------------------

DP_INV = Scalar({(0, -1): 1})


def u_hat(n: int, i: int) -> Element:
    """1 - dp^-1 u_{n,i}."""
    return Element(n, {D.identity(n): ONE, D.u_set(n, [i]): -DP_INV})


def u_hat_set(n: int, X: Iterable[int]) -> Element:
    out = Element.one(n)
    for i in sorted(set(X)):
        out = multiply(out, u_hat(n, i))
    return out


def u_hat_all(n: int) -> Element:
    return decorated(D.identity(n))


@lru_cache(maxsize=None)
def decorated(d: Diagram) -> Element:
    """<d>: sum over subsets Y of pairs of (-dp^-1)^|Y| d^Y."""
    pairs = d.pairs()
    terms = {}
    for Y in D.all_subsets(pairs):
        k = len(Y)
        terms[D.split_pairs(d, Y)] = Scalar({(0, -k): (-1) ** k})
    return Element._trusted(d.n, terms)


def omega(n: int, X: Iterable[int]) -> Element:
    """omega_X = <u_X>."""
    return decorated(D.u_set(n, X))


def left_support(d: Diagram) -> list:
    """l(d): unprimed vertices that are not singletons."""
    return [i for i in range(1, d.n + 1) if d.partner(i) != i]


def right_support(d: Diagram) -> list:
    return [i for i in range(1, d.n + 1) if d.partner(-i) != -i]


def decorated_via_projectors(d: Diagram) -> Element:
    """<d> computed as u_hat_{l(d)} d u_hat_{r(d)}."""
    return product(u_hat_set(d.n, left_support(d)), d, u_hat_set(d.n, right_support(d)))


def singleton_meets_pair(d: Diagram, d2: Diagram) -> bool:
    n = d.n
    for i in range(n):
        s1 = d.p[n + i] == n + i
        s2 = d2.p[i] == i
        if s1 != s2:
            return True
    return False


def decorated_prediction(d: Diagram, d2: Diagram) -> Element:
    """Right-hand side of the decorated product law."""
    if singleton_meets_pair(d, d2):
        return Element.zero(d.n)
    loops, strings, res = compose(d, d2)
    c = Scalar({(1, 0): 1, (0, 0): -1}) ** loops * Scalar({(0, strings): 1})
    return decorated(res).scale(c)


def decorated_product_law(d: Diagram, d2: Diagram) -> Element:
    lhs = multiply(decorated(d), decorated(d2))
    rhs = decorated_prediction(d, d2)
    if lhs != rhs:
        raise AssertionError(f"decorated law fails for {d} | {d2}: {lhs} vs {rhs}")
    return lhs


# -- basis change ---------------------------------------------------------------


def to_decorated(x: Element) -> dict:
    """Coefficients of ``x`` in the basis {<d>} (unitriangular elimination)."""
    rest = dict(x.terms)
    coeffs = {}
    while rest:
        d = min(rest, key=lambda e: (D.defect(e), D.sort_key(e)))
        c = rest.pop(d)
        coeffs[d] = c
        for e, v in decorated(d).terms.items():
            if e == d:
                continue
            w = rest.get(e, ZERO) - c * v
            if w:
                rest[e] = w
            else:
                rest.pop(e, None)
    return coeffs


def from_decorated(coeffs: Mapping[Diagram, Scalar], n: int) -> Element:
    out = Element.zero(n)
    for d, c in coeffs.items():
        out = out + decorated(d).scale(c)
    return out


def basis_change(x, to_decorated_basis: bool = True, n: int | None = None):
    """Diagram basis -> decorated coefficients, or back when False."""
    if to_decorated_basis:
        return to_decorated(as_element(x))
    if isinstance(x, Element):
        return from_decorated(x.terms, x.n)
    if n is None:
        n = next(iter(x)).n
    return from_decorated(x, n)


def undecorate(d: Diagram) -> dict:
    """Oracle inverse: d = sum_Y dp^-|Y| <d^Y>."""
    out = {}
    for Y in D.all_subsets(d.pairs()):
        out[D.split_pairs(d, Y)] = Scalar({(0, -len(Y)): 1})
    return out


# -- parity ---------------------------------------------------------------------


def parity_idempotents(n: int) -> tuple:
    one_e = Element.zero(n)
    one_o = Element.zero(n)
    for r in range(n + 1):
        for X in itertools.combinations(range(1, n + 1), r):
            term = omega(n, X).scale(Scalar({(0, -r): 1}))
            if r % 2 == 0:
                one_e = one_e + term
            else:
                one_o = one_o + term
    return one_e, one_o


# -- presentation ------------------------------------------------------------------


def generators(n: int) -> dict:
    g = {}
    for i in range(1, n):
        g[f"s{i}"] = Element.of(D.transposition(n, i))
        g[f"p{i}"] = Element.of(D.pair_generator(n, i))
    for i in range(1, n + 1):
        g[f"e{i}"] = Element.of(D.eps_generator(n, i))
    return g


DELTA = Scalar({(1, 0): 1})
DELTA_P = Scalar({(0, 1): 1})

# (name, lhs word, rhs scalar, rhs word, index condition); indices i, j
_RELATIONS = [
    ("s_i^2 = 1", "s{i} s{i}", ONE, "", "i"),
    ("s_i s_j = s_j s_i, |i-j|!=1", "s{i} s{j}", ONE, "s{j} s{i}", "far"),
    ("s_i s_i+1 s_i = s_i+1 s_i s_i+1", "s{i} s{i1} s{i}", ONE, "s{i1} s{i} s{i1}", "i+"),
    ("p_i^2 = d p_i", "p{i} p{i}", DELTA, "p{i}", "i"),
    ("p_i p_j = p_j p_i, |i-j|!=1", "p{i} p{j}", ONE, "p{j} p{i}", "far"),
    ("p_i p_j p_i = p_i, |i-j|=1", "p{i} p{j} p{i}", ONE, "p{i}", "adj"),
    ("p_i s_i = p_i", "p{i} s{i}", ONE, "p{i}", "i"),
    ("s_i p_i = p_i", "s{i} p{i}", ONE, "p{i}", "i"),
    ("p_i s_j = s_j p_i, |i-j|!=1", "p{i} s{j}", ONE, "s{j} p{i}", "far"),
    ("s_i p_j p_i = s_j p_i, |i-j|=1", "s{i} p{j} p{i}", ONE, "s{j} p{i}", "adj"),
    ("p_i p_j s_i = p_i s_j, |i-j|=1", "p{i} p{j} s{i}", ONE, "p{i} s{j}", "adj"),
    ("e_i^2 = dp e_i", "e{i} e{i}", DELTA_P, "e{i}", "e"),
    ("e_i e_j = e_j e_i, i!=j", "e{i} e{j}", ONE, "e{j} e{i}", "ne"),
    ("e_i s_i e_i = e_i e_i+1", "e{i} s{i} e{i}", ONE, "e{i} e{i1}", "i"),
    ("s_i e_i = e_i+1 s_i", "s{i} e{i}", ONE, "e{i1} s{i}", "i"),
    ("s_i e_j = e_j s_i, j!=i,i+1", "s{i} e{j}", ONE, "e{j} s{i}", "se"),
    ("p_i e_j = e_j p_i, j!=i,i+1", "p{i} e{j}", ONE, "e{j} p{i}", "se"),
    ("p_i e_i p_i = dp p_i", "p{i} e{i} p{i}", DELTA_P, "p{i}", "i"),
    ("e_i p_i e_i = e_i e_i+1", "e{i} p{i} e{i}", ONE, "e{i} e{i1}", "i"),
    ("p_i e_i = p_i e_i+1", "p{i} e{i}", ONE, "p{i} e{i1}", "i"),
    ("p_i e_i e_i+1 = dp p_i e_i", "p{i} e{i} e{i1}", DELTA_P, "p{i} e{i}", "i"),
    ("e_i p_i = e_i+1 p_i", "e{i} p{i}", ONE, "e{i1} p{i}", "i"),
    ("e_i e_i+1 p_i = dp e_i p_i", "e{i} e{i1} p{i}", DELTA_P, "e{i} p{i}", "i"),
]


def _index_pairs(cond: str, n: int):
    adj = range(1, n)
    if cond == "i":
        for i in adj:
            yield {"i": i}
    elif cond == "i+":
        for i in range(1, n - 1):
            yield {"i": i}
    elif cond == "e":
        for i in range(1, n + 1):
            yield {"i": i}
    elif cond == "far":
        for i in adj:
            for j in adj:
                if abs(i - j) != 1 and i != j:
                    yield {"i": i, "j": j}
    elif cond == "adj":
        for i in adj:
            for j in adj:
                if abs(i - j) == 1:
                    yield {"i": i, "j": j}
    elif cond == "ne":
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    yield {"i": i, "j": j}
    elif cond == "se":
        for i in adj:
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    yield {"i": i, "j": j}
    else:
        raise ValueError(cond)


def _word(word: str, idx: dict) -> list:
    fmt = dict(idx)
    if "i" in idx:
        fmt["i1"] = idx["i"] + 1
    return word.format(**fmt).split()


def relation_instances(n: int) -> list:
    """All relation instances in R_n, with star mirrors added and duplicates dropped.

    Each entry is ``(label, lhs_word, scalar, rhs_word)``.
    """
    out = []
    seen = set()
    for name, lhs, c, rhs, cond in _RELATIONS:
        for idx in _index_pairs(cond, n):
            lw, rw = _word(lhs, idx), _word(rhs, idx)
            label = f"{name} [{', '.join(f'{k}={v}' for k, v in sorted(idx.items()))}]"
            for mirror in (False, True):
                if mirror:
                    lw2, rw2 = lw[::-1], rw[::-1]
                else:
                    lw2, rw2 = lw, rw
                key = (tuple(lw2), c, tuple(rw2))
                if key in seen:
                    continue
                seen.add(key)
                out.append((label + (" [mirror]" if mirror else ""), lw2, c, rw2))
    return out


def evaluate_word(word: list, n: int, gens: dict | None = None) -> Element:
    gens = gens or generators(n)
    out = Element.one(n)
    for g in word:
        out = multiply(out, gens[g])
    return out


def presentation_check(n: int) -> Report:
    rep = Report("presentation", {"n": n})
    gens = generators(n)
    for label, lw, c, rw in relation_instances(n):
        lhs = evaluate_word(lw, n, gens)
        rhs = evaluate_word(rw, n, gens).scale(c)
        ok = lhs == rhs
        rep.add(label, ok, None if ok else {"lhs": str(lhs), "rhs": str(rhs)})
    return rep


# -- ideal membership ---------------------------------------------------------------


def _nonzero_scalar(loops: int, strings: int, delta: Fraction, delta_prime: Fraction) -> bool:
    return (loops == 0 or delta != 1) and (strings == 0 or delta_prime != 0)


def _monomial_ideal(seed: Diagram, delta, delta_prime) -> set:
    """Decorated labels spanning R <seed> R at the given point."""
    n = seed.n
    basis = D.enumerate_diagrams(n)
    arr = np.array([d.p for d in basis], dtype=np.int64).reshape(len(basis), 2 * n)
    delta, delta_prime = Fraction(delta), Fraction(delta_prime)

    def products(A, B):
        out, loops, strings = compose_batch(A, B, n)
        # singleton of the upper factor facing a pair of the lower, or vice versa
        sa = A[:, n:] == np.arange(n, 2 * n)
        sb = B[:, :n] == np.arange(n)
        meet = (sa[:, None, :] != sb[None, :, :]).any(axis=2)
        ok = ~meet
        if delta == 1:
            ok &= loops == 0
        if delta_prime == 0:
            ok &= strings == 0
        return out[ok]

    seed_arr = np.array([seed.p], dtype=np.int64).reshape(1, 2 * n)
    left = np.unique(products(arr, seed_arr), axis=0)
    both = products(left, arr)
    return {Diagram._trusted(n, tuple(int(v) for v in row)) for row in np.unique(both, axis=0)}


def ideal_membership(target, idempotent, delta, delta_prime) -> bool:
    """Is ``target`` in the two-sided ideal generated by ``idempotent``?

    Decided exactly over Q at the given parameters.  Works in decorated
    coordinates, where products of basis elements are single terms.
    """
    target, e = as_element(target), as_element(idempotent)
    target._check(e)
    delta, delta_prime = Fraction(delta), Fraction(delta_prime)
    if delta_prime == 0:
        raise ZeroDivisionError("requires δ′ invertible")
    tcoeff = {d: evaluate(c, delta, delta_prime) for d, c in to_decorated(target).items()}
    tcoeff = {d: v for d, v in tcoeff.items() if v}
    ecoeff = {d: evaluate(c, delta, delta_prime) for d, c in to_decorated(e).items()}
    ecoeff = {d: v for d, v in ecoeff.items() if v}
    if not tcoeff:
        return True
    if not ecoeff:
        return False
    if len(ecoeff) == 1:
        (seed,) = ecoeff
        span = _monomial_ideal(seed, delta, delta_prime)
        return all(d in span for d in tcoeff)
    return _general_membership(tcoeff, ecoeff, target.n, delta, delta_prime)


def _decorated_mult_at(x: Mapping, y: Mapping, delta, delta_prime) -> dict:
    out: dict = {}
    for d1, c1 in x.items():
        for d2, c2 in y.items():
            if singleton_meets_pair(d1, d2):
                continue
            loops, strings, res = compose(d1, d2)
            w = c1 * c2 * (delta - 1) ** loops * delta_prime ** strings
            if w:
                v = out.get(res, 0) + w
                if v:
                    out[res] = v
                else:
                    out.pop(res, None)
    return out


def _general_membership(tcoeff, ecoeff, n, delta, delta_prime) -> bool:
    from .linalg import Echelon

    basis = D.enumerate_diagrams(n)
    index = {d: i for i, d in enumerate(basis)}
    ech = Echelon()
    lefts = []
    seen = set()
    for a in basis:
        v = _decorated_mult_at({a: Fraction(1)}, ecoeff, delta, delta_prime)
        key = frozenset(v.items())
        if v and key not in seen:
            seen.add(key)
            lefts.append(v)
    target = {index[d]: c for d, c in tcoeff.items()}
    for v in lefts:
        for b in basis:
            w = _decorated_mult_at(v, {b: Fraction(1)}, delta, delta_prime)
            if w:
                ech.add({index[d]: c for d, c in w.items()})
        if ech.contains(target):
            return True
    return ech.contains(target)


def ideal_membership_bruteforce(target, idempotent, delta, delta_prime) -> bool:
    """Oracle: span of all a e b over plain diagrams, exact rank test."""
    from .linalg import Echelon

    target, e = as_element(target), as_element(idempotent)
    n = target.n
    basis = D.enumerate_diagrams(n)
    index = {d: i for i, d in enumerate(basis)}
    ev = e.evaluate(delta, delta_prime)
    ech = Echelon()
    for a in basis:
        ae = multiply_at({a: Fraction(1)}, ev, delta, delta_prime)
        if not ae:
            continue
        for b in basis:
            v = multiply_at(ae, {b: Fraction(1)}, delta, delta_prime)
            if v:
                ech.add({index[d]: c for d, c in v.items()})
    tv = {index[d]: c for d, c in target.evaluate(delta, delta_prime).items()}
    return ech.contains(tv)


# -- JSON -----------------------------------------------------------------------------


def format_element(x: Element) -> str:
    if not x.terms:
        return "0"
    parts = []
    for d, c in x.items():
        s = format_scalar(c)
        if s == "1":
            parts.append(str(d))
            continue
        if " " in s:
            s = f"({s})"
        parts.append(f"{s} * {d}")
    return " + ".join(parts)


def element_to_obj(x: Element) -> dict:
    return {
        "n": x.n,
        "terms": [{"diagram": [list(b) for b in d.blocks], "scalar": format_scalar(c)} for d, c in x.items()],
    }


def element_from_obj(obj: dict) -> Element:
    n = int(obj["n"])
    out = Element.zero(n)
    for t in obj["terms"]:
        d = Diagram.from_blocks(n, t["diagram"])
        out = out + Element.of(d, parse_scalar(str(t["scalar"])))
    return out


def element_to_json(x: Element) -> str:
    return json.dumps(element_to_obj(x), separators=(",", ":"))


def element_from_json(text: str) -> Element:
    return element_from_obj(json.loads(text))


# -- sweeps ---------------------------------------------------------------------------


def decorated_check(n: int, samples: int = 500, seed: int = 0) -> Report:
    """Decorated product law, basis round trips and the parity idempotents."""
    import random

    rep = Report("decorated", {"n": n, "samples": samples, "seed": seed})
    ds = D.enumerate_diagrams(n)
    if n <= 2:
        pairs = list(itertools.product(ds, repeat=2))
    else:
        rng = random.Random(seed)
        pairs = [(D.random_diagram(n, rng), D.random_diagram(n, rng)) for _ in range(samples)]
    bad = []
    for d, d2 in pairs:
        if multiply(decorated(d), decorated(d2)) != decorated_prediction(d, d2):
            bad.append(f"{d} | {d2}")
    rep.add("decorated product law", not bad, bad[:5] or None)
    rep.data["pairs"] = len(pairs)
    sample = ds if len(ds) <= 800 else [ds[i] for i in range(0, len(ds), max(1, len(ds) // 800))]
    bad = [str(d) for d in sample if to_decorated(Element.of(d)) != undecorate(d)]
    rep.add("inverse basis change matches the Moebius formula", not bad, bad[:5] or None)
    bad = [str(d) for d in sample if decorated_via_projectors(d) != decorated(d)]
    rep.add("<d> = u_L d u_R", not bad, bad[:5] or None)
    one_e, one_o = parity_idempotents(n)
    rep.add("1_e^2 = 1_e", multiply(one_e, one_e) == one_e)
    rep.add("1_o^2 = 1_o", multiply(one_o, one_o) == one_o)
    rep.add("1_e 1_o = 0", multiply(one_e, one_o).is_zero() and multiply(one_o, one_e).is_zero())
    rep.add("1_e + 1_o = 1", one_e + one_o == Element.one(n))
    return rep
