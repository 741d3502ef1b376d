"""Partial Brauer diagrams.

A diagram of rank ``n`` partitions ``{1..n, 1'..n'}`` into pairs and
singletons.  Vertices are signed integers: ``i`` is the unprimed vertex ``i``
and ``-i`` is ``i'``.  Internally a diagram is its partner tuple (see
:mod:`pbrauer.kernels`), which is already a canonical form, so equality and
hashing are structural.
"""

from __future__ import annotations

import itertools
import json
import os
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .kernels import compose_tuple

DEFAULT_MAX_RANK = 6


def max_rank() -> int:
    try:
        return int(os.environ.get("PBRAUER_MAX_RANK", DEFAULT_MAX_RANK))
    except ValueError:
        return DEFAULT_MAX_RANK


def vertex_key(v: int) -> tuple:
    """Total order 1 < 1' < 2 < 2' < ... used for printing."""
    return (abs(v), v < 0)


class Diagram:
    __slots__ = ("n", "p", "_hash")

    def __init__(self, n: int, partner: Sequence[int]):
        partner = tuple(int(x) for x in partner)
        if len(partner) != 2 * n:
            raise ValueError(f"partner array of length {len(partner)} for rank {n}")
        for x, y in enumerate(partner):
            if not 0 <= y < 2 * n or partner[y] != x:
                raise ValueError("partner array is not an involution")
        self.n = n
        self.p = partner
        self._hash = hash(partner)

    @classmethod
    def _trusted(cls, n: int, partner: tuple) -> "Diagram":
        d = cls.__new__(cls)
        d.n = n
        d.p = partner
        d._hash = hash(partner)
        return d

    # vertex <-> slot
    def _slot(self, v: int) -> int:
        m = abs(v)
        if v == 0 or m > self.n:
            raise ValueError(f"vertex {v} out of range for rank {self.n}")
        return m - 1 if v > 0 else self.n + m - 1

    def _vertex(self, x: int) -> int:
        return x + 1 if x < self.n else -(x - self.n + 1)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Diagram":
        partner = [-1] * (2 * n)
        probe = cls._trusted(n, ())
        for block in blocks:
            block = list(block)
            if len(block) not in (1, 2):
                raise ValueError(f"block {block} must have size 1 or 2")
            xs = [probe._slot(v) for v in block]
            if any(partner[x] != -1 for x in xs) or len(set(xs)) != len(xs):
                raise ValueError(f"vertex repeated in block {block}")
            if len(xs) == 1:
                partner[xs[0]] = xs[0]
            else:
                partner[xs[0]], partner[xs[1]] = xs[1], xs[0]
        if -1 in partner:
            missing = [probe._vertex(x) for x, y in enumerate(partner) if y == -1]
            raise ValueError(f"vertices {missing} not covered")
        return cls._trusted(n, tuple(partner))

    @property
    def blocks(self) -> list:
        """Blocks in canonical order, each sorted by :func:`vertex_key`."""
        out = []
        for x, y in enumerate(self.p):
            if y >= x:
                b = sorted({self._vertex(x), self._vertex(y)}, key=vertex_key)
                out.append(tuple(b))
        out.sort(key=lambda b: [vertex_key(v) for v in b])
        return out

    def partner(self, v: int) -> int:
        """Partner vertex of ``v``; ``v`` itself for a singleton."""
        return self._vertex(self.p[self._slot(v)])

    def singletons(self) -> list:
        return [self._vertex(x) for x, y in enumerate(self.p) if x == y]

    def pairs(self) -> list:
        return [b for b in self.blocks if len(b) == 2]

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.p == other.p

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def __repr__(self):
        return f"Diagram({self.n}, {to_text(self)!r})"

    def __str__(self):
        return "{" + to_text(self) + "}"

    # algebraic operations
    def compose(self, other: "Diagram") -> "ComposeResult":
        return compose(self, other)

    def __matmul__(self, other):
        return tensor(self, other)

    def star(self) -> "Diagram":
        return star(self)

    def stats(self) -> "Stats":
        return stats(self)


class ComposeResult(NamedTuple):
    loops: int
    strings: int
    diagram: Diagram


class Stats(NamedTuple):
    propagating: int
    defect: int
    even: bool


def sort_key(d: Diagram) -> tuple:
    return (d.n, d.p)


@lru_cache(maxsize=1 << 20)
def _compose_cached(a: tuple, b: tuple, n: int) -> tuple:
    return compose_tuple(a, b, n)


def compose(left: Diagram, right: Diagram) -> ComposeResult:
    """Stack ``left`` above ``right`` (left's primed row meets right's unprimed)."""
    if left.n != right.n:
        raise ValueError(f"rank mismatch: {left.n} vs {right.n}")
    loops, strings, out = _compose_cached(left.p, right.p, left.n)
    return ComposeResult(loops, strings, Diagram._trusted(left.n, out))


def compose_graph(left: Diagram, right: Diagram) -> ComposeResult:
    """Reference composition by connected components (union-find).

    Slower than :func:`compose`, written independently of it, and used as
    its oracle.
    """
    if left.n != right.n:
        raise ValueError(f"rank mismatch: {left.n} vs {right.n}")
    n = left.n
    # nodes: ('t', i) top, ('m', i) middle, ('b', i) bottom  (i = 1..n)
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    degree: dict = {}

    def node(side_unprimed, side_primed, v):
        return (side_unprimed, v) if v > 0 else (side_primed, -v)

    for d, up, lo in ((left, "t", "m"), (right, "m", "b")):
        for block in d.blocks:
            nodes = [node(up, lo, v) for v in block]
            for x in nodes:
                find(x)
            if len(nodes) == 2:
                union(*nodes)
                for x in nodes:
                    degree[x] = degree.get(x, 0) + 1
    comps: dict = {}
    for i in range(1, n + 1):
        for side in "tmb":
            comps.setdefault(find((side, i)), []).append((side, i))
    loops = strings = 0
    blocks = []
    for members in comps.values():
        ext = [x for x in members if x[0] != "m"]
        if not ext:
            if all(degree.get(x, 0) == 2 for x in members):
                loops += 1
            else:
                strings += 1
            continue
        blocks.append([x[1] if x[0] == "t" else -x[1] for x in ext])
    return ComposeResult(loops, strings, Diagram.from_blocks(n, blocks))


def tensor(a: Diagram, b: Diagram) -> Diagram:
    """Place ``b`` to the right of ``a``."""
    n, m = a.n, b.n
    N = n + m
    out = [0] * (2 * N)

    def lift_a(x):
        return x if x < n else x - n + N

    def lift_b(x):
        return x + n if x < m else x - m + N + n

    for x, y in enumerate(a.p):
        out[lift_a(x)] = lift_a(y)
    for x, y in enumerate(b.p):
        out[lift_b(x)] = lift_b(y)
    return Diagram._trusted(N, tuple(out))


def tensor_all(ds: Iterable[Diagram]) -> Diagram:
    out = identity(0)
    for d in ds:
        out = tensor(out, d)
    return out


def star(d: Diagram) -> Diagram:
    n = d.n

    def flip(x):
        return x + n if x < n else x - n

    out = [0] * (2 * n)
    for x, y in enumerate(d.p):
        out[flip(x)] = flip(y)
    return Diagram._trusted(n, tuple(out))


def stats(d: Diagram) -> Stats:
    n = d.n
    prop = sum(1 for x in range(n) if d.p[x] >= n)
    defect = sum(1 for x, y in enumerate(d.p) if x == y)
    return Stats(prop, defect, (n - prop) % 2 == 0)


def propagating(d: Diagram) -> int:
    n = d.n
    return sum(1 for x in range(n) if d.p[x] >= n)


def defect(d: Diagram) -> int:
    return sum(1 for x, y in enumerate(d.p) if x == y)


def is_brauer(d: Diagram) -> bool:
    return all(x != y for x, y in enumerate(d.p))


def is_even(d: Diagram) -> bool:
    return (d.n - propagating(d)) % 2 == 0


# -- enumeration ---------------------------------------------------------


def _involutions(m: int, allow_fixed: bool) -> Iterator[tuple]:
    """Involutions of ``range(m)`` in lexicographic order of partner arrays."""
    partner = [-1] * m

    def rec(start):
        while start < m and partner[start] != -1:
            start += 1
        if start == m:
            yield tuple(partner)
            return
        if allow_fixed:
            partner[start] = start
            yield from rec(start + 1)
        for y in range(start + 1, m):
            if partner[y] == -1:
                partner[start], partner[y] = y, start
                yield from rec(start + 1)
                partner[y] = -1
        partner[start] = -1

    yield from rec(0)


def enumerate_diagrams(n: int, brauer_only: bool = False, bound: int | None = None) -> list:
    """All diagrams of rank ``n`` (pair partitions only if ``brauer_only``)."""
    limit = max_rank() if bound is None else bound
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if n > limit:
        raise ValueError(f"rank {n} exceeds the enumeration bound {limit} (set PBRAUER_MAX_RANK)")
    return _enumerate_cached(n, brauer_only)


@lru_cache(maxsize=None)
def _enumerate_cached(n: int, brauer_only: bool) -> list:
    return [Diagram._trusted(n, p) for p in _involutions(2 * n, not brauer_only)]


def count_involutions(m: int) -> int:
    """I(m) = I(m-1) + (m-1) I(m-2)."""
    a, b = 1, 1
    for i in range(2, m + 1):
        a, b = b, b + (i - 1) * a
    return b if m >= 1 else 1


def double_factorial(m: int) -> int:
    """m!! with (-1)!! = 0!! = 1."""
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


# -- generators ------------------------------------------------------------


def identity(n: int) -> Diagram:
    return Diagram._trusted(n, tuple(list(range(n, 2 * n)) + list(range(n))))


def permutation(w: Sequence[int]) -> Diagram:
    """Diagram joining ``i`` to ``w[i-1]'``; ``w`` is one-line, 1-based."""
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"{list(w)} is not a permutation")
    return Diagram.from_blocks(n, [(i + 1, -w[i]) for i in range(n)])


def transposition(n: int, i: int) -> Diagram:
    _check_index(n, i, adjacent=True)
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return permutation(w)


def pair_generator(n: int, i: int) -> Diagram:
    _check_index(n, i, adjacent=True)
    blocks = [(i, i + 1), (-i, -(i + 1))]
    blocks += [(j, -j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return Diagram.from_blocks(n, blocks)


def u_set(n: int, X: Iterable[int]) -> Diagram:
    """Singletons at ``X`` and ``X'``, identity elsewhere."""
    X = set(X)
    if any(not 1 <= x <= n for x in X):
        raise ValueError(f"subset {sorted(X)} not inside 1..{n}")
    blocks = []
    for j in range(1, n + 1):
        blocks += [(j,), (-j,)] if j in X else [(j, -j)]
    return Diagram.from_blocks(n, blocks)


def eps_generator(n: int, i: int) -> Diagram:
    _check_index(n, i, adjacent=False)
    return u_set(n, [i])


def _check_index(n, i, adjacent):
    hi = n - 1 if adjacent else n
    if not 1 <= i <= hi:
        raise ValueError(f"index {i} out of range 1..{hi} for rank {n}")


# Rectangular pieces (left vertices, right vertices, blocks) where left
# vertices are positive and right ones negative, numbered from 1.
PIECES = {
    "1": (1, 1, [(1, -1)]),
    "u": (1, 0, [(1,)]),
    "u*": (0, 1, [(-1,)]),
    "vu": (2, 0, [(1, 2)]),
    "vu*": (0, 2, [(-1, -2)]),
}


def stack(pieces: Iterable[str]) -> Diagram:
    """Tensor a word of rectangular pieces into a square diagram."""
    left = right = 0
    blocks = []
    for name in pieces:
        try:
            nl, nr, bl = PIECES[name]
        except KeyError:
            raise ValueError(f"unknown piece {name!r}") from None
        for b in bl:
            blocks.append(tuple(v + left if v > 0 else v - right for v in b))
        left += nl
        right += nr
    if left != right:
        raise ValueError(f"pieces give a {left}x{right} diagram, not square")
    return Diagram.from_blocks(left, blocks)


def epsilon_pattern(a: int, b: int, k: int) -> Diagram:
    """(u u*)^a (vu*)^b 1 (vu)^b 1^(k-1); rank a + 2b + k, needs k >= 1."""
    if a < 0 or b < 0 or k < 1:
        raise ValueError("need a, b >= 0 and k >= 1")
    word = ["u", "u*"] * a + ["vu*"] * b + ["1"] + ["vu"] * b + ["1"] * (k - 1)
    return stack(word)


def build_generator(kind: str, n: int, i=None, **kw) -> Diagram:
    """``kind`` in s, p, eps, identity, u_X (``i`` = the set X), pattern (a, b, k)."""
    if kind == "s":
        return transposition(n, i)
    if kind == "p":
        return pair_generator(n, i)
    if kind == "eps":
        return eps_generator(n, i)
    if kind in ("identity", "1"):
        return identity(n)
    if kind == "u_X":
        return u_set(n, i if i is not None else kw.get("X", ()))
    if kind == "pattern":
        d = epsilon_pattern(kw["a"], kw["b"], kw["k"])
        if n is not None and d.n != n:
            raise ValueError(f"pattern has rank {d.n}, not {n}")
        return d
    raise ValueError(f"unknown generator kind {kind!r}")


# -- text and JSON -----------------------------------------------------------


def _fmt_vertex(v: int) -> str:
    return str(v) if v > 0 else f"{-v}'"


def to_text(d: Diagram) -> str:
    return " | ".join(" ".join(_fmt_vertex(v) for v in b) for b in d.blocks)


def _parse_vertex(tok: str) -> int:
    prime = tok.endswith("'") or tok.endswith("′")
    body = tok[:-1] if prime else tok
    if not body.isdigit() or int(body) < 1:
        raise ValueError(f"bad vertex {tok!r}")
    return -int(body) if prime else int(body)


def parse_text(text: str, n: int | None = None) -> Diagram:
    """Parse ``"1 2 | 1' | 2' 3' | 3"``; rank inferred when ``n`` is None."""
    text = text.strip().strip("{}").strip()
    blocks = []
    if text:
        for chunk in text.split("|"):
            toks = chunk.split()
            if not toks:
                raise ValueError(f"empty block in {text!r}")
            blocks.append([_parse_vertex(t) for t in toks])
    if n is None:
        n = max((abs(v) for b in blocks for v in b), default=0)
    return Diagram.from_blocks(n, blocks)


def to_json_obj(d: Diagram) -> dict:
    return {"n": d.n, "blocks": [list(b) for b in d.blocks]}


def from_json_obj(obj: dict) -> Diagram:
    return Diagram.from_blocks(int(obj["n"]), obj["blocks"])


def to_json(d: Diagram) -> str:
    return json.dumps(to_json_obj(d), separators=(",", ":"))


def from_json(text: str) -> Diagram:
    return from_json_obj(json.loads(text))


# -- misc helpers --------------------------------------------------------------


def split_pairs(d: Diagram, pairs: Iterable[tuple]) -> Diagram:
    """``d^Y``: replace each listed pair by two singletons."""
    p = list(d.p)
    for block in pairs:
        x, y = (d._slot(v) for v in block)
        if p[x] != y:
            raise ValueError(f"{block} is not a pair of {d!r}")
        p[x], p[y] = x, y
    return Diagram._trusted(d.n, tuple(p))


def pair_slots(d: Diagram) -> list:
    """Pairs as slot tuples ``(x, y)`` with ``x < y``."""
    return [(x, y) for x, y in enumerate(d.p) if y > x]


def random_diagram(n: int, rng, brauer_only: bool = False) -> Diagram:
    """Uniform over all diagrams of rank ``n`` (or all Brauer diagrams)."""
    # sample an involution of 2n points by the recurrence weights
    pts = list(range(2 * n))
    partner = [-1] * (2 * n)
    free = pts[:]
    while free:
        x = free[0]
        m = len(free)
        if brauer_only:
            fix_w = 0
        else:
            fix_w = count_involutions(m - 1)
        pair_w = (m - 1) * (count_involutions(m - 2) if not brauer_only else double_factorial(m - 3))
        r = rng.randrange(fix_w + pair_w)
        if r < fix_w:
            partner[x] = x
            free.pop(0)
        else:
            y = free[1 + (r - fix_w) % (m - 1)]
            partner[x], partner[y] = y, x
            free.remove(x)
            free.remove(y)
    return Diagram._trusted(n, tuple(partner))


def permutation_of(d: Diagram) -> tuple | None:
    """One-line form if ``d`` is a permutation diagram."""
    n = d.n
    if propagating(d) != n:
        return None
    return tuple(d.p[i] - n + 1 for i in range(n))


def all_subsets(items: Sequence) -> Iterator[tuple]:
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)
