import random

import pytest
from hypothesis import given, settings, strategies as st

from pbrauer import diagram as D
from pbrauer.diagram import compose, compose_graph

BRAUER_N7 = "1 4|2 5|3 5'|6 7|1' 2'|3' 4'|6' 7'"
STRAIGHTEN_PAIR = ("1 5|2 7|3|4 6'|6|8 10|9|1' 2'|3' 4'|5'|7' 9'|8'|10'",
         "1 2'|2 10'|3 6'|4 6|5|7 9|8 10|1'|3'|4' 8'|5'|7'|9'")


def diagrams(max_n=4, brauer=False):
    return st.integers(0, max_n).flatmap(
        lambda n: st.integers(0, 2 ** 32).map(lambda s: D.random_diagram(n, random.Random(s), brauer)))


def test_counts():
    assert [len(D.enumerate_diagrams(n)) for n in range(6)] == [1, 2, 10, 76, 764, 9496]
    assert [len(D.enumerate_diagrams(n, brauer_only=True)) for n in range(1, 5)] == [1, 3, 15, 105]


def test_compose_examples():
    e = D.eps_generator(1, 1)
    assert compose(e, e) == (0, 1, e)
    p = D.pair_generator(2, 1)
    assert compose(p, p) == (1, 0, p)
    s = D.transposition(3, 1)
    assert compose(s, s) == (0, 0, D.identity(3))
    a, b = (D.parse_text(t) for t in STRAIGHTEN_PAIR)
    assert compose(a, b)[:2] == (1, 2)


def test_brauer_n7_stats():
    # one through line, no singletons, n - 1 even
    assert D.stats(D.parse_text(BRAUER_N7)) == (1, 0, True)
    assert D.stats(D.identity(3)) == (3, 0, True)
    assert D.stats(D.eps_generator(1, 1)) == (0, 2, False)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2 ** 32))
def test_compose_matches_union_find(n, seed):
    r = random.Random(seed)
    a, b = D.random_diagram(n, r), D.random_diagram(n, r)
    assert compose(a, b) == compose_graph(a, b)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2 ** 32))
def test_star_antiautomorphism(n, seed):
    r = random.Random(seed)
    a, b = D.random_diagram(n, r), D.random_diagram(n, r)
    loops, strings, res = compose(a, b)
    assert compose(D.star(b), D.star(a)) == (loops, strings, D.star(res))


def test_star_involution_exhaustive():
    for n in range(4):
        for d in D.enumerate_diagrams(n):
            assert D.star(D.star(d)) == d
    assert D.star(D.parse_text("1 | 1' 2' | 2")) == D.parse_text("1 2 | 1' | 2'")
    assert D.star(D.pair_generator(2, 1)) == D.pair_generator(2, 1)


def test_tensor():
    assert D.tensor(D.identity(1), D.identity(1)) == D.identity(2)
    assert D.tensor(D.u_set(1, []), D.identity(0)) == D.identity(1)
    assert D.u_set(1, [1]) == D.eps_generator(1, 1)
    d = D.parse_text(BRAUER_N7)
    assert D.tensor(d, D.identity(0)) == d


def test_generators():
    assert D.build_generator("eps", 1, 1) == D.parse_text("1 | 1'")
    expect = "1 | 1' | 2 | 2' | 3 7' | 3' 4' | 4 5 | 5' 6' | 6 7 | 8 8'"
    assert D.to_text(D.build_generator("pattern", 8, a=2, b=2, k=2)) == expect


@settings(max_examples=100, deadline=None)
@given(diagrams())
def test_formats_round_trip(d):
    assert D.parse_text(D.to_text(d), d.n) == d
    assert D.from_json(D.to_json(d)) == d


def test_canonical_print():
    text = "1 2 | 1' | 2' 3' | 3"
    d = D.parse_text(text)
    assert D.to_text(d) == text
    assert D.to_json_obj(d) == {"n": 3, "blocks": [[1, 2], [-1], [-2, -3], [3]]}


def test_parse_errors():
    with pytest.raises(ValueError):
        D.parse_text("1 2 3")
    with pytest.raises(ValueError):
        D.parse_text("1 | 2'", 1)
    with pytest.raises(ValueError):
        D.parse_text("1 1'|1 2'")
