from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from petersonring.rootsystem import build_root_system
from petersonring.weyl import (
    BruhatGuardError, act, bruhat_interval, bruhat_leq, from_word, identity, length,
    longest_parabolic, one_line, reduced, simple_reflection)

TYPES = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "D4", "F4"]


def subsets(data):
    idx = list(data.indices)
    return [frozenset(c) for r in range(len(idx) + 1) for c in combinations(idx, r)]


def neg(v):
    return tuple(-x for x in v)


def test_reflection_of_own_weight(a3):
    for i in a3.indices:
        s = simple_reflection(i, a3)
        expect = tuple(w - a for w, a in zip(a3.fundamental_weight(i), a3.simple_root(i)))
        assert act(s, a3.fundamental_weight(i)) == expect
        assert act(s, a3.simple_root(i)) == neg(a3.simple_root(i))


def test_longest_a2_swaps_simple_roots(a2):
    w = longest_parabolic({1, 2}, a2)
    assert act(w, a2.simple_root(1)) == neg(a2.simple_root(2))
    assert length(w) == 3


def test_named_one_line():
    w = longest_parabolic({1, 2, 5, 6, 7}, build_root_system("A8"))
    assert one_line(w) == "321487659"
    assert length(w) == 9


def test_one_line_rejects_other_types():
    with pytest.raises(ValueError):
        one_line(identity(build_root_system("B2")))


@pytest.mark.parametrize("name", TYPES)
def test_longest_parabolic_properties(name):
    data = build_root_system(name)
    for K in subsets(data):
        w = longest_parabolic(K, data)
        assert (w * w).is_identity()
        assert {act(w, data.simple_root(k)) for k in K} == {neg(data.simple_root(k)) for k in K}
        supported = [r for r in data.positive_roots
                     if all(r[j - 1] == 0 for j in data.indices if j not in K)]
        assert length(w) == len(supported)


def test_bruhat_examples(a3):
    w13 = longest_parabolic({1, 3}, a3)
    assert not bruhat_leq(simple_reflection(2, a3), w13)
    assert bruhat_leq(simple_reflection(1, a3), w13)
    assert bruhat_leq(identity(a3), w13)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_bruhat_order_on_longest_elements(name):
    data = build_root_system(name)
    elems = {K: longest_parabolic(K, data) for K in subsets(data)}
    for K in elems:
        for I in elems:
            assert bruhat_leq(elems[K], elems[I]) == (K <= I)


def test_interval_of_longest_a2_is_whole_group(a2):
    assert len(bruhat_interval(longest_parabolic({1, 2}, a2))) == 6


def test_bruhat_guard():
    data = build_root_system("E8")
    w = longest_parabolic(set(data.indices), data)
    with pytest.raises(BruhatGuardError):
        bruhat_leq(identity(data), w)


@settings(max_examples=60)
@given(st.sampled_from(TYPES), st.lists(st.integers(0, 7), max_size=10))
def test_reduced_word_represents_element(name, raw):
    data = build_root_system(name)
    word = [1 + x % data.rank for x in raw]
    w = from_word(word, data)
    r = reduced(w)
    assert r == w
    assert len(r.word) == length(w) <= len(word)
