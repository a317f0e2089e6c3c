import pytest
from hypothesis import given, settings, strategies as st

from bruhatlab.bruhat import (
    bruhat_leq,
    is_rationally_smooth,
    lower_covers,
    lower_interval,
    lower_set,
    poincare,
    subword_products,
    weak_order_poset,
)
from bruhatlab.errors import DomainError, ResourceError
from bruhatlab.poly import IntPolynomial
from bruhatlab.rootsystem import parse_group
from bruhatlab.weyl import canonical_word, enumerate_group, from_word, inverse, longest_element
from oracles import brute_lower_set

# number of rationally smooth elements, known from pattern-avoidance counts
SMOOTH_COUNTS = {"A3": 22, "A4": 88, "B2": 8, "B3": 34, "G2": 12}


def test_3412_is_singular():
    w = from_word(parse_group("A3"), [2, 1, 3, 2])
    assert poincare(w) == IntPolynomial([1, 3, 5, 4, 1])
    assert not is_rationally_smooth(w)


@pytest.mark.parametrize("name,count", sorted(SMOOTH_COUNTS.items()))
def test_rationally_smooth_counts(name, count):
    assert sum(is_rationally_smooth(w) for w in enumerate_group(parse_group(name))) == count


def test_longest_element_interval_is_whole_group():
    for name in ("A3", "B3", "G2"):
        rs = parse_group(name)
        assert len(lower_set(longest_element(rs))) == rs.group_order()


def test_interval_is_graded_with_unique_bottom():
    w = longest_element(parse_group("B3"))
    P = lower_interval(w)
    assert len(P.minimal()) == 1 and P.maximal() == [w]
    assert P.rank_generating_function() == poincare(w)


def test_covers_drop_length_by_one():
    for w in enumerate_group(parse_group("B3")):
        assert all(x.length == w.length - 1 for x in lower_covers(w))


def test_cap_is_enforced():
    with pytest.raises(ResourceError):
        lower_set(longest_element(parse_group("F4")), cap=100)


def test_cross_group_comparison_rejected():
    with pytest.raises(DomainError):
        bruhat_leq(longest_element(parse_group("A2")), longest_element(parse_group("G2")))


def test_weak_order_is_graded_subset_of_bruhat():
    G = enumerate_group(parse_group("A3"))
    P = weak_order_poset(G, "right")
    assert P.rank_sizes() == [1, 3, 5, 6, 5, 3, 1]
    assert all(bruhat_leq(a, b) for a, b in P.covers)


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "D4"])
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_leq_matches_interval_membership(name, data):
    rs = parse_group(name)
    G = enumerate_group(rs)
    w = data.draw(st.sampled_from(G))
    below = lower_set(w)
    assert below == brute_lower_set(w)
    assert below == subword_products(rs, canonical_word(w))
    assert poincare(w) == poincare(inverse(w))
