import pytest
from hypothesis import given, settings, strategies as st

from bruhatlab.errors import DomainError
from bruhatlab.rootsystem import parse_group
from bruhatlab.weyl import (
    apply_to_root,
    canonical_word,
    descents,
    enumerate_group,
    from_word,
    identity,
    inverse,
    inversion_set,
    longest_element,
    multiply,
    reflection_for_root,
    reflections,
    support,
    word_string,
)

GROUPS = ["A3", "B3", "D4", "G2", "F4"]


def words(name, max_size=14):
    rs = parse_group(name)
    return st.lists(st.sampled_from(rs.labels), max_size=max_size)


def test_3412_example():
    rs = parse_group("A3")
    w = from_word(rs, [2, 1, 3, 2])
    assert w.length == 4
    assert descents(w, "right") == descents(w, "left") == {2}
    assert inversion_set(w) == {(1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 1, 0)}
    assert word_string(canonical_word(w)) == "2 1 3 2"


def test_longest_elements():
    assert canonical_word(longest_element(parse_group("B2"))) == (0, 1, 0, 1)
    for name in GROUPS:
        rs = parse_group(name)
        assert longest_element(rs).length == rs.num_positive


def test_reflection_for_highest_root_of_a2():
    rs = parse_group("A2")
    assert reflection_for_root(rs, (1, 1)) == from_word(rs, [1, 2, 1])


def test_reflections_are_involutions_with_odd_length():
    rs = parse_group("F4")
    for t in reflections(rs):
        assert (t * t).is_identity()
        assert t.length % 2 == 1


def test_enumeration_sizes():
    for name in GROUPS:
        rs = parse_group(name)
        G = enumerate_group(rs)
        assert len(G) == len(set(G)) == rs.group_order()


def test_mixing_groups_rejected():
    with pytest.raises(DomainError):
        multiply(identity(parse_group("A2")), identity(parse_group("G2")))


@pytest.mark.parametrize("name", GROUPS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_group_laws(name, data):
    rs = parse_group(name)
    a, b, c = (from_word(rs, data.draw(words(name))) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert (a * inverse(a)).is_identity()
    assert inverse(a * b) == inverse(b) * inverse(a)


@pytest.mark.parametrize("name", GROUPS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_length_and_words(name, data):
    rs = parse_group(name)
    w = from_word(rs, data.draw(words(name)))
    word = canonical_word(w)
    assert len(word) == w.length == len(inversion_set(w)) == inverse(w).length
    assert from_word(rs, word) == w
    assert support(w) == set(word)
    for beta in inversion_set(w):
        assert all(c <= 0 for c in apply_to_root(w, beta))
    for lab in descents(w, "right"):
        assert from_word(rs, word + (lab,)).length == w.length - 1
