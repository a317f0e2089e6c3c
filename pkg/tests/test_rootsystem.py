import pytest

from bruhatlab.errors import ConfigurationError
from bruhatlab.rootsystem import build_root_system, cartan_datum, parse_group, reflect_root, restrict

POSITIVE_ROOTS = {
    ("A", 1): 1, ("A", 3): 6, ("A", 5): 15, ("B", 2): 4, ("B", 3): 9, ("B", 5): 25,
    ("D", 4): 12, ("D", 5): 20, ("G", 2): 6, ("F", 4): 24,
    ("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
}

ORDERS = {"A3": 24, "B3": 48, "D4": 192, "G2": 12, "F4": 1152, "E6": 51840,
          "E7": 2903040, "E8": 696729600}


@pytest.mark.parametrize("key,count", sorted(POSITIVE_ROOTS.items()))
def test_positive_root_counts(key, count):
    assert build_root_system(*key).num_positive == count


@pytest.mark.parametrize("name,order", sorted(ORDERS.items()))
def test_group_orders(name, order):
    assert parse_group(name).group_order() == order


def test_labels_follow_type_conventions():
    assert parse_group("A3").labels == (1, 2, 3)
    assert parse_group("B3").labels == (0, 1, 2)
    assert parse_group("D4").labels == (0, 1, 2, 3)
    assert parse_group("E6").labels == (1, 2, 3, 4, 5, 6)


def test_roots_closed_under_simple_reflections():
    for name in ("B3", "G2", "F4", "D5"):
        rs = parse_group(name)
        for beta in rs.positive_roots:
            for lab in rs.labels:
                image = reflect_root(rs, lab, beta)
                assert rs.is_root(image) or rs.is_root(tuple(-c for c in image))


def test_highest_roots():
    assert parse_group("G2").positive_roots[-1] == (2, 3)  # alpha_2 is short
    assert parse_group("F4").positive_roots[-1] == (2, 3, 4, 2)
    assert parse_group("E8").positive_roots[-1] == (2, 3, 4, 6, 5, 4, 3, 2)


def test_simple_roots_come_first_in_label_order():
    rs = parse_group("A3")
    assert rs.positive_roots[:3] == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.mark.parametrize("name,leaves", [("A1", (1,)), ("A2", (1, 2)), ("B3", (0, 2)),
                                         ("D4", (0, 1, 3)), ("E6", (1, 2, 6)), ("F4", (1, 4)),
                                         ("G2", (1, 2))])
def test_leaves(name, leaves):
    assert parse_group(name).leaves() == leaves


def test_parabolic_orders_and_components():
    rs = parse_group("F4")
    assert rs.group_order([1, 2, 3]) == 48
    assert rs.group_order([1, 2, 4]) == 12
    assert rs.components([1, 2, 4]) == [(1, 2), (4,)]
    assert not rs.is_connected([1, 3])


def test_restrict_keeps_labels_and_pairing():
    sub = restrict(parse_group("F4"), (2, 3, 4))
    assert sub.labels == (2, 3, 4)
    assert sub.num_positive == 9  # a B3 root system


@pytest.mark.parametrize("t,n", [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("Q", 2)])
def test_bad_types_rejected(t, n):
    with pytest.raises(ConfigurationError):
        cartan_datum(t, n)


def test_type_c_points_to_b():
    with pytest.raises(ConfigurationError, match="B"):
        parse_group("C3")


def test_parse_group_errors():
    with pytest.raises(ConfigurationError):
        parse_group("banana")
