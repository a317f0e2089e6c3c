import json
import random

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import DiGraphMatcher

from bruhatlab.mlattice import mn_poset
from bruhatlab.parabolic import complement, quotient_poset
from bruhatlab.poset import GradedPoset, chain_poset, find_isomorphism, from_order
from bruhatlab.rootsystem import parse_group


def as_digraph(P):
    g = nx.DiGraph()
    for x in P.elements:
        g.add_node(x, rank=P.rank[x])
    g.add_edges_from(P.covers)
    return g


def nx_isomorphic(P, Q):
    return DiGraphMatcher(as_digraph(P), as_digraph(Q),
                          node_match=lambda a, b: a["rank"] == b["rank"]).is_isomorphic()


def shuffled(P, seed):
    rng = random.Random(seed)
    names = list(range(len(P)))
    rng.shuffle(names)
    f = dict(zip(P.elements, names))
    Q = P.relabel(f.__getitem__)
    order = list(Q.elements)
    rng.shuffle(order)
    return GradedPoset(order, Q.rank, Q.covers)


def test_cover_must_raise_rank():
    with pytest.raises(ValueError):
        GradedPoset([0, 1], {0: 0, 1: 2}, [(0, 1)])


def prime_factor_count(n):
    count, p = 0, 2
    while n > 1:
        while n % p == 0:
            n //= p
            count += 1
        p += 1
    return count


def test_transitive_reduction():
    P = from_order(range(1, 13), lambda a, b: b % a == 0, prime_factor_count)
    assert (1, 4) not in P.covers and (2, 4) in P.covers


def test_chain():
    P = chain_poset(5)
    assert P.is_chain() and P.rank_sizes() == [1] * 5


@pytest.mark.parametrize("seed", range(5))
def test_isomorphism_finds_relabelling(seed):
    P = mn_poset(5)
    Q = shuffled(P, seed)
    f = find_isomorphism(P, Q)
    assert f is not None
    assert {(f[a], f[b]) for a, b in P.covers} == set(Q.covers)


def test_isomorphism_agrees_with_networkx():
    rs = parse_group("D5")
    posets = [mn_poset(4), quotient_poset(rs, complement(rs, [0])),
              quotient_poset(rs, complement(rs, [4])), chain_poset(16)]
    for P in posets:
        for Q in posets:
            assert (find_isomorphism(P, Q) is not None) == nx_isomorphic(P, Q)


def test_exports_are_deterministic():
    P = mn_poset(3)
    assert P.to_json() == P.to_json()
    data = json.loads(P.to_json())
    assert len(data["elements"]) == 8 and len(data["covers"]) == len(P.covers)
    dot = P.to_dot(name="m3")
    assert dot.startswith('digraph "m3"') and dot.count("->") == len(P.covers)
