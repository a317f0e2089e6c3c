"""
Finite graded posets given by their cover relations, with a backtracking
isomorphism test and DOT/JSON export.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from .poly import IntPolynomial


@dataclass(eq=False)
class GradedPoset:
    """Ranked elements plus cover pairs ``(lower, upper)``."""

    elements: list[Hashable]
    rank: dict[Hashable, int]
    covers: list[tuple[Hashable, Hashable]] = field(default_factory=list)

    def __post_init__(self):
        for a, b in self.covers:
            if self.rank[b] != self.rank[a] + 1:
                raise ValueError(f"cover {a!r} < {b!r} does not raise rank by one")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def down(self) -> dict[Hashable, list[Hashable]]:
        d = {x: [] for x in self.elements}
        for a, b in self.covers:
            d[b].append(a)
        return d

    @cached_property
    def up(self) -> dict[Hashable, list[Hashable]]:
        u = {x: [] for x in self.elements}
        for a, b in self.covers:
            u[a].append(b)
        return u

    def rank_sizes(self) -> list[int]:
        if not self.elements:
            return []
        sizes = [0] * (max(self.rank.values()) + 1)
        for x in self.elements:
            sizes[self.rank[x]] += 1
        return sizes

    def rank_generating_function(self) -> IntPolynomial:
        return IntPolynomial(self.rank_sizes())

    def minimal(self) -> list[Hashable]:
        return [x for x in self.elements if not self.down[x]]

    def maximal(self) -> list[Hashable]:
        return [x for x in self.elements if not self.up[x]]

    def is_chain(self) -> bool:
        return all(s == 1 for s in self.rank_sizes()) and len(self.minimal()) <= 1

    def lower_set(self, x: Hashable) -> set[Hashable]:
        seen = {x}
        stack = [x]
        while stack:
            for y in self.down[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return a in self.lower_set(b)

    def lower_interval(self, x: Hashable) -> GradedPoset:
        return self.induced(self.lower_set(x))

    def induced(self, subset: Iterable[Hashable], rebase: bool = False) -> GradedPoset:
        """Subposet on ``subset`` keeping only covers of this poset inside it.

        That is the induced order only when ``subset`` is order-convex, which is
        how every caller in this package uses it.
        """
        keep = set(subset)
        elems = [x for x in self.elements if x in keep]
        base = min((self.rank[x] for x in elems), default=0) if rebase else 0
        rank = {x: self.rank[x] - base for x in elems}
        covers = [(a, b) for a, b in self.covers if a in keep and b in keep]
        return GradedPoset(elems, rank, covers)

    def relabel(self, f: Callable[[Hashable], Hashable]) -> GradedPoset:
        return GradedPoset([f(x) for x in self.elements],
                           {f(x): r for x, r in self.rank.items()},
                           [(f(a), f(b)) for a, b in self.covers])

    # export

    def to_dot(self, label: Callable[[Hashable], str] = str, name: str = "poset") -> str:
        ids = {x: i for i, x in enumerate(self.elements)}
        lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
        for x in self.elements:
            lines.append(f"  n{ids[x]} [label={json.dumps(label(x))}];")
        for a, b in self.covers:
            lines.append(f"  n{ids[a]} -> n{ids[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self, label: Callable[[Hashable], object] = str) -> dict:
        ids = {x: i for i, x in enumerate(self.elements)}
        return {
            "elements": [label(x) for x in self.elements],
            "ranks": [self.rank[x] for x in self.elements],
            "covers": [[ids[a], ids[b]] for a, b in self.covers],
        }

    def to_json(self, label: Callable[[Hashable], object] = str) -> str:
        return json.dumps(self.to_json_obj(label), sort_keys=True) + "\n"


def chain_poset(n: int) -> GradedPoset:
    """The chain ``0 < 1 < ... < n-1``."""
    return GradedPoset(list(range(n)), {i: i for i in range(n)},
                       [(i, i + 1) for i in range(n - 1)])


def from_order(elements: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool],
               rank: Callable[[Hashable], int]) -> GradedPoset:
    """Graded poset whose covers are the transitive reduction of ``leq``."""
    elems = list(elements)
    below = {b: [a for a in elems if a != b and leq(a, b)] for b in elems}
    covers = []
    for b in elems:
        strict = below[b]
        strict_set = set(strict)
        for a in strict:
            # a is covered by b unless some c lies strictly between them
            if not any(a in below[c] for c in strict_set if c != a):
                covers.append((a, b))
    return GradedPoset(elems, {x: rank(x) for x in elems}, covers)


def _signature(P: GradedPoset, x) -> tuple[int, int, int]:
    return (P.rank[x], len(P.up[x]), len(P.down[x]))


def find_isomorphism(P: GradedPoset, Q: GradedPoset) -> dict | None:
    """A rank-preserving isomorphism ``P -> Q`` of cover graphs, or ``None``.

    Elements are placed rank by rank, so when ``x`` is mapped all of its lower
    covers already have images and the candidate must have exactly those as
    its lower covers.  Candidates are pruned by (rank, up-degree, down-degree).
    """
    if len(P) != len(Q) or P.rank_sizes() != Q.rank_sizes():
        return None
    if sorted(_signature(P, x) for x in P) != sorted(_signature(Q, y) for y in Q):
        return None
    by_sig = defaultdict(list)
    for y in Q.elements:
        by_sig[_signature(Q, y)].append(y)
    # rank by rank, original order within a rank, so the search is deterministic
    order =[x for r in range(len(P.rank_sizes())) for x in P.elements if P.rank[x] == r]
    fwd: dict = {}
    used: set = set()
    down_q = {y: frozenset(Q.down[y]) for y in Q.elements}

    def candidates(x):
        want = frozenset(fwd[z] for z in P.down[x])
        for y in by_sig[_signature(P, x)]:
            if y not in used and down_q[y] == want:
                yield y

    stack = [candidates(order[0])] if order else []
    while stack:
        depth = len(stack) - 1
        x = order[depth]
        if x in fwd:
            used.discard(fwd.pop(x))
        y = next(stack[-1], None)
        if y is None:
            stack.pop()
            continue
        fwd[x] = y
        used.add(y)
        if depth + 1 == len(order):
            return dict(fwd)
        stack.append(candidates(order[depth + 1]))
    return {} if not order else None


def is_isomorphic(P: GradedPoset, Q: GradedPoset) -> bool:
    return find_isomorphism(P, Q) is not None
