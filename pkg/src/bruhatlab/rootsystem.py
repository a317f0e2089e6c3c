"""
Finite crystallographic root systems and the simple-reflection action.

Node labels follow the usual pictures of the Dynkin diagrams:

* ``A_n``: ``1 - 2 - ... - n``
* ``B_n``: ``0 = 1 - 2 - ... - (n-1)``, double bond between 0 and 1, ``alpha_0`` short
* ``D_n``: ``0`` and ``1`` both attached to ``2``, then ``2 - 3 - ... - (n-1)``
* ``E_6, E_7, E_8``: Bourbaki labels, ``1 - 3 - 4 - 5 - 6 - 7 - 8`` with ``2`` on ``4``
* ``F_4``: ``1 - 2 = 3 - 4``, ``alpha_1, alpha_2`` long
* ``G_2``: ``1 = 2`` (triple bond), ``alpha_1`` long

The Cartan matrix is stored as ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so
the simple reflection acts by ``s_i(beta) = beta - (sum_j beta_j cartan[i][j]) alpha_i``.

Roots are integer coefficient vectors over the simple roots.  A root system
numbers its positive roots ``0 .. N-1`` (height, then lexicographic) and uses
``k + N`` for the negative of root ``k``; these *signed indices* are what the
Weyl group acts on.

>>> rs = build_root_system("A", 2)
>>> rs.positive_roots
((1, 0), (0, 1), (1, 1))
>>> reflect_root(rs, 1, (0, 1))
(1, 1)
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Sequence

from .errors import ConfigurationError, DomainError

Label = Hashable
Root = tuple[int, ...]

SUPPORTED_TYPES = ("A", "B", "D", "E", "F", "G")

# known |positive roots| per type, keyed by rank
POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class CartanDatum:
    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    node_labels: tuple[Label, ...]

    def __post_init__(self):
        n = self.rank
        if len(self.cartan) != n or any(len(row) != n for row in self.cartan):
            raise ConfigurationError("Cartan matrix must be rank x rank")
        if len(self.node_labels) != n:
            raise ConfigurationError("need one node label per simple root")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise ConfigurationError("Cartan diagonal entries must be 2")
            for j in range(n):
                if i == j:
                    continue
                a = self.cartan[i][j]
                if a not in (0, -1, -2, -3):
                    raise ConfigurationError(f"bad off-diagonal Cartan entry {a}")
                if (a == 0) != (self.cartan[j][i] == 0):
                    raise ConfigurationError("Cartan matrix zero pattern must be symmetric")

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"


def _check_bounds(type_label: str, rank: int) -> None:
    if type_label == "C":
        raise ConfigurationError(
            "type C is not supported: its Weyl group coincides with type B; use B instead")
    if type_label not in SUPPORTED_TYPES:
        raise ConfigurationError(
            f"unsupported type {type_label!r}; expected one of {', '.join(SUPPORTED_TYPES)}")
    if not isinstance(rank, int) or rank < 1:
        raise ConfigurationError("rank must be a positive integer")
    bounds = {
        "B": (rank >= 2, "type B requires rank >= 2"),
        "D": (rank >= 4, "type D requires rank >= 4"),
        "E": (rank in (6, 7, 8), "type E requires rank 6, 7 or 8"),
        "F": (rank == 4, "type F requires rank 4"),
        "G": (rank == 2, "type G requires rank 2"),
    }
    ok, why = bounds.get(type_label, (True, ""))
    if not ok:
        raise ConfigurationError(f"{why} (got {type_label}{rank})")


def cartan_datum(type_label: str, rank: int) -> CartanDatum:
    """The Cartan datum for ``type_label`` and ``rank`` with the labelling above."""
    _check_bounds(type_label, rank)
    n = rank
    if type_label in ("B", "D"):
        labels = tuple(range(n))
    else:
        labels = tuple(range(1, n + 1))
    idx = {lab: i for i, lab in enumerate(labels)}
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(a, b, a_on_b=-1, b_on_a=-1):
        # a_on_b = <alpha_a, alpha_b^vee> = cartan[b][a]
        A[idx[b]][idx[a]] = a_on_b
        A[idx[a]][idx[b]] = b_on_a

    if type_label == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif type_label == "B":
        bond(1, 0, a_on_b=-2, b_on_a=-1)
        for i in range(1, n - 1):
            bond(i, i + 1)
    elif type_label == "D":
        bond(0, 2)
        bond(1, 2)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif type_label == "E":
        for a, b in ((1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8)):
            if a <= n and b <= n:
                bond(a, b)
    elif type_label == "F":
        bond(1, 2)
        bond(2, 3, a_on_b=-2, b_on_a=-1)
        bond(3, 4)
    elif type_label == "G":
        bond(1, 2, a_on_b=-3, b_on_a=-1)
    return CartanDatum(type_label, n, tuple(map(tuple, A)), labels)


class RootSystem:
    """Positive roots of a finite root system plus the simple-reflection action.

    Instances are immutable after construction and compared by identity;
    :func:`build_root_system` and :func:`restrict` cache them, so equal
    requests return the same object.
    """

    def __init__(self, datum: CartanDatum, name: str | None = None):
        self.datum = datum
        self.name = name or datum.name
        self.rank = datum.rank
        self.labels = datum.node_labels
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        roots, words = _close_roots(datum.cartan)
        self.positive_roots: tuple[Root, ...] = tuple(roots)
        self.num_positive = N = len(roots)
        self._signed = {r: k for k, r in enumerate(roots)}
        self._signed.update({tuple(-c for c in r): k + N for k, r in enumerate(roots)})
        # generating data for reflections: root k = (s_word)(alpha_simple)
        self._root_words = words
        self.action: tuple[tuple[int, ...], ...] = tuple(
            tuple(self._signed[_reflect(datum.cartan, i, self.root(k))] for k in range(2 * N))
            for i in range(self.rank)
        )

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __reduce__(self):
        return (_rebuild, (self.datum, self.name))

    # labels and indices

    def index(self, label: Label) -> int:
        """Position of the simple root with ``label``."""
        try:
            return self._label_index[label]
        except (KeyError, TypeError):
            raise DomainError(f"{label!r} is not a node label of {self.name}") from None

    def label(self, i: int) -> Label:
        return self.labels[i]

    def parse_label(self, token: str) -> Label:
        """Interpret a string token as a node label."""
        try:
            lab = int(token)
        except ValueError:
            raise DomainError(f"{token!r} is not a node label of {self.name}") from None
        self.index(lab)
        return lab

    # roots

    def root(self, k: int) -> Root:
        """Coefficient vector of the root with signed index ``k``."""
        N = self.num_positive
        if k < N:
            return self.positive_roots[k]
        return tuple(-c for c in self.positive_roots[k - N])

    def root_index(self, beta: Sequence[int]) -> int:
        """Signed index of ``beta``; raises :class:`DomainError` if it is not a root."""
        try:
            return self._signed[tuple(beta)]
        except KeyError:
            raise DomainError(f"{tuple(beta)} is not a root of {self.name}") from None

    def is_root(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self._signed

    def negate(self, k: int) -> int:
        N = self.num_positive
        return k + N if k < N else k - N

    def simple_root(self, label: Label) -> Root:
        i = self.index(label)
        return tuple(int(j == i) for j in range(self.rank))

    def height(self, beta: Sequence[int]) -> int:
        return sum(beta)

    def root_word(self, k: int) -> tuple[tuple[int, ...], int]:
        """``(word, i)`` with positive root ``k`` equal to ``s_word(alpha_i)``; indices, not labels."""
        return self._root_words[k]

    # Dynkin diagram

    @cached_property
    def neighbors(self) -> dict[Label, tuple[Label, ...]]:
        C = self.datum.cartan
        return {
            self.labels[i]: tuple(self.labels[j] for j in range(self.rank) if j != i and C[i][j])
            for i in range(self.rank)
        }

    def leaves(self) -> tuple[Label, ...]:
        """Nodes of degree at most one, in node order."""
        return tuple(lab for lab in self.labels if len(self.neighbors[lab]) <= 1)

    def is_leaf(self, label: Label) -> bool:
        self.index(label)
        return len(self.neighbors[label]) <= 1

    def components(self, nodes: Iterable[Label] | None = None) -> list[tuple[Label, ...]]:
        """Connected components of the Dynkin diagram induced on ``nodes``."""
        nodes = self.labels if nodes is None else tuple(nodes)
        pool = set(nodes)
        comps = []
        for start in self.sorted_labels(pool):
            if start not in pool:
                continue
            comp, queue = [], deque([start])
            pool.discard(start)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self.neighbors[x]:
                    if y in pool:
                        pool.discard(y)
                        queue.append(y)
            comps.append(self.sorted_labels(comp))
        return comps

    def is_connected(self, nodes: Iterable[Label]) -> bool:
        return len(self.components(nodes)) <= 1

    def sorted_labels(self, labels: Iterable[Label]) -> tuple[Label, ...]:
        return tuple(sorted(labels, key=self.index))

    # group order

    def group_order(self, nodes: Iterable[Label] | None = None) -> int:
        """Order of the parabolic subgroup generated by ``nodes`` (default: all)."""
        total = 1
        for comp in self.components(nodes):
            total *= _component_order(self, comp)
        return total


def _rebuild(datum, name):
    return RootSystem(datum, name)


def _reflect(cartan, i: int, beta: Root) -> Root:
    row = cartan[i]
    c = sum(b * a for b, a in zip(beta, row))
    if c == 0:
        return beta
    out = list(beta)
    out[i] -= c
    return tuple(out)


def _close_roots(cartan) -> tuple[list[Root], list[tuple[tuple[int, ...], int]]]:
    """Positive roots by closing the simple roots under simple reflections."""
    n = len(cartan)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    words: dict[Root, tuple[tuple[int, ...], int]] = {r: ((), i) for i, r in enumerate(simple)}
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            gamma = _reflect(cartan, i, beta)
            if gamma in words or any(c < 0 for c in gamma):
                continue
            word, j = words[beta]
            words[gamma] = ((i,) + word, j)
            queue.append(gamma)
    # decreasing lex within a height, so alpha_1 comes before alpha_2
    roots = sorted(words, key=lambda r: (sum(r), tuple(-c for c in r)))
    return roots, [words[r] for r in roots]


def _component_order(rs: RootSystem, comp: tuple[Label, ...]) -> int:
    k = len(comp)
    idx = [rs.index(lab) for lab in comp]
    outside = [i for i in range(rs.rank) if i not in idx]
    nroots = sum(1 for r in rs.positive_roots if all(r[i] == 0 for i in outside))
    C = rs.datum.cartan
    bonds = {-C[i][j] for i in idx for j in idx if i != j and C[i][j]}
    if 3 in bonds:
        return 12
    if 2 in bonds:
        if k == 4 and nroots == 24:
            return 1152
        return 2 ** k * math.factorial(k)
    if nroots == k * (k + 1) // 2:
        return math.factorial(k + 1)
    if nroots == k * (k - 1):
        return 2 ** (k - 1) * math.factorial(k)
    return {36: 51840, 63: 2903040, 120: 696729600}[nroots]


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Build (and cache) the root system of the given finite type.

    >>> build_root_system("G", 2).num_positive
    6
    >>> build_root_system("B", 3).num_positive
    9
    """
    datum = cartan_datum(type_label, rank)
    rs = RootSystem(datum)
    expected = POSITIVE_ROOT_COUNTS[type_label](rank)
    assert rs.num_positive == expected, (rs.name, rs.num_positive, expected)
    return rs


def parse_group(spec: str) -> RootSystem:
    """Parse strings such as ``"A3"`` or ``"e8"`` into a root system."""
    s = spec.strip()
    if len(s) < 2 or not s[1:].isdigit():
        raise ConfigurationError(f"cannot parse group {spec!r}; expected e.g. A3, B4, E8")
    return build_root_system(s[0].upper(), int(s[1:]))


@lru_cache(maxsize=None)
def restrict(rs: RootSystem, nodes: tuple[Label, ...]) -> RootSystem:
    """The root system of the Dynkin subdiagram on ``nodes`` (labels kept).

    The result inherits the ambient type letter even when the subdiagram is of
    another type or reducible; only its Cartan submatrix matters.
    """
    nodes = rs.sorted_labels(set(nodes))
    if not nodes:
        raise DomainError("cannot restrict to an empty set of nodes")
    idx = [rs.index(lab) for lab in nodes]
    C = rs.datum.cartan
    sub = tuple(tuple(C[i][j] for j in idx) for i in idx)
    datum = CartanDatum(rs.datum.type_label, len(nodes), sub, nodes)
    return RootSystem(datum, name=f"{rs.name}[{','.join(map(str, nodes))}]")


def reflect_root(rs: RootSystem, label: Label, beta: Sequence[int]) -> Root:
    """Apply the simple reflection at node ``label`` to the root ``beta``.

    >>> rs = build_root_system("B", 3)
    >>> reflect_root(rs, 0, (0, 1, 0))
    (2, 1, 0)
    """
    i = rs.index(label)
    rs.root_index(beta)
    return _reflect(rs.datum.cartan, i, tuple(beta))
