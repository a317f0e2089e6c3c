"""
Weyl group elements as signed permutations of the root system.

An element ``w`` stores the table ``perm`` with ``perm[k]`` the signed index of
``w(root k)``.  Products compose as functions, so ``from_word(rs, [i, j])`` is
``s_i s_j`` and acts on a root by applying ``s_j`` first.

>>> from bruhatlab.rootsystem import build_root_system
>>> rs = build_root_system("A", 2)
>>> w0 = from_word(rs, [1, 2, 1])
>>> w0.length
3
>>> canonical_word(w0)
(1, 2, 1)
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, ResourceError
from .rootsystem import Label, Root, RootSystem

DEFAULT_GROUP_CAP = 10**6


class WeylElement:
    __slots__ = ("rs", "perm", "length", "_hash")

    def __init__(self, rs: RootSystem, perm: tuple[int, ...]):
        self.rs = rs
        self.perm = perm
        N = rs.num_positive
        self.length = sum(1 for k in range(N) if perm[k] >= N)
        self._hash = hash(perm)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs is other.rs and self.perm == other.perm

    def __hash__(self):
        return self._hash

    def __lt__(self, other: WeylElement):
        # an arbitrary total order, used only for deterministic sorting
        return (self.length, canonical_word(self)) < (other.length, canonical_word(other))

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def __repr__(self):
        return f"<{self.rs.name} {word_string(canonical_word(self))}>"

    def __call__(self, k: int) -> int:
        """Signed index of the image of root ``k``."""
        return self.perm[k]

    def inverse(self) -> WeylElement:
        return inverse(self)

    def is_identity(self) -> bool:
        return self.length == 0


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, tuple(range(2 * rs.num_positive)))


def simple_reflection(rs: RootSystem, label: Label) -> WeylElement:
    return WeylElement(rs, rs.action[rs.index(label)])


def from_word(rs: RootSystem, word: Iterable[Label]) -> WeylElement:
    """The product ``s_{w[0]} s_{w[1]} ...``; the word need not be reduced."""
    perm = tuple(range(2 * rs.num_positive))
    for lab in word:
        s = rs.action[rs.index(lab)]
        perm = tuple(perm[k] for k in s)
    return WeylElement(rs, perm)


def _check_same(a: WeylElement, b: WeylElement) -> None:
    if a.rs is not b.rs:
        raise DomainError(f"elements of different groups: {a.rs.name} and {b.rs.name}")


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    _check_same(a, b)
    pa = a.perm
    return WeylElement(a.rs, tuple(pa[k] for k in b.perm))


def inverse(a: WeylElement) -> WeylElement:
    inv = [0] * len(a.perm)
    for k, j in enumerate(a.perm):
        inv[j] = k
    return WeylElement(a.rs, tuple(inv))


def apply_to_root(w: WeylElement, beta: Sequence[int]) -> Root:
    return w.rs.root(w.perm[w.rs.root_index(beta)])


def right_multiply_simple(w: WeylElement, i: int) -> WeylElement:
    """``w s_i`` for the simple root at position ``i``."""
    p = w.perm
    return WeylElement(w.rs, tuple(p[k] for k in w.rs.action[i]))


def left_multiply_simple(w: WeylElement, i: int) -> WeylElement:
    """``s_i w`` for the simple root at position ``i``."""
    s = w.rs.action[i]
    return WeylElement(w.rs, tuple(s[k] for k in w.perm))


@lru_cache(maxsize=None)
def _simple_positions(rs: RootSystem) -> tuple[int, ...]:
    return tuple(rs.root_index(rs.simple_root(lab)) for lab in rs.labels)


def descents(w: WeylElement, side: str = "right") -> frozenset[Label]:
    """Right descents ``{i : w(alpha_i) < 0}``; left descents are those of ``w^-1``."""
    if side == "left":
        w = inverse(w)
    elif side != "right":
        raise DomainError(f"side must be 'left' or 'right', not {side!r}")
    N = w.rs.num_positive
    pos = _simple_positions(w.rs)
    return frozenset(w.rs.labels[i] for i in range(w.rs.rank) if w.perm[pos[i]] >= N)


def canonical_word(w: WeylElement) -> tuple[Label, ...]:
    """Reduced word found by repeatedly removing the smallest left descent."""
    return _canonical_word(w.rs, w.perm)


@lru_cache(maxsize=1 << 16)
def _canonical_word(rs: RootSystem, perm: tuple[int, ...]) -> tuple[Label, ...]:
    N = rs.num_positive
    pos = _simple_positions(rs)
    inv = [0] * len(perm)
    for k, j in enumerate(perm):
        inv[j] = k
    word = []
    while True:
        for i in range(rs.rank):
            if inv[pos[i]] >= N:
                break
        else:
            return tuple(word)
        word.append(rs.labels[i])
        # w <- s_i w, so w^{-1} <- w^{-1} s_i
        s = rs.action[i]
        inv = [inv[k] for k in s]


def word_string(word: Sequence[Label]) -> str:
    return " ".join(map(str, word)) if word else "e"


def support(w: WeylElement) -> frozenset[Label]:
    """Letters of a reduced word of ``w``."""
    return frozenset(canonical_word(w))


def inversion_set(w: WeylElement) -> frozenset[Root]:
    """``{alpha > 0 : w(alpha) < 0}`` as coefficient vectors."""
    N = w.rs.num_positive
    return frozenset(w.rs.positive_roots[k] for k in range(N) if w.perm[k] >= N)


def inversion_indices(w: WeylElement) -> tuple[int, ...]:
    N = w.rs.num_positive
    return tuple(k for k in range(N) if w.perm[k] >= N)


def inversion_mask(w: WeylElement) -> int:
    """Bit ``k`` set iff positive root ``k`` is an inversion of ``w``."""
    N = w.rs.num_positive
    p = w.perm
    m = 0
    for k in range(N):
        if p[k] >= N:
            m |= 1 << k
    return m


def in_parabolic(w: WeylElement, J: Iterable[Label]) -> bool:
    """Whether ``w`` lies in ``W_J``: all its inversions are supported on ``J``."""
    rs = w.rs
    outside = [i for i in range(rs.rank) if rs.labels[i] not in set(J)]
    N = rs.num_positive
    roots = rs.positive_roots
    return all(all(roots[k][i] == 0 for i in outside) for k in range(N) if w.perm[k] >= N)


@lru_cache(maxsize=None)
def reflections(rs: RootSystem) -> tuple[WeylElement, ...]:
    """The reflection ``t_alpha`` for every positive root, in root order."""
    out = []
    for k in range(rs.num_positive):
        word, i = rs.root_word(k)
        labels = [rs.labels[j] for j in word]
        out.append(from_word(rs, labels + [rs.labels[i]] + labels[::-1]))
    return tuple(out)


def reflection_for_root(rs: RootSystem, alpha: Sequence[int]) -> WeylElement:
    """The reflection through the hyperplane of the positive root ``alpha``."""
    k = rs.root_index(alpha)
    if k >= rs.num_positive:
        raise DomainError(f"{tuple(alpha)} is not a positive root of {rs.name}")
    return reflections(rs)[k]


def longest_element(rs: RootSystem, J: Iterable[Label] | None = None) -> WeylElement:
    """Longest element of ``W_J`` (default ``J = S``)."""
    idx = [rs.index(lab) for lab in (rs.labels if J is None else J)]
    pos = _simple_positions(rs)
    N = rs.num_positive
    w = identity(rs)
    while True:
        for i in idx:
            if w.perm[pos[i]] < N:
                w = right_multiply_simple(w, i)
                break
        else:
            return w


def enumerate_group(rs: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> list[WeylElement]:
    """All elements of ``W``, breadth-first by length.

    >>> from bruhatlab.rootsystem import build_root_system
    >>> [w.length for w in enumerate_group(build_root_system("A", 2))]
    [0, 1, 1, 2, 2, 3]
    """
    order = rs.group_order()
    if order > cap:
        raise ResourceError(f"|W({rs.name})| = {order} exceeds the group cap {cap}", cap)
    return _enumerate_group(rs)


@lru_cache(maxsize=8)
def _enumerate_group_cached(rs: RootSystem) -> tuple[WeylElement, ...]:
    level = [identity(rs)]
    out = list(level)
    seen = set(level)
    N = rs.num_positive
    pos = _simple_positions(rs)
    while level:
        nxt = []
        for w in level:
            for i in range(rs.rank):
                if w.perm[pos[i]] < N:
                    x = right_multiply_simple(w, i)
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
        out.extend(nxt)
        level = nxt
    return tuple(out)


def _enumerate_group(rs: RootSystem) -> list[WeylElement]:
    return list(_enumerate_group_cached(rs))
