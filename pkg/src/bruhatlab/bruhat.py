"""
Strong and weak Bruhat order: lower intervals, Poincaré polynomials, rational
smoothness and comparison.

Lower covers of ``w`` are the elements ``w t`` with ``t`` a reflection whose
root is an inversion of ``w`` and ``l(w t) = l(w) - 1``; these are the same
elements as ``t' w`` with ``l(t' w) = l(w) - 1``.  Covers are cached per
element, so repeated interval queries in one group are cheap.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, ResourceError
from .poly import IntPolynomial, is_palindromic
from .poset import GradedPoset
from .rootsystem import Label
from .weyl import (
    WeylElement,
    _simple_positions,
    identity,
    inverse,
    inversion_indices,
    left_multiply_simple,
    reflections,
    right_multiply_simple,
)

DEFAULT_INTERVAL_CAP = 10**6


@lru_cache(maxsize=None)
def _lower_covers(w: WeylElement) -> tuple[WeylElement, ...]:
    refl = reflections(w.rs)
    target = w.length - 1
    out = []
    pw = w.perm
    for k in inversion_indices(w):
        x = WeylElement(w.rs, tuple(pw[j] for j in refl[k].perm))
        if x.length == target:
            out.append(x)
    return tuple(out)


def lower_covers(w: WeylElement) -> frozenset[WeylElement]:
    """Elements covered by ``w`` in Bruhat order."""
    return frozenset(_lower_covers(w))


def lower_set(w: WeylElement, cap: int = DEFAULT_INTERVAL_CAP) -> set[WeylElement]:
    """The set ``[id, w]``, by breadth-first search over lower covers."""
    seen = {w}
    queue = deque([w])
    while queue:
        for y in _lower_covers(queue.popleft()):
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise ResourceError(f"interval below {w!r} exceeds the cap {cap}", cap)
                queue.append(y)
    return seen


def lower_interval(w: WeylElement, cap: int = DEFAULT_INTERVAL_CAP) -> GradedPoset:
    """``[id, w]`` as a graded poset with all its Bruhat covers."""
    elems = sorted(lower_set(w, cap), key=lambda x: (x.length, x.perm))
    covers = [(y, x) for x in elems for y in _lower_covers(x)]
    return GradedPoset(elems, {x: x.length for x in elems}, covers)


def poincare(w: WeylElement, cap: int = DEFAULT_INTERVAL_CAP) -> IntPolynomial:
    """``P_w(q) = sum over u <= w of q^l(u)``.

    >>> from bruhatlab.rootsystem import build_root_system
    >>> from bruhatlab.weyl import from_word
    >>> str(poincare(from_word(build_root_system("A", 3), [2, 1, 3, 2])))
    '1 + 3q + 5q^2 + 4q^3 + q^4'
    """
    return IntPolynomial.from_degrees(x.length for x in lower_set(w, cap))


def is_rationally_smooth(w: WeylElement, cap: int = DEFAULT_INTERVAL_CAP) -> bool:
    return is_palindromic(poincare(w, cap))


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """``u <= v`` in Bruhat order, by the lifting property on a left descent of ``v``."""
    if u.rs is not v.rs:
        raise DomainError("elements of different groups are incomparable")
    return _leq(u, v)


@lru_cache(maxsize=1 << 20)
def _leq(u: WeylElement, v: WeylElement) -> bool:
    if u.length > v.length:
        return False
    if u.length == v.length:
        return u == v
    if u.length == 0:
        return True
    N = v.rs.num_positive
    inv_v = inverse(v).perm
    inv_u = inverse(u).perm
    for i in range(v.rs.rank):
        k = _simple_positions(v.rs)[i]
        if inv_v[k] >= N:
            sv = left_multiply_simple(v, i)
            if inv_u[k] >= N:
                return _leq(left_multiply_simple(u, i), sv)
            return _leq(u, sv)
    raise AssertionError("non-identity element without a left descent")


def clear_caches() -> None:
    """Drop memoised covers and comparisons (all groups)."""
    _lower_covers.cache_clear()
    _leq.cache_clear()


def subword_products(rs, word: Sequence[Label]) -> set[WeylElement]:
    """Distinct products of subwords of ``word``.

    For a reduced word of ``w`` this is ``[id, w]`` by the subword property; it
    serves as an oracle independent of the cover search.
    """
    out = {identity(rs)}
    for lab in word:
        i = rs.index(lab)
        out |= {right_multiply_simple(x, i) for x in out}
    return out


def weak_order_poset(elements: Iterable[WeylElement], side: str = "right") -> GradedPoset:
    """Weak order restricted to ``elements``: covers ``w < w s`` (right) or ``w < s w`` (left)."""
    if side not in ("left", "right"):
        raise DomainError(f"side must be 'left' or 'right', not {side!r}")
    elems = list(elements)
    present = set(elems)
    step = right_multiply_simple if side == "right" else left_multiply_simple
    covers = []
    for w in elems:
        for i in range(w.rs.rank):
            x = step(w, i)
            if x.length == w.length + 1 and x in present:
                covers.append((w, x))
    return GradedPoset(elems, {w: w.length for w in elems}, covers)
