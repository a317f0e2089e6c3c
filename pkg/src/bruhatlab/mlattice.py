"""
The lattice ``M(n)`` of subsets of ``{1..n}``.

``A <= B`` when ``|A| <= |B|`` and, comparing from the top, the i-th largest
entry of ``A`` is at most the i-th largest entry of ``B``.  The rank of a
subset is the sum of its entries.

>>> mn_leq((1, 3), (2, 3))
True
>>> mn_leq((3,), (1, 2))
False
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import ConfigurationError, ResourceError
from .parabolic import complement, quotient_poset
from .poset import GradedPoset, find_isomorphism, from_order
from .rootsystem import build_root_system

MAX_N = 20

MnElement = tuple[int, ...]


def mn_element(entries: Iterable[int], n: int | None = None) -> MnElement:
    A = tuple(sorted(set(entries)))
    if A and A[0] < 1:
        raise ConfigurationError(f"entries must be positive: {A}")
    if n is not None and A and A[-1] > n:
        raise ConfigurationError(f"{A} is not a subset of [1..{n}]")
    return A


def mn_leq(A: Iterable[int], B: Iterable[int]) -> bool:
    A, B = tuple(sorted(A)), tuple(sorted(B))
    if len(A) > len(B):
        return False
    return all(a <= b for a, b in zip(reversed(A), reversed(B)))


def mn_rank(A: MnElement) -> int:
    return sum(A)


def mn_label(A: MnElement) -> str:
    """``"13"`` for ``{1, 3}``, ``"{}"`` for the empty set (entries above 9 comma-separated)."""
    if not A:
        return "{}"
    if A[-1] > 9:
        return ",".join(map(str, A))
    return "".join(map(str, A))


def mn_elements(n: int) -> list[MnElement]:
    """All subsets of ``[n]``, by rank then lexicographically."""
    out = [c for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    return sorted(out, key=lambda A: (sum(A), A))


@lru_cache(maxsize=None)
def _mn_poset(n: int) -> GradedPoset:
    return from_order(mn_elements(n), mn_leq, mn_rank)


def mn_poset(n: int) -> GradedPoset:
    """``M(n)`` with covers from the transitive reduction of :func:`mn_leq`."""
    if n < 0:
        raise ConfigurationError("n must be nonnegative")
    if n > MAX_N:
        raise ResourceError(f"M({n}) has 2^{n} elements; the cap is n <= {MAX_N}", MAX_N)
    return _mn_poset(n)


def up_down_sets(A: Iterable[int], n: int) -> tuple[set, set, set, set]:
    """``(U, U^2, D, D^2)``: covers above, two steps above, covers below, two steps below."""
    A = mn_element(A, n)
    P = mn_poset(n)
    U = set(P.up[A])
    D = set(P.down[A])
    U2 = {c for b in U for c in P.up[b]}
    D2 = {c for b in D for c in P.down[b]}
    return U, U2, D, D2


def mn_palindromic(n: int) -> set[MnElement]:
    """Subsets whose lower interval has a palindromic rank generating function (brute force)."""
    P = mn_poset(n)
    out = set()
    for A in P.elements:
        counts = [0] * (mn_rank(A) + 1)
        for B in P.lower_set(A):
            counts[mn_rank(B)] += 1
        if counts == counts[::-1]:
            out.add(A)
    return out


def mn_palindromic_closed_form(n: int) -> set[MnElement]:
    """The empty set, the singletons ``{k}`` and the initial segments ``[k]``."""
    return {()} | {(k,) for k in range(1, n + 1)} | {tuple(range(1, k + 1)) for k in range(1, n + 1)}


def verify_iso_bn(n: int) -> bool:
    """Whether ``B_n`` with node 0 removed is isomorphic to ``M(n)``."""
    if n > 6:
        raise ResourceError(f"verify_iso_bn is limited to n <= 6 (got {n})", 6)
    rs = build_root_system("B", n)
    Q = quotient_poset(rs, complement(rs, [0]), "rightfree")
    return find_isomorphism(Q, mn_poset(n)) is not None


def verify_iso_dn(n: int, removed: int = 0) -> bool:
    """Whether ``D_n`` with node 0 (or 1) removed is isomorphic to ``M(n-1)``."""
    if n > 6:
        raise ResourceError(f"verify_iso_dn is limited to n <= 6 (got {n})", 6)
    if removed not in (0, 1):
        raise ConfigurationError("D_n/A_{n-1} removes node 0 or node 1")
    rs = build_root_system("D", n)
    Q = quotient_poset(rs, complement(rs, [removed]), "rightfree")
    return find_isomorphism(Q, mn_poset(n - 1)) is not None
