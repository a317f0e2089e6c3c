"""
Parabolic subgroups, minimal coset representatives and quotient posets.

Two quotient conventions are supported and are exchanged by ``w -> w^-1``:

* ``rightfree``: representatives with no right descent in ``J`` (written ``W^J``);
  reduced words end in the removed node.
* ``leftfree``: representatives with no left descent in ``J`` (written ``^J W``);
  reduced words start with the removed node.

The parabolic decomposition ``w = u v`` uses the leftfree side: ``u`` in
``W_J`` and ``v`` leftfree with lengths adding.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .bruhat import lower_set, poincare, is_rationally_smooth
from .errors import DomainError, InvariantViolation, ResourceError
from .poly import IntPolynomial
from .poset import GradedPoset
from .rootsystem import Label, RootSystem, restrict
from .weyl import (
    WeylElement,
    _simple_positions,
    canonical_word,
    descents,
    from_word,
    identity,
    in_parabolic,
    inverse,
    inversion_indices,
    left_multiply_simple,
    longest_element,
    multiply,
    reflections,
    right_multiply_simple,
    support,
)

SIDES = ("rightfree", "leftfree")
DEFAULT_QUOTIENT_CAP = 10**5


@dataclass(frozen=True)
class QuotientSpec:
    J: frozenset
    side: str = "rightfree"

    def __post_init__(self):
        _check_side(self.side)

    def dual(self) -> QuotientSpec:
        return QuotientSpec(self.J, "leftfree" if self.side == "rightfree" else "rightfree")


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise DomainError(f"side must be one of {SIDES}, not {side!r}")


def _normalize_J(rs: RootSystem, J: Iterable[Label]) -> frozenset:
    J = frozenset(J)
    for lab in J:
        rs.index(lab)
    return J


def complement(rs: RootSystem, nodes: Iterable[Label]) -> frozenset:
    """``S`` minus ``nodes``."""
    nodes = set(nodes)
    for lab in nodes:
        rs.index(lab)
    return frozenset(lab for lab in rs.labels if lab not in nodes)


def is_in_quotient(w: WeylElement, J: Iterable[Label], side: str) -> bool:
    _check_side(side)
    d = descents(w, "right" if side == "rightfree" else "left")
    return not (d & frozenset(J))


def coset_min_rep(w: WeylElement, J: Iterable[Label], side: str) -> WeylElement:
    """Minimal length representative of ``W_J w`` (leftfree) or ``w W_J`` (rightfree)."""
    _check_side(side)
    rs = w.rs
    idx = [rs.index(lab) for lab in _normalize_J(rs, J)]
    pos = _simple_positions(rs)
    N = rs.num_positive
    if side == "rightfree":
        while True:
            for i in idx:
                if w.perm[pos[i]] >= N:
                    w = right_multiply_simple(w, i)
                    break
            else:
                return w
    while True:
        winv = inverse(w)
        for i in idx:
            if winv.perm[pos[i]] >= N:
                w = left_multiply_simple(w, i)
                break
        else:
            return w


def parabolic_decompose(w: WeylElement, J: Iterable[Label]) -> tuple[WeylElement, WeylElement]:
    """``(u, v)`` with ``w = u v``, ``u`` in ``W_J``, ``v`` leftfree, lengths adding."""
    v = coset_min_rep(w, J, "leftfree")
    u = multiply(w, inverse(v))
    assert u.length + v.length == w.length
    return u, v


def max_below(w: WeylElement, J: Iterable[Label]) -> WeylElement:
    """The unique maximal element of ``W_J`` below ``w``."""
    J = _normalize_J(w.rs, J)
    below = [u for u in lower_set(w) if in_parabolic(u, J)]
    top = max(u.length for u in below)
    tops = [u for u in below if u.length == top]
    if len(tops) != 1:
        raise InvariantViolation(f"{len(tops)} maximal elements of W_J below {w!r}")
    m = tops[0]
    under = lower_set(m)
    if not all(u in under for u in below):
        raise InvariantViolation(f"W_J below {w!r} has no maximum")
    return m


class Quotient:
    """A parabolic quotient with its Bruhat order, built breadth-first.

    Lower intervals are stored as integer bitmasks over the element list, which
    keeps palindromicity scans of quotients with ~10^4 elements cheap.
    """

    def __init__(self, rs: RootSystem, J: frozenset, side: str):
        self.rs = rs
        self.J = J
        self.side = side
        self.elements = _quotient_bfs(rs, J, side)
        self.index = {w.perm: n for n, w in enumerate(self.elements)}
        self.lower = self._lower_covers()
        down = []
        for n, w in enumerate(self.elements):
            m = 1 << n
            for c in self.lower[n]:
                m |= down[c]
            down.append(m)
        self.down = down
        top = self.elements[-1].length
        masks = [0] * (top + 1)
        for n, w in enumerate(self.elements):
            masks[w.length] |= 1 << n
        self.rank_masks = masks

    def _lower_covers(self) -> list[tuple[int, ...]]:
        refl = [t.perm for t in reflections(self.rs)]
        N = self.rs.num_positive
        index = self.index
        out = []
        for w in self.elements:
            pw = w.perm
            target = w.length - 1
            covers = []
            for k in inversion_indices(w):
                p = tuple(pw[j] for j in refl[k])
                n = index.get(p)
                if n is not None and sum(1 for j in range(N) if p[j] >= N) == target:
                    covers.append(n)
            out.append(tuple(sorted(covers)))
        return out

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w: WeylElement) -> bool:
        return w.rs is self.rs and w.perm in self.index

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def position(self, v: WeylElement) -> int:
        n = self.index.get(v.perm) if v.rs is self.rs else None
        if n is None:
            raise DomainError(f"{v!r} is not a minimal {self.side} representative for J={sorted(self.J)}")
        return n

    def rank_counts(self, n: int) -> list[int]:
        d = self.down[n]
        return [(d & m).bit_count() for m in self.rank_masks[: self.elements[n].length + 1]]

    def poincare(self, v: WeylElement) -> IntPolynomial:
        return IntPolynomial(self.rank_counts(self.position(v)))

    def is_palindromic_at(self, n: int) -> bool:
        c = self.rank_counts(n)
        return c == c[::-1]

    def interval_is_chain(self, n: int) -> bool:
        return all(c == 1 for c in self.rank_counts(n))

    def is_chain(self) -> bool:
        return all(m.bit_count() == 1 for m in self.rank_masks)

    def rank_sizes(self) -> list[int]:
        return [m.bit_count() for m in self.rank_masks]

    @cached_property
    def poset(self) -> GradedPoset:
        els = self.elements
        covers = [(els[c], els[n]) for n in range(len(els)) for c in self.lower[n]]
        return GradedPoset(list(els), {w: w.length for w in els}, covers)


def _quotient_bfs(rs: RootSystem, J: frozenset, side: str) -> list[WeylElement]:
    Jidx = [rs.index(lab) for lab in J]
    pos = _simple_positions(rs)
    N = rs.num_positive
    step = left_multiply_simple if side == "rightfree" else right_multiply_simple

    def ok(x):
        if side == "rightfree":
            return all(x.perm[pos[j]] < N for j in Jidx)
        xi = inverse(x)
        return all(xi.perm[pos[j]] < N for j in Jidx)

    level = [identity(rs)]
    out = list(level)
    seen = set(level)
    while level:
        nxt = []
        for w in level:
            for i in range(rs.rank):
                x = step(w, i)
                if x.length == w.length + 1 and x not in seen and ok(x):
                    seen.add(x)
                    nxt.append(x)
        out.extend(nxt)
        level = nxt
    return out


@lru_cache(maxsize=64)
def _quotient(rs: RootSystem, J: frozenset, side: str) -> Quotient:
    return Quotient(rs, J, side)


def get_quotient(rs: RootSystem, J: Iterable[Label], side: str = "rightfree",
                 cap: int = DEFAULT_QUOTIENT_CAP) -> Quotient:
    _check_side(side)
    J = _normalize_J(rs, J)
    size = rs.group_order() // rs.group_order(J)
    if size > cap:
        raise ResourceError(
            f"quotient {rs.name}/W_J has {size} elements, above the cap {cap}", cap)
    return _quotient(rs, J, side)


def quotient_elements(rs: RootSystem, J: Iterable[Label], side: str = "rightfree",
                      cap: int = DEFAULT_QUOTIENT_CAP) -> list[WeylElement]:
    """Minimal coset representatives, breadth-first by length."""
    return list(get_quotient(rs, J, side, cap).elements)


def quotient_poset(rs: RootSystem, J: Iterable[Label], side: str = "rightfree",
                   cap: int = DEFAULT_QUOTIENT_CAP) -> GradedPoset:
    """Bruhat order on the quotient; covers are reflection covers inside it."""
    return get_quotient(rs, J, side, cap).poset


def quotient_poincare(v: WeylElement, J: Iterable[Label], side: str = "rightfree",
                      cap: int = DEFAULT_QUOTIENT_CAP) -> IntPolynomial:
    """Rank generating function of ``[id, v]`` inside the quotient."""
    return get_quotient(v.rs, J, side, cap).poincare(v)


def quotient_longest(rs: RootSystem, J: Iterable[Label], side: str = "rightfree") -> WeylElement:
    return get_quotient(rs, J, side).longest


def removed_leaf(rs: RootSystem, J: Iterable[Label]) -> Label:
    """The single node outside ``J``; it must be a leaf of the Dynkin diagram."""
    rest = complement(rs, J)
    if len(rest) != 1:
        raise DomainError(f"J must omit exactly one node, omits {sorted(rest, key=rs.index)}")
    (s,) = rest
    if not rs.is_leaf(s):
        raise DomainError(
            f"node {s} of {rs.name} is not a leaf; leaf-removed quotients need a leaf")
    return s


@dataclass(frozen=True)
class PalindromicElement:
    element: WeylElement
    nontrivial: bool

    @property
    def word(self):
        return canonical_word(self.element)


def palindromic_quotient_elements(rs: RootSystem, J: Iterable[Label], side: str = "rightfree",
                                  cap: int = DEFAULT_QUOTIENT_CAP) -> list[PalindromicElement]:
    """Quotient elements with palindromic lower interval, trivial ones included."""
    q = get_quotient(rs, J, side, cap)
    last = len(q) - 1
    return [PalindromicElement(v, 0 < n < last)
            for n, v in enumerate(q.elements) if q.is_palindromic_at(n)]


# classification of palindromic quotient elements

class Tag(enum.Enum):
    TRIVIAL = "Trivial"
    LOCALLY_LONGEST = "LocallyLongest"
    LOCAL_CHAIN = "LocalChain"
    SPECIAL_F4 = "SpecialF4"
    SPECIAL_BN = "SpecialBn"
    NOT_PALINDROMIC = "NotPalindromic"

    def __str__(self):
        return self.value


def embedded_quotient(v: WeylElement, J: Iterable[Label], side: str) -> tuple[Quotient, WeylElement]:
    """The quotient ``W_I^{I cap J}`` for ``I = support(v)``, built on the subdiagram ``I``,
    together with ``v`` rewritten as an element of it."""
    rs = v.rs
    I = rs.sorted_labels(support(v))
    sub = restrict(rs, I)
    subq = get_quotient(sub, frozenset(J) & frozenset(I), side)
    return subq, from_word(sub, canonical_word(v))


def _special_words(rs: RootSystem, leaf: Label) -> tuple[Tag, list[tuple[Label, ...]]] | None:
    # the exceptional words, written for the leftfree convention
    if rs.name == "F4" and leaf == 4:
        return Tag.SPECIAL_F4, [(4, 3, 2, 1)]
    if rs.name == "F4" and leaf == 1:
        return Tag.SPECIAL_F4, [(1, 2, 3, 4)]
    if rs.name == f"B{rs.rank}" and rs.datum.type_label == "B" and leaf == 0:
        return Tag.SPECIAL_BN, [tuple(range(k + 1)) for k in range(rs.rank)]
    return None


def special_case_match(v: WeylElement, J: Iterable[Label]) -> tuple[Tag, str] | None:
    """Match ``v`` against the explicit exceptions, in either orientation.

    Returns the tag and ``"as-stated"`` when ``v`` equals the listed word, or
    ``"reversed"`` when it equals the reversed word (the other side convention).
    """
    rs = v.rs
    found = _special_words(rs, removed_leaf(rs, J))
    if found is None:
        return None
    tag, words = found
    for word in words:
        if v == from_word(rs, word):
            return tag, "as-stated"
        if v == from_word(rs, word[::-1]):
            return tag, "reversed"
    return None


def classify_quotient_element(v: WeylElement, J: Iterable[Label], side: str = "rightfree",
                              check: bool = True) -> Tag:
    """Tag a quotient element by the reason its lower interval is (not) palindromic.

    Precedence is Trivial, LocallyLongest, LocalChain, then the explicit F4 and
    B_n exceptions.  With ``check`` set, the tag is compared with a direct
    palindromicity test and a disagreement raises :class:`InvariantViolation`.
    """
    rs = v.rs
    J = _normalize_J(rs, J)
    removed_leaf(rs, J)
    q = get_quotient(rs, J, side)
    n = q.position(v)
    tag = _classify(v, J, side, q, n)
    if check and (tag is not Tag.NOT_PALINDROMIC) != q.is_palindromic_at(n):
        raise InvariantViolation(
            f"{v!r} in {rs.name} quotient (J={sorted(J, key=rs.index)}, {side}) tagged {tag} "
            f"but palindromic={q.is_palindromic_at(n)}")
    return tag


def _classify(v, J, side, q, n) -> Tag:
    if n == 0 or n == len(q) - 1:
        return Tag.TRIVIAL
    rs = v.rs
    subq, v_sub = embedded_quotient(v, J, side)
    if rs.is_connected(support(v)) and v_sub == subq.longest:
        return Tag.LOCALLY_LONGEST
    if subq.is_chain():
        return Tag.LOCAL_CHAIN
    special = special_case_match(v, J)
    if special is not None:
        return special[0]
    return Tag.NOT_PALINDROMIC


# BP decompositions

@dataclass(frozen=True)
class BPDecomposition:
    """``x = u v`` with ``x = w`` (or ``w^-1`` when ``inverted``), ``u = m(x, J)``."""
    w: WeylElement
    J: frozenset
    u: WeylElement
    v: WeylElement
    inverted: bool
    leaf: Label

    @property
    def target(self) -> WeylElement:
        return inverse(self.w) if self.inverted else self.w


def _scan_bp(w: WeylElement) -> BPDecomposition | None:
    rs = w.rs
    winv = inverse(w)
    for leaf in rs.leaves():
        J = complement(rs, [leaf])
        for x, inverted in ((w, False), (winv, True)):
            u, v = parabolic_decompose(x, J)
            if u == max_below(x, J):
                return BPDecomposition(w, J, u, v, inverted, leaf)
    return None


def find_bp_decomposition(w: WeylElement) -> BPDecomposition:
    """First BP-decomposition of ``w`` or ``w^-1``: leaves ascending, ``w`` before ``w^-1``."""
    if not is_rationally_smooth(w):
        raise DomainError(f"{w!r} is not rationally smooth")
    bp = _scan_bp(w)
    if bp is None:
        raise InvariantViolation(f"rationally smooth {w!r} has no BP-decomposition")
    return bp


def check_factorization(w: WeylElement) -> bool:
    """Whether ``P_x = P_u * P_v^{quotient}`` for the first decomposition found."""
    bp = _scan_bp(w)
    if bp is None:
        raise DomainError(f"no leaf-removed decomposition of {w!r} or its inverse has u = m(w, J)")
    lhs = poincare(bp.target)
    rhs = poincare(bp.u) * quotient_poincare(bp.v, bp.J, "leftfree")
    return lhs == rhs


def right_descent_property(w: WeylElement) -> bool:
    """Every node of ``support(v)`` in ``J`` is a right descent of ``u``, and
    ``u = u' u_{I cap J}`` with lengths adding."""
    bp = find_bp_decomposition(w)
    rs = w.rs
    IJ = support(bp.v) & bp.J
    if not IJ <= descents(bp.u, "right"):
        return False
    u_IJ = longest_element(rs, rs.sorted_labels(IJ))
    u_prime = multiply(bp.u, inverse(u_IJ))
    return u_prime.length + u_IJ.length == bp.u.length


@dataclass
class ListMatch:
    """Comparison of a reference word list with computed palindromic elements."""
    side: str | None
    missing: dict[str, list[tuple]]
    extra: dict[str, list[tuple]]


def match_palindromic_list(rs: RootSystem, J: Iterable[Label],
                           words: Iterable[Iterable[Label]]) -> ListMatch:
    """Find the side convention under which ``words`` are exactly the nontrivial
    palindromic quotient elements (compared as group elements, not as words)."""
    J = _normalize_J(rs, J)
    listed = {from_word(rs, w) for w in words}
    missing, extra = {}, {}
    found = None
    for side in SIDES:
        computed = {p.element for p in palindromic_quotient_elements(rs, J, side) if p.nontrivial}
        missing[side] = sorted(canonical_word(x) for x in listed - computed)
        extra[side] = sorted(canonical_word(x) for x in computed - listed)
        if found is None and not missing[side] and not extra[side]:
            found = side
    return ListMatch(found, missing, extra)
