"""
Inversion hyperplane arrangements and their regions.

Every arrangement here is a set of positive roots, so it is a subarrangement of
the Coxeter arrangement and each of its regions is a union of Weyl chambers.
The chamber of ``x`` lies on the negative side of ``alpha`` exactly when
``x^-1(alpha) < 0``; grouping the chambers by their sign vectors on the chosen
roots gives the regions, with no geometry and no floating point involved.

Sign vectors are stored as bitmasks of the roots on whose negative side a
region lies, so the distance from the fundamental region is a popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .bruhat import poincare, weak_order_poset
from .errors import DomainError
from .parabolic import complement, find_bp_decomposition, quotient_elements, quotient_poincare
from .poly import IntPolynomial
from .poset import GradedPoset, find_isomorphism
from .rootsystem import Root, RootSystem, build_root_system
from .weyl import (
    DEFAULT_GROUP_CAP,
    WeylElement,
    enumerate_group,
    from_word,
    inverse,
    inversion_indices,
    inversion_mask,
    longest_element,
    multiply,
    support,
)


@dataclass(frozen=True)
class Arrangement:
    """Hyperplanes ``alpha(x) = 0`` for a set of positive roots (by index)."""
    rs: RootSystem
    normals: tuple[int, ...]

    def __post_init__(self):
        N = self.rs.num_positive
        if len(set(self.normals)) != len(self.normals):
            raise DomainError("arrangement normals must be distinct")
        if any(not 0 <= k < N for k in self.normals):
            raise DomainError("arrangement normals must be positive roots")
        object.__setattr__(self, "normals", tuple(sorted(self.normals)))

    @classmethod
    def from_roots(cls, rs: RootSystem, roots: Iterable[Sequence[int]]) -> Arrangement:
        idx = []
        for r in roots:
            k = rs.root_index(r)
            if k >= rs.num_positive:
                raise DomainError(f"{tuple(r)} is not a positive root")
            idx.append(k)
        return cls(rs, tuple(idx))

    @property
    def mask(self) -> int:
        m = 0
        for k in self.normals:
            m |= 1 << k
        return m

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(self.rs.positive_roots[k] for k in self.normals)

    def __len__(self):
        return len(self.normals)

    def __or__(self, other: Arrangement) -> Arrangement:
        return Arrangement(self.rs, tuple(set(self.normals) | set(other.normals)))

    def __sub__(self, other: Arrangement) -> Arrangement:
        return Arrangement(self.rs, tuple(set(self.normals) - set(other.normals)))

    def issubset(self, other: Arrangement) -> bool:
        return self.rs is other.rs and set(self.normals) <= set(other.normals)


@dataclass(frozen=True)
class Region:
    """A realizable sign vector: ``minus`` is the bitmask of roots with sign ``-``."""
    arrangement: Arrangement = field(repr=False)
    minus: int
    witnesses: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def distance(self) -> int:
        return self.minus.bit_count()

    def signs(self) -> dict[Root, str]:
        rs = self.arrangement.rs
        return {rs.positive_roots[k]: "-" if self.minus >> k & 1 else "+"
                for k in self.arrangement.normals}


def inversion_arrangement(w: WeylElement) -> Arrangement:
    """The arrangement of hyperplanes of the inversions of ``w``."""
    return Arrangement(w.rs, inversion_indices(w))


@lru_cache(maxsize=8)
def _chamber_masks(rs: RootSystem) -> tuple[int, ...]:
    # chamber of x: negative side of alpha iff x^-1(alpha) < 0, i.e. alpha in Delta_{x^-1}
    return tuple(inversion_mask(inverse(x)) for x in enumerate_group(rs))


def chamber_masks(rs: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> tuple[int, ...]:
    """Minus-set bitmask of the chamber of every group element, in enumeration order."""
    enumerate_group(rs, cap)
    return _chamber_masks(rs)


@lru_cache(maxsize=4096)
def _regions(rs: RootSystem, mask: int) -> dict[int, tuple[int, ...]]:
    groups: dict[int, list[int]] = {}
    for n, m in enumerate(_chamber_masks(rs)):
        groups.setdefault(m & mask, []).append(n)
    return {m: tuple(groups[m]) for m in sorted(groups, key=lambda m: (m.bit_count(), m))}


def enumerate_regions(arr: Arrangement, cap: int = DEFAULT_GROUP_CAP) -> list[Region]:
    """Regions of ``arr``, by distance then sign-vector bitmask.

    Witnesses are positions in :func:`~bruhatlab.weyl.enumerate_group`.
    """
    chamber_masks(arr.rs, cap)
    return [Region(arr, m, wit) for m, wit in _regions(arr.rs, arr.mask).items()]


def _region_masks(arr: Arrangement, cap: int = DEFAULT_GROUP_CAP) -> list[int]:
    chamber_masks(arr.rs, cap)
    return list(_regions(arr.rs, arr.mask))


def distance_poly(arr: Arrangement, cap: int = DEFAULT_GROUP_CAP) -> IntPolynomial:
    """``R(q) = sum over regions of q^(separating hyperplanes from the fundamental region)``."""
    return IntPolynomial.from_degrees(m.bit_count() for m in _region_masks(arr, cap))


def region_poincare(w: WeylElement, cap: int = DEFAULT_GROUP_CAP) -> IntPolynomial:
    """``R_w(q)`` for the inversion arrangement of ``w``."""
    return distance_poly(inversion_arrangement(w), cap)


def _poset_on(masks: Sequence[int], normals: Sequence[int], base: int = 0) -> GradedPoset:
    present = set(masks)
    covers = []
    for m in masks:
        for k in normals:
            bit = 1 << k
            if not m & bit and (m | bit) in present:
                covers.append((m, m | bit))
    return GradedPoset(list(masks), {m: m.bit_count() - base for m in masks}, covers)


def region_poset(arr: Arrangement, cap: int = DEFAULT_GROUP_CAP) -> GradedPoset:
    """Regions ordered by adjacency away from the fundamental region.

    Elements are the minus-set bitmasks; covers join regions whose sign vectors
    differ in one hyperplane.
    """
    return _poset_on(_region_masks(arr, cap), arr.normals)


def _region_mask(sub: Arrangement, region) -> int:
    if isinstance(region, Region):
        if region.arrangement != sub:
            raise DomainError("region does not belong to the subarrangement")
        return region.minus
    m = int(region)
    if m & ~sub.mask:
        raise DomainError("sign mask uses hyperplanes outside the subarrangement")
    return m


def induced_subposet(arr: Arrangement, subarr: Arrangement, region_of_sub,
                     cap: int = DEFAULT_GROUP_CAP) -> GradedPoset:
    """Regions of ``arr`` inside a region of ``subarr``, ranks rebased to start at 0."""
    if not subarr.issubset(arr):
        raise DomainError("subarrangement is not contained in the arrangement")
    target = _region_mask(subarr, region_of_sub)
    sm = subarr.mask
    inside = [m for m in _region_masks(arr, cap) if m & sm == target]
    if not inside:
        raise DomainError("no region of the arrangement lies in that region")
    base = min(m.bit_count() for m in inside)
    return _poset_on(inside, arr.normals, base)


def is_uniform(arr: Arrangement, subarr: Arrangement, cap: int = DEFAULT_GROUP_CAP) -> bool:
    """Whether the induced subposets over all regions of ``subarr`` are isomorphic."""
    return uniform_poset(arr, subarr, cap) is not None


def uniform_poset(arr: Arrangement, subarr: Arrangement,
                  cap: int = DEFAULT_GROUP_CAP) -> GradedPoset | None:
    """The common induced subposet when ``arr`` is uniform over ``subarr``, else ``None``."""
    if not subarr.issubset(arr):
        raise DomainError("subarrangement is not contained in the arrangement")
    first = None
    for m in _region_masks(subarr, cap):
        P = induced_subposet(arr, subarr, m, cap)
        if first is None:
            first = P
        elif find_isomorphism(first, P) is None:
            return None
    return first


# special cases


@dataclass
class SpecialCaseReport:
    """Outcome of one of the explicit F4 / B_n checks.

    ``arrangement_element`` names which of ``w``, ``w^-1`` carries the
    arrangement containing the one of ``u``; ``R_w`` is the same either way.
    """
    name: str
    w: WeylElement
    u: WeylElement
    v: WeylElement
    arrangement_element: str
    P_w: IntPolynomial
    P_u: IntPolynomial
    P_v_quotient: IntPolynomial
    R_w: IntPolynomial
    R_u: IntPolynomial
    uniform: bool
    R_ratio: IntPolynomial | None
    P_ratio: IntPolynomial | None
    R_factor_is_chain: bool
    P_equals_R: bool
    checks: dict[str, bool] = field(default_factory=dict)
    displayed_factors: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        def poly(p):
            return None if p is None else p.to_list()
        return {
            "name": self.name,
            "arrangement_element": self.arrangement_element,
            "P_w": poly(self.P_w), "P_u": poly(self.P_u),
            "P_v_quotient": poly(self.P_v_quotient),
            "R_w": poly(self.R_w), "R_u": poly(self.R_u),
            "R_w/R_u": poly(self.R_ratio), "P_w/P_u": poly(self.P_ratio),
            "uniform": self.uniform, "P_w=R_w": self.P_equals_R,
            "checks": dict(self.checks),
            "displayed_factors": dict(self.displayed_factors),
        }


def _special_report(name: str, rs: RootSystem, J, v_word) -> SpecialCaseReport:
    u = longest_element(rs, rs.sorted_labels(J))
    v = from_word(rs, v_word)
    w = multiply(u, v)
    assert w.length == u.length + v.length
    A_u = inversion_arrangement(u)
    # arrangement of w or of w^-1, whichever contains that of u
    if A_u.issubset(inversion_arrangement(w)):
        A_w, which = inversion_arrangement(w), "w"
    else:
        A_w, which = inversion_arrangement(inverse(w)), "w^-1"
    P_w, P_u = poincare(w), poincare(u)
    R_w, R_u = distance_poly(A_w), distance_poly(A_u)
    R_ratio = R_w.exact_quotient(R_u)
    P_ratio = P_w.exact_quotient(P_u)
    chain = IntPolynomial.chain(v.length)
    rep = SpecialCaseReport(
        name=name, w=w, u=u, v=v, arrangement_element=which,
        P_w=P_w, P_u=P_u, P_v_quotient=quotient_poincare(v, J, "leftfree"),
        R_w=R_w, R_u=R_u, uniform=is_uniform(A_w, A_u),
        R_ratio=R_ratio, P_ratio=P_ratio,
        R_factor_is_chain=R_ratio == chain, P_equals_R=P_w == R_w,
    )
    rep.checks = {
        "uniform": rep.uniform,
        "R_w = R_u * (1 + ... + q^l(v))": rep.R_factor_is_chain,
        "P_w = R_w": rep.P_equals_R,
        "P_w = P_u * P_v_quotient": P_w == P_u * rep.P_v_quotient,
    }
    return rep


def verify_special_F4() -> SpecialCaseReport:
    """F4 with ``u`` longest in ``W_{1,2,3}`` and ``v = s4 s3 s2 s1``.

    Besides the checks that must hold, the report records which of the two
    candidate ``P`` factors (degree 3 or degree 4 chain) actually divides out.
    """
    rs = build_root_system("F", 4)
    rep = _special_report("F4", rs, frozenset({1, 2, 3}), (4, 3, 2, 1))
    rep.displayed_factors = {
        "P_w = P_u (1+q+q^2+q^3)": rep.P_w == rep.P_u * IntPolynomial.chain(3),
        "P_w = P_u (1+q+q^2+q^3+q^4)": rep.P_w == rep.P_u * IntPolynomial.chain(4),
        "R_w = R_u (1+q+q^2+q^3+q^4)": rep.R_w == rep.R_u * IntPolynomial.chain(4),
    }
    return rep


def verify_special_bn(n: int) -> SpecialCaseReport:
    """B_n with ``u`` longest in ``W_{S - {s_0}}`` and ``v = s_0 s_1 ... s_{n-1}``."""
    if n > 5:
        raise DomainError("verify_special_bn supports n <= 5")
    rs = build_root_system("B", n)
    return _special_report(f"B{n}", rs, complement(rs, [0]), tuple(range(n)))


# uniformity of the Coxeter arrangement over a parabolic one

def coxeter_uniformity(rs: RootSystem, J) -> tuple[bool, bool]:
    """``(uniform, matches weak order)`` for ``A_{w0}`` over ``A_{u0}``, ``u0`` longest in ``W_J``.

    The second flag compares the common induced subposet with the right weak
    order on the leftfree quotient for ``J``.
    """
    J = frozenset(J)
    w0 = longest_element(rs)
    u0 = longest_element(rs, rs.sorted_labels(J))
    P = uniform_poset(inversion_arrangement(w0), inversion_arrangement(u0))
    if P is None:
        return False, False
    weak = weak_order_poset(quotient_elements(rs, J, "leftfree"), "right")
    return True, find_isomorphism(P, weak) is not None


# chamber reduction

@dataclass
class ChamberReduction:
    w: WeylElement
    A0: Arrangement
    A1: Arrangement
    A2: Arrangement
    regions_checked: int
    ok: bool


def verify_chamber_reduction(w: WeylElement) -> ChamberReduction:
    """Compare induced subposets over ``A_1 + A_0`` with those of ``A_0 + A_2`` over ``A_0``.

    With ``x = u v`` the BP-decomposition and ``u = u' u_{IJ}``, the pieces are
    taken in the orientation where arrangements grow with the element:
    ``A_u`` is the arrangement of ``u^-1``, which splits as that of ``u'^-1``
    (``A_1``) plus ``u'`` applied to the roots of ``u_{IJ}`` (``A_0``), and
    ``A_2`` is the rest of the arrangement of ``x^-1``.
    """
    bp = find_bp_decomposition(w)
    rs = w.rs
    x, u = bp.target, bp.u
    IJ = support(bp.v) & bp.J
    u_IJ = longest_element(rs, rs.sorted_labels(IJ))
    u_prime = multiply(u, inverse(u_IJ))
    A_x = inversion_arrangement(inverse(x))
    A_u = inversion_arrangement(inverse(u))
    A1 = inversion_arrangement(inverse(u_prime))
    A0 = A_u - A1
    A2 = A_x - A_u
    expected_A0 = {u_prime.perm[k] for k in inversion_indices(u_IJ)}
    if set(A0.normals) != expected_A0:
        return ChamberReduction(w, A0, A1, A2, 0, False)
    ok = True
    count = 0
    A02 = A0 | A2
    for m in _region_masks(A_u):
        left = induced_subposet(A_x, A_u, m)
        right = induced_subposet(A02, A0, m & A0.mask)
        count += 1
        if find_isomorphism(left, right) is None:
            ok = False
            break
    return ChamberReduction(w, A0, A1, A2, count, ok)
