"""Closed-form generator families for products of two-spheres.

For a product of spheres with radii r_1..r_m, a fixed point is a sign
pattern, identified with the subset J of factors carrying the plus sign;
its moment value is sum(r_j, j in J) - sum(r_j, j not in J).  Three explicit
families describe the kernel without any transversal enumeration:

    (i)   (x_j - r_j*t)(x_j + r_j*t)           one per factor
    (ii)  P_J = prod_{j in J} (x_j - r_j*t)    one per long subset J
    (iii) Q_J = prod_{j in J} (x_j + r_j*t)    one per long subset J

At threshold zero, (i) + (ii) generate the plus-side kernel and (i) + (iii)
the minus side.  At a nonzero threshold the members still lie in the kernel
but need not generate it: the minimal coverings can be smaller than any
long subset (the zero-threshold argument that a covering assembled from a
long subset is forced uses the symmetry mu(complement) = -mu).  Dividing
each variable by its radius (x_j = r_j * u_j) and dropping the scalar
factors this creates gives the same families over unit spheres; in that
normalization each Q can further be rewritten as a sum over its short
subsets with powers of 2t absorbing the dropped factors.

The abelian polygon space — the first m-1 spheres reduced at level r_m —
gets two presentations: the at-level families (the three families above for
the (m-1)-sphere system at threshold r_m, in u variables) and the refined
families indexed by the larger subset collections obtained by adjoining the
last factor.  The refined families present the full kernel ideal at the
level; the at-level families embed in it but, per the caveat above, may
miss its low-degree part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .moment import MomentSystem, build_system, classify, preset_sphere
from .poly import LinearForm, Poly, RationalLike, product_of_linear_forms

Subset = tuple[int, ...]
LabeledFamily = tuple[tuple[Subset, Poly], ...]


@dataclass(frozen=True)
class SubsetFamily:
    """A collection of subsets of {1..ambient}."""

    ambient: int
    members: frozenset[frozenset[int]]

    def sorted_members(self) -> list[Subset]:
        return sorted((tuple(sorted(s)) for s in self.members), key=lambda s: (len(s), s))

    def __contains__(self, subset: Iterable[int]) -> bool:
        return frozenset(subset) in self.members

    def issubset(self, other: "SubsetFamily") -> bool:
        return self.members <= other.members


@dataclass(frozen=True)
class SphereFamilies:
    """The three labeled families for a sphere product at a threshold."""

    radii: tuple[Fraction, ...]
    threshold: Fraction
    squares: tuple[Poly, ...]
    p_family: LabeledFamily
    q_family: LabeledFamily

    def all_plus(self) -> tuple[Poly, ...]:
        """Families (i) and (ii): generators of the plus-side kernel at threshold 0."""
        return self.squares + tuple(p for _, p in self.p_family)

    def all_minus(self) -> tuple[Poly, ...]:
        """Families (i) and (iii): generators of the minus-side kernel at threshold 0."""
        return self.squares + tuple(q for _, q in self.q_family)


def _coerce_radii(radii: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    rs = tuple(Fraction(r) for r in radii)
    if not rs:
        raise ValueError("need at least one radius")
    if any(r <= 0 for r in rs):
        raise ValueError(f"radii must be positive: {rs}")
    return rs


def sphere_system(radii: Sequence[RationalLike], threshold: RationalLike = 0) -> MomentSystem:
    """The validated moment system of a sphere product."""
    rs = _coerce_radii(radii)
    factors = [preset_sphere(r, name=f"S{i}({r})") for i, r in enumerate(rs, start=1)]
    return build_system(factors, threshold)


def sphere_subsets(
    radii: Sequence[RationalLike], threshold: RationalLike = 0
) -> tuple[SubsetFamily, SubsetFamily]:
    """Partition the subsets of {1..m} into long and short at the threshold.

    Raises SingularValueError when some signed radius sum equals the
    threshold.
    """
    sys = sphere_system(radii, threshold)
    cls = classify(sys)

    def to_subset(J) -> frozenset[int]:
        # sphere values are stored (+r, -r), so value index 1 means plus sign
        return frozenset(i for i, j in enumerate(J, start=1) if j == 1)

    m = len(sys.factors)
    long = SubsetFamily(m, frozenset(map(to_subset, cls.long)))
    short = SubsetFamily(m, frozenset(map(to_subset, cls.short)))
    return long, short


def _signed_product(subset: Subset, radii: Sequence[Fraction], sign: int, nx: int) -> Poly:
    forms = [LinearForm(j, sign * radii[j - 1]) for j in subset]
    return product_of_linear_forms(forms, nx)


def sphere_families(
    radii: Sequence[RationalLike], threshold: RationalLike = 0
) -> SphereFamilies:
    """Families (i), (ii), (iii) for the sphere product at the threshold."""
    rs = _coerce_radii(radii)
    m = len(rs)
    long, _ = sphere_subsets(rs, threshold)
    squares = tuple(
        product_of_linear_forms(
            [LinearForm(j, rs[j - 1]), LinearForm(j, -rs[j - 1])], m
        )
        for j in range(1, m + 1)
    )
    p_family = tuple(
        (L, _signed_product(L, rs, +1, m)) for L in long.sorted_members()
    )
    q_family = tuple(
        (L, _signed_product(L, rs, -1, m)) for L in long.sorted_members()
    )
    return SphereFamilies(rs, Fraction(threshold), squares, p_family, q_family)


def scale_variables(p: Poly, scales: Sequence[RationalLike]) -> Poly:
    """Substitute x_j -> scales[j-1] * x_j (an invertible rescaling)."""
    ss = [Fraction(s) for s in scales]
    if len(ss) != p.nx:
        raise ValueError(f"expected {p.nx} scale factors, got {len(ss)}")
    if any(not s for s in ss):
        raise ValueError("scale factors must be nonzero")
    out = {}
    for e, c in p.terms.items():
        value = c
        for i, s in enumerate(ss, start=1):
            if e[i]:
                value *= s ** e[i]
        out[e] = value
    return Poly._make(p.nx, out)


def _unit_forms(subset: Subset, sign: int, nx: int) -> Poly:
    return product_of_linear_forms([LinearForm(j, sign) for j in subset], nx)


def _short_sum(subset: Subset, shorts: SubsetFamily, nx: int) -> Poly:
    """Sum over short subsets S of ``subset`` of prod_{j in S}(u_j - t) * (2t)^|subset - S|."""
    two_t = Poly.t(nx) * 2
    total = Poly.zero(nx)
    items = list(subset)
    for size in range(len(items) + 1):
        for S in combinations(items, size):
            if S not in shorts:
                continue
            total = total + _unit_forms(S, +1, nx) * two_t ** (len(items) - size)
    return total


@dataclass(frozen=True)
class NormalizedFamilies:
    """The sphere families after rescaling every variable to unit radius.

    Squares become (u_j - t)(u_j + t); each P becomes the monic product of
    (u_j - t); each Q is rewritten as its short-subset sum, scalars dropped.
    """

    radii: tuple[Fraction, ...]
    threshold: Fraction
    squares: tuple[Poly, ...]
    p_family: LabeledFamily
    q_family: LabeledFamily


def normalize_radii(families: SphereFamilies) -> NormalizedFamilies:
    """Rewrite the families over unit spheres via x_j = r_j * u_j.

    Rescaling multiplies each family member by an overall scalar, which is
    dropped; the generated ideals are unchanged.  The Q family keeps only
    the terms indexed by short subsets (the long-indexed terms are multiples
    of P family members and are dropped with the ideal intact).
    """
    m = len(families.radii)
    _, shorts = sphere_subsets(families.radii, families.threshold)
    squares = tuple(
        product_of_linear_forms([LinearForm(j, 1), LinearForm(j, -1)], m)
        for j in range(1, m + 1)
    )
    p_family = tuple(
        (L, _unit_forms(L, +1, m)) for L, _ in families.p_family
    )
    q_family = tuple(
        (L, _short_sum(L, shorts, m)) for L, _ in families.q_family
    )
    return NormalizedFamilies(
        families.radii, families.threshold, squares, p_family, q_family
    )


@dataclass(frozen=True)
class PolygonFamilies:
    """Generator families for the abelian polygon space kernel at level r_m.

    All polynomials live in u variables for the first m-1 factors.  The
    at-level families are indexed by ``long_at_level``; the refined P family
    is indexed by the larger ``long_extended`` and the refined Q family by
    ``long_restricted`` with its sum taken over ``short_extended`` subsets.
    ``bridge`` (optional) is the intermediate Q rewriting indexed like the
    at-level family but summed over short-at-level subsets.

    The refined families generate the full kernel ideal at the level.  The
    at-level members all lie in that ideal, but when ``long_at_level`` is a
    proper subset of ``long_extended`` they can fail to generate it (the
    kernel may contain products over subsets that are only long after
    adjoining the last factor); compare the two ideals before relying on
    the smaller family.
    """

    radii: tuple[Fraction, ...]
    level: Fraction
    long_at_level: SubsetFamily
    short_at_level: SubsetFamily
    long_restricted: SubsetFamily
    long_extended: SubsetFamily
    short_extended: SubsetFamily
    squares: tuple[Poly, ...]
    p_at_level: LabeledFamily
    q_at_level: LabeledFamily
    p_extended: LabeledFamily
    q_refined: LabeledFamily
    bridge: LabeledFamily | None

    def at_level_generators(self) -> tuple[Poly, ...]:
        return self.squares + tuple(p for _, p in self.p_at_level) + tuple(
            q for _, q in self.q_at_level
        )

    def refined_generators(self) -> tuple[Poly, ...]:
        return self.squares + tuple(p for _, p in self.p_extended) + tuple(
            q for _, q in self.q_refined
        )


def abelian_polygon_families(
    radii: Sequence[RationalLike], include_bridge: bool = False
) -> PolygonFamilies:
    """Both family presentations for the first m-1 spheres reduced at level r_m.

    Requires r_m to be a regular level for the (m-1)-sphere system (raises
    SingularValueError otherwise).  The subset collections satisfy
    long_at_level <= long_restricted <= long_extended.
    """
    rs = _coerce_radii(radii)
    if len(rs) < 2:
        raise ValueError("polygon families need at least two radii")
    level = rs[-1]
    base = rs[:-1]
    n = len(base)
    long_at, short_at = sphere_subsets(base, level)

    # subsets of the base whose extension by the last factor is long/short at 0
    full_long, full_short = sphere_subsets(rs, 0)
    m = len(rs)
    long_restricted = SubsetFamily(
        n, frozenset(L for L in full_long.members if m not in L)
    )
    long_extended = SubsetFamily(
        n, frozenset(L - {m} for L in full_long.members if m in L)
    )
    short_extended = SubsetFamily(
        n, frozenset(S - {m} for S in full_short.members if m in S)
    )
    assert long_at.members <= long_restricted.members <= long_extended.members

    squares = tuple(
        product_of_linear_forms([LinearForm(j, 1), LinearForm(j, -1)], n)
        for j in range(1, n + 1)
    )
    p_at_level = tuple((L, _unit_forms(L, +1, n)) for L in long_at.sorted_members())
    q_at_level = tuple((L, _unit_forms(L, -1, n)) for L in long_at.sorted_members())
    p_extended = tuple(
        (L, _unit_forms(L, +1, n)) for L in long_extended.sorted_members()
    )
    q_refined = tuple(
        (L, _short_sum(L, short_extended, n))
        for L in long_restricted.sorted_members()
    )
    bridge = None
    if include_bridge:
        bridge = tuple(
            (L, _short_sum(L, short_at, n)) for L in long_at.sorted_members()
        )
    return PolygonFamilies(
        radii=rs,
        level=level,
        long_at_level=long_at,
        short_at_level=short_at,
        long_restricted=long_restricted,
        long_extended=long_extended,
        short_extended=short_extended,
        squares=squares,
        p_at_level=p_at_level,
        q_at_level=q_at_level,
        p_extended=p_extended,
        q_refined=q_refined,
        bridge=bridge,
    )


def render_label(prefix: str, subset: Subset) -> str:
    """Family member label, e.g. P{1,3}."""
    return prefix + "{" + ",".join(str(j) for j in subset) + "}"
