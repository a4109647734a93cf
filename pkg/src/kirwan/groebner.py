"""Groebner-basis machinery over QQ.

Supplies normal forms, ideal membership, ideal intersection, ideal equality,
graded Hilbert functions, and vanishing ideals of finite point sets — the
ideal-theoretic operations the kernel construction is certified against.

Buchberger's algorithm uses the normal selection strategy (smallest lcm of
leading monomials first) together with the coprime-leading-term criterion.
Returned bases are reduced: monic, no term of any element divisible by the
leading term of another, sorted with the largest leading monomial first.
For a fixed generator list and order the output is canonical, so bases are
cached per order on each ideal (write-once; recomputation would be
identical).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .poly import (
    EliminationBlock,
    Exponents,
    GradedLex,
    GradedReverseLex,
    GREVLEX,
    GRLEX,
    LinearForm,
    MonomialOrder,
    Poly,
    RationalLike,
)

__all__ = [
    "Ideal",
    "NonHomogeneousError",
    "groebner_basis",
    "normal_form",
    "is_groebner_basis",
    "point_ideal",
    "vanishing_ideal",
    "GradedReverseLex",
    "GradedLex",
    "EliminationBlock",
    "GREVLEX",
    "GRLEX",
]


class NonHomogeneousError(ValueError):
    """A graded computation was asked of an ideal with a non-homogeneous generator."""

    def __init__(self, generator: Poly):
        super().__init__(f"generator is not homogeneous: {generator}")
        self.generator = generator


# ---------------------------------------------------------------------------
# raw-dict internals: a polynomial here is a dict {exponent tuple: Fraction}

_Basis = list[tuple[Exponents, Fraction, dict[Exponents, Fraction]]]


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _quotient(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _nf_dict(p: dict[Exponents, Fraction], basis: _Basis, keyf) -> dict[Exponents, Fraction]:
    """Complete remainder of p on division by the basis (all terms reduced)."""
    work = dict(p)
    remainder: dict[Exponents, Fraction] = {}
    while work:
        lead = max(work, key=keyf)
        coeff = work.pop(lead)
        for lm, lc, g in basis:
            if _divides(lm, lead):
                shift = _quotient(lead, lm)
                factor = coeff / lc
                for e, ce in g.items():
                    if e == lm:
                        continue
                    ne = tuple(a + b for a, b in zip(e, shift))
                    s = work.get(ne)
                    s = -factor * ce if s is None else s - factor * ce
                    if s:
                        work[ne] = s
                    else:
                        del work[ne]
                break
        else:
            remainder[lead] = coeff
    return remainder


def _monic_dict(d: dict[Exponents, Fraction], keyf) -> dict[Exponents, Fraction]:
    lc = d[max(d, key=keyf)]
    if lc == 1:
        return d
    return {e: c / lc for e, c in d.items()}


def _spoly_dict(
    lm_i: Exponents,
    lc_i: Fraction,
    gi: dict[Exponents, Fraction],
    lm_j: Exponents,
    lc_j: Fraction,
    gj: dict[Exponents, Fraction],
) -> dict[Exponents, Fraction]:
    lcm = _lcm(lm_i, lm_j)
    si = _quotient(lcm, lm_i)
    sj = _quotient(lcm, lm_j)
    out: dict[Exponents, Fraction] = {}
    for e, c in gi.items():
        ne = tuple(a + b for a, b in zip(e, si))
        out[ne] = c / lc_i
    for e, c in gj.items():
        ne = tuple(a + b for a, b in zip(e, sj))
        s = out.get(ne)
        s = -c / lc_j if s is None else s - c / lc_j
        if s:
            out[ne] = s
        else:
            del out[ne]
    return out


def _reduce_basis(basis: _Basis, keyf) -> list[dict[Exponents, Fraction]]:
    """Minimalize and interreduce a Groebner basis; monic, sorted descending."""
    kept: _Basis = []
    for lm, lc, g in sorted(basis, key=lambda item: keyf(item[0])):
        if any(_divides(klm, lm) for klm, _, _ in kept):
            continue
        kept.append((lm, lc, g))
    reduced = []
    for idx, (lm, lc, g) in enumerate(kept):
        others = kept[:idx] + kept[idx + 1 :]
        r = _nf_dict(g, others, keyf)
        reduced.append((lm, _monic_dict(r, keyf)))
    reduced.sort(key=lambda item: keyf(item[0]), reverse=True)
    return [g for _, g in reduced]


def _buchberger(seeds: Iterable[dict[Exponents, Fraction]], keyf) -> list[dict[Exponents, Fraction]]:
    basis: _Basis = []
    pairs: list[tuple[object, int, int]] = []

    def push(d: dict[Exponents, Fraction]) -> None:
        d = _monic_dict(d, keyf)
        lm = max(d, key=keyf)
        k = len(basis)
        basis.append((lm, d[lm], d))
        for i in range(k):
            heapq.heappush(pairs, (keyf(_lcm(basis[i][0], lm)), i, k))

    for seed in seeds:
        if not seed:
            continue
        r = _nf_dict(seed, basis, keyf)
        if r:
            push(r)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        lm_i, lc_i, gi = basis[i]
        lm_j, lc_j, gj = basis[j]
        lcm = _lcm(lm_i, lm_j)
        if lcm == tuple(a + b for a, b in zip(lm_i, lm_j)):
            continue  # coprime leading terms: S-polynomial reduces to zero
        s = _spoly_dict(lm_i, lc_i, gi, lm_j, lc_j, gj)
        r = _nf_dict(s, basis, keyf)
        if r:
            push(r)

    return _reduce_basis(basis, keyf)


# ---------------------------------------------------------------------------
# public surface


def groebner_basis(polys: Iterable[Poly], order: MonomialOrder = GREVLEX) -> tuple[Poly, ...]:
    """Reduced Groebner basis of the ideal generated by ``polys``."""
    gens = [p for p in polys if p]
    if not gens:
        return ()
    nx = gens[0].nx
    for p in gens:
        if p.nx != nx:
            raise ValueError("generators live in different rings")
    out = _buchberger([dict(p.terms) for p in gens], order.key)
    return tuple(Poly._make(nx, d) for d in out)


def normal_form(p: Poly, basis: Sequence[Poly], order: MonomialOrder = GREVLEX) -> Poly:
    """Complete division remainder of p modulo a (Groebner) basis."""
    keyf = order.key
    prepared: _Basis = []
    for g in basis:
        if not g:
            continue
        if g.nx != p.nx:
            raise ValueError("polynomial and basis live in different rings")
        lm = max(g.terms, key=keyf)
        prepared.append((lm, g.terms[lm], g.terms))
    return Poly._make(p.nx, _nf_dict(p.terms, prepared, keyf))


def is_groebner_basis(polys: Sequence[Poly], order: MonomialOrder = GREVLEX) -> bool:
    """Check Buchberger's criterion: all S-polynomials reduce to zero."""
    keyf = order.key
    entries = [(max(p.terms, key=keyf), p) for p in polys if p]
    basis: _Basis = [(lm, p.terms[lm], p.terms) for lm, p in entries]
    for i in range(len(basis)):
        for j in range(i):
            lm_i, lc_i, gi = basis[i]
            lm_j, lc_j, gj = basis[j]
            s = _spoly_dict(lm_i, lc_i, gi, lm_j, lc_j, gj)
            if _nf_dict(s, basis, keyf):
                return False
    return True


class Ideal:
    """A finitely generated ideal of QQ[t, x1, ..., x_nx].

    Holds its generator list and lazily computed reduced Groebner bases, one
    per monomial order.  Zero generators are dropped at construction; an
    empty generator list is the zero ideal.
    """

    __slots__ = ("nx", "generators", "_bases")

    def __init__(self, nx: int, generators: Iterable[Poly] = ()):
        gens = tuple(g for g in generators if g)
        for g in gens:
            if g.nx != nx:
                raise ValueError("generator lives in a different ring")
        self.nx = nx
        self.generators = gens
        self._bases: dict[MonomialOrder, tuple[Poly, ...]] = {}

    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> tuple[Poly, ...]:
        cached = self._bases.get(order)
        if cached is None:
            cached = groebner_basis(self.generators, order)
            self._bases[order] = cached
        return cached

    def normal_form(self, p: Poly, order: MonomialOrder = GREVLEX) -> Poly:
        return normal_form(p, self.groebner_basis(order), order)

    def contains(self, p: Poly) -> bool:
        return not self.normal_form(p)

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def is_unit(self) -> bool:
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0] == Poly.one(self.nx)

    def equals(self, other: "Ideal") -> bool:
        """Ideal equality: every generator of each lies in the other."""
        if self.nx != other.nx:
            raise ValueError("ideals live in different rings")
        return all(other.contains(g) for g in self.generators) and all(
            self.contains(h) for h in other.generators
        )

    def intersect(self, other: "Ideal") -> "Ideal":
        """Exact intersection via a single auxiliary selector variable.

        Computes (w*I + (1-w)*J) and eliminates w with a block order; the
        surviving basis elements generate the intersection and already form
        its reduced default-order basis.
        """
        if self.nx != other.nx:
            raise ValueError("ideals live in different rings")
        nx = self.nx
        if not self.generators or not other.generators:
            return Ideal(nx, ())
        ext = nx + 1

        def lift(p: Poly) -> Poly:
            return Poly._make(ext, {e + (0,): c for e, c in p.terms.items()})

        w = Poly.monomial(ext, (0,) * (nx + 1) + (1,))
        one_minus_w = Poly.one(ext) - w
        gens = [w * lift(g) for g in self.generators]
        gens += [one_minus_w * lift(h) for h in other.generators]
        basis = groebner_basis(gens, EliminationBlock(1))
        projected = tuple(
            Poly._make(nx, {e[:-1]: c for e, c in g.terms.items()})
            for g in basis
            if all(e[-1] == 0 for e in g.terms)
        )
        result = Ideal(nx, projected)
        # the block order restricts to the default order on the base ring,
        # so the projection is already the reduced default-order basis
        result._bases[GREVLEX] = projected
        return result

    def hilbert_function(
        self, max_degree: int, order: MonomialOrder = GREVLEX
    ) -> list[int]:
        """Dimensions of the graded pieces of the quotient ring, degrees 0..max_degree.

        Counts standard monomials (those outside the leading-term ideal of a
        Groebner basis) degree by degree; requires homogeneous generators.
        Entry k is reported downstream as the Betti number b_{2k}.
        """
        for g in self.generators:
            if not g.is_homogeneous():
                raise NonHomogeneousError(g)
        leads = [g.leading_exponents(order) for g in self.groebner_basis(order)]
        slots = self.nx + 1
        counts = []
        for k in range(max_degree + 1):
            n = 0
            for e in _exponents_of_degree(slots, k):
                if not any(_divides(lead, e) for lead in leads):
                    n += 1
            counts.append(n)
        return counts

    def render(self) -> str:
        return "[" + ", ".join(g.render() for g in self.generators) + "]"

    def __repr__(self) -> str:
        return f"Ideal({self.render()})"


def _exponents_of_degree(slots: int, total: int) -> Iterator[Exponents]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _exponents_of_degree(slots - 1, total - first):
            yield (first,) + rest


def point_ideal(point: Sequence[RationalLike]) -> Ideal:
    """Ideal of polynomials vanishing under x_i -> point[i]*t: (x_1 - p_1*t, ..., x_m - p_m*t)."""
    pt = [Fraction(v) for v in point]
    nx = len(pt)
    gens = [LinearForm(i, a).to_poly(nx) for i, a in enumerate(pt, start=1)]
    return Ideal(nx, gens)


def vanishing_ideal(points: Sequence[Sequence[RationalLike]]) -> Ideal:
    """Intersection of the point ideals of the given fixed-point restrictions.

    This is the brute-force description of a kernel side; points are
    intersected pairwise in the given order.
    """
    if not points:
        raise ValueError("vanishing_ideal needs at least one point")
    result = point_ideal(points[0])
    for point in points[1:]:
        result = result.intersect(point_ideal(point))
    return result
