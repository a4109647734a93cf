"""Sparse exact polynomial arithmetic in QQ[t, x1, ..., xm].

A polynomial carries an explicit number of x-variables (``nx``) and a term
map from exponent tuples to nonzero rational coefficients:

    exponent tuple e, len(e) == nx + 1
    e[0] is the power of t, e[i] the power of x_i  (1 <= i <= nx)

Coefficients are ``fractions.Fraction``, so every operation is exact; the
zero polynomial stores no terms.  The algebraic degree of a term is the sum
of its exponents (t and each x_i count 1); the cohomological degree used in
reports is twice that.

Values are immutable after construction and safe to share between threads.
The canonical text rendering sorts terms by the default graded reverse
lexicographic order with precedence x1 > x2 > ... > xm > t, e.g.
``x1^2 - 4*t^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int]
Exponents = tuple[int, ...]


class NonVanishingPointError(ValueError):
    """A decomposition required p(point) = 0 but the evaluation was nonzero."""

    def __init__(self, evaluation: "Poly"):
        super().__init__(
            f"polynomial does not vanish at the given point: value is {evaluation}"
        )
        self.evaluation = evaluation


@dataclass(frozen=True)
class GradedReverseLex:
    """Graded reverse lexicographic order, precedence x1 > ... > xm > t."""

    def key(self, exps: Exponents):
        prec = exps[1:] + exps[:1]
        return (sum(exps), tuple(-e for e in reversed(prec)))


@dataclass(frozen=True)
class GradedLex:
    """Graded lexicographic order, precedence x1 > ... > xm > t."""

    def key(self, exps: Exponents):
        return (sum(exps), exps[1:] + exps[:1])


@dataclass(frozen=True)
class EliminationBlock:
    """Block order eliminating the last ``block_size`` exponent slots.

    Any monomial involving a block variable sorts above every monomial free
    of block variables; ties break by graded reverse lex on each part.  The
    block slots sit after the x-slots (auxiliary variables are appended at
    the end of the exponent tuple).
    """

    block_size: int

    def key(self, exps: Exponents):
        cut = len(exps) - self.block_size
        base, block = exps[:cut], exps[cut:]
        prec = base[1:] + base[:1]
        return (
            (sum(block), tuple(-e for e in reversed(block))),
            (sum(base), tuple(-e for e in reversed(prec))),
        )


MonomialOrder = Union[GradedReverseLex, GradedLex, EliminationBlock]

GREVLEX = GradedReverseLex()
GRLEX = GradedLex()


class Poly:
    """An element of QQ[t, x1, ..., x_nx] in sparse normalized form."""

    __slots__ = ("nx", "terms")

    def __init__(self, nx: int, terms: Mapping[Exponents, RationalLike] | None = None):
        if nx < 0:
            raise ValueError("nx must be non-negative")
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                e = tuple(int(k) for k in exps)
                if len(e) != nx + 1 or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent tuple {exps!r} for nx={nx}")
                c = Fraction(coeff)
                if c:
                    clean[e] = c
        self.nx = nx
        self.terms = clean

    @classmethod
    def _make(cls, nx: int, terms: dict[Exponents, Fraction]) -> "Poly":
        # trusted fast path: terms already normalized
        p = cls.__new__(cls)
        p.nx = nx
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nx: int) -> "Poly":
        return cls._make(nx, {})

    @classmethod
    def const(cls, nx: int, value: RationalLike) -> "Poly":
        c = Fraction(value)
        if not c:
            return cls.zero(nx)
        return cls._make(nx, {(0,) * (nx + 1): c})

    @classmethod
    def one(cls, nx: int) -> "Poly":
        return cls.const(nx, 1)

    @classmethod
    def t(cls, nx: int) -> "Poly":
        return cls._make(nx, {(1,) + (0,) * nx: Fraction(1)})

    @classmethod
    def x(cls, nx: int, index: int) -> "Poly":
        """The variable x_index, 1-based."""
        if not 1 <= index <= nx:
            raise ValueError(f"variable index {index} out of range 1..{nx}")
        e = [0] * (nx + 1)
        e[index] = 1
        return cls._make(nx, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, nx: int, exps: Exponents, coeff: RationalLike = 1) -> "Poly":
        return cls(nx, {tuple(exps): coeff})

    # -- ring structure -------------------------------------------------

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.nx != self.nx:
                raise ValueError(
                    f"variable count mismatch: {self.nx} x-variables vs {other.nx}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nx, other)
        return None

    def __add__(self, other) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in q.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                del out[e]
        return Poly._make(self.nx, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._make(self.nx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly.zero(self.nx)
            return Poly._make(self.nx, {e: c * v for e, v in self.terms.items()})
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in q.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._make(self.nx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.one(self.nx)
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nx, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nx == other.nx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nx, frozenset(self.terms.items())))

    # -- queries ---------------------------------------------------------

    def degree(self) -> int:
        """Total algebraic degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coeff(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def leading_exponents(self, order: MonomialOrder = GREVLEX) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self.terms[self.leading_exponents(order)]

    # -- evaluation ------------------------------------------------------

    def evaluate(self, point: Sequence[RationalLike]) -> "Poly":
        """Substitute x_i -> point[i-1] * t; the result involves only t.

        The polynomial vanishes at the fixed point described by ``point``
        exactly when the result is zero.
        """
        pt = [Fraction(v) for v in point]
        if len(pt) != self.nx:
            raise ValueError(f"point has length {len(pt)}, expected {self.nx}")
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            value = c
            for i, a in enumerate(pt, start=1):
                if e[i]:
                    value *= a ** e[i]
            if not value:
                continue
            key = (sum(e),) + (0,) * self.nx
            s = out.get(key)
            s = value if s is None else s + value
            if s:
                out[key] = s
            else:
                del out[key]
        return Poly._make(self.nx, out)

    # -- rendering ---------------------------------------------------------

    def render(self, xprefix: str = "x") -> str:
        """Canonical text form: terms in descending graded reverse lex order."""
        if not self.terms:
            return "0"
        pieces: list[tuple[str, str]] = []
        for e in sorted(self.terms, key=GREVLEX.key, reverse=True):
            c = self.terms[e]
            factors = []
            for i in range(1, self.nx + 1):
                if e[i] == 1:
                    factors.append(f"{xprefix}{i}")
                elif e[i] > 1:
                    factors.append(f"{xprefix}{i}^{e[i]}")
            if e[0] == 1:
                factors.append("t")
            elif e[0] > 1:
                factors.append(f"t^{e[0]}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return self.render()


def variables(nx: int) -> tuple[Poly, ...]:
    """Return (t, x1, ..., x_nx) as polynomials, handy for building expressions."""
    return (Poly.t(nx),) + tuple(Poly.x(nx, i) for i in range(1, nx + 1))


@dataclass(frozen=True)
class LinearForm:
    """The degree-one form x_{var_index} - value * t."""

    var_index: int
    value: Fraction

    def __post_init__(self):
        if self.var_index < 1:
            raise ValueError("var_index is 1-based and must be positive")
        object.__setattr__(self, "value", Fraction(self.value))

    def to_poly(self, nx: int) -> Poly:
        if self.var_index > nx:
            raise ValueError(f"var_index {self.var_index} out of range 1..{nx}")
        terms: dict[Exponents, Fraction] = {}
        e = [0] * (nx + 1)
        e[self.var_index] = 1
        terms[tuple(e)] = Fraction(1)
        if self.value:
            terms[(1,) + (0,) * nx] = -self.value
        return Poly._make(nx, terms)


def product_of_linear_forms(forms: Iterable[LinearForm], nx: int) -> Poly:
    """Expand the product of the given linear forms; the empty product is 1.

    The result is homogeneous of algebraic degree equal to the number of
    factors.
    """
    result = Poly.one(nx)
    for form in forms:
        result = result * form.to_poly(nx)
    return result


def _divide_by_form(p: Poly, index: int, value: Fraction) -> tuple[Poly, Poly]:
    """Synthetic division of p by x_index - value*t.

    Returns (quotient, remainder); the remainder is p with x_index replaced
    by value*t and is free of x_index.
    """
    nx = p.nx
    # split into coefficient polynomials by the power of x_index
    layers: dict[int, dict[Exponents, Fraction]] = {}
    for e, c in p.terms.items():
        k = e[index]
        stripped = e[:index] + (0,) + e[index + 1 :]
        layers.setdefault(k, {})[stripped] = c
    top = max(layers, default=0)
    if top == 0:
        return Poly.zero(nx), p

    def shift_t(d: dict[Exponents, Fraction]) -> dict[Exponents, Fraction]:
        # multiply by value * t
        if not value:
            return {}
        return {(e[0] + 1,) + e[1:]: value * c for e, c in d.items()}

    def add_into(acc: dict[Exponents, Fraction], d: dict[Exponents, Fraction]) -> None:
        for e, c in d.items():
            s = acc.get(e)
            s = c if s is None else s + c
            if s:
                acc[e] = s
            else:
                del acc[e]

    quotient: dict[Exponents, Fraction] = {}
    carry: dict[Exponents, Fraction] = {}
    for k in range(top, 0, -1):
        b = dict(layers.get(k, {}))
        add_into(b, carry)
        for e, c in b.items():
            q_exps = e[:index] + (k - 1,) + e[index + 1 :]
            quotient[q_exps] = c
        carry = shift_t(b)
    remainder = dict(layers.get(0, {}))
    add_into(remainder, carry)
    return Poly._make(nx, quotient), Poly._make(nx, remainder)


def linear_decompose(p: Poly, point: Sequence[RationalLike]) -> list[Poly]:
    """Write p vanishing at ``point`` as sum_i (x_i - point[i]*t) * Q_i.

    Divides by x_1 first, then recurses on the remainder in the later
    variables, which fixes a canonical decomposition.  Raises
    NonVanishingPointError (carrying the nonzero value) if p does not vanish
    at the point.
    """
    pt = [Fraction(v) for v in point]
    if len(pt) != p.nx:
        raise ValueError(f"point has length {len(pt)}, expected {p.nx}")
    value = p.evaluate(pt)
    if value:
        raise NonVanishingPointError(value)
    quotients: list[Poly] = []
    remainder = p
    for i, a in enumerate(pt, start=1):
        q, remainder = _divide_by_form(remainder, i, a)
        quotients.append(q)
    # remainder is p evaluated at the point, already checked to vanish
    assert not remainder
    return quotients
