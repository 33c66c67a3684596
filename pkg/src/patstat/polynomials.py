"""Exact integer-coefficient polynomial arithmetic in q, in (q, t), and
truncated power series in x over (q, t)-polynomial coefficients.

All values are immutable and all arithmetic is exact.  Coefficients are
checked against the signed 64-bit range so a port to fixed-width integers
behaves identically; exceeding the bound raises OverflowError instead of
ever wrapping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

_COEFF_BOUND = 1 << 63


def _checked(c: int) -> int:
    if not -_COEFF_BOUND < c < _COEFF_BOUND:
        raise OverflowError(f"coefficient {c} exceeds the signed 64-bit range")
    return c


def _term_str(coeff: int, vars_part: str) -> str:
    if not vars_part:
        return str(coeff)
    if coeff == 1:
        return vars_part
    if coeff == -1:
        return f"-{vars_part}"
    return f"{coeff}*{vars_part}"


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


# ---------------------------------------------------------------------------
# univariate polynomials in q


@dataclass(frozen=True, slots=True)
class QPoly:
    """Dense integer polynomial in q; coeffs[i] is the coefficient of q^i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(_checked(int(c)) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @staticmethod
    def zero() -> "QPoly":
        return QPoly(())

    @staticmethod
    def one() -> "QPoly":
        return QPoly((1,))

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "QPoly":
        if exp < 0:
            raise ValueError("exponent must be nonnegative")
        return QPoly((0,) * exp + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, exp: int) -> int:
        return self.coeffs[exp] if 0 <= exp < len(self.coeffs) else 0

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = _checked(out[i] + c)
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-1) * other

    def __neg__(self) -> "QPoly":
        return (-1) * self

    def __mul__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = _checked(out[i + j] + ca * cb)
        return QPoly(out)

    def __rmul__(self, scalar: int) -> "QPoly":
        return QPoly(tuple(_checked(scalar * c) for c in self.coeffs))

    def __pow__(self, exponent: int) -> "QPoly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        out = QPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def reverse(self, n: int) -> "QPoly":
        """q^C(n,2) * p(1/q): coefficient of q^i moves to q^(C(n,2)-i)."""
        top = math.comb(n, 2)
        if self.degree > top:
            raise ValueError(f"degree {self.degree} exceeds C({n},2) = {top}")
        out = [0] * (top + 1)
        for i, c in enumerate(self.coeffs):
            out[top - i] = c
        return QPoly(out)

    def eval_at_q1(self) -> int:
        return _checked(sum(self.coeffs))

    def eval_at(self, q: Union[int, Fraction]) -> Union[int, Fraction]:
        out: Union[int, Fraction] = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            var = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            terms.append(_term_str(c, var))
        return _join_terms(terms)


def reverse_coefficients(p: QPoly, n: int) -> QPoly:
    """Reverse p's coefficients within degree C(n,2)."""
    return p.reverse(n)


def q_int(n: int) -> QPoly:
    """1 + q + ... + q^(n-1), the q-analogue of the integer n."""
    if n < 0:
        raise ValueError("q-integer needs n >= 0")
    return QPoly((1,) * n)


# ---------------------------------------------------------------------------
# bivariate polynomials in q and t


@dataclass(frozen=True, slots=True)
class QTPoly:
    """Sparse integer polynomial in q and t.

    Stored as (q_exp, t_exp, coeff) triples with no zero coefficients,
    sorted lexicographically by (t_exp, q_exp).
    """

    terms: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        acc: dict[tuple[int, int], int] = {}
        for qe, te, c in self.terms:
            if qe < 0 or te < 0:
                raise ValueError("exponents must be nonnegative")
            key = (int(qe), int(te))
            acc[key] = acc.get(key, 0) + int(c)
        cleaned = tuple(
            (qe, te, _checked(c))
            for (qe, te), c in sorted(acc.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            if c != 0
        )
        object.__setattr__(self, "terms", cleaned)

    @staticmethod
    def zero() -> "QTPoly":
        return QTPoly(())

    @staticmethod
    def one() -> "QTPoly":
        return QTPoly(((0, 0, 1),))

    @staticmethod
    def monomial(q_exp: int, t_exp: int, coeff: int = 1) -> "QTPoly":
        return QTPoly(((q_exp, t_exp, coeff),))

    @staticmethod
    def from_counts(counts: Mapping[tuple[int, int], int]) -> "QTPoly":
        """Build from a {(q_exp, t_exp): coeff} mapping."""
        return QTPoly(tuple((qe, te, c) for (qe, te), c in counts.items()))

    @staticmethod
    def from_qpoly(p: QPoly, t_exp: int = 0) -> "QTPoly":
        return QTPoly(tuple((i, t_exp, c) for i, c in enumerate(p.coeffs) if c))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(qe, te): c for qe, te, c in self.terms}

    def __add__(self, other: "QTPoly") -> "QTPoly":
        return QTPoly(self.terms + other.terms)

    def __sub__(self, other: "QTPoly") -> "QTPoly":
        return QTPoly(self.terms + tuple((qe, te, -c) for qe, te, c in other.terms))

    def __mul__(self, other: "QTPoly") -> "QTPoly":
        acc: dict[tuple[int, int], int] = {}
        for qa, ta, ca in self.terms:
            for qb, tb, cb in other.terms:
                key = (qa + qb, ta + tb)
                acc[key] = acc.get(key, 0) + ca * cb
        return QTPoly.from_counts(acc)

    def __rmul__(self, scalar: int) -> "QTPoly":
        return QTPoly(tuple((qe, te, scalar * c) for qe, te, c in self.terms))

    def __pow__(self, exponent: int) -> "QTPoly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        out = QTPoly.one()
        for _ in range(exponent):
            out = out * self
        return out

    def substitute_t_scale(self, j: int) -> "QTPoly":
        """The substitution t -> q^j t, sending q^a t^b to q^(a+jb) t^b."""
        if j < 0:
            raise ValueError("power must be nonnegative")
        return QTPoly(tuple((qe + j * te, te, c) for qe, te, c in self.terms))

    def specialize_t1(self) -> QPoly:
        """Set t = 1, collapsing onto a univariate q-polynomial."""
        deg = max((qe for qe, _, _ in self.terms), default=-1)
        out = [0] * (deg + 1)
        for qe, _, c in self.terms:
            out[qe] += c
        return QPoly(out)

    def eval_at(self, q: int, t: int) -> int:
        return sum(c * q**qe * t**te for qe, te, c in self.terms)

    def to_json(self) -> list[dict[str, int]]:
        return [{"q": qe, "t": te, "c": c} for qe, te, c in self.terms]

    def __str__(self) -> str:
        parts = []
        for qe, te, c in self.terms:
            qpart = "" if qe == 0 else ("q" if qe == 1 else f"q^{qe}")
            tpart = "" if te == 0 else ("t" if te == 1 else f"t^{te}")
            var = "*".join(x for x in (qpart, tpart) if x)
            parts.append(_term_str(c, var))
        return _join_terms(parts)


def specialize(p: QTPoly) -> QPoly:
    """Set t = 1 in a (q, t)-polynomial."""
    return p.specialize_t1()


def eval_at_q1(p: QPoly) -> int:
    """Set q = 1, recovering the plain count."""
    return p.eval_at_q1()


# ---------------------------------------------------------------------------
# truncated power series in x over QTPoly coefficients


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    """Power series in x modulo x^(order+1); coeffs[i] is the x^i coefficient."""

    order: int
    coeffs: tuple[QTPoly, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        cs = tuple(self.coeffs)
        if len(cs) < self.order + 1:
            cs = cs + (QTPoly.zero(),) * (self.order + 1 - len(cs))
        elif len(cs) > self.order + 1:
            cs = cs[: self.order + 1]
        object.__setattr__(self, "coeffs", cs)

    @staticmethod
    def one(order: int) -> "TruncatedSeries":
        return TruncatedSeries(order, (QTPoly.one(),))

    @staticmethod
    def from_term(order: int, x_exp: int, coeff: QTPoly) -> "TruncatedSeries":
        if x_exp > order:
            return TruncatedSeries(order, ())
        return TruncatedSeries(order, (QTPoly.zero(),) * x_exp + (coeff,))

    def __getitem__(self, x_exp: int) -> QTPoly:
        return self.coeffs[x_exp]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = [QTPoly.zero()] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(n, tuple(out))

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        out = TruncatedSeries.one(self.order)
        for _ in range(exponent):
            out = out * self
        return out

    def scale(self, c: QTPoly) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))

    def __rmul__(self, scalar: int) -> "TruncatedSeries":
        return self.scale(scalar * QTPoly.one())

    def shift_x(self, k: int) -> "TruncatedSeries":
        """Multiply by x^k, truncating at the order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries(self.order, (QTPoly.zero(),) * k + self.coeffs)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires the constant term to be 1."""
        if self.coeffs[0] != QTPoly.one():
            raise ValueError("series inversion needs a unit constant term")
        n = self.order
        out = [QTPoly.one()] + [QTPoly.zero()] * n
        for m in range(1, n + 1):
            acc = QTPoly.zero()
            for i in range(1, m + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[m - i]
            out[m] = (-1) * acc
        return TruncatedSeries(n, tuple(out))

    def to_json(self) -> list[list[dict[str, int]]]:
        return [c.to_json() for c in self.coeffs]

    def __str__(self) -> str:
        return "; ".join(f"x^{i}: {c}" for i, c in enumerate(self.coeffs))


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    return s.invert()


def pochhammer(k: int, order: int, shift: int = 0) -> TruncatedSeries:
    """The truncated product (1 - q^shift x)(1 - q^(shift+1) x)...(k factors).

    shift=0 gives the usual q-shifted factorial of x; shift=1 starts at qx.
    """
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    out = TruncatedSeries.one(order)
    for i in range(k):
        factor = TruncatedSeries(
            order, (QTPoly.one(), QTPoly.monomial(i + shift, 0, -1))
        )
        out = out * factor
    return out
