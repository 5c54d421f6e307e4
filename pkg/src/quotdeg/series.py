"""Exact rationals and the truncated bivariate series ring Q[u, v]/(u^(p+1), v^(q+1)).

Every equivariant class restricted to a fixed component P^b x P^a lives in
this ring once integer weights are substituted: ``u`` is the hyperplane class
of the P^b factor, ``v`` that of the P^a factor. A cap of 0 makes the
corresponding variable identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "CapMismatchError",
    "NonUnitError",
    "LinearForm",
    "TruncatedSeries",
    "series_add",
    "series_mul",
    "series_inverse",
    "series_pow",
    "coefficient",
    "series_product",
]

# Fraction is always stored reduced with a positive denominator.
Rational = Fraction

Number = Union[int, Fraction]


class CapMismatchError(ValueError):
    """Binary operation on series truncated at different caps."""


class NonUnitError(ZeroDivisionError):
    """Inverse requested for a series whose constant term vanishes."""


def _q(x: Number) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LinearForm:
    """``coeff_u * u + coeff_v * v + constant``, stored verbatim."""

    coeff_u: Fraction = Fraction(0)
    coeff_v: Fraction = Fraction(0)
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coeff_u", _q(self.coeff_u))
        object.__setattr__(self, "coeff_v", _q(self.coeff_v))
        object.__setattr__(self, "constant", _q(self.constant))

    def is_zero(self) -> bool:
        return self.coeff_u == 0 and self.coeff_v == 0 and self.constant == 0

    def to_series(self, cap_u: int, cap_v: int) -> "TruncatedSeries":
        grid = [[Fraction(0)] * (cap_v + 1) for _ in range(cap_u + 1)]
        grid[0][0] = self.constant
        if cap_u > 0:
            grid[1][0] = self.coeff_u
        if cap_v > 0:
            grid[0][1] = self.coeff_v
        return TruncatedSeries(cap_u, cap_v, grid)

    def __str__(self):
        parts = []
        for c, name in ((self.coeff_u, "u"), (self.coeff_v, "v"), (self.constant, "")):
            if c == 0:
                continue
            if name and abs(c) == 1:
                term = name
            else:
                term = f"{abs(c)}{'*' + name if name else ''}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


class TruncatedSeries:
    """Dense element of Q[u, v] modulo (u^(cap_u+1), v^(cap_v+1)).

    Instances are immutable; ``coeffs[i][j]`` is the coefficient of u^i v^j.
    """

    __slots__ = ("cap_u", "cap_v", "coeffs")

    def __init__(self, cap_u: int, cap_v: int, coeffs: Iterable[Iterable[Number]] | None = None):
        if cap_u < 0 or cap_v < 0:
            raise ValueError(f"caps must be non-negative, got ({cap_u}, {cap_v})")
        if coeffs is None:
            rows = tuple((Fraction(0),) * (cap_v + 1) for _ in range(cap_u + 1))
        else:
            rows = tuple(tuple(_q(c) for c in row) for row in coeffs)
            if len(rows) != cap_u + 1 or any(len(r) != cap_v + 1 for r in rows):
                raise ValueError(
                    f"coefficient grid must be {cap_u + 1}x{cap_v + 1}"
                )
        object.__setattr__(self, "cap_u", cap_u)
        object.__setattr__(self, "cap_v", cap_v)
        object.__setattr__(self, "coeffs", rows)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c: Number, cap_u: int, cap_v: int) -> "TruncatedSeries":
        grid = [[Fraction(0)] * (cap_v + 1) for _ in range(cap_u + 1)]
        grid[0][0] = _q(c)
        return cls(cap_u, cap_v, grid)

    @classmethod
    def one(cls, cap_u: int, cap_v: int) -> "TruncatedSeries":
        return cls.constant(1, cap_u, cap_v)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], Number], cap_u: int, cap_v: int) -> "TruncatedSeries":
        """Build from ``{(i, j): c}``; monomials beyond the caps are dropped."""
        grid = [[Fraction(0)] * (cap_v + 1) for _ in range(cap_u + 1)]
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            if i <= cap_u and j <= cap_v:
                grid[i][j] += _q(c)
        return cls(cap_u, cap_v, grid)

    # -- basic protocol -------------------------------------------------

    @property
    def caps(self) -> tuple[int, int]:
        return (self.cap_u, self.cap_v)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.caps == other.caps and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.cap_u, self.cap_v, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({self.cap_u}, {self.cap_v}, {self})"

    def __str__(self):
        terms = []
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c == 0:
                    continue
                mono = "*".join(
                    s for s in (
                        "" if i == 0 else ("u" if i == 1 else f"u^{i}"),
                        "" if j == 0 else ("v" if j == 1 else f"v^{j}"),
                    ) if s
                )
                terms.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(terms) if terms else "0"

    def is_unit(self) -> bool:
        return self.coeffs[0][0] != 0

    def truncate(self, cap_u: int, cap_v: int) -> "TruncatedSeries":
        """Project onto smaller caps (a ring homomorphism)."""
        if cap_u > self.cap_u or cap_v > self.cap_v:
            raise ValueError("truncate can only shrink caps")
        return TruncatedSeries(cap_u, cap_v, [row[: cap_v + 1] for row in self.coeffs[: cap_u + 1]])

    def _check(self, other: "TruncatedSeries"):
        if self.caps != other.caps:
            raise CapMismatchError(f"caps differ: {self.caps} vs {other.caps}")

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, *self.caps)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(
            self.cap_u,
            self.cap_v,
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.coeffs, other.coeffs)],
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.cap_u, self.cap_v, [[-x for x in r] for r in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _q(other)
            return TruncatedSeries(self.cap_u, self.cap_v, [[c * x for x in r] for r in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        cu, cv = self.caps
        out = [[Fraction(0)] * (cv + 1) for _ in range(cu + 1)]
        ys = other.coeffs
        for i, row in enumerate(self.coeffs):
            for j, x in enumerate(row):
                if x == 0:
                    continue
                for k in range(cu + 1 - i):
                    yk = ys[k]
                    ok = out[i + k]
                    for l in range(cv + 1 - j):
                        if yk[l]:
                            ok[j + l] += x * yk[l]
        return TruncatedSeries(cu, cv, out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse, solved order by order."""
        c = self.coeffs[0][0]
        if c == 0:
            raise NonUnitError(f"series with zero constant term is not invertible: {self}")
        cu, cv = self.caps
        x = self.coeffs
        y = [[Fraction(0)] * (cv + 1) for _ in range(cu + 1)]
        inv_c = 1 / c
        for i in range(cu + 1):
            for j in range(cv + 1):
                acc = Fraction(1) if i == 0 and j == 0 else Fraction(0)
                for k in range(i + 1):
                    xk = x[k]
                    yk = y[i - k]
                    for l in range(j + 1):
                        if (k or l) and xk[l]:
                            acc -= xk[l] * yk[j - l]
                y[i][j] = acc * inv_c
        return TruncatedSeries(cu, cv, y)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base = self.inverse()
            e = -e
        result = TruncatedSeries.one(*self.caps)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def coefficient(self, i: int, j: int) -> Fraction:
        if not (0 <= i <= self.cap_u and 0 <= j <= self.cap_v):
            raise IndexError(f"monomial u^{i} v^{j} outside caps {self.caps}")
        return self.coeffs[i][j]


def series_add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x + y


def series_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x * y


def series_inverse(x: TruncatedSeries) -> TruncatedSeries:
    return x.inverse()


def series_pow(x: TruncatedSeries, e: int) -> TruncatedSeries:
    return x ** e


def coefficient(x: TruncatedSeries, i: int, j: int) -> Fraction:
    return x.coefficient(i, j)


def series_product(factors: Sequence[TruncatedSeries], cap_u: int, cap_v: int) -> TruncatedSeries:
    """Product of ``factors``; the empty product is 1 at the given caps."""
    out = TruncatedSeries.one(cap_u, cap_v)
    for f in factors:
        out = out * f
    return out
