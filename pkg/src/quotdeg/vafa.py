"""Vafa-Intriligator formula for genus-0 invariants of G(k, n).

The sum runs over k-subsets of the roots of x^n = (-1)^(k-1).  Those are the
n-th roots of unity rescaled by a fixed primitive 2n-th root when k is even;
the rescaling multiplies every summand by (-1)^d, so we always evaluate on
the n-th roots of unity and apply that sign.  For n in {1, 2, 4} the roots of
unity are Gaussian rationals and the whole evaluation is exact.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import mpmath

__all__ = [
    "GaussianRational",
    "PrecisionError",
    "SelectionRuleError",
    "VIQuery",
    "VIResult",
    "primitive_root",
    "elementary_symmetric",
    "vi_invariant",
    "vi_evaluate",
    "vi_plucker_degree",
    "DEFAULT_PRECISION_BITS",
    "MAX_PRECISION_BITS",
]

DEFAULT_PRECISION_BITS = 128
MAX_PRECISION_BITS = 1024
PRECISION_ENV = "QUOTDEG_PRECISION_BITS"
ROUNDING_TOLERANCE = mpmath.mpf("1e-6")


class PrecisionError(ArithmeticError):
    """Floating evaluation did not land within tolerance of an integer."""


class SelectionRuleError(ValueError):
    """Insertion degrees do not add up to the expected dimension."""


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other):
        other = _gauss(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_gauss(other))

    def __rsub__(self, other):
        return _gauss(other) - self

    def __mul__(self, other):
        o = _gauss(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = _gauss(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __pow__(self, e: int):
        if e < 0:
            return GaussianRational(1) / (self ** -e)
        out, base = GaussianRational(1), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        try:
            o = _gauss(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _gauss(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x))
    raise TypeError(f"cannot treat {type(x).__name__} as a Gaussian rational")


# e^(2 pi i m / 4) for m = 0..3
_QUARTER_TURNS = (
    GaussianRational(1),
    GaussianRational(0, 1),
    GaussianRational(-1),
    GaussianRational(0, -1),
)


def primitive_root(k: int, n: int, exact: bool = True):
    """Primitive n-th root of (-1)^k: e^(2 pi i/n) for even k, e^(pi i/n) for odd k.

    Returned as a GaussianRational when that is possible and ``exact`` is set,
    otherwise as an ``mpmath.mpc`` at the current working precision.
    """
    if n < 1:
        raise ValueError("n must be positive")
    # angle = 2 pi * turns / (2n)
    turns = 2 if k % 2 == 0 else 1
    if exact and (4 * turns) % (2 * n) == 0:
        return _QUARTER_TURNS[(4 * turns // (2 * n)) % 4]
    return mpmath.expjpi(mpmath.mpf(turns) / n)


def elementary_symmetric(r: int, values: Sequence):
    """e_r(values) via the coefficient recurrence of prod (1 + x t)."""
    if r < 0 or r > len(values):
        raise ValueError(f"need 0 <= r <= {len(values)}, got {r}")
    e = [1] + [0] * r
    for x in values:
        for m in range(r, 0, -1):
            e[m] = e[m] + e[m - 1] * x
    return e[r]


@dataclass(frozen=True)
class VIQuery:
    k: int
    n: int
    d: int
    insertions: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "insertions", tuple(int(a) for a in self.insertions))
        if self.k < 1 or self.n <= self.k:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")
        if self.d < 0:
            raise ValueError("d must be non-negative")
        bad = [a for a in self.insertions if not 0 <= a <= self.k]
        if bad:
            raise ValueError(f"insertion degrees must lie in [0, {self.k}], got {bad}")

    @property
    def expected_dimension(self) -> int:
        return self.k * (self.n - self.k) + self.n * self.d

    def check_selection_rule(self):
        total = sum(self.insertions)
        if total != self.expected_dimension:
            raise SelectionRuleError(
                f"selection rule violated: insertions sum to {total}, "
                f"expected k(n-k) + n*d = {self.expected_dimension}"
            )


@dataclass(frozen=True)
class VIResult:
    value: int
    exact: bool
    precision_bits: int | None


def _summand(xs, degree_counts: Counter, n: int, one):
    prod = one
    for a, mult in degree_counts.items():
        prod = prod * elementary_symmetric(a, xs) ** mult
    for p, q in ((p, q) for p in range(len(xs)) for q in range(len(xs)) if p != q):
        prod = prod * (xs[p] - xs[q])
    den = one
    for x in xs:
        den = den * x ** (n - 1)
    return prod / den


def _roots_of_unity(n: int, generator):
    return [generator ** m for m in range(n)]


def _is_exact(n: int) -> bool:
    return 4 % n == 0


def _sign(q: VIQuery) -> int:
    return -1 if (q.d * (q.k - 1)) % 2 else 1


def _exact_eval(q: VIQuery, generator) -> int:
    roots = _roots_of_unity(q.n, generator)
    counts = Counter(q.insertions)
    total = GaussianRational(0)
    for idx in combinations(range(q.n), q.k):
        total = total + _summand([roots[i] for i in idx], counts, q.n, GaussianRational(1))
    total = total * Fraction(_sign(q), q.n ** q.k)
    if total.im != 0 or total.re.denominator != 1:
        raise ArithmeticError(f"exact VI sum is not a rational integer: {total}")
    return int(total.re)


def _float_eval(q: VIQuery, bits: int, generator=None) -> int:
    with mpmath.workprec(bits):
        g = mpmath.mpc(complex(generator)) if generator is not None else primitive_root(0, q.n, exact=False)
        roots = _roots_of_unity(q.n, g)
        counts = Counter(q.insertions)
        total = mpmath.mpc(0)
        for idx in combinations(range(q.n), q.k):
            total += _summand([roots[i] for i in idx], counts, q.n, mpmath.mpc(1))
        total = total * _sign(q) / mpmath.mpf(q.n) ** q.k
        nearest = mpmath.nint(total.real)
        if abs(total.real - nearest) >= ROUNDING_TOLERANCE or abs(total.imag) >= ROUNDING_TOLERANCE:
            raise PrecisionError(f"VI sum {mpmath.nstr(total, 20)} not within 1e-6 of an integer at {bits} bits")
        return int(nearest)


def _default_bits() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION_BITS
    bits = int(raw)
    if bits < 16:
        raise ValueError(f"{PRECISION_ENV} must be at least 16, got {bits}")
    return bits


def vi_evaluate(q: VIQuery, *, force_float: bool = False, precision_bits: int | None = None,
                generator=None) -> VIResult:
    """Evaluate ``q`` and report which path was used.

    ``generator`` overrides the primitive n-th root of unity the root set is
    generated from; any primitive choice yields the same value.
    """
    q.check_selection_rule()
    if _is_exact(q.n) and not force_float:
        g = _gauss(generator) if generator is not None else primitive_root(0, q.n)
        if g ** q.n != GaussianRational(1) or any(g ** m == GaussianRational(1) for m in range(1, q.n)):
            raise ValueError(f"generator {g} is not a primitive {q.n}-th root of unity")
        return VIResult(_exact_eval(q, g), True, None)

    bits = precision_bits if precision_bits is not None else _default_bits()
    while True:
        try:
            return VIResult(_float_eval(q, bits, generator), False, bits)
        except PrecisionError:
            if bits >= MAX_PRECISION_BITS:
                raise
            bits = min(2 * bits, MAX_PRECISION_BITS)


def vi_invariant(q: VIQuery, **kwargs) -> int:
    return vi_evaluate(q, **kwargs).value


def vi_plucker_degree(d: int) -> int:
    """Degree of R_d from the Vafa-Intriligator side: 4d+4 hyperplane insertions on G(2,4)."""
    return vi_invariant(VIQuery(2, 4, d, (1,) * (4 * d + 4)))
