"""Bott residue computation of the Pluecker degree of R_d.

For each fixed component F = P^b x P^a the summand is the coefficient of
u^b v^a in  alpha|_F^(4d+4) / e(N_F), with all classes expanded in the
truncated series ring of F.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fixed_points import FixedComponent, WeightVector, enumerate_components
from .series import LinearForm, NonUnitError, TruncatedSeries

__all__ = [
    "NonGenericWeights",
    "NonIntegralSum",
    "EquivariantFactor",
    "EquivariantClassProduct",
    "ComponentContribution",
    "alpha_restriction",
    "beta_restriction",
    "normal_euler_class",
    "component_contribution",
    "component_contributions",
    "plucker_degree",
]

log = logging.getLogger(__name__)


class NonGenericWeights(ArithmeticError):
    """A normal-bundle factor degenerates for the chosen weights."""


class NonIntegralSum(ArithmeticError):
    """The Bott sum came out non-integral; the result cannot be a degree."""


@dataclass(frozen=True)
class EquivariantFactor:
    form: LinearForm
    exponent: int

    def __post_init__(self):
        if self.exponent < 0 and self.form.constant == 0:
            raise NonGenericWeights(f"cannot invert ({self.form}) with zero weight part")
        if self.exponent > 0 and self.form.is_zero():
            raise NonGenericWeights("zero factor with positive exponent")

    def expand(self, cap_u: int, cap_v: int) -> TruncatedSeries:
        return self.form.to_series(cap_u, cap_v) ** self.exponent

    def __str__(self):
        if self.exponent == 1:
            return f"({self.form})"
        return f"({self.form})^{self.exponent}"


@dataclass(frozen=True)
class EquivariantClassProduct:
    factors: tuple[EquivariantFactor, ...]

    @property
    def degree(self) -> int:
        """Exponent-weighted degree; each linear factor counts once."""
        return sum(f.exponent for f in self.factors)

    def expand(self, cap_u: int, cap_v: int) -> TruncatedSeries:
        out = TruncatedSeries.one(cap_u, cap_v)
        for f in self.factors:
            out = out * f.expand(cap_u, cap_v)
        return out

    def __str__(self):
        return " ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class ComponentContribution:
    component: FixedComponent
    value: Fraction


def alpha_restriction(c: FixedComponent, w: Sequence[int]) -> LinearForm:
    k, l = c.trivial
    return LinearForm(int(c.b > 0), int(c.a > 0), w[k] + w[l])


def beta_restriction(c: FixedComponent, w: Sequence[int]) -> LinearForm:
    """Restriction of beta; the degree-b torsion carries the a-fold class and vice versa."""
    k, l = c.trivial
    d = c.d
    const = c.b * w[c.pos_b] + c.a * w[c.pos_a] + d * w[k] + d * w[l]
    # a = 0: the P^a factor is a point, v is identically zero there
    return LinearForm(c.a, c.b if c.a > 0 else 0, const)


def normal_euler_class(c: FixedComponent, w: Sequence[int]) -> EquivariantClassProduct:
    """Equivariant Euler class of the normal bundle of ``c`` in R_d.

    One product covers both kinds of component; for ``a = 0`` the two factors
    that coincide once ``v = 0`` are merged by adding exponents.
    """
    i, j = c.pos_b, c.pos_a
    k, l = c.trivial
    b, a = c.b, c.a
    raw = [
        ((1, 0, w[k] - w[i]), b + 1),
        ((1, 0, w[l] - w[i]), b + 1),
        ((0, 1, w[k] - w[j]), a + 1),
        ((0, 1, w[l] - w[j]), a + 1),
        ((-1, 1, w[i] - w[j]), b - a - 1),
        ((0, 1, w[i] - w[j]), a + 1),
    ]
    if a == 0:
        raw.append(((1, 0, w[j] - w[i]), (b + 1) + (a - b - 1)))
    else:
        raw.append(((1, 0, w[j] - w[i]), b + 1))
        raw.append(((1, -1, w[j] - w[i]), a - b - 1))

    factors = []
    for (cu, cv, const), e in raw:
        if a == 0:
            cv = 0
        if b == 0:
            cu = 0
        if e == 0:
            continue
        form = LinearForm(cu, cv, const)
        if form.constant == 0:
            raise NonGenericWeights(f"factor ({form}) has no weight part at component {c}")
        factors.append(EquivariantFactor(form, e))
    product = EquivariantClassProduct(tuple(factors))
    if product.degree != 3 * c.d + 4:
        raise AssertionError(f"normal bundle degree {product.degree} != {3 * c.d + 4}")
    return product


def component_contribution(c: FixedComponent, w: Sequence[int]) -> ComponentContribution:
    cap_u, cap_v = c.caps
    numerator = alpha_restriction(c, w).to_series(cap_u, cap_v) ** (4 * c.d + 4)
    try:
        denominator = normal_euler_class(c, w).expand(cap_u, cap_v)
        summand = numerator * denominator.inverse()
    except NonUnitError as exc:
        raise NonGenericWeights(str(exc)) from exc
    return ComponentContribution(c, summand.coefficient(c.b, c.a))


def _contribution_task(args):
    c, w = args
    return component_contribution(c, w)


def component_contributions(d: int, w: Sequence[int], jobs: int = 1) -> list[ComponentContribution]:
    """Contributions of every fixed component of R_d, in enumeration order."""
    w = WeightVector(w)
    comps = enumerate_components(d)
    if jobs > 1 and len(comps) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_contribution_task, [(c, w) for c in comps]))
    return [component_contribution(c, w) for c in comps]


def plucker_degree(d: int, w: Sequence[int] = (0, 1, 2, 3), jobs: int = 1) -> int:
    """Degree of R_d under the embedding given by alpha, via Bott's formula."""
    if d < 0:
        raise ValueError("d must be non-negative")
    total = sum((c.value for c in component_contributions(d, w, jobs=jobs)), Fraction(0))
    log.debug("d=%d weights=%s bott sum=%s", d, tuple(w), total)
    if total.denominator != 1:
        raise NonIntegralSum(f"Bott sum for d={d} is {total}, not an integer")
    return int(total)
