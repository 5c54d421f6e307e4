"""Torus-fixed components of the Quot scheme R_d and their combinatorics.

A fixed component is a splitting of the quotient into torsion of degrees
``b`` and ``a`` at two coordinates plus trivial line bundles at the other
two. Its fixed locus is P^b x P^a.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

__all__ = [
    "WeightVector",
    "FixedComponent",
    "enumerate_components",
    "euler_characteristic",
    "chow_rank",
    "hilbert_polynomial",
]


class WeightVector(tuple):
    """Four strictly increasing integer weights of the diagonal C* action on C^4."""

    def __new__(cls, weights):
        w = tuple(weights)
        if len(w) != 4:
            raise ValueError(f"expected 4 weights, got {len(w)}")
        if any(isinstance(x, bool) or int(x) != x for x in w):
            raise ValueError(f"weights must be integers, got {w}")
        w = tuple(int(x) for x in w)
        if not all(w[i] < w[i + 1] for i in range(3)):
            raise ValueError(f"weights must be strictly increasing, got {w}")
        return super().__new__(cls, w)

    def __repr__(self):
        return f"WeightVector({tuple(self)})"


@dataclass(frozen=True, order=True)
class FixedComponent:
    """Canonical fixed component: degree ``b`` torsion at ``pos_b``, ``a`` at ``pos_a``.

    Canonical form has ``b >= a`` and, when ``b == a``, ``pos_b < pos_a``.
    """

    b: int
    pos_b: int
    pos_a: int
    a: int

    def __post_init__(self):
        if self.a < 0 or self.b < self.a:
            raise ValueError(f"need b >= a >= 0, got (b, a) = ({self.b}, {self.a})")
        if not (0 <= self.pos_b < 4 and 0 <= self.pos_a < 4) or self.pos_b == self.pos_a:
            raise ValueError(f"bad torsion positions ({self.pos_b}, {self.pos_a})")
        if self.b == self.a and self.pos_b > self.pos_a:
            raise ValueError("non-canonical: b == a requires pos_b < pos_a")

    @property
    def d(self) -> int:
        return self.b + self.a

    @property
    def trivial(self) -> tuple[int, int]:
        k, l = (p for p in range(4) if p not in (self.pos_b, self.pos_a))
        return k, l

    @property
    def caps(self) -> tuple[int, int]:
        """Series caps of the fixed locus P^b x P^a."""
        return self.b, self.a

    @property
    def pattern(self) -> tuple[str, str, str, str]:
        """Per-coordinate labels, e.g. ``('a:1', 'b:2', 't+1', 't+1')``."""
        out = ["t+1"] * 4
        out[self.pos_b] = f"b:{self.b}"
        out[self.pos_a] = f"a:{self.a}"
        return tuple(out)

    @property
    def locus(self) -> str:
        if self.b == 0:
            return "point"
        if self.a == 0:
            return f"P^{self.b}"
        return f"P^{self.b} x P^{self.a}"

    def __str__(self):
        return f"({', '.join(self.pattern)})"


def hilbert_polynomial(d: int):
    """Coefficients ``(slope, constant)`` of P(t) = 2t + 2 + d."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return 2, 2 + d


def enumerate_components(d: int) -> list[FixedComponent]:
    """All 6(d+1) fixed components of R_d, sorted by (b, pos_b, pos_a)."""
    if d < 0:
        raise ValueError("d must be non-negative")
    found = set()
    for trivial in combinations(range(4), 2):
        p, q = (x for x in range(4) if x not in trivial)
        # ordered split: degree s at p, d - s at q
        for s in range(d + 1):
            t = d - s
            if s > t or (s == t and p < q):
                found.add(FixedComponent(b=s, pos_b=p, pos_a=q, a=t))
            else:
                found.add(FixedComponent(b=t, pos_b=q, pos_a=p, a=s))
    return sorted(found)


def euler_characteristic(d: int) -> int:
    if d < 0:
        raise ValueError("d must be non-negative")
    return 6 * comb(d + 3, 3)


def chow_rank(c: FixedComponent) -> int:
    """Rank of A*(P^b x P^a)."""
    return (c.b + 1) * (c.a + 1)
