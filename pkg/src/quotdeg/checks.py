"""Self-verification battery shared by ``quotdeg selftest`` and the test suite."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

from . import appendix_a
from .fixed_points import chow_rank, enumerate_components, euler_characteristic
from .localization import alpha_restriction, normal_euler_class, plucker_degree
from .series import LinearForm, TruncatedSeries
from .vafa import vi_plucker_degree

__all__ = [
    "CheckResult",
    "REFERENCE_WEIGHTS",
    "invariance_weight_sets",
    "random_series",
    "check_closed_form",
    "check_weight_invariance",
    "check_oracle_agreement",
    "check_combinatorics",
    "check_appendix_a",
    "check_bridge_identity",
    "check_series_laws",
    "run_battery",
]

REFERENCE_WEIGHTS = ((0, 1, 2, 3), (0, 1, 3, 7), (-3, 0, 2, 11))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def invariance_weight_sets(seed: int = 20261018, extra: int = 2) -> list[tuple[int, ...]]:
    """The three reference quadruples plus ``extra`` seeded random ones from [-50, 50]."""
    rng = random.Random(seed)
    out = list(REFERENCE_WEIGHTS)
    while len(out) < len(REFERENCE_WEIGHTS) + extra:
        w = tuple(sorted(rng.sample(range(-50, 51), 4)))
        if w not in out:
            out.append(w)
    return out


def _guard(name: str, fn: Callable[[], CheckResult]) -> CheckResult:
    try:
        return fn()
    except Exception as exc:  # a crash is a failed check, not an aborted battery
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")


def check_closed_form(max_d: int, weights: Sequence[int] = (0, 1, 2, 3)) -> CheckResult:
    name = f"closed_form_d0..{max_d}"

    def run():
        got = {d: plucker_degree(d, weights) for d in range(max_d + 1)}
        bad = {d: v for d, v in got.items() if v != 2 ** (2 * d + 1)}
        if bad:
            return CheckResult(name, False, f"P_d != 2^(2d+1) at {bad}")
        return CheckResult(name, True, ", ".join(f"P_{d}={v}" for d, v in got.items()))

    return _guard(name, run)


def check_weight_invariance(max_d: int, weight_sets: Iterable[Sequence[int]] | None = None) -> CheckResult:
    name = f"weight_invariance_d0..{max_d}"
    weight_sets = list(weight_sets or invariance_weight_sets())

    def run():
        for d in range(max_d + 1):
            values = {tuple(w): plucker_degree(d, w) for w in weight_sets}
            if len(set(values.values())) != 1:
                return CheckResult(name, False, f"d={d}: {values}")
        return CheckResult(name, True, f"{len(weight_sets)} weight vectors agree")

    return _guard(name, run)


def check_oracle_agreement(max_d: int) -> CheckResult:
    name = f"oracle_agreement_d0..{max_d}"

    def run():
        for d in range(max_d + 1):
            bott, vafa = plucker_degree(d), vi_plucker_degree(d)
            if bott != vafa:
                return CheckResult(name, False, f"d={d}: bott={bott} vafa={vafa}")
        return CheckResult(name, True, "Bott and Vafa-Intriligator agree")

    return _guard(name, run)


def check_combinatorics(max_d: int) -> CheckResult:
    name = f"combinatorics_d0..{max_d}"

    def run():
        for d in range(max_d + 1):
            comps = enumerate_components(d)
            if len(comps) != 6 * (d + 1):
                return CheckResult(name, False, f"d={d}: {len(comps)} components")
            rank = sum(chow_rank(c) for c in comps)
            if rank != euler_characteristic(d):
                return CheckResult(name, False, f"d={d}: total rank {rank} != chi {euler_characteristic(d)}")
        return CheckResult(name, True, "component counts and Euler characteristics match")

    return _guard(name, run)


def check_appendix_a(weights: Sequence[int] = (0, 1, 2, 3)) -> CheckResult:
    name = "appendix_a_golden_w" + ",".join(map(str, weights))

    def run():
        compared = []
        for e in appendix_a.ENTRIES:
            if not e.usable_denominator:
                continue
            c = e.resolved_component()
            ours = normal_euler_class(c, weights).expand(*c.caps)
            if ours != appendix_a.expand_denominator(e, weights):
                return CheckResult(name, False, f"entry {e.number} denominator differs")
            if e.usable_numerator:
                alpha = alpha_restriction(c, weights).to_series(*c.caps) ** 16
                if alpha != appendix_a.expand_numerator(e, weights):
                    return CheckResult(name, False, f"entry {e.number} numerator differs")
            compared.append(e.number)
        return CheckResult(name, True, f"entries {compared} match")

    return _guard(name, run)


def check_bridge_identity(c: int = -1) -> CheckResult:
    """(u+c)^3 (u-v+c)^(-2) = u + 2v + c modulo (u^3, v^2)."""
    name = "bridge_identity"

    def run():
        lhs = LinearForm(1, 0, c).to_series(2, 1) ** 3 * LinearForm(1, -1, c).to_series(2, 1) ** -2
        rhs = LinearForm(1, 2, c).to_series(2, 1)
        return CheckResult(name, lhs == rhs, f"lhs={lhs}")

    return _guard(name, run)


def random_series(rng: random.Random, cap_u: int, cap_v: int, lo: int = -9, hi: int = 9,
                  unit: bool = False) -> TruncatedSeries:
    grid = [[rng.randint(lo, hi) for _ in range(cap_v + 1)] for _ in range(cap_u + 1)]
    if unit and grid[0][0] == 0:
        grid[0][0] = rng.choice([x for x in range(lo, hi + 1) if x])
    return TruncatedSeries(cap_u, cap_v, grid)


def check_series_laws(trials: int = 1000, seed: int = 7) -> CheckResult:
    name = f"series_ring_laws_x{trials}"

    def run():
        rng = random.Random(seed)
        for t in range(trials):
            cu, cv = rng.randint(0, 4), rng.randint(0, 4)
            x, y, z = (random_series(rng, cu, cv) for _ in range(3))
            if (x * y) * z != x * (y * z) or x * y != y * x or x * (y + z) != x * y + x * z:
                return CheckResult(name, False, f"ring law fails, trial {t}")
            ux = random_series(rng, cu, cv, unit=True)
            one = TruncatedSeries.one(cu, cv)
            if ux * ux.inverse() != one:
                return CheckResult(name, False, f"x * x^-1 != 1, trial {t}")
            p, q = rng.randint(-3, 3), rng.randint(-3, 3)
            if ux ** (p + q) != ux ** p * ux ** q:
                return CheckResult(name, False, f"power law fails for ({p}, {q}), trial {t}")
            su, sv = rng.randint(0, cu), rng.randint(0, cv)
            if (x * y).truncate(su, sv) != x.truncate(su, sv) * y.truncate(su, sv):
                return CheckResult(name, False, f"truncation not multiplicative, trial {t}")
            if ux.inverse().truncate(su, sv) != ux.truncate(su, sv).inverse():
                return CheckResult(name, False, f"truncation does not commute with inverse, trial {t}")
        return CheckResult(name, True, f"{trials} random trials, caps <= (4, 4)")

    return _guard(name, run)


def run_battery(quick: bool = False) -> list[CheckResult]:
    if quick:
        return [
            check_weight_invariance(3),
            check_closed_form(3),
            check_oracle_agreement(3),
            check_combinatorics(3),
            check_appendix_a(),
            check_bridge_identity(),
            check_series_laws(trials=100),
        ]
    return [
        check_weight_invariance(4),
        check_closed_form(6),
        check_oracle_agreement(5),
        check_combinatorics(20),
        check_appendix_a(),
        check_appendix_a((0, 1, 3, 7)),
        check_bridge_identity(),
        check_series_laws(),
    ]

