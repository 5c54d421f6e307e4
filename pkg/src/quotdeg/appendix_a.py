"""Reference table of the 24 Bott summands for R_3, as published.

Each entry keeps the printed coordinate header, numerator and denominator in
a compact ASCII transcription: ``h`` / ``H`` are hyperplane classes and
``wN`` are weights.  On first-kind components (P^3) ``h`` is our ``u``; on
second-kind components (P^2 x P^1) ``H`` is ``u`` and ``h`` is ``v``.

Several published entries contain typos.  ``status`` records how each entry
is used:

* ``ok``              header, numerator and denominator all consistent
* ``header-typo``     printed header contradicts an otherwise consistent formula;
                      compared against ``component`` instead
* ``numerator-typo``  denominator usable, numerator is not
* ``excluded``        denominator is internally inconsistent

:func:`lint_entry` re-derives these verdicts from structural checks alone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .fixed_points import FixedComponent
from .series import LinearForm, TruncatedSeries

__all__ = [
    "AppendixEntry",
    "ENTRIES",
    "parse_product",
    "component_from_header",
    "lint_entry",
    "expand_denominator",
    "expand_numerator",
]

_FACTOR = re.compile(r"\(([^()]*)\)(?:\^(-?\d+))?")
_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(H|h|w[0-3])")


@dataclass(frozen=True)
class AppendixEntry:
    number: int
    header: tuple[str, str, str, str]
    numerator: str
    denominator: str
    status: str = "ok"
    component: FixedComponent | None = None
    note: str = ""

    @property
    def usable_denominator(self) -> bool:
        return self.status in ("ok", "header-typo", "numerator-typo")

    @property
    def usable_numerator(self) -> bool:
        return self.status in ("ok", "header-typo")

    def resolved_component(self) -> FixedComponent:
        return self.component or component_from_header(self.header)


def component_from_header(header: Sequence[str]) -> FixedComponent:
    """``('1', '2', 't', 't')`` -> canonical component; ``t`` marks t+1."""
    torsion = [(int(s), p) for p, s in enumerate(header) if s != "t"]
    if len(torsion) != 2 or len(header) != 4:
        raise ValueError(f"header {header} needs exactly two torsion slots")
    (d1, p1), (d2, p2) = torsion
    if (d1, -p1) >= (d2, -p2):
        return FixedComponent(b=d1, pos_b=p1, pos_a=p2, a=d2)
    return FixedComponent(b=d2, pos_b=p2, pos_a=p1, a=d1)


@dataclass(frozen=True)
class _Factor:
    H: int
    h: int
    weights: tuple[int, int, int, int]
    exponent: int


def parse_product(text: str) -> list[_Factor]:
    """Parse ``(h+w2-w1)^4 (w1-w0) ...`` into factors."""
    out = []
    pos = 0
    for m in _FACTOR.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"unparsed text {text[pos:m.start()]!r}")
        pos = m.end()
        body, exp = m.group(1), int(m.group(2) or 1)
        H = h = 0
        w = [0, 0, 0, 0]
        consumed = 0
        for t in _TERM.finditer(body):
            if body[consumed:t.start()].strip():
                raise ValueError(f"bad term in {body!r}")
            consumed = t.end()
            c = int(t.group(2) or 1) * (-1 if t.group(1) == "-" else 1)
            sym = t.group(3)
            if sym == "H":
                H += c
            elif sym == "h":
                h += c
            else:
                w[int(sym[1])] += c
        if body[consumed:].strip():
            raise ValueError(f"bad term in {body!r}")
        out.append(_Factor(H, h, tuple(w), exp))
    if text[pos:].strip():
        raise ValueError(f"unparsed text {text[pos:]!r}")
    return out


def _to_form(f: _Factor, first_kind: bool, weights: Sequence[int]) -> LinearForm:
    const = sum(c * x for c, x in zip(f.weights, weights))
    if first_kind:
        if f.H:
            raise ValueError("H does not occur on a first-kind component")
        return LinearForm(f.h, 0, const)
    return LinearForm(f.H, f.h, const)


def _expand(text: str, c: FixedComponent, weights: Sequence[int]) -> TruncatedSeries:
    cap_u, cap_v = c.caps
    out = TruncatedSeries.one(cap_u, cap_v)
    for f in parse_product(text):
        out = out * (_to_form(f, c.a == 0, weights).to_series(cap_u, cap_v) ** f.exponent)
    return out


def expand_denominator(e: AppendixEntry, weights: Sequence[int] = (0, 1, 2, 3)) -> TruncatedSeries:
    return _expand(e.denominator, e.resolved_component(), weights)


def expand_numerator(e: AppendixEntry, weights: Sequence[int] = (0, 1, 2, 3)) -> TruncatedSeries:
    return _expand(e.numerator, e.resolved_component(), weights)


def lint_entry(e: AppendixEntry, others: Sequence[AppendixEntry] = (),
               component: FixedComponent | None = None) -> list[str]:
    """Structural problems with the printed entry, independent of any Euler-class formula.

    Checks: header shape, total degree 13, numerator weights equal the
    trivial coordinates of the header, each pure-u (pure-v) factor is a
    weight difference subtracting the weight at the degree-b (degree-a)
    coordinate, no factor printed twice, and no other entry with the same
    denominator. ``component`` replaces the printed header.
    """
    problems = []
    if component is not None:
        c = component
    else:
        try:
            c = component_from_header(e.header)
        except ValueError as exc:
            return [str(exc)]
    if c.d != 3:
        problems.append(f"header degrees sum to {c.d}, not 3")
    den = parse_product(e.denominator)
    if sum(f.exponent for f in den) != 13:
        problems.append("denominator degree is not 13")
    k, l = c.trivial
    num = parse_product(e.numerator)
    want = tuple(1 if p in (k, l) else 0 for p in range(4))
    if len(num) != 1 or num[0].weights != want or num[0].exponent != 16:
        problems.append(f"numerator weights do not match trivial coordinates {(k, l)}")
    first_kind = c.a == 0
    for f in den:
        u_coef, v_coef = (f.h, 0) if first_kind else (f.H, f.h)
        pos = [p for p, x in enumerate(f.weights) if x == 1]
        neg = [p for p, x in enumerate(f.weights) if x == -1]
        if len(pos) != 1 or len(neg) != 1 or sum(abs(x) for x in f.weights) != 2:
            problems.append(f"factor with weights {f.weights} is not a weight difference")
            continue
        if u_coef and not v_coef:
            # (u + w_x - w_i) on the P^b factor; first kind also allows -(u - w_x + w_i)
            sub = neg[0] if u_coef > 0 else pos[0]
            if sub != c.pos_b:
                problems.append(f"P^{c.b} factor subtracts w{sub}, expected w{c.pos_b}")
        elif v_coef and not u_coef:
            if neg[0] != c.pos_a:
                problems.append(f"P^{c.a} factor subtracts w{neg[0]}, expected w{c.pos_a}")
        elif not u_coef and not v_coef:
            if not ({pos[0], neg[0]} & {c.pos_b, c.pos_a}):
                problems.append(f"scalar factor {f.weights} avoids both torsion coordinates")
        else:
            if {pos[0], neg[0]} != {c.pos_b, c.pos_a}:
                problems.append(f"mixed factor {f.weights} is not a torsion-torsion difference")
    seen = set()
    for f in den:
        key = (f.H, f.h, f.weights)
        if key in seen:
            problems.append(f"factor {key} printed twice")
        seen.add(key)
    for o in others:
        if o.number != e.number and o.denominator == e.denominator:
            problems.append(f"denominator duplicates entry {o.number}")
    return problems


def _e(number, header, numerator, denominator, **kw):
    return AppendixEntry(number, tuple(header.split(",")), numerator, denominator, **kw)


ENTRIES: tuple[AppendixEntry, ...] = (
    _e(1, "0,3,t,t", "(h+w2+w3)^16",
       "(h+w2-w1)^4 (h+w3-w1)^4 (w1-w0) (h-w1+w0)^2 (w2-w0) (w3-w0)"),
    _e(2, "t,3,t,0", "(h+w0+w2)^16",
       "(h+w0-w1)^4 (h+w2-w1)^4 (w1-w3) (h-w1+w3)^2 (w2-w3) (w0-w3)"),
    _e(3, "t,3,0,t", "(h+w0+w3)^16",
       "(h+w0-w1)^4 (h+w3-w1)^4 (w1-w2) (h-w1+w2)^2 (w0-w2) (w3-w2)"),
    _e(4, "0,t,3,t", "(h+w1+w3)^16",
       "(h+w1-w2)^4 (h+w3-w2)^4 (w2-w0) (h-w2+w0)^2 (w1-w0) (w3-w0)"),
    _e(5, "t,t,3,0", "(h+w0+w1)^16",
       "(h+w0-w2)^4 (h+w1-w2)^4 (w2-w3) (h-w2+w3)^2 (w0-w3) (w1-w3)"),
    _e(6, "t,0,3,t", "(h+w0+w3)^16",
       "(h+w0-w2)^4 (h+w3-w2)^4 (w2-w1) (h-w2+w1)^2 (w0-w1) (w3-w1)"),
    _e(7, "3,t,0,t", "(h+w1+w2)^16",
       "(h+w1-w0)^4 (h+w2-w0)^4 (w0-w3) (h-w0+w3)^2 (w1-w3) (w2-w3)",
       status="header-typo", component=FixedComponent(b=3, pos_b=0, pos_a=3, a=0),
       note="formula belongs to (3,t,t,0); header duplicates entry 9"),
    _e(8, "3,0,t,t", "(h+w2+w3)^16",
       "(h+w2-w0)^4 (h+w3-w0)^4 (w0-w1) (h-w0+w1)^2 (w2-w1) (w3-w1)"),
    _e(9, "3,t,0,t", "(h+w1+w3)^16",
       "(h+w1-w0)^4 (h+w3-w0)^4 (w0-w2) (h-w0+w2)^2 (w1-w2) (w3-w2)"),
    _e(10, "0,t,t,3", "(h+w1+w2)^16",
       "(h+w1-w3)^4 (h+w2-w3)^4 (w3-w0) (h-w3+w0)^2 (w1-w0) (w2-w0)"),
    _e(11, "t,0,t,3", "(h+w0+w2)^16",
       "(h+w0-w3)^4 (h+w2-w3)^4 (w3-w1) (h-w3+w1)^2 (w0-w1) (w2-w1)"),
    _e(12, "t,t,0,3", "(h+w0+w1)^16",
       "(h+w0-w3)^4 (h+w1-w3)^4 (w3-w2) (h-w3+w2)^2 (w0-w2) (w1-w2)"),
    _e(13, "1,2,t,t", "(H+h+w2+w3)^16",
       "(h+w1-w0)^2 (H+2h+w0-w1) (h+w2-w0)^2 (h+w3-w0)^2 (H+w3-w1)^3 (H+w2-w1)^3"),
    _e(14, "1,t,2,t", "(H+h+w1+w3)^16",
       "(h+w2-w0)^2 (H+2h+w0-w2) (h+w1-w0)^2 (h+w3-w0)^2 (H+w1-w2)^3 (H+w3-w2)^3"),
    _e(15, "1,t,2,t", "(H+h+w1+w2)^16",
       "(h+w3-w0)^2 (H+2h+w0-w3) (h+w2-w0)^2 (h+w1-w0)^2 (H+w2-w3)^3 (H+w1-w0)^3",
       status="excluded", note="header repeats entry 14; P^2 factor (H+w1-w0) has the wrong base weight"),
    _e(16, "t,1,2,t", "(H+h+w0+w3)^16",
       "(h+w2-w1)^2 (H+2h+w1-w2) (h+w0-w1)^2 (h+w3-w1)^2 (H+w0-w2)^3 (H+w3-w2)^3"),
    _e(17, "t,1,t,2", "(H+h+w0+w2)^16",
       "(h+w3-w1)^2 (H+2h+w1-w3) (h+w0-w1)^2 (h+w2-w1)^2 (H+w0-w3)^3 (H+w2-w3)^3"),
    _e(18, "2,1,t,t", "(H+h+w2+w3)^16",
       "(h+w3-w1)^2 (H+2h+w1-w3) (h+w2-w1)^2 (h+w3-w1)^2 (H+w2-w0)^3 (H+w3-w0)^3",
       status="excluded", note="(h+w3-w1)^2 printed twice; mixed factor uses w3 instead of w0"),
    _e(19, "t,2,1,t", "(H+h+w0+w3)^16",
       "(h+w0-w2)^2 (H+2h+w2-w0) (h+w0-w2)^2 (h+w3-w2)^2 (H+w0-w1)^3 (H+w3-w1)^3",
       status="excluded", note="(h+w0-w2)^2 printed twice; same formula as entry 20"),
    _e(20, "t,t,1,2", "(H+h+w0+w3)^16",
       "(h+w0-w2)^2 (H+2h+w2-w0) (h+w0-w2)^2 (h+w3-w2)^2 (H+w0-w1)^3 (H+w3-w1)^3",
       status="excluded", note="verbatim copy of entry 19; inconsistent with its header"),
    _e(21, "2,t,1,t", "(H+h+w0+w1)^16",
       "(h+w0-w2)^2 (H+2h+w2-w0) (h+w1-w2)^2 (h+w3-w2)^2 (H+w1-w0)^3 (H+w3-w0)^3",
       status="numerator-typo", note="numerator should carry w1+w3"),
    _e(22, "t,t,2,1", "(H+h+w0+w1)^16",
       "(h+w2-w1)^2 (H+2h+w1-w2) (h+w0-w3)^2 (h+w1-w3)^2 (H+w0-w2)^3 (H+w1-w2)^3",
       status="excluded", note="P^1 factor (h+w2-w1) and mixed factor use w1 instead of w3"),
    _e(23, "t,2,t,1", "(H+h+w0+w2)^16",
       "(h+w1-w3)^2 (H+2h+w3-w1) (h+w0-w3)^2 (h+w2-w3)^2 (H+w0-w1)^3 (H+w2-w3)^3",
       status="excluded", note="P^2 factor (H+w2-w3) should subtract w1"),
    _e(24, "2,t,t,1", "(H+h+w1+w2)^16",
       "(h+w0-w3)^2 (H+2h+w3-w0) (h+w2-w3)^2 (h+w1-w3)^2 (H+w1-w0)^3 (H+w2-w0)^3"),
)
