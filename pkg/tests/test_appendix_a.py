import pytest

from quotdeg.appendix_a import (
    ENTRIES,
    component_from_header,
    expand_denominator,
    expand_numerator,
    lint_entry,
    parse_product,
)
from quotdeg.fixed_points import FixedComponent, enumerate_components
from quotdeg.localization import alpha_restriction, normal_euler_class

WEIGHTS = [(0, 1, 2, 3), (0, 1, 3, 7), (-3, 0, 2, 11)]
BY_NUMBER = {e.number: e for e in ENTRIES}


def test_table_has_24_entries():
    assert sorted(BY_NUMBER) == list(range(1, 25))


def test_status_partition():
    by_status = {}
    for e in ENTRIES:
        by_status.setdefault(e.status, []).append(e.number)
    assert by_status == {
        "ok": [1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 16, 17, 24],
        "header-typo": [7],
        "numerator-typo": [21],
        "excluded": [15, 18, 19, 20, 22, 23],
    }


def test_parse_product():
    fs = parse_product("(h+w2-w1)^4 (w1-w0) (H+2h+w0-w1)^-1")
    assert [(f.H, f.h, f.weights, f.exponent) for f in fs] == [
        (0, 1, (0, -1, 1, 0), 4),
        (0, 0, (-1, 1, 0, 0), 1),
        (1, 2, (1, -1, 0, 0), -1),
    ]
    with pytest.raises(ValueError):
        parse_product("(h+w2) junk")
    with pytest.raises(ValueError):
        parse_product("(h+x)")


def test_component_from_header():
    assert component_from_header(("1", "2", "t", "t")) == FixedComponent(b=2, pos_b=1, pos_a=0, a=1)
    assert component_from_header(("0", "3", "t", "t")) == FixedComponent(b=3, pos_b=1, pos_a=0, a=0)
    with pytest.raises(ValueError):
        component_from_header(("1", "t", "t", "t"))


@pytest.mark.parametrize("e", [e for e in ENTRIES if e.status == "ok"], ids=lambda e: f"entry{e.number}")
def test_clean_entries_pass_lint(e):
    assert lint_entry(e, ENTRIES) == []


def test_header_typo_entry_is_clean_under_its_repaired_component():
    e = BY_NUMBER[7]
    assert lint_entry(e, ENTRIES) != []
    assert lint_entry(e, ENTRIES, component=e.component) == []


def test_numerator_typo_entry_fails_only_numerator():
    problems = lint_entry(BY_NUMBER[21], ENTRIES)
    assert problems and all(p.startswith("numerator") for p in problems)


@pytest.mark.parametrize("number", [15, 18, 19, 20, 22, 23])
def test_excluded_entries_fail_denominator_lint(number):
    problems = lint_entry(BY_NUMBER[number], ENTRIES)
    assert any(not p.startswith("numerator") for p in problems)


def test_usable_entries_cover_distinct_components():
    comps = [e.resolved_component() for e in ENTRIES if e.usable_denominator]
    assert len(set(comps)) == len(comps)
    assert set(comps) <= set(enumerate_components(3))


@pytest.mark.parametrize("w", WEIGHTS)
@pytest.mark.parametrize("e", [e for e in ENTRIES if e.usable_denominator], ids=lambda e: f"entry{e.number}")
def test_golden_denominators(e, w):
    c = e.resolved_component()
    assert normal_euler_class(c, w).expand(*c.caps) == expand_denominator(e, w)


@pytest.mark.parametrize("w", WEIGHTS)
@pytest.mark.parametrize("e", [e for e in ENTRIES if e.usable_numerator], ids=lambda e: f"entry{e.number}")
def test_golden_numerators(e, w):
    c = e.resolved_component()
    assert alpha_restriction(c, w).to_series(*c.caps) ** 16 == expand_numerator(e, w)
