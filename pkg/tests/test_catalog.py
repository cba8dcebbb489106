import pytest

from sympcoh.catalog import (F_H_NOT_C, CatalogEntry, catalog, find_entry, run_entry,
                             six_dim_entries)
from sympcoh.derham import betti_numbers
from sympcoh.exterior import parse_form
from sympcoh.liealgebra import validate
from sympcoh.symplectic import is_symplectic


def test_twenty_six_six_dim_entries():
    entries = six_dim_entries()
    assert len(entries) == 26
    assert len({e.name for e in entries}) == 26
    assert all(not e.auxiliary for e in entries)


def test_auxiliary_entries_present():
    names = {e.name for e in catalog()}
    for aux in ["(0,0,0,12)", "(13,-23,0,0)", "(0,12)", "(0,0)", "(0,0,0,0)"]:
        assert aux in names
    assert "(0,0,0,0,0,0)" in names  # the 6-torus is a table row


def test_entry_metadata_matches_computation():
    for entry in six_dim_entries():
        spec = entry.spec()
        b = betti_numbers(spec)
        assert (b[1], b[2]) == (entry.b1, entry.b2)
        assert validate(spec).step == entry.step


def test_expected_sets_examples():
    e = find_entry("(0,0,12,13,23,14-25)")
    assert e.expected["h4"] == frozenset({2, 3, 4})
    assert e.expected["check1_4"] == frozenset({6, 5, 4})
    assert e.expected["c_hat3"] == frozenset({4})

    e = find_entry("(0,0,0,12,13+42,14+23)")
    assert all(len(e.expected[k]) == 1 for k in e.expected)
    order = ("h3", "h4", "h5", "c_hat3", "c1_4", "check1_4", "check2_5")
    assert tuple(next(iter(e.expected[k])) for k in order) == (5, 3, 0, 5, 6, 7, 7)

    e = find_entry("(0,0,12,13,14,15)")
    assert e.expected["h4"] == frozenset({2})   # corrected value
    assert "corrected" in e.note


def test_corrected_rows_carry_notes():
    corrected = ["(0,0,12,13,14,15)", "(0,0,12,13,14,23+15)",
                 "(0,0,0,12,14,15+23)", "(0,0,0,0,12,14+25)"]
    for name in corrected:
        assert "corrected" in find_entry(name).note


def test_every_witness_is_symplectic():
    for entry in catalog():
        spec = entry.spec()
        if spec.dim % 2:
            continue
        for w in entry.witnesses:
            assert is_symplectic(spec, parse_form(w, spec.dim, degree=2)), (entry.name, w)


def test_multivalued_rows_have_witness_per_value():
    # witnesses alone must realize every expected value of every column
    for entry in six_dim_entries():
        if all(len(v) == 1 for v in entry.expected.values()):
            continue
        result = run_entry(entry, max_samples=0)
        for key, expected in entry.expected.items():
            want = entry.verified_overrides.get(key, expected)
            assert result.achieved[key] == want, (entry.name, key)


def test_expected_flexibility_counts_from_printed_sets():
    entries = six_dim_entries()
    flags = {e.name: e.expected_flexibility() for e in entries}
    assert sum(1 for c, _, _ in flags.values() if c) == 7
    assert sum(1 for _, f, _ in flags.values() if f) == 10
    assert sum(1 for _, _, h in flags.values() if h) == 10
    assert all(f == h for _, f, h in flags.values())
    assert {n for n, (c, f, h) in flags.items() if f and not c} == set(F_H_NOT_C)


def test_only_documented_overrides():
    overriding = [e for e in six_dim_entries() if e.verified_overrides]
    assert [e.name for e in overriding] == ["(0,0,0,12,13,23)"]
    e = overriding[0]
    assert e.verified_overrides == {"check1_4": frozenset({10, 9}), "dimS": 11}
    assert "misprint" in e.note


def test_find_entry_unknown():
    with pytest.raises(KeyError):
        find_entry("(0,0,99)")
