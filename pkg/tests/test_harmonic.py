import pytest

from sympcoh.coeffective import coeffective_ladder
from sympcoh.derham import betti_numbers
from sympcoh.exterior import parse_form
from sympcoh.harmonic import (harmonic_middle_image_rank, harmonic_numbers,
                              harmonic_numbers_delta_oracle, harmonic_profile)
from sympcoh.liealgebra import parse_salamon
from sympcoh.symplectic import SymplecticForm


def sym_of(name, omega):
    spec = parse_salamon(name)
    return SymplecticForm(spec, parse_form(omega, spec.dim))


def test_torus_all_classes_harmonic():
    sym = sym_of("(0,0,0,0,0,0)", "12+34+56")
    assert harmonic_numbers(sym) == betti_numbers(sym.algebra)


def test_kodaira_thurston_numbers():
    sym = sym_of("(0,0,0,12)", "13+24")
    assert harmonic_numbers(sym) == (1, 3, 4, 2, 1)


def test_example_family_special_and_generic():
    special = sym_of("(0,0,0,12,14,15+23+24)", "-16-25+34")
    generic = sym_of("(0,0,0,12,14,15+23+24)", "13+26-45")
    assert harmonic_numbers(special)[3:6] == (4, 3, 0)
    assert harmonic_numbers(generic)[3:6] == (5, 4, 2)


@pytest.mark.parametrize("name,omega", [
    ("(0,0,0,0,0,0)", "12+34+56"),
    ("(0,0,0,12)", "13+24"),
    ("(0,0,0,12,14,15+23+24)", "-16-25+34"),
    ("(0,0,0,12,13,23)", "16-2*25-3*34"),
    ("(13,-23,0,0)", "12+34"),
    ("(0,12)", "12"),
])
def test_delta_oracle_agrees_with_recursion(name, omega):
    sym = sym_of(name, omega)
    assert harmonic_numbers(sym) == harmonic_numbers_delta_oracle(sym)


def test_low_degrees_equal_betti_on_unimodular():
    for name, omega in [("(0,0,0,12)", "13+24"), ("(0,0,12,13,14,15)", "16+25-34")]:
        sym = sym_of(name, omega)
        h = harmonic_numbers(sym)
        b = betti_numbers(sym.algebra)
        assert h[:3] == b[:3]
        assert h[sym.algebra.dim] == b[sym.algebra.dim]
        assert h[sym.algebra.dim - 1] % 2 == 0


def test_difference_identity_with_coeffective():
    sym = sym_of("(0,0,0,12,14,15+23+24)", "13+26-45")
    h = harmonic_numbers(sym)
    n = sym.n

    def at(q):
        return h[q] if 0 <= q <= sym.algebra.dim else 0

    for k in range(1, n + 1):
        assert at(n - k + 1) - at(n + k + 1) == coeffective_ladder(sym, k).c_hat


def test_middle_image_rank_matches_upper_harmonic():
    sym = sym_of("(0,0,12,13,23,14-25)", "15+16+24-35")
    h = harmonic_numbers(sym)
    for k in range(1, sym.n + 1):
        assert harmonic_middle_image_rank(sym, k) == h[sym.n + k]


def test_profile_exposes_subspaces():
    sym = sym_of("(0,0,0,12)", "13+24")
    prof = harmonic_profile(sym)
    b = betti_numbers(sym.algebra)
    for q, space in enumerate(prof.subspaces):
        assert space.ambient_dim == b[q]
        assert space.dim == prof.numbers[q]
