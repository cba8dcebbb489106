import pytest

from sympcoh.coeffective import c_hat_oracle, chi_k, coeffective_ladder, coeffective_subspace
from sympcoh.derham import betti_numbers
from sympcoh.exterior import degree_masks, parse_form
from sympcoh.liealgebra import parse_salamon
from sympcoh.symplectic import SymplecticForm


def sym_of(name, omega):
    spec = parse_salamon(name)
    return SymplecticForm(spec, parse_form(omega, spec.dim))


def test_torus_values():
    sym = sym_of("(0,0,0,0,0,0)", "12+34+56")
    ladder = coeffective_ladder(sym, 1)
    assert ladder.c_hat == 14
    assert ladder.dims_c[4] == 14
    # HLC lower bounds: c_q = b_q - b_{q+2k}
    b = betti_numbers(sym.algebra)
    for k in range(1, 4):
        lad = coeffective_ladder(sym, k)
        for q in range(3 - k + 2, 7):
            expect = b[q] - (b[q + 2 * k] if q + 2 * k <= 6 else 0)
            assert lad.dims_c[q] == expect


def test_exact_two_dim_example():
    sym = sym_of("(0,12)", "12")
    ladder = coeffective_ladder(sym, 1)
    assert ladder.dims_c[2] == 0          # = b2 + b3 = 0: exact upper bound attained
    assert ladder.c_hat == 1 == betti_numbers(sym.algebra)[1]
    assert c_hat_oracle(sym, 1) == 1


def test_free_two_step_row_witnesses():
    hi = sym_of("(0,0,0,12,13,23)", "16-25-2*34")
    lo = sym_of("(0,0,0,12,13,23)", "14+25+34-36")
    assert coeffective_ladder(hi, 1).c_hat == 10 and coeffective_ladder(hi, 1).dims_c[4] == 8
    assert coeffective_ladder(lo, 1).c_hat == 9 and coeffective_ladder(lo, 1).dims_c[4] == 7


@pytest.mark.parametrize("name,omega", [
    ("(0,0,0,0,0,0)", "12+34+56"),
    ("(0,0,0,12,14,15+23+24)", "-16-25+34"),
    ("(0,0,0,12,13,14+23)", "16+2*25+34"),
    ("(0,12)", "12"),
    ("(13,-23,0,0)", "12+34"),
])
def test_c_hat_oracle_agreement(name, omega):
    sym = sym_of(name, omega)
    for k in range(1, sym.n + 1):
        assert coeffective_ladder(sym, k).c_hat == c_hat_oracle(sym, k)


def test_torus_oracle_is_betti_difference():
    sym = sym_of("(0,0,0,0,0,0)", "12+34+56")
    b = betti_numbers(sym.algebra)
    for k, expect in ((1, b[3] - b[5]), (2, b[2] - b[6]), (3, b[1])):
        assert c_hat_oracle(sym, k) == expect
    assert [c_hat_oracle(sym, k) for k in (1, 2, 3)] == [14, 14, 6]


def test_chi_values():
    sym = sym_of("(0,0,0,0,0,0)", "12+34+56")
    assert chi_k(sym, 1) == -5            # -b3 + b4
    assert chi_k(sym, 3) == -1            # Euler characteristic 0 with b0 = 1
    s2 = sym_of("(0,0)", "12")
    assert chi_k(s2, 1) == -1             # -b1 + b2


def test_subspace_structure():
    sym = sym_of("(0,0,0,12,14,15+23+24)", "13+26-45")
    n = sym.n
    for k in range(1, n + 1):
        # C^q = 0 for q <= n-k, all of Λ^q for q >= 2n-2k+1
        assert coeffective_subspace(sym, k, n - k).dim == 0
        for q in range(2 * n - 2 * k + 1, 2 * n + 1):
            assert coeffective_subspace(sym, k, q).dim == len(degree_masks(6, q))
        ladder = coeffective_ladder(sym, k)
        assert sorted(ladder.dims_c) == list(range(n - k + 1, 2 * n + 1))


def test_k_range_errors():
    sym = sym_of("(0,0,0,0,0,0)", "12+34+56")
    with pytest.raises(ValueError):
        coeffective_ladder(sym, 0)
    with pytest.raises(ValueError):
        c_hat_oracle(sym, 4)
