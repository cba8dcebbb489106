"""Symplectically harmonic cohomology dimensions h_q.

Primary algorithm: the subspace recursion
    H^q_hr = P^q + L(H^{q-2}_hr)          for q <= n,
    H^q_hr = L^{q-n}(H^{2n-q}_hr)         for q > n,
carried out entirely in H^q coordinates (P^0 = H^0 and P^1 = H^1 fall out
of the primitive-class kernel since ∧ω^{n+1} = 0).

Test-only second route: a form is symplectically harmonic when dα = 0 = δα;
the oracle intersects ker d with ker δ degreewise and measures the image in
cohomology.  The two must agree on every instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .derham import derham
from .linalg import Matrix, Subspace, kernel_basis, rank
from .symplectic import SymplecticForm


@dataclass(frozen=True)
class HarmonicProfile:
    """h_0..h_{2n} together with the subspaces H^q_hr ⊆ H^q (in H^q coords)."""

    numbers: tuple[int, ...]
    subspaces: tuple[Subspace, ...]


def harmonic_profile(sym: SymplecticForm) -> HarmonicProfile:
    cached = sym._cache.get("harmonic")
    if cached is not None:
        return cached
    dR = derham(sym.algebra)
    n = sym.n
    dim = sym.algebra.dim
    spaces: list[Subspace] = []
    for q in range(n + 1):
        prim = dR.primitive_classes(sym, q)
        if q >= 2:
            lifted = spaces[q - 2].image_under(dR.lefschetz_on_cohomology(sym, 1, q - 2))
            spaces.append(prim.sum(lifted))
        else:
            spaces.append(prim)
    for q in range(n + 1, dim + 1):
        src = spaces[dim - q]
        spaces.append(src.image_under(dR.lefschetz_on_cohomology(sym, q - n, dim - q)))
    profile = HarmonicProfile(tuple(s.dim for s in spaces), tuple(spaces))
    sym._cache["harmonic"] = profile
    return profile


def harmonic_numbers(sym: SymplecticForm) -> tuple[int, ...]:
    return harmonic_profile(sym).numbers


def harmonic_numbers_delta_oracle(sym: SymplecticForm) -> tuple[int, ...]:
    """dim of the image of {dα = 0 = δα} in H^q, degree by degree."""
    dR = derham(sym.algebra)
    dim = sym.algebra.dim
    out = []
    for q in range(dim + 1):
        stacked = dR.d(q).vstack(sym.delta_matrix(q))
        harm = kernel_basis(stacked)
        if harm.dim == 0:
            out.append(0)
            continue
        classes = [dR.class_vector(q, col) for col in harm.basis.columns()]
        out.append(rank(Matrix.from_columns(classes, rows=dR.betti_at(q))))
    return tuple(out)


def harmonic_middle_image_rank(sym: SymplecticForm, k: int) -> int:
    """dim L^k(H^{n-k}_hr) ⊆ H^{n+k}; compared against dim L^k(H^{n-k})."""
    dR = derham(sym.algebra)
    profile = harmonic_profile(sym)
    src = profile.subspaces[sym.n - k]
    return src.image_under(dR.lefschetz_on_cohomology(sym, k, sym.n - k)).dim
