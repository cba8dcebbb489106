"""k-coeffective cohomology: the subcomplex C^q = ker(∧ω^k) and its numbers.

Two independent routes are kept for the quotient dimension ĉ_{n-k+1}:

* primary: dim ker(L^k: H^{n-k+1} -> H^{n+k+1}), a single rank computation
  on cohomology;
* oracle: the image complex L^k(Λ^*) with the restricted differential, its
  cocycles at ambient degree n+k, and the connecting map α -> dβ with
  L^k β = α (β unique because L^k: Λ^{n-k} -> Λ^{n+k} is bijective).

c^{(k)}_q for q >= n-k+1 comes from the restricted-d ranks of the direct
subcomplex.  The degree q = n-k+1 is finite here even though it need not be
on a manifold; reports flag it as algebra-level only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .derham import derham
from .linalg import Matrix, Subspace, kernel_basis, rank
from .symplectic import SymplecticForm


@dataclass(frozen=True)
class CoeffectiveLadder:
    k: int
    spaces: dict          # q -> Subspace C^q_(k) ⊆ Λ^q
    dims_c: dict          # q -> c^{(k)}_q for n-k+1 <= q <= 2n
    c_hat: int            # dim Ĥ^{n-k+1}


def coeffective_subspace(sym: SymplecticForm, k: int, q: int) -> Subspace:
    """C^q_(k) = ker(∧ω^k: Λ^q -> Λ^{q+2k}); cached per symplectic form."""
    key = ("C", k, q)
    cached = sym._cache.get(key)
    if cached is None:
        cached = kernel_basis(sym.lefschetz_power(k, q))
        sym._cache[key] = cached
    return cached


def _restricted_d_rank(sym: SymplecticForm, k: int, q: int) -> int:
    """rank of d restricted to C^q_(k) (rank is basis-independent)."""
    key = ("rank dC", k, q)
    cached = sym._cache.get(key)
    if cached is None:
        space = coeffective_subspace(sym, k, q)
        if space.dim == 0:
            cached = 0
        else:
            image = sym.d(q) @ space.basis
            # dω = 0 makes C^* a subcomplex; cheap guard against sign bugs
            if not (sym.lefschetz_power(k, q + 1) @ image).is_zero():
                raise RuntimeError(f"d(C^{q}) escapes C^{q + 1} for k={k}")
            cached = rank(image)
        sym._cache[key] = cached
    return cached


def coeffective_ladder(sym: SymplecticForm, k: int) -> CoeffectiveLadder:
    n = sym.n
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    key = ("coeff ladder", k)
    cached = sym._cache.get(key)
    if cached is not None:
        return cached
    dim = sym.algebra.dim
    spaces = {q: coeffective_subspace(sym, k, q) for q in range(n - k + 1, dim + 1)}
    dims_c = {}
    for q in range(n - k + 1, dim + 1):
        ker_dim = spaces[q].dim - _restricted_d_rank(sym, k, q)
        prev = _restricted_d_rank(sym, k, q - 1) if q - 1 >= n - k + 1 else 0
        dims_c[q] = ker_dim - prev
    dR = derham(sym.algebra)
    c_hat = dR.betti_at(n - k + 1) - dR.lefschetz_rank(sym, k, n - k + 1)
    ladder = CoeffectiveLadder(k, spaces, dims_c, c_hat)
    sym._cache[key] = ladder
    return ladder


def c_hat_oracle(sym: SymplecticForm, k: int) -> int:
    """ĉ_{n-k+1} from the definition: H^{n-k+1}_(k) over the connecting image."""
    n = sym.n
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    # H^{n-k+1}_(k) = ker(d|C^{n-k+1}) outright: C^{n-k}_(k) = 0 by linear HL
    c_space = coeffective_subspace(sym, k, n - k + 1)
    h_dim = c_space.dim - _restricted_d_rank(sym, k, n - k + 1)
    # cocycles of the image complex L^k(Λ^*) at ambient degree n+k;
    # L^k(Λ^{n-k}) is all of Λ^{n+k}, so these are the plain (n+k)-cocycles
    cocycles = kernel_basis(sym.d(n + k))
    solver = sym.lefschetz_solver(k)
    d_low = sym.d(n - k)
    connecting = []
    for alpha in cocycles.basis.columns():
        beta = solver.solve(alpha)
        assert beta is not None
        connecting.append(d_low.matvec(beta))
    image_dim = Subspace.from_columns(sym._dims(n - k + 1), connecting).dim
    return h_dim - image_dim


def chi_k(sym: SymplecticForm, k: int) -> int:
    """Alternating sum (-1)^{n-k+1} ĉ_{n-k+1} + Σ_{i>=n-k+2} (-1)^i c^{(k)}_i."""
    ladder = coeffective_ladder(sym, k)
    n = sym.n
    total = ladder.c_hat if (n - k + 1) % 2 == 0 else -ladder.c_hat
    for q in range(n - k + 2, 2 * n + 1):
        total += ladder.dims_c[q] if q % 2 == 0 else -ladder.dims_c[q]
    return total
