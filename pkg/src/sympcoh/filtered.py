"""The extended (filtered) complex and its cohomology dimensions č^{(k)}_q.

The chain runs, for a fixed 1 <= k <= n, through total degrees
0..2n+2k-1:

    Λ^0 -d-> ... -d-> Λ^{2k-1} -pd-> Ω̌^{2k} -ď-> ... -ď-> Ω̌^{n+k-1}
        -D-> C^{n-k+1} -d-> C^{n-k+2} -d-> ... -d-> C^{2n}

where Ω̌^q = Λ^q / ω^k∧Λ^{q-2k} is realized by an explicit echelon
complement, D(α̌) = dγ with γ the unique (n-k)-form solving ω^k∧γ = dα,
and the tail C^q = ker(∧ω^k) is shared with the coeffective module.  For
k = n the quotient range 2k..n+k-1 is empty and D acts straight on
Λ^{2n-1}; empty stage ranges are legal and handled uniformly.

The long-exact-sequence oracle recomputes every dimension from Betti
numbers and ranks of L^k on cohomology alone, so the two routes share no
machinery above the de Rham layer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffective import coeffective_ladder, coeffective_subspace, _restricted_d_rank
from .derham import derham
from .exterior import ExteriorForm
from .liealgebra import d_form
from .linalg import Matrix, Solver, extend_to_standard_basis, rank
from .symplectic import SymplecticForm


@dataclass(frozen=True)
class FilteredLadder:
    k: int
    dims: dict            # q -> č^{(k)}_q for 0 <= q <= 2n+2k-1
    chi_plus: int         # alternating sum over the first half (q <= n+k-1)
    chi_minus: int


def operator_D(sym: SymplecticForm, k: int, alpha: ExteriorForm) -> ExteriorForm:
    """D(α̌) = dγ where dα = ω^k ∧ γ; well defined on the quotient."""
    n = sym.n
    if alpha.degree != n + k - 1:
        raise ValueError(f"D expects degree {n + k - 1}, got {alpha.degree}")
    dalpha = d_form(sym.algebra, alpha)
    gamma = sym.lefschetz_solver(k).solve(dalpha.to_vector())
    assert gamma is not None  # L^k: Λ^{n-k} -> Λ^{n+k} is bijective
    gamma_form = ExteriorForm.from_vector(sym.algebra.dim, n - k, gamma)
    return d_form(sym.algebra, gamma_form)


class _QuotientStage:
    """Λ^q / im(∧ω^k) realized by standard basis vectors off the image."""

    def __init__(self, sym: SymplecticForm, k: int, q: int):
        w = sym.lefschetz_power(k, q - 2 * k)  # columns span im L^k inside Λ^q
        self.image = w
        self.complement = extend_to_standard_basis(w)
        self.dim = len(self.complement)
        amb = sym._dims(q)
        cols = []
        for idx in self.complement:
            col = [0] * amb
            col[idx] = 1
            cols.append(col)
        self.incl = Matrix.from_columns(cols, rows=amb)
        self._solver = Solver(w.hstack(self.incl))
        self._w_cols = w.cols

    def coordinatize(self, vec) -> list:
        sol = self._solver.solve(vec)
        assert sol is not None  # [image | complement] spans Λ^q
        return sol[self._w_cols:]


def _stage_data(sym: SymplecticForm, k: int, q: int) -> _QuotientStage:
    key = ("stage", k, q)
    cached = sym._cache.get(key)
    if cached is None:
        cached = _QuotientStage(sym, k, q)
        sym._cache[key] = cached
    return cached


def filtered_chain_matrices(sym: SymplecticForm, k: int) -> tuple[list[int], list[Matrix]]:
    """Node dimensions and consecutive maps of the full complex (explicit).

    Slower than the rank shortcuts in filtered_ladder; used by tests that
    assert the chain property across the D junction.
    """
    n = sym.n
    dim = sym.algebra.dim
    total = 2 * n + 2 * k  # nodes 0..total-1
    node_dims: list[int] = []
    maps: list[Matrix] = []

    def c_solver(q: int) -> Solver:
        key = ("Csolver", k, q)
        cached = sym._cache.get(key)
        if cached is None:
            cached = Solver(coeffective_subspace(sym, k, q).basis)
            sym._cache[key] = cached
        return cached

    for q in range(total):
        if q <= 2 * k - 1:
            node_dims.append(sym._dims(q))
        elif q <= n + k - 1:
            node_dims.append(_stage_data(sym, k, q).dim)
        else:
            node_dims.append(coeffective_subspace(sym, k, q - 2 * k + 1).dim)
    for q in range(total - 1):
        if q + 1 <= 2 * k - 1:
            maps.append(sym.d(q))
        elif q + 1 <= n + k - 1:
            stage_out = _stage_data(sym, k, q + 1)
            incl = (sym.d(q) @ _stage_data(sym, k, q).incl) if q >= 2 * k else sym.d(q)
            cols = [stage_out.coordinatize(incl.column(j)) for j in range(incl.cols)]
            maps.append(Matrix.from_columns(cols, rows=stage_out.dim))
        elif q + 1 == n + k:
            # the D junction into C^{n-k+1}
            incl = _stage_data(sym, k, q).incl if q >= 2 * k else Matrix.identity(sym._dims(q))
            solver = sym.lefschetz_solver(k)
            csolve = c_solver(n - k + 1)
            d_low = sym.d(n - k)
            d_here = sym.d(n + k - 1)
            cols = []
            for j in range(incl.cols):
                w = d_here.matvec(incl.column(j))
                gamma = solver.solve(w)
                assert gamma is not None
                dg = d_low.matvec(gamma)
                coords = csolve.solve(dg)
                assert coords is not None  # dγ is k-coeffective
                cols.append(coords)
            maps.append(Matrix.from_columns(cols, rows=node_dims[q + 1]))
        else:
            cq = q - 2 * k + 1  # ambient coeffective degree of the source node
            basis = coeffective_subspace(sym, k, cq).basis
            image = sym.d(cq) @ basis
            csolve = c_solver(cq + 1)
            cols = [csolve.solve(image.column(j)) for j in range(image.cols)]
            assert all(c is not None for c in cols)
            maps.append(Matrix.from_columns(cols, rows=node_dims[q + 1]))
    return node_dims, maps


def filtered_ladder(sym: SymplecticForm, k: int) -> FilteredLadder:
    """All č^{(k)}_q by direct computation on the extended complex."""
    n = sym.n
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    key = ("filtered ladder", k)
    cached = sym._cache.get(key)
    if cached is not None:
        return cached
    total = 2 * n + 2 * k
    node_dims: list[int] = []
    out_rank: list[int] = []
    for q in range(total):
        if q <= 2 * k - 1:
            node_dims.append(sym._dims(q))
        elif q <= n + k - 1:
            node_dims.append(_stage_data(sym, k, q).dim)
        else:
            node_dims.append(coeffective_subspace(sym, k, q - 2 * k + 1).dim)
    for q in range(total):
        if q == total - 1:
            out_rank.append(0)
        elif q + 1 <= 2 * k - 1:
            out_rank.append(_plain_d_rank(sym, q))
        elif q + 1 <= n + k - 1:
            # rank of proj∘d∘incl = rank[im L^k | d·incl] - rank(im L^k)
            w_next = sym.lefschetz_power(k, q + 1 - 2 * k)
            incl = (sym.d(q) @ _stage_data(sym, k, q).incl) if q >= 2 * k else sym.d(q)
            out_rank.append(rank(w_next.hstack(incl)) - w_next.cols)
        elif q + 1 == n + k:
            incl = _stage_data(sym, k, q).incl if q >= 2 * k else Matrix.identity(sym._dims(q))
            solver = sym.lefschetz_solver(k)
            d_low = sym.d(n - k)
            d_here = sym.d(n + k - 1)
            cols = []
            for j in range(incl.cols):
                gamma = solver.solve(d_here.matvec(incl.column(j)))
                assert gamma is not None
                cols.append(d_low.matvec(gamma))
            out_rank.append(rank(Matrix.from_columns(cols, rows=sym._dims(n - k + 1))))
        else:
            out_rank.append(_restricted_d_rank(sym, k, q - 2 * k + 1))
    dims = {}
    for q in range(total):
        incoming = out_rank[q - 1] if q else 0
        dims[q] = node_dims[q] - out_rank[q] - incoming
    chi_plus = sum(d if q % 2 == 0 else -d for q, d in dims.items() if q <= n + k - 1)
    chi_minus = sum(d if q % 2 == 0 else -d for q, d in dims.items() if q >= n + k)
    ladder = FilteredLadder(k, dims, chi_plus, chi_minus)
    sym._cache[key] = ladder
    return ladder


def _plain_d_rank(sym: SymplecticForm, q: int) -> int:
    key = ("rank d", q)
    cached = sym._cache.get(key)
    if cached is None:
        cached = rank(sym.d(q))
        sym._cache[key] = cached
    return cached


def filtered_les_oracle(sym: SymplecticForm, k: int) -> dict:
    """Every č^{(k)}_q from the long exact sequence: Betti numbers, ranks of
    L^k on cohomology, and the tail identification with the coeffective
    numbers.  Shares nothing with the direct chain above the de Rham layer.
    """
    n = sym.n
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    dR = derham(sym.algebra)

    def b(j: int) -> int:
        return dR.betti_at(j)

    def r(j: int) -> int:
        if j < 0 or j > sym.algebra.dim or j + 2 * k > sym.algebra.dim:
            return 0
        return dR.lefschetz_rank(sym, k, j)

    coeff = coeffective_ladder(sym, k)
    out = {}
    for q in range(2 * n + 2 * k):
        if q <= 2 * k - 2:
            out[q] = b(q)
        elif q <= n + k:
            # five-term splice: coker(L^k into H^q) ⊕ ker(L^k from H^{q-2k+1})
            out[q] = (b(q) - r(q - 2 * k)) + (b(q - 2 * k + 1) - r(q - 2 * k + 1))
        else:
            out[q] = coeff.dims_c[q - 2 * k + 1]
    return out


def five_term_coeffective_dims(sym: SymplecticForm, k: int) -> dict:
    """c^{(k)}_q = b_q + b_{q+2k-1} - rank L^k(H^{q-1}) - rank L^k(H^q) for
    q >= n-k+2: the rank form of the five-term exact sequences.  Used by the
    acceptance oracle to check the direct subcomplex at every tail degree.
    """
    n = sym.n
    dR = derham(sym.algebra)

    def r(j: int) -> int:
        if j < 0 or j + 2 * k > sym.algebra.dim:
            return 0
        return dR.lefschetz_rank(sym, k, j)

    return {q: dR.betti_at(q) + dR.betti_at(q + 2 * k - 1) - r(q - 1) - r(q)
            for q in range(n - k + 2, 2 * n + 1)}
