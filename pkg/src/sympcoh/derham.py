"""De Rham (Chevalley-Eilenberg) cohomology with explicit representatives.

Representatives are chosen deterministically: the canonical kernel basis of
d is reduced against the canonical coboundary basis, and the echelon pivots
pick the cocycles that extend it.  Everything downstream (Lefschetz maps on
cohomology, primitive classes, truncated groups, harmonic subspaces) is
expressed in these H^q coordinates, so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exterior import ExteriorForm, degree_masks
from .liealgebra import LieAlgebraSpec, ce_differential, validate
from .linalg import Matrix, RZERO, Solver, Subspace, kernel_basis, rank, rref
from .symplectic import SymplecticForm


class NotClosedError(ValueError):
    """class_of was asked for a form that is not d-closed."""


@dataclass(frozen=True)
class CohomologySpace:
    """Basis data for one H^q: Betti number plus chosen cocycle representatives."""

    degree: int
    betti: int
    cocycle_reps: tuple[ExteriorForm, ...]

    def rep_vectors(self) -> list[list]:
        return [f.to_vector() for f in self.cocycle_reps]


class DeRhamCohomology:
    """Per-algebra cohomology data; build once, query freely."""

    def __init__(self, spec: LieAlgebraSpec):
        if not validate(spec).jacobi_ok:
            raise ValueError(f"{spec} violates the Jacobi identity")
        self.spec = spec
        dim = spec.dim
        self.dim = dim
        self._d = [ce_differential(spec, q) for q in range(dim)]
        self._reps: list[list[list]] = []
        self._solvers: list[Solver | None] = []
        self._boundary_dims: list[int] = []
        betti = []
        for q in range(dim + 1):
            dq = self.d(q)
            ker = kernel_basis(dq)
            if q == 0:
                bdry = Matrix.zeros(len(degree_masks(dim, 0)), 0)
            else:
                bdry = _column_space_matrix(self.d(q - 1))
            # echelon pivots of [coboundaries | cocycles] select the representatives
            stacked = bdry.hstack(ker.basis)
            _, pivots = rref(stacked)
            reps = [ker.basis.column(c - bdry.cols) for c in pivots if c >= bdry.cols]
            self._reps.append(reps)
            self._boundary_dims.append(bdry.cols)
            betti.append(len(reps))
            basis = Matrix.from_columns(reps + bdry.columns(),
                                        rows=len(degree_masks(dim, q)))
            self._solvers.append(Solver(basis))
        self.betti = tuple(betti)

    # -- raw complex --------------------------------------------------------
    def d(self, q: int) -> Matrix:
        dim = self.dim
        if 0 <= q < dim:
            return self._d[q]
        src = len(degree_masks(dim, q)) if 0 <= q <= dim else 0
        dst = len(degree_masks(dim, q + 1)) if 0 <= q + 1 <= dim else 0
        return Matrix.zeros(dst, src)

    def space_dim(self, q: int) -> int:
        return len(degree_masks(self.dim, q))

    def betti_at(self, q: int) -> int:
        return self.betti[q] if 0 <= q <= self.dim else 0

    # -- representatives and coordinates ------------------------------------
    def representatives(self, q: int) -> list[list]:
        return [col[:] for col in self._reps[q]]

    def cohomology_space(self, q: int) -> CohomologySpace:
        reps = tuple(ExteriorForm.from_vector(self.dim, q, col) for col in self._reps[q])
        return CohomologySpace(q, self.betti[q], reps)

    def class_vector(self, q: int, vec) -> list:
        """H^q coordinates of a closed q-form given by its Λ^q coordinates."""
        if any(x != 0 for x in self.d(q).matvec(vec)):
            raise NotClosedError(f"form of degree {q} is not closed")
        sol = self._solvers[q].solve(vec)
        assert sol is not None  # closed forms lie in [reps | coboundaries]
        return sol[: self.betti[q]]

    def class_of(self, form: ExteriorForm) -> list:
        return self.class_vector(form.degree, form.to_vector())

    def rep_combination(self, q: int, coords) -> ExteriorForm:
        """The representative cocycle with the given H^q coordinates."""
        vec = [RZERO] * self.space_dim(q)
        for c, col in zip(coords, self._reps[q]):
            if c:
                for i, x in enumerate(col):
                    if x:
                        vec[i] += c * x
        return ExteriorForm.from_vector(self.dim, q, vec)

    # -- Lefschetz action on cohomology --------------------------------------
    def lefschetz_on_cohomology(self, sym: SymplecticForm, k: int, q: int) -> Matrix:
        """Matrix of L^k = [·]∧[ω^k]: H^q -> H^{q+2k} in the chosen bases."""
        key = ("Lcoh", k, q)
        cached = sym._cache.get(key)
        if cached is not None:
            return cached
        target = q + 2 * k
        rows = self.betti_at(target)
        if q < 0 or q > self.dim or rows == 0:
            m = Matrix.zeros(rows, self.betti_at(q))
        else:
            lk = sym.lefschetz_power(k, q)
            cols = [self.class_vector(target, lk.matvec(rep)) for rep in self._reps[q]]
            m = Matrix.from_columns(cols, rows=rows)
        sym._cache[key] = m
        return m

    def lefschetz_rank(self, sym: SymplecticForm, k: int, q: int) -> int:
        key = ("Lrank", k, q)
        cached = sym._cache.get(key)
        if cached is None:
            cached = rank(self.lefschetz_on_cohomology(sym, k, q))
            sym._cache[key] = cached
        return cached

    def primitive_classes(self, sym: SymplecticForm, q: int) -> Subspace:
        """P^q = ker(L^{n-q+1}: H^q -> H^{2n-q+2}) as a subspace of H^q."""
        if q > sym.n:
            raise ValueError(f"primitive classes are defined for q <= n = {sym.n}")
        key = ("prim", q)
        cached = sym._cache.get(key)
        if cached is None:
            cached = kernel_basis(self.lefschetz_on_cohomology(sym, sym.n - q + 1, q))
            sym._cache[key] = cached
        return cached

    def truncated_dim(self, sym: SymplecticForm, q: int) -> int:
        """dim of the [ω]-truncated group: ker(L: H^q -> H^{q+2})."""
        return self.betti_at(q) - self.lefschetz_rank(sym, 1, q)

    def hlc(self, sym: SymplecticForm) -> bool:
        """Hard Lefschetz: L^k: H^{n-k} -> H^{n+k} surjective for all k."""
        n = sym.n
        return all(self.lefschetz_rank(sym, k, n - k) == self.betti_at(n + k)
                   for k in range(1, n + 1))


def _column_space_matrix(m: Matrix) -> Matrix:
    """Canonical basis matrix of col(m) (possibly zero columns dropped)."""
    return Subspace.from_columns(m.rows, m.columns()).basis


@lru_cache(maxsize=None)
def derham(spec: LieAlgebraSpec) -> DeRhamCohomology:
    return DeRhamCohomology(spec)


# -- spec-level convenience wrappers ----------------------------------------

def betti_numbers(spec: LieAlgebraSpec) -> tuple[int, ...]:
    return derham(spec).betti


def cohomology_basis(spec: LieAlgebraSpec, q: int) -> CohomologySpace:
    return derham(spec).cohomology_space(q)


def lefschetz_on_cohomology(sym: SymplecticForm, k: int, q: int) -> Matrix:
    return derham(sym.algebra).lefschetz_on_cohomology(sym, k, q)


def primitive_classes(sym: SymplecticForm, q: int) -> Subspace:
    return derham(sym.algebra).primitive_classes(sym, q)


def truncated_dim(sym: SymplecticForm, q: int) -> int:
    return derham(sym.algebra).truncated_dim(sym, q)
