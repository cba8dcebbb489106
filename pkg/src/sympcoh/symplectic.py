"""Symplectic structures on a Lie algebra and their operator calculus.

A SymplecticForm validates closedness and nondegeneracy (ω^n != 0) once,
then caches everything the cohomology machinery needs: powers of ω, the
dual bivector Π, Lefschetz wedge matrices L^k, the symplectic star, the
bivector contraction i(Π) and the codifferential δ.  The codifferential is
always computed by both of its defining formulas, δ = (-1)^{q+1} * d * and
δ = [i(Π), d]; a mismatch is an internal error, not a user error.
"""

from __future__ import annotations

from math import factorial

from .exterior import ExteriorForm, degree_masks, indices_of, mask_position, wedge_sign
from .liealgebra import LieAlgebraSpec, ce_differential, d_form, validate
from .linalg import Matrix, RZERO, Solver, det, invert, rank, ratio


class NotSymplecticError(ValueError):
    """The given 2-form is not closed or not nondegenerate."""


class OperatorInconsistency(RuntimeError):
    """Two provably-equal operator routes disagreed: an implementation bug."""


def gram_matrix(omega: ExteriorForm) -> Matrix:
    """Skew matrix G with G[i][j] = ω(e_{i+1}, e_{j+1})."""
    n = omega.n
    data = [[RZERO] * n for _ in range(n)]
    for mask, c in omega.coeffs.items():
        i, j = indices_of(mask)
        data[i - 1][j - 1] = c
        data[j - 1][i - 1] = -c
    return Matrix(data)


class SymplecticForm:
    """Validated closed nondegenerate 2-form with cached operator data."""

    def __init__(self, algebra: LieAlgebraSpec, omega: ExteriorForm):
        if algebra.dim % 2:
            raise NotSymplecticError(f"odd-dimensional algebra {algebra}")
        if omega.n != algebra.dim or omega.degree != 2:
            raise NotSymplecticError("omega must be a 2-form on the algebra")
        if not validate(algebra).jacobi_ok:
            raise NotSymplecticError(f"{algebra} violates the Jacobi identity")
        if not d_form(algebra, omega).is_zero():
            raise NotSymplecticError(f"d(omega) != 0 for omega = {omega}")
        self.algebra = algebra
        self.omega = omega
        self.n = algebra.dim // 2
        powers = [ExteriorForm(algebra.dim, 0, {0: 1})]
        for _ in range(self.n):
            powers.append(powers[-1].wedge(omega))
        if powers[self.n].is_zero():
            raise NotSymplecticError(f"omega^{self.n} = 0 for omega = {omega}")
        self._powers = powers
        top_mask = (1 << algebra.dim) - 1
        self.volume_coeff = powers[self.n].coefficient(top_mask) / factorial(self.n)
        gram = gram_matrix(omega)
        # Π = -G^{-1} makes i(Π)ω = n and the star involutive.
        self.pi = (-invert(gram)).data
        self._cache: dict = {}
        for k in range(1, self.n + 1):
            m = self.lefschetz_power(k, self.n - k)
            if m.rows != m.cols or rank(m) != m.rows:
                raise OperatorInconsistency(
                    f"L^{k}: Λ^{self.n - k} -> Λ^{self.n + k} is not invertible")

    # -- hashing: value identity on (algebra, omega) -----------------------
    def __eq__(self, other) -> bool:
        return (isinstance(other, SymplecticForm)
                and self.algebra == other.algebra and self.omega == other.omega)

    def __hash__(self) -> int:
        return hash((self.algebra, self.omega))

    def __repr__(self) -> str:
        return f"SymplecticForm({self.algebra}, {self.omega})"

    # -- basic data --------------------------------------------------------
    def power(self, k: int) -> ExteriorForm:
        """ω^k (zero beyond n)."""
        if k <= self.n:
            return self._powers[k]
        return ExteriorForm.zero(self.algebra.dim, min(2 * k, self.algebra.dim))

    def d(self, q: int) -> Matrix:
        dim = self.algebra.dim
        if 0 <= q < dim:
            return ce_differential(self.algebra, q)
        src = len(degree_masks(dim, q)) if 0 <= q <= dim else 0
        dst = len(degree_masks(dim, q + 1)) if 0 <= q + 1 <= dim else 0
        return Matrix.zeros(dst, src)

    def _dims(self, q: int) -> int:
        return len(degree_masks(self.algebra.dim, q))

    # -- Lefschetz ---------------------------------------------------------
    def lefschetz_power(self, k: int, q: int) -> Matrix:
        """Matrix of ∧ω^k: Λ^q -> Λ^{q+2k}."""
        key = ("L", k, q)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        dim = self.algebra.dim
        src = degree_masks(dim, q)
        dst_pos = mask_position(dim, q + 2 * k)
        wk = self.power(k)
        cols = []
        for mask in src:
            vec = [RZERO] * len(dst_pos)
            for m2, c in wk.coeffs.items():
                s = wedge_sign(mask, m2)
                if s:
                    vec[dst_pos[mask | m2]] += c if s > 0 else -c
            cols.append(vec)
        m = Matrix.from_columns(cols, rows=len(dst_pos))
        self._cache[key] = m
        return m

    def lefschetz_solver(self, k: int) -> Solver:
        """Prefactorized inverse of the bijection L^k: Λ^{n-k} -> Λ^{n+k}."""
        key = ("Lsolve", k)
        if key not in self._cache:
            self._cache[key] = Solver(self.lefschetz_power(k, self.n - k))
        return self._cache[key]

    # -- star / contraction / delta ----------------------------------------
    def star_matrix(self, q: int) -> Matrix:
        """Matrix of the symplectic star Λ^q -> Λ^{2n-q}."""
        key = ("star", q)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        dim = self.algebra.dim
        masks = degree_masks(dim, q)
        comp_pos = mask_position(dim, dim - q)
        top_mask = (1 << dim) - 1
        v = self.volume_coeff
        pi = self.pi
        cols = []
        for mj, j_mask in enumerate(masks):
            jdx = indices_of(j_mask)
            vec = [RZERO] * len(comp_pos)
            for i_mask in masks:
                idx = indices_of(i_mask)
                # Λ^q(Π)(e^I, e^J) = det(Π[i_a][j_b])
                pairing = det(Matrix([[pi[a - 1][b - 1] for b in jdx] for a in idx]))
                if pairing == 0:
                    continue
                comp = top_mask ^ i_mask
                s = wedge_sign(i_mask, comp)
                vec[comp_pos[comp]] = v * pairing if s > 0 else -(v * pairing)
            cols.append(vec)
        m = Matrix.from_columns(cols, rows=len(comp_pos))
        self._cache[key] = m
        return m

    def star(self, form: ExteriorForm) -> ExteriorForm:
        q = form.degree
        vec = self.star_matrix(q).matvec(form.to_vector())
        return ExteriorForm.from_vector(self.algebra.dim, self.algebra.dim - q, vec)

    def contraction_matrix(self, q: int) -> Matrix:
        """Matrix of i(Π): Λ^q -> Λ^{q-2} (zero for q < 2)."""
        key = ("iPi", q)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        dim = self.algebra.dim
        src = degree_masks(dim, q)
        dst = len(degree_masks(dim, q - 2)) if q >= 2 else 0
        if q < 2:
            m = Matrix.zeros(dst, len(src))
            self._cache[key] = m
            return m
        dst_pos = mask_position(dim, q - 2)
        pi = self.pi
        cols = []
        for mask in src:
            idx = indices_of(mask)
            vec = [RZERO] * dst
            for a in range(len(idx)):
                for b in range(a + 1, len(idx)):
                    c = pi[idx[a] - 1][idx[b] - 1]
                    if c == 0:
                        continue
                    # sign (-1)^{a+b-1} for 1-based positions a < b in I
                    sign = -1 if (a + b + 1) & 1 else 1  # a,b are 0-based here
                    sub = mask & ~(1 << (idx[a] - 1)) & ~(1 << (idx[b] - 1))
                    vec[dst_pos[sub]] += c if sign > 0 else -c
            cols.append(vec)
        m = Matrix.from_columns(cols, rows=dst)
        self._cache[key] = m
        return m

    def contract_bivector(self, form: ExteriorForm) -> ExteriorForm:
        q = form.degree
        if q < 2:
            return ExteriorForm.zero(self.algebra.dim, 0)
        vec = self.contraction_matrix(q).matvec(form.to_vector())
        return ExteriorForm.from_vector(self.algebra.dim, q - 2, vec)

    def delta_matrix(self, q: int) -> Matrix:
        """Matrix of δ: Λ^q -> Λ^{q-1}, checked against both formulas."""
        key = ("delta", q)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        dim = self.algebra.dim
        src = self._dims(q)
        dst = self._dims(q - 1) if q >= 1 else 0
        if q < 1:
            m = Matrix.zeros(dst, src)
            self._cache[key] = m
            return m
        # route 1: (-1)^{q+1} * d *
        star_back = self.star_matrix(dim - q + 1)  # Λ^{2n-q+1} -> Λ^{q-1}
        route1 = star_back @ self.d(dim - q) @ self.star_matrix(q)
        if q % 2 == 0:
            route1 = -route1
        # route 2: [i(Π), d] = i(Π)∘d - d∘i(Π)
        route2 = self.contraction_matrix(q + 1) @ self.d(q)
        if q >= 2:
            route2 = _mat_sub(route2, self.d(q - 2) @ self.contraction_matrix(q))
        if route1 != route2:
            raise OperatorInconsistency(
                f"delta mismatch at degree {q} for omega = {self.omega}")
        self._cache[key] = route1
        return route1

    def delta(self, form: ExteriorForm) -> ExteriorForm:
        q = form.degree
        if q == 0:
            return ExteriorForm.zero(self.algebra.dim, 0)
        vec = self.delta_matrix(q).matvec(form.to_vector())
        return ExteriorForm.from_vector(self.algebra.dim, q - 1, vec)


def _mat_sub(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows or a.cols != b.cols:
        raise ValueError("shape mismatch")
    return Matrix([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.data, b.data)],
                  cols=a.cols)


def is_symplectic(spec: LieAlgebraSpec, omega: ExteriorForm) -> bool:
    """dω = 0 and ω^n != 0 (the nondegeneracy test is ω^n, not ω^{n+1})."""
    if spec.dim % 2 or omega.degree != 2 or omega.n != spec.dim:
        return False
    if not d_form(spec, omega).is_zero():
        return False
    n = spec.dim // 2
    p = omega
    for _ in range(n - 1):
        p = p.wedge(omega)
    return not p.is_zero()
