"""Lie algebra specifications and the Chevalley-Eilenberg differential.

An algebra is given by d on its degree-1 generators (d e^i as a 2-form);
extending d as a degree-1 derivation yields the full cochain complex, and
d∘d = 0 on the generators is equivalent to the Jacobi identity.  Structure
strings follow the usual compact notation: "(0,0,12,13,14,15)" means
d e^3 = e^1∧e^2, d e^4 = e^1∧e^3, and so on, with "42" standing for
e^4∧e^2 = -e^{24} (written order keeps its sign).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .exterior import ExteriorForm, FormParseError, degree_masks, indices_of, mask_position, parse_form, wedge_sign
from .linalg import Matrix, RONE, RZERO, Subspace, ratio

MAX_DIM = 16  # basis bookkeeping is 2^dim


class SalamonParseError(FormParseError):
    """Malformed structure string, index out of range, or d² != 0."""


@dataclass(frozen=True)
class LieAlgebraSpec:
    """dim generators with d e^{i+1} = d1[i]; hashable, immutable."""

    dim: int
    d1: tuple[ExteriorForm, ...]
    name: str = ""
    source: str = "raw_structure_constants"

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must be in 1..{MAX_DIM}")
        if len(self.d1) != self.dim:
            raise ValueError("need exactly one 2-form per generator")
        for f in self.d1:
            if f.n != self.dim or f.degree != 2:
                raise ValueError("each d e^i must be a 2-form over the same algebra")

    def __str__(self) -> str:
        return self.name or f"LieAlgebraSpec(dim={self.dim})"


@dataclass(frozen=True)
class ValidationReport:
    jacobi_ok: bool
    nilpotent: bool
    step: int | None
    completely_solvable: bool | None


def parse_salamon(text: str) -> LieAlgebraSpec:
    """Parse a structure tuple; raises SalamonParseError on bad input or d² != 0."""
    src = text.strip()
    if not (src.startswith("(") and src.endswith(")")):
        raise SalamonParseError(f"expected a parenthesized tuple, got {text!r}")
    entries = [e.strip() for e in src[1:-1].split(",")]
    if entries == [""]:
        raise SalamonParseError("empty structure tuple")
    dim = len(entries)
    if dim > MAX_DIM:
        raise SalamonParseError(f"dimension {dim} exceeds the cap of {MAX_DIM}")
    forms = []
    for k, entry in enumerate(entries, start=1):
        try:
            forms.append(parse_form(entry, dim, degree=2))
        except FormParseError as exc:
            raise SalamonParseError(f"entry {k} ({entry!r}): {exc}") from exc
    name = "(" + ",".join(entries) + ")"
    spec = LieAlgebraSpec(dim, tuple(forms), name=name, source="salamon_notation")
    bad = _first_jacobi_violation(spec)
    if bad is not None:
        k, val = bad
        raise SalamonParseError(f"d^2 e^{k} = {val} != 0 (Jacobi identity fails)")
    return spec


def from_structure_constants(dim: int, entries, name: str = "") -> LieAlgebraSpec:
    """Raw constructor: entries[k] is a list of (i, j, coeff) with d e^{k+1} = Σ c e^i∧e^j."""
    forms = []
    for terms in entries:
        f = ExteriorForm.zero(dim, 2)
        for i, j, c in terms:
            f = f + ratio(c) * ExteriorForm.basis(dim, (i, j))
        forms.append(f)
    return LieAlgebraSpec(dim, tuple(forms), name=name, source="raw_structure_constants")


def _first_jacobi_violation(spec: LieAlgebraSpec) -> tuple[int, ExteriorForm] | None:
    for k in range(spec.dim):
        dd = d_form(spec, spec.d1[k])
        if not dd.is_zero():
            return k + 1, dd
    return None


@lru_cache(maxsize=None)
def ce_differential(spec: LieAlgebraSpec, q: int) -> Matrix:
    """Matrix of d: Λ^q -> Λ^{q+1} in the lexicographic bases."""
    n = spec.dim
    if not 0 <= q <= n:
        raise ValueError(f"degree {q} outside 0..{n}")
    src = degree_masks(n, q)
    dst_pos = mask_position(n, q + 1)
    cols = []
    for mask in src:
        vec = [RZERO] * len(dst_pos)
        idx = indices_of(mask)
        for j, i in enumerate(idx):
            # d(e^{i1..iq}) = Σ_j (-1)^{j-1} e^{I∖ij} ∧ d e^{ij};
            # the 2-form d e^{ij} commutes past the remaining odd factors.
            sub = mask & ~(1 << (i - 1))
            sign = -1 if j & 1 else 1
            for m2, c in spec.d1[i - 1].coeffs.items():
                s = wedge_sign(sub, m2)
                if s:
                    val = c if sign * s > 0 else -c
                    vec[dst_pos[sub | m2]] += val
        cols.append(vec)
    return Matrix.from_columns(cols, rows=len(dst_pos))


def d_form(spec: LieAlgebraSpec, form: ExteriorForm) -> ExteriorForm:
    """Exterior derivative of a homogeneous form."""
    q = form.degree
    if q >= spec.dim:
        return ExteriorForm.zero(spec.dim, q + 1)
    vec = ce_differential(spec, q).matvec(form.to_vector())
    return ExteriorForm.from_vector(spec.dim, q + 1, vec)


# ---------------------------------------------------------------------------
# structure-constant side: brackets, nilpotency, solvability


def _brackets(spec: LieAlgebraSpec) -> list[list[list]]:
    """bkt[i][j] = coordinates of [e_{i+1}, e_{j+1}] (via d e^k(X,Y) = -e^k([X,Y]))."""
    n = spec.dim
    bkt = [[[RZERO] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for mask, c in spec.d1[k].coeffs.items():
            i, j = indices_of(mask)
            bkt[i - 1][j - 1][k] += -c
            bkt[j - 1][i - 1][k] += c
    return bkt


def _bracket_vec(bkt, u, v):
    n = len(bkt)
    out = [RZERO] * n
    for i in range(n):
        if u[i] == 0:
            continue
        for j in range(n):
            if v[j] == 0:
                continue
            f = u[i] * v[j]
            row = bkt[i][j]
            for k in range(n):
                if row[k]:
                    out[k] += f * row[k]
    return out


def _bracket_with_space(spec, bkt, space: Subspace) -> Subspace:
    n = spec.dim
    cols = []
    for v in space.basis.columns():
        for i in range(n):
            ei = [RONE if k == i else RZERO for k in range(n)]
            cols.append(_bracket_vec(bkt, ei, v))
    return Subspace.from_columns(n, cols)


def lower_central_series(spec: LieAlgebraSpec) -> list[Subspace]:
    """g ⊃ [g,g] ⊃ [g,[g,g]] ⊃ ... until stabilization."""
    bkt = _brackets(spec)
    series = [Subspace.full(spec.dim)]
    while True:
        nxt = _bracket_with_space(spec, bkt, series[-1])
        if nxt.dim == series[-1].dim:
            series.append(nxt)
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    return series


def _derived_series(spec: LieAlgebraSpec) -> list[Subspace]:
    bkt = _brackets(spec)
    series = [Subspace.full(spec.dim)]
    while True:
        cur = series[-1]
        cols = []
        basis = cur.basis.columns()
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                cols.append(_bracket_vec(bkt, basis[a], basis[b]))
        nxt = Subspace.from_columns(spec.dim, cols)
        series.append(nxt)
        if nxt.dim == 0 or nxt.dim == cur.dim:
            break
    return series


def _charpoly(mat: list[list]) -> list:
    """Monic characteristic polynomial coefficients c_0..c_n (Faddeev-LeVerrier)."""
    n = len(mat)
    M = Matrix(mat)
    coeffs = [RONE]  # leading
    A = Matrix.identity(n)
    for k in range(1, n + 1):
        A = M @ A
        tr = sum((A.data[i][i] for i in range(n)), RZERO)
        c = -tr / k
        coeffs.append(c)
        for i in range(n):
            A.data[i][i] += c
    # coeffs are for λ^n + c1 λ^{n-1} + ... + cn
    return list(reversed(coeffs))  # c_0 .. c_n with c_n = 1


def _int_divisors(m: int, cap: int = 200000) -> list[int] | None:
    m = abs(m)
    if m == 0:
        return [0]
    divs = set()
    d = 1
    while d * d <= m:
        if d > cap:
            return None
        if m % d == 0:
            divs.add(d)
            divs.add(m // d)
        d += 1
    return sorted(divs)


def _splits_over_Q(coeffs: list) -> bool | None:
    """True if the monic rational polynomial factors into linear terms over Q."""
    # scale to an integer polynomial; rational roots are p/q with p|a0, q|an
    poly = [ratio(c) for c in coeffs]
    while len(poly) > 1:
        if poly[-1] == 0:
            raise ValueError("polynomial not monic")
        # strip roots at zero
        if poly[0] == 0:
            poly = poly[1:]
            continue
        denoms = [int(c.denominator) for c in poly]
        mult = 1
        for d in denoms:
            mult = mult * d // gcd(mult, d)
        ints = [int(c * mult) for c in poly]
        lead, const = ints[-1], ints[0]
        ps = _int_divisors(const)
        qs = _int_divisors(lead)
        if ps is None or qs is None:
            return None
        found = None
        for p in ps:
            for q in qs:
                for root in (ratio(p, q), ratio(-p, q)):
                    acc = RZERO
                    for c in reversed(poly):
                        acc = acc * root + c
                    if acc == 0:
                        found = root
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return False
        # synthetic division by (λ - root)
        new = [RZERO] * (len(poly) - 1)
        carry = poly[-1]
        for i in range(len(poly) - 2, -1, -1):
            new[i] = carry
            carry = poly[i] + carry * found
        assert carry == 0
        poly = new
    return True


@lru_cache(maxsize=None)
def validate(spec: LieAlgebraSpec) -> ValidationReport:
    """Jacobi check plus nilpotency step and a completely-solvable verdict.

    completely_solvable is decided on the given basis only: True when the
    algebra is nilpotent, or solvable with every ad_{e_i} characteristic
    polynomial splitting over Q; None means "unknown".
    """
    jacobi_ok = _first_jacobi_violation(spec) is None
    series = lower_central_series(spec)
    nilpotent = series[-1].dim == 0
    step = len(series) - 1 if nilpotent else None
    if nilpotent:
        cs: bool | None = True
    else:
        derived = _derived_series(spec)
        if derived[-1].dim != 0:
            cs = False
        else:
            bkt = _brackets(spec)
            n = spec.dim
            cs = True
            for i in range(n):
                ad = [[bkt[i][j][k] for j in range(n)] for k in range(n)]
                verdict = _splits_over_Q(_charpoly(ad))
                if verdict is None:
                    cs = None
                    break
                if not verdict:
                    cs = None  # real/irrational spectrum possible; basis test inconclusive
                    break
    return ValidationReport(jacobi_ok, nilpotent, step, cs)


def direct_sum(a: LieAlgebraSpec, b: LieAlgebraSpec) -> LieAlgebraSpec:
    """Block sum; a symplectic form ω1 + ω2 on the sum validates when both do."""
    dim = a.dim + b.dim
    if dim > MAX_DIM:
        raise ValueError(f"combined dimension {dim} exceeds the cap of {MAX_DIM}")
    forms = []
    for f in a.d1:
        forms.append(ExteriorForm(dim, 2, dict(f.coeffs)))
    for f in b.d1:
        forms.append(ExteriorForm(dim, 2, {mask << a.dim: c for mask, c in f.coeffs.items()}))
    name = f"{a.name or 'a'}+{b.name or 'b'}"
    return LieAlgebraSpec(dim, tuple(forms), name=name, source="raw_structure_constants")


def embed_form(form: ExteriorForm, total_dim: int, shift: int = 0) -> ExteriorForm:
    """Reindex a form into a larger algebra, shifting generators by `shift`."""
    return ExteriorForm(total_dim, form.degree,
                        {mask << shift: c for mask, c in form.coeffs.items()})
