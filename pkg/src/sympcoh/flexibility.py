"""Profiles of symplectic structures and flexibility scans.

profile() assembles the full invariant report for one symplectic form and
hard-verifies the relation suite before returning: a violated identity is
an implementation bug, not data.  scan() evaluates profiles over supplied
witnesses plus a deterministic coefficient grid on the space of closed
2-forms, aggregates per-invariant value sets, and derives the c/f/h
flexibility verdict.  Profiles depend only on the projective de Rham class
of ω, so grid samples are deduplicated by normalized [ω] before profiling.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .coeffective import c_hat_oracle, chi_k, coeffective_ladder
from .derham import derham
from .exterior import ExteriorForm, parse_form
from .filtered import filtered_ladder, filtered_les_oracle
from .harmonic import harmonic_middle_image_rank, harmonic_numbers_delta_oracle, harmonic_profile
from .liealgebra import LieAlgebraSpec, ce_differential
from .linalg import Subspace, kernel_basis, ratio, rational_str
from .relations import verify_relations
from .report import CohomologyReport, invariant_key_name
from .symplectic import NotSymplecticError, SymplecticForm, is_symplectic


class IdentityViolation(RuntimeError):
    """A proved identity failed inside profile(): an implementation bug."""


def closed_two_form_space(spec: LieAlgebraSpec) -> Subspace:
    """ker(d: Λ² -> Λ³); its dimension is reported as dim S."""
    return kernel_basis(ce_differential(spec, 2))


def profile(spec: LieAlgebraSpec, omega: ExteriorForm, verify: bool = True) -> CohomologyReport:
    """Full cohomology report for a symplectic (spec, ω); see CohomologyReport."""
    sym = omega if isinstance(omega, SymplecticForm) else SymplecticForm(spec, omega)
    return profile_form(sym, verify=verify)


def profile_form(sym: SymplecticForm, verify: bool = True) -> CohomologyReport:
    cached = sym._cache.get(("report", verify))
    if cached is not None:
        return cached
    spec = sym.algebra
    dR = derham(spec)
    n = sym.n
    hp = harmonic_profile(sym)
    c_hat, coeff, filt, chi, chi_p, chi_m = {}, {}, {}, {}, {}, {}
    lef_rank, harm_rank = {}, {}
    for k in range(1, n + 1):
        ladder = coeffective_ladder(sym, k)
        c_hat[k] = ladder.c_hat
        coeff[k] = dict(ladder.dims_c)
        flad = filtered_ladder(sym, k)
        filt[k] = dict(flad.dims)
        chi[k] = chi_k(sym, k)
        chi_p[k] = flad.chi_plus
        chi_m[k] = flad.chi_minus
        lef_rank[k] = dR.lefschetz_rank(sym, k, n - k)
        harm_rank[k] = harmonic_middle_image_rank(sym, k)
    report = CohomologyReport(
        algebra_name=spec.name or f"dim-{spec.dim} algebra",
        dim=spec.dim,
        n=n,
        betti=dR.betti,
        harmonic=hp.numbers,
        c_hat=c_hat,
        coeffective=coeff,
        filtered=filt,
        chi=chi,
        chi_plus=chi_p,
        chi_minus=chi_m,
        hlc=dR.hlc(sym),
        truncated=tuple(dR.truncated_dim(sym, q) for q in range(spec.dim + 1)),
        lefschetz_middle_rank=lef_rank,
        harmonic_middle_rank=harm_rank,
        omega_class=tuple(dR.class_of(sym.omega)),
        omega_text=str(sym.omega),
    )
    if verify:
        suite = verify_relations(report)
        if not suite.passed:
            names = ", ".join(c.name for c in suite.failures())
            details = "; ".join(c.detail for c in suite.failures())
            raise IdentityViolation(
                f"relation(s) {names} failed for {spec.name} with omega={sym.omega}: {details}")
    sym._cache[("report", verify)] = report
    return report


def oracle_checks(sym: SymplecticForm) -> dict:
    """Run all second-route computations; returns {name: (primary, oracle)}."""
    out = {}
    out["harmonic"] = (harmonic_profile(sym).numbers, harmonic_numbers_delta_oracle(sym))
    for k in range(1, sym.n + 1):
        out[f"c_hat_k{k}"] = (coeffective_ladder(sym, k).c_hat, c_hat_oracle(sym, k))
        direct = filtered_ladder(sym, k).dims
        les = filtered_les_oracle(sym, k)
        out[f"filtered_k{k}"] = (tuple(sorted(direct.items())), tuple(sorted(les.items())))
    return out


@dataclass(frozen=True)
class ScanConfig:
    """Deterministic sampling policy for scan().

    Witnesses are evaluated first; then either the exhaustive coefficient
    grid (when |set|^dimS <= max_samples) or max_samples seeded draws.
    """

    coefficient_set: tuple = tuple(range(-3, 4))
    max_samples: int = 60
    seed: int = 0
    witnesses: tuple = ()

    def to_json_dict(self) -> dict:
        return {
            "coefficient_set": [rational_str(ratio(c)) for c in self.coefficient_set],
            "max_samples": self.max_samples,
            "seed": self.seed,
            "witnesses": [w if isinstance(w, str) else str(w) for w in self.witnesses],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ScanConfig":
        return cls(
            coefficient_set=tuple(ratio(c) for c in obj.get("coefficient_set", range(-3, 4))),
            max_samples=int(obj.get("max_samples", 60)),
            seed=int(obj.get("seed", 0)),
            witnesses=tuple(obj.get("witnesses", ())),
        )

    @classmethod
    def from_json(cls, text: str) -> "ScanConfig":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class FlexibilityVerdict:
    c_flexible: bool
    f_flexible: bool
    h_flexible: bool
    value_sets: dict          # structured key -> {value: "witness" | "grid"}
    dim_S: int
    symplectic_found: bool
    samples_tried: int
    classes_profiled: int

    def values(self, key: tuple) -> frozenset:
        return frozenset(self.value_sets.get(key, {}))

    def headline_sets(self) -> dict:
        """Achieved sets for the seven six-dimensional table columns."""
        return {
            "h3": self.values(("h", 3)),
            "h4": self.values(("h", 4)),
            "h5": self.values(("h", 5)),
            "c_hat3": self.values(("c_hat", 3)),
            "c1_4": self.values(("c", 1, 4)),
            "check1_4": self.values(("check", 1, 4)),
            "check2_5": self.values(("check", 2, 5)),
        }

    def to_json_dict(self) -> dict:
        sets = {}
        for key in sorted(self.value_sets, key=invariant_key_name):
            sets[invariant_key_name(key)] = {
                str(v): prov for v, prov in sorted(self.value_sets[key].items())}
        return {
            "c_flexible": self.c_flexible,
            "f_flexible": self.f_flexible,
            "h_flexible": self.h_flexible,
            "dim_S": self.dim_S,
            "symplectic_found": self.symplectic_found,
            "samples_tried": self.samples_tried,
            "classes_profiled": self.classes_profiled,
            "value_sets": sets,
        }


def _class_key(spec: LieAlgebraSpec, omega: ExteriorForm):
    """Projective de Rham class of ω: profiles are constant on it."""
    cls = derham(spec).class_of(omega)
    for x in cls:
        if x != 0:
            inv = 1 / x
            return tuple(inv * y for y in cls)
    return tuple(cls)


def scan(spec: LieAlgebraSpec, config: ScanConfig | None = None) -> FlexibilityVerdict:
    config = config or ScanConfig()
    closed = closed_two_form_space(spec)
    dim_S = closed.dim
    value_sets: dict = {}
    seen = set()
    samples_tried = 0
    classes = 0

    def absorb(omega: ExteriorForm, provenance: str) -> None:
        nonlocal classes
        key = _class_key(spec, omega)
        if key in seen:
            return
        seen.add(key)
        classes += 1
        report = profile(spec, omega)
        for ikey, val in report.invariant_values().items():
            bucket = value_sets.setdefault(ikey, {})
            if provenance == "witness" or val not in bucket:
                bucket[val] = provenance

    witnesses = [parse_form(w, spec.dim, degree=2) if isinstance(w, str) else w
                 for w in config.witnesses]
    for w in witnesses:
        if not is_symplectic(spec, w):
            raise NotSymplecticError(f"witness {w} is not symplectic on {spec.name}")
        absorb(w, "witness")

    if spec.dim % 2 == 0 and dim_S > 0:
        basis_cols = closed.basis.columns()
        coeffs = [ratio(c) for c in config.coefficient_set]
        if len(coeffs) ** dim_S <= config.max_samples:
            vectors = itertools.product(coeffs, repeat=dim_S)
        else:
            rng = random.Random(config.seed)
            vectors = (tuple(rng.choice(coeffs) for _ in range(dim_S))
                       for _ in range(config.max_samples))
        for vec in vectors:
            samples_tried += 1
            coords = [sum((c * col[i] for c, col in zip(vec, basis_cols) if c), ratio(0))
                      for i in range(len(basis_cols[0]))]
            omega = ExteriorForm.from_vector(spec.dim, 2, coords)
            if is_symplectic(spec, omega):
                absorb(omega, "grid")

    # c-flexibility counts ĉ_{n-k+1} and c^{(k)}_q only for q >= n-k+2; the
    # edge degree n-k+1 is reported but is finite at the algebra level only
    n_half = spec.dim // 2
    c_flex = any(len(v) > 1 for key, v in value_sets.items()
                 if key[0] == "c_hat" or (key[0] == "c" and key[2] + key[1] >= n_half + 2))
    f_flex = any(len(v) > 1 for key, v in value_sets.items() if key[0] == "check")
    h_flex = any(len(v) > 1 for key, v in value_sets.items() if key[0] == "h")
    return FlexibilityVerdict(
        c_flexible=c_flex,
        f_flexible=f_flex,
        h_flexible=h_flex,
        value_sets=value_sets,
        dim_S=dim_S,
        symplectic_found=classes > 0,
        samples_tried=samples_tried,
        classes_profiled=classes,
    )
