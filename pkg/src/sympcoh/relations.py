"""Relation suite: every identity and bound the invariants must satisfy.

Each relation is evaluated from independently computed quantities; none is
used to compute its own inputs.  Relations that need Poincaré duality
(closed-manifold facts) are guarded by a palindromic-Betti test, so the
non-unimodular auxiliary examples are judged only by the finite-type
relations that actually apply to them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .report import CohomologyReport


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class RelationSuiteResult:
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    def names(self) -> list[str]:
        return [c.name for c in self.checks]


def _poincare_dual(report: CohomologyReport) -> bool:
    b = report.betti
    return all(b[q] == b[report.dim - q] for q in range(report.dim + 1))


def verify_relations(report: CohomologyReport) -> RelationSuiteResult:
    checks: list[RelationCheck] = []
    add = checks.append
    n = report.n
    dim = report.dim
    b = report.betti_at
    h = report.h
    closed = _poincare_dual(report)

    # bounds on the coeffective numbers
    ok, detail = True, ""
    for k in range(1, n + 1):
        for q in range(n - k + 2, dim + 1):
            c = report.coeffective[k][q]
            if not (b(q) - b(q + 2 * k) <= c <= b(q) + b(q + 2 * k - 1)):
                ok, detail = False, f"k={k} q={q}: c={c} outside [{b(q) - b(q + 2 * k)}, {b(q) + b(q + 2 * k - 1)}]"
    add(RelationCheck("coeffective_bounds", ok, detail))

    ok, detail = True, ""
    for k in range(1, n + 1):
        chat = report.c_hat[k]
        lo, hi = b(n - k + 1) - b(n + k + 1), b(n - k + 1)
        if not lo <= chat <= hi:
            ok, detail = False, f"k={k}: c_hat={chat} outside [{lo}, {hi}]"
    add(RelationCheck("c_hat_bounds", ok, detail))

    # χ^{(k)} is the alternating Betti sum over the middle band
    ok, detail = True, ""
    for k in range(1, n + 1):
        expected = sum(b(r) if r % 2 == 0 else -b(r) for r in range(n - k + 1, n + k + 1))
        if report.chi[k] != expected:
            ok, detail = False, f"k={k}: chi={report.chi[k]} != {expected}"
    add(RelationCheck("chi_topological", ok, detail))

    # bounds on the filtered numbers
    ok, detail = True, ""
    for k in range(1, n + 1):
        for q, c in report.filtered[k].items():
            lo = b(q - 2 * k + 1) - b(q + 1)
            hi = b(q - 2 * k + 1) + b(q)
            if not lo <= c <= hi:
                ok, detail = False, f"k={k} q={q}: check={c} outside [{lo}, {hi}]"
    add(RelationCheck("filtered_bounds", ok, detail))

    # χ̌ = 0 and the χ̌₊ formula
    ok, detail = True, ""
    for k in range(1, n + 1):
        if report.chi_plus[k] + report.chi_minus[k] != 0:
            ok, detail = False, f"k={k}: chi_check != 0"
        sign = 1 if (n + k + 1) % 2 == 0 else -1
        expected = sign * (report.filtered[k][n + k] - report.c_hat[k]) + report.chi[k]
        if report.chi_plus[k] != expected:
            ok, detail = False, f"k={k}: chi_plus={report.chi_plus[k]} != {expected}"
    add(RelationCheck("chi_check_split", ok, detail))

    # HLC <=> χ̌₊ = χ for every k
    agree = all(report.chi_plus[k] == report.chi[k] for k in range(1, n + 1))
    add(RelationCheck("hlc_chi_characterization", agree == report.hlc,
                      f"hlc={report.hlc} but chi_plus==chi is {agree}" if agree != report.hlc else ""))

    # harmonic difference identity
    ok, detail = True, ""
    for k in range(1, n + 1):
        if h(n - k + 1) - h(n + k + 1) != report.c_hat[k]:
            ok, detail = False, f"k={k}: h{n - k + 1}-h{n + k + 1} != c_hat"
    add(RelationCheck("harmonic_coeffective_difference", ok, detail))

    # 0 <= č_{n+k} - ĉ <= b_{n+k} - h_{n+k}, equality iff the harmonic
    # middle Lefschetz image fills the full one
    ok, detail = True, ""
    for k in range(1, n + 1):
        gap = report.filtered[k][n + k] - report.c_hat[k]
        bound = b(n + k) - h(n + k)
        if not 0 <= gap <= bound:
            ok, detail = False, f"k={k}: gap={gap} outside [0, {bound}]"
        full = report.harmonic_middle_rank[k] == report.lefschetz_middle_rank[k]
        if (gap == bound) != full:
            ok, detail = False, f"k={k}: equality case mismatch (gap={gap}, bound={bound}, ranks equal={full})"
    add(RelationCheck("filtered_coeffective_gap", ok, detail))

    # the three low-codimension filtered identities
    ok, detail = True, ""
    if report.filtered[n][dim] != b(1) + b(dim) - h(dim):
        ok, detail = False, f"check^({n})_{dim} != b1+b_2n-h_2n"
    if n >= 2 and report.filtered[n - 1][dim - 1] != b(2) + b(dim - 1) - h(dim - 1) - h(dim):
        ok, detail = False, f"check^({n - 1})_{dim - 1} mismatch"
    if n >= 3 and report.filtered[n - 2][dim - 2] != b(dim - 2) + h(3) - h(dim - 2) - h(dim - 1):
        ok, detail = False, f"check^({n - 2})_{dim - 2} mismatch"
    add(RelationCheck("filtered_harmonic_corollary", ok, detail))

    # ĉ_1 = b_1, the k=n coeffective numbers are Betti numbers, and the
    # filtered tail equals the shifted coeffective numbers
    ok, detail = True, ""
    if report.c_hat[n] != b(1):
        ok, detail = False, f"c_hat1={report.c_hat[n]} != b1={b(1)}"
    for q in range(2, dim + 1):
        if report.coeffective[n][q] != b(q):
            ok, detail = False, f"c^({n})_{q} != b_{q}"
    for k in range(1, n + 1):
        for q in range(n + k + 1, dim + 2 * k):
            if report.filtered[k][q] != report.coeffective[k][q - 2 * k + 1]:
                ok, detail = False, f"check^({k})_{q} != c^({k})_{q - 2 * k + 1}"
    add(RelationCheck("edge_identifications", ok, detail))

    if closed:
        ok, detail = True, ""
        for k in range(1, n):
            for q in range(dim - 2 * k + 1, dim + 1):
                if report.coeffective[k][q] != b(q):
                    ok, detail = False, f"c^({k})_{q} != b_{q}"
        add(RelationCheck("coeffective_top_betti", ok, detail))

        ok, detail = True, ""
        for k in range(1, n + 1):
            for q in range(0, n + k):
                if report.filtered[k][q] != report.filtered[k][dim + 2 * k - 1 - q]:
                    ok, detail = False, f"k={k} q={q}: filtered duality fails"
        add(RelationCheck("filtered_duality", ok, detail))

        ok, detail = True, ""
        if h(dim) != b(dim):
            ok, detail = False, f"h_2n={h(dim)} != b_2n={b(dim)}"
        if h(dim - 1) % 2:
            ok, detail = False, f"h_(2n-1)={h(dim - 1)} is odd"
        add(RelationCheck("harmonic_top", ok, detail))

        gap = report.filtered[1][n + 1] - report.c_hat[1]
        ok = h(n - 1) - gap <= h(n + 1) <= h(n - 1)
        add(RelationCheck("harmonic_middle_bounds", ok,
                          "" if ok else f"h{n + 1}={h(n + 1)} outside [{h(n - 1) - gap}, {h(n - 1)}]"))

        ok, detail = True, ""
        if n >= 2 and report.c_hat[n - 1] != b(2) - 1:
            ok, detail = False, f"c_hat2={report.c_hat[n - 1]} != b2-1"
        if report.filtered[n][dim] != b(1):
            ok, detail = False, f"check^({n})_{dim} != b1"
        add(RelationCheck("topological_coeffective", ok, detail))

        if dim == 6:
            add(RelationCheck("truncated_degree4", report.truncated[4] == b(2) - 1,
                              "" if report.truncated[4] == b(2) - 1
                              else f"truncated4={report.truncated[4]} != b2-1"))

    if closed and dim == 4:
        ok, detail = True, ""
        if report.c_hat[2] != b(1):
            ok, detail = False, "c_hat1 != b1"
        if report.c_hat[1] != b(2) - 1:
            ok, detail = False, "c_hat2 != b2-1"
        if not (report.coeffective[1][3] == report.coeffective[2][3] == b(3)):
            ok, detail = False, "c_3 != b3"
        if not (report.coeffective[1][4] == report.coeffective[2][4] == b(4)):
            ok, detail = False, "c_4 != b4"
        if report.coeffective[2][2] != b(2):
            ok, detail = False, "c^(2)_2 != b2"
        if report.filtered[1][3] != b(1) + b(2) - h(3) - 1:
            ok, detail = False, f"check^(1)_3={report.filtered[1][3]} != b1+b2-h3-1"
        add(RelationCheck("four_dim_rigidity", ok, detail))

    if closed and dim == 6 and b(3) == 2 * (b(2) - b(1) + 1):
        ok, detail = True, ""
        pairs = [
            ("c_hat3 = c1_4 + b2 - 3b1 + 3",
             report.c_hat[1], report.coeffective[1][4] + b(2) - 3 * b(1) + 3),
            ("h3 = c_hat3 + h5", h(3), report.c_hat[1] + h(5)),
            ("check1_4 = c_hat3 - h4 + b2",
             report.filtered[1][4], report.c_hat[1] - h(4) + b(2)),
            ("check1_5 = c1_4", report.filtered[1][5], report.coeffective[1][4]),
            ("check2_5 = -h5 + b2 + b1 - 1",
             report.filtered[2][5], -h(5) + b(2) + b(1) - 1),
        ]
        for label, lhs, rhs in pairs:
            if lhs != rhs:
                ok, detail = False, f"{label}: {lhs} != {rhs}"
        add(RelationCheck("six_dim_nilpotent_relations", ok, detail))

    # Mathieu: all classes harmonic <=> HLC
    all_harmonic = all(h(q) == b(q) for q in range(dim + 1))
    add(RelationCheck("mathieu_biconditional", all_harmonic == report.hlc,
                      "" if all_harmonic == report.hlc
                      else f"h==b is {all_harmonic} but hlc={report.hlc}"))

    return RelationSuiteResult(tuple(checks))
