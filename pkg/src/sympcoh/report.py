"""The full invariant report for one (algebra, symplectic form) pair."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import rational_str


@dataclass(frozen=True)
class CohomologyReport:
    """All computed dimensions for one symplectic structure.

    c_hat, coeffective, filtered, chi and the rank diagnostics are keyed by
    k; ĉ_{n-k+1} of degree m is c_hat[n-m+1].  Ranks of L^k on H^{n-k} and
    on the harmonic subspace H^{n-k}_hr feed the relation suite.
    """

    algebra_name: str
    dim: int
    n: int
    betti: tuple[int, ...]
    harmonic: tuple[int, ...]
    c_hat: dict
    coeffective: dict
    filtered: dict
    chi: dict
    chi_plus: dict
    chi_minus: dict
    hlc: bool
    truncated: tuple[int, ...]
    lefschetz_middle_rank: dict
    harmonic_middle_rank: dict
    omega_class: tuple
    omega_text: str = ""

    def betti_at(self, q: int) -> int:
        return self.betti[q] if 0 <= q < len(self.betti) else 0

    def h(self, q: int) -> int:
        return self.harmonic[q] if 0 <= q < len(self.harmonic) else 0

    def c_hat_by_degree(self, m: int) -> int:
        """ĉ_m, i.e. ĉ_{n-k+1} with k = n-m+1."""
        return self.c_hat[self.n - m + 1]

    def invariant_values(self) -> dict:
        """Flat {structured key -> value} map of everything that can vary."""
        out = {}
        for q, v in enumerate(self.harmonic):
            out[("h", q)] = v
        for k, v in self.c_hat.items():
            out[("c_hat", self.n - k + 1)] = v
        for k, dims in self.coeffective.items():
            for q, v in dims.items():
                out[("c", k, q)] = v
        for k, dims in self.filtered.items():
            for q, v in dims.items():
                out[("check", k, q)] = v
        return out

    def headline(self) -> dict:
        """The seven six-dimensional table columns (requires dim == 6)."""
        if self.dim != 6:
            raise ValueError("headline columns are specific to dimension 6")
        return {
            "h3": self.harmonic[3],
            "h4": self.harmonic[4],
            "h5": self.harmonic[5],
            "c_hat3": self.c_hat[1],
            "c1_4": self.coeffective[1][4],
            "check1_4": self.filtered[1][4],
            "check2_5": self.filtered[2][5],
        }

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra_name,
            "dim": self.dim,
            "omega": self.omega_text,
            "omega_class": [rational_str(x) for x in self.omega_class],
            "betti": list(self.betti),
            "harmonic": list(self.harmonic),
            "c_hat": {str(k): v for k, v in sorted(self.c_hat.items())},
            "coeffective": {str(k): {str(q): v for q, v in sorted(d.items())}
                            for k, d in sorted(self.coeffective.items())},
            "filtered": {str(k): {str(q): v for q, v in sorted(d.items())}
                         for k, d in sorted(self.filtered.items())},
            "chi": {str(k): v for k, v in sorted(self.chi.items())},
            "chi_plus": {str(k): v for k, v in sorted(self.chi_plus.items())},
            "chi_minus": {str(k): v for k, v in sorted(self.chi_minus.items())},
            "hlc": self.hlc,
            "truncated": list(self.truncated),
            # the degree n-k+1 coeffective number is finite here but not on
            # a general manifold; make the caveat machine-visible
            "coeffective_edge_degree_note": "algebra-level only",
        }


def invariant_key_name(key: tuple) -> str:
    """Human/JSON name for a structured invariant key."""
    if key[0] == "h":
        return f"h{key[1]}"
    if key[0] == "c_hat":
        return f"c_hat{key[1]}"
    if key[0] == "c":
        return f"c{key[1]}_{key[2]}"
    if key[0] == "check":
        return f"check{key[1]}_{key[2]}"
    raise ValueError(f"unknown invariant key {key!r}")
