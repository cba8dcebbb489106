"""Exterior algebra on n rational generators, bitmask-indexed.

A basis q-vector e^{i1} ∧ ... ∧ e^{iq} (i1 < ... < iq, indices 1-based) is
the integer mask with those bits set; wedge signs come from transposition
counts, so they cost O(popcount) and no symbol shuffling ever happens.
Degree-q coordinates are taken against the masks in lexicographic index
order (e12, e13, ..., e56), which keeps every downstream matrix stable.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .linalg import RZERO, ratio


class FormParseError(ValueError):
    """Raised for malformed form strings (bad token, index out of range...)."""


@lru_cache(maxsize=None)
def degree_masks(n: int, q: int) -> tuple[int, ...]:
    """Basis masks of Λ^q over n generators, in index-lex order."""
    if q < 0 or q > n:
        return ()
    return tuple(sum(1 << (i - 1) for i in combo)
                 for combo in combinations(range(1, n + 1), q))


@lru_cache(maxsize=None)
def mask_position(n: int, q: int) -> Mapping[int, int]:
    return {mask: i for i, mask in enumerate(degree_masks(n, q))}


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated index {i}")
        mask |= bit
    return mask


def wedge_sign(a: int, b: int) -> int:
    """Sign of e^A ∧ e^B relative to the sorted basis vector; 0 on overlap."""
    if a & b:
        return 0
    sign = 1
    rest = b
    while rest:
        low = rest & -rest
        if bin(a >> low.bit_length()).count("1") & 1:
            sign = -sign
        rest ^= low
    return sign


def perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting seq ascending (inversion count)."""
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq))
              if seq[i] > seq[j])
    return -1 if inv & 1 else 1


class ExteriorForm:
    """Homogeneous element of Λ^q over n generators; mask -> rational coeff."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs: Mapping[int, object] | None = None):
        if degree < 0:
            raise ValueError("negative degree")
        self.n = n
        self.degree = degree
        clean: dict[int, object] = {}
        if coeffs:
            for mask, c in coeffs.items():
                c = ratio(c)
                if c == 0:
                    continue
                if bin(mask).count("1") != degree or mask >= (1 << n):
                    raise ValueError(f"mask {mask:b} is not a degree-{degree} basis index")
                clean[mask] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, n: int, degree: int) -> "ExteriorForm":
        return cls(n, degree)

    @classmethod
    def basis(cls, n: int, indices: Iterable[int]) -> "ExteriorForm":
        idx = tuple(indices)
        return cls(n, len(idx), {mask_of(idx): 1})

    @classmethod
    def from_vector(cls, n: int, degree: int, vec: Sequence) -> "ExteriorForm":
        masks = degree_masks(n, degree)
        if len(vec) != len(masks):
            raise ValueError("coordinate vector has the wrong length")
        return cls(n, degree, dict(zip(masks, vec)))

    def to_vector(self) -> list:
        return [self.coeffs.get(mask, RZERO) for mask in degree_masks(self.n, self.degree)]

    def coefficient(self, mask: int):
        return self.coeffs.get(mask, RZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        for mask in degree_masks(self.n, self.degree):
            if mask in self.coeffs:
                yield mask, self.coeffs[mask]

    def __add__(self, other: "ExteriorForm") -> "ExteriorForm":
        self._compat(other)
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            out[mask] = out.get(mask, RZERO) + c
        return ExteriorForm(self.n, self.degree, out)

    def __sub__(self, other: "ExteriorForm") -> "ExteriorForm":
        return self + (-other)

    def __neg__(self) -> "ExteriorForm":
        return self.scale(-1)

    def scale(self, c) -> "ExteriorForm":
        c = ratio(c)
        return ExteriorForm(self.n, self.degree,
                            {mask: c * x for mask, x in self.coeffs.items()})

    def __rmul__(self, c) -> "ExteriorForm":
        return self.scale(c)

    def wedge(self, other: "ExteriorForm") -> "ExteriorForm":
        if self.n != other.n:
            raise ValueError("forms live over different algebras")
        out: dict[int, object] = {}
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                s = wedge_sign(ma, mb)
                if s:
                    mask = ma | mb
                    c = ca * cb if s > 0 else -(ca * cb)
                    acc = out.get(mask)
                    out[mask] = c if acc is None else acc + c
        return ExteriorForm(self.n, self.degree + other.degree, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExteriorForm) and self.n == other.n
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.n, self.degree, tuple(sorted(self.coeffs.items()))))

    def _compat(self, other: "ExteriorForm") -> None:
        if self.n != other.n or self.degree != other.degree:
            raise ValueError("degree or algebra mismatch")

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for mask, c in self.terms():
            token = "e" + "".join(str(i) for i in indices_of(mask)) if mask else "1"
            if c == 1:
                body = token
            elif c == -1:
                body = "-" + token
            else:
                body = f"{c}*{token}"
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append("- " + body[1:])
            else:
                parts.append("+ " + body)
        return " ".join(parts)

    __repr__ = __str__


_COEFF_RE = re.compile(r"^[0-9]+(?:/[0-9]+)?$")
_TOKEN_RE = re.compile(r"^e?([0-9]+)$")


def parse_form(text: str, n: int, degree: int | None = None) -> ExteriorForm:
    """Parse '13+24', 'e12 + 3*e34 - 1/2*e56', '0' into an ExteriorForm.

    Index tokens are strings of single digits (generators 1..9; larger
    algebras must build forms programmatically).  Token '42' means
    e4 ∧ e2 = -e24: written order contributes its permutation sign.
    """
    src = text.replace("−", "-").replace(" ", "").replace("\t", "")
    if src in ("0", ""):
        if degree is None:
            raise FormParseError("cannot infer the degree of the zero form")
        return ExteriorForm.zero(n, degree)
    # split into signed chunks
    chunks: list[tuple[int, str]] = []
    sign, start = 1, 0
    if src[0] in "+-":
        sign = -1 if src[0] == "-" else 1
        start = 1
    cur = []
    for ch in src[start:]:
        if ch in "+-":
            chunks.append((sign, "".join(cur)))
            cur = []
            sign = -1 if ch == "-" else 1
        else:
            cur.append(ch)
    chunks.append((sign, "".join(cur)))

    form: ExteriorForm | None = None
    for sgn, chunk in chunks:
        # the coefficient, if present, is separated by '*' (grammar: [coeff "*"] token)
        if "*" in chunk:
            coeff_txt, _, token_txt = chunk.partition("*")
            if not _COEFF_RE.match(coeff_txt):
                raise FormParseError(f"malformed coefficient in term {chunk!r} of {text!r}")
        else:
            coeff_txt, token_txt = None, chunk
        m = _TOKEN_RE.match(token_txt)
        if not m:
            raise FormParseError(f"malformed term {chunk!r} in {text!r}")
        idx_txt = m.group(1)
        coeff = ratio(coeff_txt) if coeff_txt is not None else ratio(1)
        if sgn < 0:
            coeff = -coeff
        written = [int(ch) for ch in idx_txt]
        if any(i == 0 for i in written):
            raise FormParseError(f"index 0 in term {chunk!r}")
        if any(i > n for i in written):
            raise FormParseError(f"index out of range in term {chunk!r} (dim {n})")
        if len(set(written)) != len(written):
            raise FormParseError(f"repeated index in term {chunk!r}")
        if degree is None:
            degree = len(written)
        if len(written) != degree:
            raise FormParseError(f"term {chunk!r} has degree {len(written)}, expected {degree}")
        coeff = coeff * perm_sign(written)
        term = ExteriorForm(n, degree, {mask_of(written): coeff})
        form = term if form is None else form + term
    assert form is not None
    return form
