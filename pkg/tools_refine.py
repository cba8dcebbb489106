# Dev-only: find small witnesses for specific headline values.
import itertools
import sys

from sympcoh.liealgebra import parse_salamon
from sympcoh.exterior import ExteriorForm
from sympcoh.flexibility import profile, closed_two_form_space, _class_key
from sympcoh.symplectic import is_symplectic
from sympcoh.linalg import ratio

KEYS = ["h3", "h4", "h5", "c_hat3", "c1_4", "check1_4", "check2_5"]

TARGETS = {
    "(0,0,12,13,23,14-25)": {"h4": {2, 3, 4}},
    "(0,0,0,12,13+14,24)": {"h4": {2, 3}},
    "(0,0,0,12,13,24)": {"h3": {6, 5}},
    "(0,0,0,12,13,14)": {"h3": {6, 5}},
    "(0,0,0,12,13,23)": {"c_hat3": {10, 9}, "h4": {7, 8}, "check1_4": {10, 9}},
    "(0,0,0,0,12,15)": {"h3": {6}},
    "(0,0,0,0,12,14+25)": {"h3": {7, 6}},
    "(0,0,0,0,12,34)": {"h4": {7}},
    "(0,0,0,0,12,13)": {"h4": {7, 8}},
    "(0,0,0,0,0,12)": {"h3": {13}},
    "(0,0,0,0,0,0)": {"h3": {20}},
}


def sparse_vectors(m, values=(1, -1, 2, -2, 3, -3), max_support=6, cap=250000):
    count = 0
    for support in range(1, max_support + 1):
        for positions in itertools.combinations(range(m), support):
            for vals in itertools.product(values, repeat=support):
                vec = [0] * m
                for p, v in zip(positions, vals):
                    vec[p] = v
                yield vec
                count += 1
                if count >= cap:
                    return


for name, targets in TARGETS.items():
    spec = parse_salamon(name)
    S = closed_two_form_space(spec)
    basis = S.basis.columns()
    m = S.dim
    remaining = {k: set(v) for k, v in targets.items()}
    found = {}
    seen = set()
    for vec in sparse_vectors(m):
        if not any(remaining.values()):
            break
        nterms = sum(1 for v in vec if v)
        coords = [sum((ratio(c) * col[i] for c, col in zip(vec, basis) if c), ratio(0))
                  for i in range(len(basis[0]))]
        form = ExteriorForm.from_vector(6, 2, coords)
        if len(form.coeffs) > 4:
            continue
        if not is_symplectic(spec, form):
            continue
        key = _class_key(spec, form)
        if key in seen:
            continue
        seen.add(key)
        head = profile(spec, form).headline()
        for k, vals in remaining.items():
            if head[k] in vals:
                vals.discard(head[k])
                found.setdefault((k, head[k]), (str(form), tuple(head[key] for key in KEYS)))
    print(name)
    for (k, v), (w, tup) in sorted(found.items()):
        print(f"   {k}={v}: {w}   full={tup}")
    if any(remaining.values()):
        print("   STILL MISSING:", {k: v for k, v in remaining.items() if v})
