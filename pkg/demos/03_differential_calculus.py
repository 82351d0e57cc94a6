"""Left and right exterior derivatives, quantum trace, vector fields.

Run:  python3 demos/03_differential_calculus.py
"""

from qncalc import (
    Element,
    apply_delta,
    check_nilpotent,
    diff_presentation,
    diff_structure,
    normalize,
    preset,
    qdet,
    qtrace_check,
    vector_field_components,
)
from qncalc.calculus import VECTOR_RELATIONS, check_vector_algebra

w = Element.word

print("== the left calculus on the full matrix algebra ==")
pid = "glq2-left"
p, d = preset(pid), diff_structure(pid)
for g in ("a", "b", "D"):
    print(f"  d({g}) = {d.images[g]}")

print("\nthe derivative of the determinant is the trace form:")
det = qdet(p)
print("  d(qdet)      =", apply_delta(det, d, p))
print("  qdet . tht1  =", normalize(det * w("tht1"), p))
for c in qtrace_check(p):
    print(f"  {c.name}: {c.status}")

print("\nnilpotency on every normal word of degree <= 3:")
print(" ", check_nilpotent(d, p, 3).details)

print("\n== vector fields ==")
sl = preset("slq2-left")
dsl_ = diff_structure("slq2-left")
for g in "abcd":
    comps = vector_field_components(w(g), dsl_, sl)
    print(f"  components of {g}: "
          + ", ".join(f"V{k} -> {v}" for k, v in sorted(comps.items())))

print("\ncubic vector-field relations on all monomials of degree <= 2:")
for c in check_vector_algebra(VECTOR_RELATIONS["slq2-left"], dsl_, sl, 2):
    print(f"  {c.name}: {c.status}")

print("\n== machine-derived differential-mode rules ==")
dp = diff_presentation("slq2-left")
for lhs in (("del_a", "a"), ("del_a", "b"), ("del_d", "b")):
    rule = next(r for r in dp.rules if r.lhs == lhs)
    print(f"  {'.'.join(lhs)} -> {rule.rhs}")
