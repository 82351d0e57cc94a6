"""The 4x4 R-matrix: Yang-Baxter equation and the RTT relation.

Run:  python3 demos/02_yang_baxter_rtt.py
"""

from qncalc import preset, rtt_residual, standard_r, ybe_residual
from qncalc.presentations import free_presentation
from qncalc.rmatrix import format_r, perturbed_r, r_inverse_conventions

r = standard_r()
print("== the fundamental R-matrix (rows/columns ordered 11,12,21,22) ==")
for row in format_r(r):
    print("  ", row)

print("\n== Yang-Baxter equation ==")
res = ybe_residual(r)
print("residual entries, all zero?",
      all(c.is_zero for row in res for c in row))

bad = perturbed_r()
res_bad = ybe_residual(bad)
witness = next((i, j) for i, row in enumerate(res_bad)
               for j, c in enumerate(row) if not c.is_zero)
print("perturbed R (lambda entry -> 1): first nonzero residual at",
      witness, "=", res_bad[witness[0]][witness[1]])

print("\n== R(q) . R(1/q) = identity ==")
print("conventions that hold:", r_inverse_conventions())

print("\n== RTT relation ==")
print("under glq2 (all 16 components should vanish):")
res = rtt_residual(r, preset("glq2"))
print("  all zero?", all(v.is_zero for v in res.values()))

print("in the free algebra the components ARE the commutation relations:")
free = free_presentation("a", "b", "c", "d")
res_free = rtt_residual(r, free)
for idx in ((1, 1, 1, 2), (1, 2, 1, 1), (1, 1, 2, 2)):
    print(f"  component {idx}: {res_free[idx]}")
