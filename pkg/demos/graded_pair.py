"""
Two vertices and a graded space of arrows
=========================================

The algebra A_V has two vertices and V as the space of arrows.  Its Serre
powers are built from kernels of trace maps on V (x) V* (x) V (x) ..., and
the Serre dimensions come out as 1 - w and 1 + w, with w the width of V.
"""

from quiverdims import av_dims, psi, psi_graded_dims, verify_exact

V = (-1, 0, 1)          # k[1] + k + k[-1]
for n in range(5):
    print(n, dict(sorted(psi_graded_dims(V, n).items())), "dim", psi(V, n).dim)

print("exact at i = 0..4:", [verify_exact(V, i).ok for i in range(5)])

(ls, us), rows = av_dims(V, 8)
print("limits:", ls, us)
for m, inf, sup, a, b in rows:
    print(m, inf, sup, a, b)

# with one arrow the sequences stop being exact
print(verify_exact((0,), 2, strict=False))
