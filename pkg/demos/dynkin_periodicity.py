"""
Periodic Serre functors on Dynkin quivers
=========================================

For a Dynkin path algebra some power of the Serre functor is a pure shift.
We iterate S on every indecomposable projective and watch the complexes
come back to where they started.
"""

from quiverdims import catalog, coxeter_number, fcy_certificate, fcy_holds, serre_iterate

# A4 has Coxeter number 5, so S^5 should be the shift by 3
a = catalog("linear_A:4")
tr = serre_iterate(a, 5)
for m in range(6):
    print(m, [tr.complexes[(v, m)] for v in a.vertices])

print("least period:", fcy_certificate(a, 5, trace=tr))

# the least period can be shorter than h; S^h = [h-2] still holds
for kind, n in [("A", 1), ("D", 4), ("D", 5), ("E", 6)]:
    a = catalog(f"dynkin:{kind}{n}")
    h = coxeter_number(kind, n)
    print(f"{kind}{n}: h = {h}, least {fcy_certificate(a, h)}, S^h = [h-2]: {fcy_holds(a, h, h - 2)}")
