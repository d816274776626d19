"""
How fast do Serre iterates spread out?
======================================

-sup/m and -inf/m of S^m(A) converge to the lower and upper Serre
dimensions.  The triangle with yx = 0 has the two limits far apart.
"""

from quiverdims import catalog, ls_us_estimate, serre_iterate

a = catalog("example_8_1")
est = ls_us_estimate(a, 8)
print(f"{'m':>3} {'inf':>5} {'sup':>5} {'-sup/m':>8} {'-inf/m':>8}")
for m, inf, sup, ls, us in est.rows:
    print(f"{m:>3} {inf:>5} {sup:>5} {str(ls):>8} {str(us):>8}")

# the finite rows only give estimates; the exact values come from closed forms
print("LS =", est.ls, " US =", est.us)
print(est.provenance)

# canonical algebras behave like a curve: S^m sits near degree -m
tr = serre_iterate(catalog("canonical:2,3,4"), 10)
print([(m, tr.inf(m), tr.sup(m)) for m in range(1, 11)])
