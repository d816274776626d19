"""
From a tensor product of A-quivers to E6
========================================

A3 (x) A2 has six projectives.  Two block mutations and a few shifts turn
them into a strong exceptional collection whose endomorphism algebra is a
path algebra of type E6.
"""

from quiverdims import run_named_script, script_text

print(script_text("e6"))
rep = run_named_script("e6")
for step in rep.steps:
    print("ok  " if step.ok else "FAIL", step.command, step.detail)

end = rep.end
print("End quiver:", end.shape, " dimension:", end.dim, " hereditary:", end.hereditary_shape)
for (k, l), n in sorted(end.arrows.items()):
    if n:
        print(f"  {end.labels[k]} -> {end.labels[l]}" + (f" (x{n})" if n > 1 else ""))

# a Kronecker pair appears in A2 (x) A2 (x) A2 instead
kr = run_named_script("kronecker-in-b2cubed")
print("Kronecker pair at positions", kr.kronecker, "Hom =", kr.homs[kr.kronecker])
