"""The surface cone P(1,1,2): the rank-2 bundle between two twists.

The section at infinity is a line C.  The kernel bundle FS of the
evaluation O^2 -> OC(1) has a two-dimensional endomorphism algebra and
no higher self-extensions, and the ordered collection
(O(-2), FS, O) verifies with End dimensions (1, 2, 1).
"""

from conetilt import (
    OX,
    OZ,
    check_sod,
    euler_form,
    hom_objects,
    kernel_bundle,
    make_space,
)

S = make_space(2, 2)
FS = kernel_bundle(S, 1)
print("space:", S, " canonical twist =", S.canonical_degree)
print("FS =", FS, " rank", FS.h)
print()

print("self-extensions of FS (degree vector h^0..h^2):")
dims = hom_objects(S, FS, FS)
print("  Hom*(FS, FS) =", dims, " -> End algebra of dimension", dims[0])
print()

print("orthogonality against the outer twists:")
for a, b, label in [
    (FS, OX(-2), "FS, O(-2)"),
    (OX(0), FS, "O, FS"),
    (OX(0), OX(-2), "O, O(-2)"),
]:
    print("  Hom*(%s) = %s" % (label, hom_objects(S, a, b)))
print()

report = check_sod(S, [("Om2", OX(-2)), ("FS", FS), ("O", OX(0))])
print(report.summary())
print("  " + report.generation_note)
print()

print("Euler form bookkeeping along the defining sequence of FS:")
lhs = euler_form(S, FS, FS)
rhs = FS.h * euler_form(S, OX(0), FS) - euler_form(S, OZ(1), FS)
print("  chi(FS, FS) = %d = %d * chi(O, FS) - chi(OC(1), FS) = %d" % (lhs, FS.h, rhs))
