"""Twist cohomology on a weighted projective cone, from monomial bases.

Walks through the basic combinatorics on X = P(1,1,1,3): the monomial
model for global sections, the Laurent model for top cohomology, the
duality pairing between them, and the restriction sequence to the
hyperplane section at infinity.
"""

from conetilt import (
    connecting_map,
    cone_cohomology_dim,
    laurent_top_basis,
    make_space,
    section_cohomology_dim,
    serre_pairing,
    weighted_monomials,
)

X = make_space(3, 3)
print("space:", X, " dim =", X.dim, " canonical twist =", X.canonical_degree)
print()

print("global sections of O(d) are spanned by weighted monomials:")
for d in range(0, 4):
    mons = weighted_monomials(X, d)
    print("  d=%d  h^0 = %2d   %s" % (d, len(mons), ", ".join(map(str, mons[:6]))
                                      + (" ..." if len(mons) > 6 else "")))
print()

print("top cohomology of O(d) is spanned by all-negative Laurent monomials:")
for d in (-6, -7, -8):
    mons = laurent_top_basis(X, d)
    print("  d=%d  h^3 = %2d   e.g. %s" % (d, len(mons), mons[0]))
print()

print("duality pairs the two models monomial-by-monomial:")
p = serre_pairing(X, 2)
print("  degree 2 pairing matrix is a %dx%d permutation, rank %d"
      % (p.target.dim, p.source.dim, p.rank()))
print()

print("full cohomology table of O(d) (intermediate degrees vanish):")
print("  d : h^0 h^1 h^2 h^3")
for d in range(-8, 5):
    dims = [cone_cohomology_dim(X, d, i) for i in range(4)]
    print("  %3d: %s" % (d, "  ".join("%3d" % v for v in dims)))
print()

print("restriction to the section Z (a plane) is a short exact sequence;")
print("its counts match: h^0(X,d) - h^0(X,d-3) = h^0(Z,d)")
for d in range(0, 7):
    lhs = cone_cohomology_dim(X, d, 0) - cone_cohomology_dim(X, d - 3, 0)
    rhs = section_cohomology_dim(X, d, 0)
    print("  d=%d: %2d - matches %s" % (d, rhs, lhs == rhs))
print()

print("the connecting map into top cohomology is multiplication by the")
print("inverse cone variable on Laurent monomials, always injective:")
c = connecting_map(X, -5)
print("  H^2(Z, O(-5)) -> H^3(X, O(-8)): %d -> %d, rank %d (bijective)"
      % (c.source.dim, c.target.dim, c.rank()))
