"""Closed-form graded Hom spaces between atom sheaves, with explicit bases.

The atoms are the twists O(d) on the cone and the twists OZ(e) on the
section Z ~ P^{n-1}.  Each Hom computation is carried out by one of a
small list of rules, each justified only on an explicit validity
domain; queries outside the domain raise OutOfValidity instead of
guessing.  The tags attached to every degree name the rule used:

* R0  Hom(O(a), O(b)) = H^0(X, O(b-a)) in degree 0 only, for arbitrary
      twists (the reflexive Hom rule).  Higher degrees from a
      non-invertible source are refused.
* R1  full graded Hom(O(a), O(b)) = H^*(X, O(b-a)) when O(a) is
      invertible, i.e. a = 0 mod m.
* R2  Hom^i(O(a), OZ(e)) = H^i(Z, O(e-a)) for any a (Z misses the
      vertex, where every twist is locally free).
* R3  Hom^i(OZ(e), OZ(f)) = H^i(Z, O(f-e)) + H^{i-1}(Z, O(f-e+m)),
      from the twist resolution 0 -> O(e-m) -> O(e) -> OZ(e) -> 0 and
      the fact that multiplication by the cone variable dies on Z.
* R4  Hom^i(OZ(e), O(b)) = H^{n-i}(Z, O(e-(n+m)-b))^* for invertible
      O(b), by duality against R2.
* CP  cone presentation: Ext^1(OZ(e), T) as the cokernel of
      multiplication by the cone variable on degree-0 Hom spaces.

Degree-0 composition is polynomial multiplication on the monomial
bases; the structural maps below (restriction, connecting map, duality
pairing, cone presentation) realize the maps the dimension chases need.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cone import (
    Monomial,
    laurent_top_basis,
    section_laurent_basis,
    section_monomials,
    weighted_monomials,
)
from .linalg import (
    DirectSpace,
    EngineError,
    PresentedMap,
    Subquotient,
    identity,
    map_from_entries,
    mat_mul,
    zero_space,
)

CONE = "cone"
SECTION = "section"


class OutOfValidity(EngineError):
    """The requested Hom computation is outside every rule's domain."""


class PresentationMismatch(EngineError):
    """A cone presentation disagrees with the closed-form dimension."""


@dataclass(frozen=True)
class Atom:
    """A generator sheaf: a twist O(d) on the cone or OZ(e) on the section."""

    kind: str
    twist: int

    def is_invertible(self, space):
        """O(d) is invertible iff d = 0 mod m; OZ twists never are on X."""
        return self.kind == CONE and self.twist % space.m == 0

    def __str__(self):
        if self.kind == CONE:
            return "O(%d)" % self.twist
        return "OZ(%d)" % self.twist


def OX(d):
    return Atom(CONE, d)


def OZ(e):
    return Atom(SECTION, e)


@dataclass(frozen=True, order=True)
class Dual:
    """Formal dual-basis label, used for the R4 spaces."""

    of: Monomial

    def __str__(self):
        return "(%s)^" % (self.of,)


@dataclass
class GradedHom:
    """Degree-indexed family of presented spaces for Hom^*(A, B)."""

    source: Atom
    target: Atom
    spaces: tuple
    rules: tuple

    @property
    def dims(self):
        return tuple(sp.dim for sp in self.spaces)

    def __getitem__(self, i):
        return self.spaces[i]


# ---------------------------------------------------------------------------
# cohomology spaces with their canonical bases
# ---------------------------------------------------------------------------

def cone_h_space(space, d, i, name=""):
    """H^i(X, O(d)) with its monomial or Laurent basis."""
    if i == 0:
        return DirectSpace(weighted_monomials(space, d), name)
    if i == space.n:
        return DirectSpace(laurent_top_basis(space, d), name)
    return zero_space(name)


def section_h_space(space, e, i, name=""):
    """H^i(Z, O(e)) with its monomial or Laurent basis."""
    if i == 0:
        return DirectSpace(section_monomials(space, e), name)
    if i == space.n - 1:
        return DirectSpace(section_laurent_basis(space, e), name)
    return zero_space(name)


def _r3_space(space, e, f, i, name=""):
    """R3 degree-i space: H^i(Z, f-e) block 0, then H^{i-1}(Z, f-e+m) block 1."""
    labels = []
    if 0 <= i <= space.n - 1:
        labels += [(0, mon) for mon in section_h_space(space, f - e, i).labels]
    if 0 <= i - 1 <= space.n - 1:
        labels += [
            (1, mon)
            for mon in section_h_space(space, f - e + space.m, i - 1).labels
        ]
    return DirectSpace(tuple(labels), name)


def _r4_space(space, e, b, i, name=""):
    """R4 degree-i space: H^{n-i}(Z, e-(n+m)-b)^* with dual labels."""
    j = space.n - i
    if not 0 <= j <= space.n - 1:
        return zero_space(name)
    primal = section_h_space(space, e - space.n - space.m - b, j)
    return DirectSpace(tuple(Dual(mon) for mon in primal.labels), name)


# ---------------------------------------------------------------------------
# the graded Hom rules
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def hom_atoms(space, A, B):
    """Graded Hom^*(A, B) between atoms, via the rule table.

    Raises OutOfValidity for pairs no rule justifies, e.g. the full
    graded Hom out of a non-invertible twist into another twist.
    """
    n = space.n
    tag = "%s->%s" % (A, B)
    if A.kind == CONE and B.kind == CONE:
        if not A.is_invertible(space):
            raise OutOfValidity(
                "graded Hom(%s, %s): source twist is not invertible; only the "
                "degree-0 reflexive Hom is defined (rule R0)" % (A, B)
            )
        d = B.twist - A.twist
        spaces = tuple(
            cone_h_space(space, d, i, "Hom^%d(%s)" % (i, tag)) for i in range(n + 1)
        )
        return GradedHom(A, B, spaces, ("R1",) * (n + 1))
    if A.kind == CONE and B.kind == SECTION:
        d = B.twist - A.twist
        spaces = tuple(
            section_h_space(space, d, i, "Hom^%d(%s)" % (i, tag))
            if i <= n - 1
            else zero_space("Hom^%d(%s)" % (i, tag))
            for i in range(n + 1)
        )
        return GradedHom(A, B, spaces, ("R2",) * (n + 1))
    if A.kind == SECTION and B.kind == SECTION:
        spaces = tuple(
            _r3_space(space, A.twist, B.twist, i, "Hom^%d(%s)" % (i, tag))
            for i in range(n + 1)
        )
        return GradedHom(A, B, spaces, ("R3",) * (n + 1))
    # section source into a cone twist
    if not B.is_invertible(space):
        raise OutOfValidity(
            "graded Hom(%s, %s): target twist is not invertible; rule R4 "
            "does not apply" % (A, B)
        )
    spaces = tuple(
        _r4_space(space, A.twist, B.twist, i, "Hom^%d(%s)" % (i, tag))
        for i in range(n + 1)
    )
    return GradedHom(A, B, spaces, ("R4",) * (n + 1))


def hom_dims(space, A, B):
    return hom_atoms(space, A, B).dims


# ---------------------------------------------------------------------------
# degree-0 Hom spaces between sums, and monomial arithmetic
# ---------------------------------------------------------------------------

def hom0_space(space, a, targets, name=""):
    """Hom(O(a), sum_c T_c) in degree 0, labels (c, monomial).

    Cone targets use the reflexive rule R0, section targets R2.
    """
    labels = []
    for c, t in enumerate(targets):
        if t.kind == CONE:
            basis = weighted_monomials(space, t.twist - a)
        else:
            basis = section_monomials(space, t.twist - a)
        labels += [(c, mon) for mon in basis]
    return DirectSpace(tuple(labels), name)


def restrict_monomial(mon):
    """Image of a cone monomial on the section: drop x_n, or 0 if present."""
    if mon.exps[-1] != 0:
        return None
    return Monomial(mon.exps[:-1])


def laurent_class(mon):
    """The Laurent local-cohomology class of mon, or None if it vanishes."""
    if all(e <= -1 for e in mon.exps):
        return mon
    return None


def restrict_map(space, a, e):
    """Restriction Hom(O(a), O(e)) -> Hom(O(a), OZ(e)) in degree 0.

    Induced by the canonical section O(e) -> OZ(e); monomials divisible
    by the cone variable map to zero.
    """
    src = hom0_space(space, a, (OX(e),), "Hom(O(%d),O(%d))" % (a, e))
    tgt = hom0_space(space, a, (OZ(e),), "Hom(O(%d),OZ(%d))" % (a, e))
    entries = {}
    for (c, mon) in src.labels:
        r = restrict_monomial(mon)
        if r is not None:
            entries[((c, r), (c, mon))] = 1
    return map_from_entries(src, tgt, entries, name="restrict(a=%d,e=%d)" % (a, e))


def connecting_map(space, d):
    """Connecting map H^{n-1}(Z, O(d)) -> H^n(X, O(d-m)).

    On Laurent bases it is multiplication by the inverse of the cone
    variable; it is always injective, and its cokernel is spanned by the
    Laurent monomials whose x_n exponent is at most -2.
    """
    src = DirectSpace(section_laurent_basis(space, d), "H^%d(Z,O(%d))" % (space.n - 1, d))
    tgt = DirectSpace(
        laurent_top_basis(space, d - space.m),
        "H^%d(X,O(%d))" % (space.n, d - space.m),
    )
    entries = {}
    for mon in src.labels:
        entries[((Monomial(mon.exps + (-1,))), mon)] = 1
    return map_from_entries(src, tgt, entries, name="connect(d=%d)" % d)


def serre_pairing(space, d):
    """The duality pairing H^0(O(d)) x H^n(O(-d-(n+m))) -> k as a map.

    Returned as the map H^0(O(d)) -> H^n(O(-d-(n+m)))^* whose matrix has
    a 1 exactly where the product of the two monomials is the inverse of
    the product of all variables; it is a permutation matrix.
    """
    src = DirectSpace(weighted_monomials(space, d), "H^0(X,O(%d))" % d)
    dual_deg = -d - space.n - space.m
    tgt = DirectSpace(
        tuple(Dual(mon) for mon in laurent_top_basis(space, dual_deg)),
        "H^%d(X,O(%d))^" % (space.n, dual_deg),
    )
    entries = {}
    for u in src.labels:
        v = Monomial(tuple(-1 - e for e in u.exps))
        entries[(Dual(v), u)] = 1
    return map_from_entries(src, tgt, entries, name="pairing(d=%d)" % d)


def pairing_partner(mon):
    """The unique monomial pairing with mon to the class of (x0...xn)^-1."""
    return Monomial(tuple(-1 - e for e in mon.exps))


# ---------------------------------------------------------------------------
# cone presentations of Ext^1(OZ(e), T)
# ---------------------------------------------------------------------------

@dataclass
class ConePresentation:
    """Ext^1(OZ(e), T) presented as a cokernel of cone-variable multiplication.

    The generators live in Hom(O(e-m), T) in degree 0; the relations are
    the image of multiplication by x_n from Hom(O(e), T).  The presented
    dimension is cross-checked against the closed-form rules at
    construction; a mismatch is an error (the query left the validity
    domain), never a silent answer.
    """

    e: int
    targets: tuple
    generators: DirectSpace
    relation_source: DirectSpace
    xn_map: PresentedMap
    quotient: Subquotient
    quotient_map: PresentedMap

    @property
    def dim(self):
        return self.quotient.dim


def _xn_multiplication(space, e, targets):
    """Multiplication by x_n: Hom(O(e), T) -> Hom(O(e-m), T), degree 0."""
    src = hom0_space(space, e, targets, "Hom(O(%d),T)" % e)
    tgt = hom0_space(space, e - space.m, targets, "Hom(O(%d),T)" % (e - space.m))
    xn = Monomial((0,) * space.n + (1,))
    entries = {}
    for (c, mon) in src.labels:
        if targets[c].kind == CONE:
            entries[((c, mon * xn), (c, mon))] = 1
        # on a section target multiplication by x_n is zero
    return map_from_entries(src, tgt, entries, name="xn(e=%d)" % e)


def cone_presentation(space, e, targets):
    """Present Ext^1(OZ(e), T) for T a sum of invertible twists and OZ twists.

    Raises PresentationMismatch when the presented dimension disagrees
    with the closed-form degree-1 dimension (rules R3/R4): that signals
    the pair left the validity domain.
    """
    targets = tuple(targets)
    for t in targets:
        if t.kind == CONE and not t.is_invertible(space):
            raise OutOfValidity(
                "cone presentation needs invertible cone twists, got %s" % (t,)
            )
    xmap = _xn_multiplication(space, e, targets)
    quotient = Subquotient(
        xmap.target,
        None,  # full ambient span
        xmap.matrix if xmap.source.dim else None,
        name="Ext^1(OZ(%d),T)" % e,
    )
    expected = sum(hom_atoms(space, OZ(e), t).dims[1] for t in targets)
    if quotient.dim != expected:
        raise PresentationMismatch(
            "Ext^1(OZ(%d), %s): presentation gives %d, rules give %d"
            % (e, "+".join(str(t) for t in targets), quotient.dim, expected)
        )
    qmap = PresentedMap(
        xmap.target,
        quotient,
        identity(xmap.target.dim),
        name="quotient",
        check=False,
    )
    return ConePresentation(e, targets, xmap.source, xmap.target, xmap, quotient, qmap)


def postcompose_sections_map(space, a, src_targets, components, tgt_atom, name=""):
    """Postcomposition Hom(O(a), sum_c T_c) -> Hom(O(a), tgt) in degree 0.

    `components` gives, for each summand T_c = O(b_c), the composite
    section T_c -> tgt as a vector over the monomial basis of the
    relevant section space (tgt = OZ(f): basis of H^0(Z, f - b_c)).
    Cone-monomial inputs are restricted to the section before
    multiplying.
    """
    src = hom0_space(space, a, src_targets)
    tgt = hom0_space(space, a, (tgt_atom,))
    entries = {}
    for (c, mon) in src.labels:
        comp = components[c]
        if src_targets[c].kind == CONE:
            base = restrict_monomial(mon)
        else:
            base = mon
        if base is None:
            continue
        for mu, coeff in comp:
            if coeff == 0:
                continue
            entries[((0, base * mu), (c, mon))] = (
                entries.get(((0, base * mu), (c, mon)), 0) + coeff
            )
    return map_from_entries(src, tgt, entries, name=name)


def ext1_postcompose_map(space, e, pres_src, pres_tgt, components, name=""):
    """The induced map on cone presentations of Ext^1(OZ(e), -).

    `components` describes the map T -> T' on the summands, as in
    postcompose_sections_map.  The square against the two x_n
    multiplication maps is verified by an exact matrix identity.
    """
    amb_map = postcompose_sections_map(
        space,
        e - space.m,
        pres_src.targets,
        components,
        pres_tgt.targets[0],
        name=name + ".ambient",
    )
    top_map = postcompose_sections_map(
        space,
        e,
        pres_src.targets,
        components,
        pres_tgt.targets[0],
        name=name + ".pairs",
    )
    # the square with x_n multiplication must commute on the nose
    left = mat_mul(amb_map.matrix, pres_src.xn_map.matrix)
    right = mat_mul(pres_tgt.xn_map.matrix, top_map.matrix)
    if left != right:
        raise EngineError("cone presentation square does not commute for %s" % name)
    return PresentedMap(
        pres_src.quotient, pres_tgt.quotient, amb_map.matrix, name=name
    )
