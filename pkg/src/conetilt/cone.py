"""Combinatorics of the weighted projective cone P(1,...,1,m).

The cone X has homogeneous coordinates x0,...,x_{n-1} of weight 1 and a
last coordinate x_n of weight m, so dim X = n and X is the projective
cone over P^{n-1} embedded by O(m).  The hyperplane section at infinity
Z = {x_n = 0} is a P^{n-1} sitting in |O_X(m)|, with normal bundle of
degree m.  The canonical twist of X is -(n+m).

Cohomology of a twist O_X(d) is modelled by explicit monomial bases:

* H^0(X, O(d)) is spanned by the monomials with nonnegative exponents
  and weighted degree d;
* H^n(X, O(d)) is spanned (via local cohomology at the irrelevant
  ideal) by the Laurent monomials with every exponent <= -1 and
  weighted degree d;
* the intermediate cohomology of any twist vanishes.  This standard
  fact about weighted projective spaces is encoded as a rule, not
  recomputed.

All bases are ordered lexicographically on exponent vectors, and every
downstream matrix depends on that order, so it is part of the contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


@dataclass(frozen=True)
class ConeSpace:
    """The cone P(1^n, m): n weight-one variables and one of weight m."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2 weight-one variables, got %d" % self.n)
        if self.m < 1:
            raise ValueError("cone variable weight must be >= 1, got %d" % self.m)

    @property
    def dim(self):
        return self.n

    @property
    def weights(self):
        return (1,) * self.n + (self.m,)

    @property
    def canonical_degree(self):
        return -(self.n + self.m)

    @property
    def section_normal_degree(self):
        """Degree of the normal bundle of the section Z inside X."""
        return self.m

    def __str__(self):
        return "P(%s)" % ",".join(str(w) for w in self.weights)


def make_space(n, m):
    """Construct P(1^n, m); rejects n < 2 or m < 1."""
    return ConeSpace(n, m)


@dataclass(frozen=True, order=True)
class Monomial:
    """A (Laurent) monomial, stored as its exponent vector.

    Length n+1 vectors live on the cone, length n vectors on the
    section Z.  H^0 bases have all exponents >= 0; top-cohomology bases
    have all exponents <= -1.
    """

    exps: tuple

    def __mul__(self, other):
        if len(self.exps) != len(other.exps):
            raise ValueError("cannot multiply monomials of different lengths")
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exps):
            if e == 0:
                continue
            parts.append("x%d" % i if e == 1 else "x%d^%d" % (i, e))
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return "Monomial(%s)" % (self,)


def weighted_degree(space, mon):
    """Weighted degree of a cone monomial (length n+1)."""
    return sum(mon.exps[: space.n]) + space.m * mon.exps[space.n]


def _compositions(total, parts):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def weighted_monomials(space, d):
    """Monomial basis of H^0(X, O(d)), in lexicographic order."""
    if d < 0:
        return ()
    mons = []
    for j in range(d // space.m + 1):
        for head in _compositions(d - j * space.m, space.n):
            mons.append(Monomial(head + (j,)))
    return tuple(sorted(mons))


@lru_cache(maxsize=None)
def laurent_top_basis(space, d):
    """Laurent monomial basis of H^n(X, O(d)): all exponents <= -1.

    Substituting e_i = -1 - b_i identifies this basis with the H^0
    basis at degree -d-(n+m), so the two counts always agree.
    """
    dual = weighted_monomials(space, -d - space.n - space.m)
    mons = [Monomial(tuple(-1 - b for b in mon.exps)) for mon in dual]
    return tuple(sorted(mons))


@lru_cache(maxsize=None)
def section_monomials(space, e):
    """Monomial basis of H^0(Z, O(e)) on the section Z = P^{n-1}."""
    if e < 0:
        return ()
    return tuple(sorted(Monomial(t) for t in _compositions(e, space.n)))


@lru_cache(maxsize=None)
def section_laurent_basis(space, e):
    """Laurent basis of H^{n-1}(Z, O(e)): all n exponents <= -1."""
    dual = section_monomials(space, -e - space.n)
    return tuple(sorted(Monomial(tuple(-1 - b for b in mon.exps)) for mon in dual))


def cone_cohomology_dim(space, d, i):
    """dim H^i(X, O_X(d)); rejects i outside [0, n]."""
    if not 0 <= i <= space.n:
        raise ValueError("cohomological degree %d outside [0, %d]" % (i, space.n))
    if i == 0:
        return len(weighted_monomials(space, d))
    if i == space.n:
        return len(weighted_monomials(space, -d - space.n - space.m))
    return 0


def section_cohomology_dim(space, e, i):
    """dim H^i(Z, O_Z(e)) for the section Z = P^{n-1}; rejects i outside [0, n-1]."""
    if not 0 <= i <= space.n - 1:
        raise ValueError(
            "cohomological degree %d outside [0, %d]" % (i, space.n - 1)
        )
    n1 = space.n - 1
    if i == 0:
        return comb(e + n1, n1) if e >= 0 else 0
    if i == n1:
        return comb(-e - 1, n1) if -e - 1 >= n1 else 0
    return 0
