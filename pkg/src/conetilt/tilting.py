"""Verification layer: tilting objects, semiorthogonality, block dimensions.

A report never fakes a check it cannot perform: generation of the
derived category by the listed objects has no finite certificate in
this engine, so it is recorded as an assumption, and the remaining
hypotheses (each object tilting, Hom vanishing from later to earlier)
are verified computationally.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cone import cone_cohomology_dim
from .linalg import EngineError
from .objects import as_object, hom_objects, rank_of, SumObject


@dataclass
class TiltingVerdict:
    ok: bool
    end_dim: int
    dims: tuple

    def __str__(self):
        if self.ok:
            return "tilting, End dimension %d" % self.end_dim
        return "not tilting: higher self-extensions %s" % (self.dims[1:],)


def is_tilting(space, T):
    """True iff Hom^i(T, T) = 0 for all i > 0; also reports dim End(T)."""
    dims = hom_objects(space, T, T)
    return TiltingVerdict(all(d == 0 for d in dims[1:]), dims[0], dims)


@dataclass
class EndBlocks:
    names: list
    ranks: list
    matrix: list  # matrix[i][j] = dim Hom(T_i, T_j) in degree 0
    total: int


def end_blocks(space, summands, names=None):
    """Degree-0 block dimension matrix [dim Hom(T_i, T_j)].

    It is an error if any pair has Hom in a positive degree: the blocks
    only describe an endomorphism algebra when everything is
    concentrated in degree 0.
    """
    summands = [as_object(o) for o in summands]
    if names is None:
        names = [str(o) for o in summands]
    matrix = []
    for a in summands:
        row = []
        for b in summands:
            dims = hom_objects(space, a, b)
            if any(dims[1:]):
                raise EngineError(
                    "Hom(%s, %s) is not concentrated in degree 0: %s"
                    % (a, b, dims)
                )
            row.append(dims[0])
        matrix.append(row)
    total = sum(sum(row) for row in matrix)
    return EndBlocks(list(names), [rank_of(o) for o in summands], matrix, total)


@dataclass
class SODReport:
    space: object
    names: list
    objects: list
    pairwise: list  # pairwise[i][j] = graded dims of Hom^*(P_i, P_j)
    tilting: list
    blocks: list  # dim End(P_i)
    block_detail: list  # EndBlocks per slot (None when not available)
    ranks: list
    ok: bool
    first_violation: str = None
    generation_note: str = ""
    notes: list = field(default_factory=list)

    def summary(self):
        verdict = "PASS" if self.ok else "FAIL (%s)" % self.first_violation
        return "SOD <%s>: %s; End dims %s" % (
            ", ".join(self.names),
            verdict,
            tuple(self.blocks),
        )


def check_sod(space, named_objects, generation_assumed=True):
    """Check the hypotheses for an ordered semiorthogonal collection.

    Verifies that each object is tilting and that Hom^*(P_i, P_j)
    vanishes for i > j; emits the full pairwise graded Hom matrix.
    Failures are report outcomes, not errors.
    """
    names = [n for n, _ in named_objects]
    objects = [as_object(o) for _, o in named_objects]
    k = len(objects)
    pairwise = [
        [hom_objects(space, objects[i], objects[j]) for j in range(k)]
        for i in range(k)
    ]
    tilting = [
        TiltingVerdict(
            all(d == 0 for d in pairwise[i][i][1:]),
            pairwise[i][i][0],
            pairwise[i][i],
        )
        for i in range(k)
    ]
    first = None
    for i in range(k):
        if not tilting[i].ok and first is None:
            first = "object %s is not tilting: %s" % (
                names[i],
                pairwise[i][i][1:],
            )
    if first is None:
        for i in range(k):
            for j in range(i):
                if any(pairwise[i][j]):
                    first = "Hom*(%s, %s) = %s is nonzero" % (
                        names[i],
                        names[j],
                        pairwise[i][j],
                    )
                    break
            if first is not None:
                break
    block_detail = []
    for obj in objects:
        if isinstance(obj, SumObject) and all(k == 1 for _, k in obj.parts):
            try:
                block_detail.append(
                    end_blocks(space, [o for o, _ in obj.parts])
                )
            except EngineError:
                block_detail.append(None)
        else:
            block_detail.append(None)
    note = (
        "generation of the derived category by the listed objects is "
        "assumed, not checked (no finite certificate)"
        if generation_assumed
        else "generation not asserted"
    )
    report = SODReport(
        space=space,
        names=names,
        objects=objects,
        pairwise=pairwise,
        tilting=tilting,
        blocks=[t.end_dim for t in tilting],
        block_detail=block_detail,
        ranks=[rank_of(o) for o in objects],
        ok=first is None,
        first_violation=first,
        generation_note=note,
    )
    if space.n > 3:
        report.notes.append(
            "dimension %d is an untested regime for this engine" % space.n
        )
    return report


@dataclass
class StackWindowReport:
    window: tuple
    ok: bool
    first_violation: str = None


def stack_hom_dims(space, a, b):
    """Graded Hom between twists on the resolving stack.

    On the stack every twist is invertible, so the full twist rule
    applies without the invertibility restriction of the coarse space.
    """
    return tuple(
        cone_cohomology_dim(space, b - a, i) for i in range(space.n + 1)
    )


def stack_exceptional_check(space, lo, hi):
    """Numeric exceptionality of the twist window O(lo), ..., O(hi) on the stack.

    Each twist must have End = k and no higher self-extensions, and all
    backwards Homs must vanish.
    """
    first = None
    for a in range(lo, hi + 1):
        dims = stack_hom_dims(space, a, a)
        if dims[0] != 1 or any(dims[1:]):
            first = "O(%d) is not exceptional: %s" % (a, dims)
            break
    if first is None:
        for b in range(lo, hi + 1):
            for a in range(lo, b):
                dims = stack_hom_dims(space, b, a)
                if any(dims):
                    first = "Hom*(O(%d), O(%d)) = %s is nonzero" % (b, a, dims)
                    break
            if first is not None:
                break
    return StackWindowReport((lo, hi), first is None, first)


@dataclass
class IdentityCheck:
    holds: bool
    total: int
    sum_of_squares: int

    def __str__(self):
        rel = "=" if self.holds else "!="
        return "%d %s sum of squared ranks %d%s" % (
            self.total,
            rel,
            self.sum_of_squares,
            "" if self.holds else " (identity not applicable)",
        )


def rank_square_identity(blocks):
    """Observation: does the total End dimension equal the sum of the
    squares of the summand ranks?  Reported, not asserted."""
    squares = sum(r * r for r in blocks.ranks)
    return IdentityCheck(blocks.total == squares, blocks.total, squares)
