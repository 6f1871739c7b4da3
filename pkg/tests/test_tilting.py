"""Tilting verdicts, block matrices, decomposition and window checks."""

import pytest

from conetilt.cone import make_space
from conetilt.linalg import EngineError
from conetilt.objects import SumObject, direct_sum, kernel_bundle
from conetilt.rules import OX, OZ
from conetilt.tilting import (
    check_sod,
    end_blocks,
    is_tilting,
    rank_square_identity,
    stack_exceptional_check,
    stack_hom_dims,
)

X = make_space(3, 3)
S = make_space(2, 2)
F = kernel_bundle(X, 1)
G = kernel_bundle(X, 2)
FS = kernel_bundle(S, 1)


def test_is_tilting_examples():
    v = is_tilting(X, direct_sum(F, G))
    assert v.ok and v.end_dim == 45
    v = is_tilting(X, OX(0))
    assert v.ok and v.end_dim == 1
    v = is_tilting(X, OZ(1))
    assert not v.ok and v.dims == (1, 10, 0, 0)


def test_end_blocks_threefold():
    blocks = end_blocks(X, [F, G], ["F", "G"])
    assert blocks.matrix == [[9, 24], [3, 9]]
    assert blocks.total == 45
    assert blocks.ranks == [3, 6]


def test_end_blocks_trivial_and_surface():
    assert end_blocks(X, [OX(0)]).matrix == [[1]]
    assert end_blocks(S, [FS]).matrix == [[2]]


def test_end_blocks_rejects_higher_degrees():
    with pytest.raises(EngineError):
        end_blocks(X, [OZ(1)])  # Ext^1(OZ(1), OZ(1)) = k^10 survives


def test_check_sod_threefold_passes():
    rep = check_sod(X, [("FG", direct_sum(F, G)), ("O", OX(0)), ("O3", OX(3))])
    assert rep.ok
    assert rep.blocks == [45, 1, 1]
    assert rep.ranks == [9, 1, 1]
    assert rep.block_detail[0].matrix == [[9, 24], [3, 9]]
    assert "assumed" in rep.generation_note
    # the vanishing corner of the pairwise matrix
    assert rep.pairwise[1][0] == (0, 0, 0, 0)
    assert rep.pairwise[2][0] == (0, 0, 0, 0)
    assert rep.pairwise[2][1] == (0, 0, 0, 0)


def test_check_sod_surface_passes():
    rep = check_sod(S, [("Om2", OX(-2)), ("FS", FS), ("O", OX(0))])
    assert rep.ok
    assert rep.blocks == [1, 2, 1]


def test_check_sod_reversed_fails():
    rep = check_sod(X, [("O3", OX(3)), ("O", OX(0))])
    assert not rep.ok
    assert "Hom*(O, O3)" in rep.first_violation
    # dimension 11 = weighted monomial count at degree 3
    assert rep.pairwise[1][0] == (11, 0, 0, 0)


def test_check_sod_not_tilting_is_first_violation():
    rep = check_sod(X, [("OZ1", OZ(1)), ("O", OX(0))])
    assert not rep.ok and "not tilting" in rep.first_violation


def test_sod_invariant_under_self_sums():
    """Replacing a slot by a direct sum of copies of itself keeps the verdict."""
    base = [("FG", direct_sum(F, G)), ("O", OX(0)), ("O3", OX(3))]
    rep = check_sod(X, base)
    doubled = [
        ("FG2", SumObject(((direct_sum(F, G), 2),))),
        ("O", OX(0)),
        ("O3", OX(3)),
    ]
    rep2 = check_sod(X, doubled)
    assert rep.ok == rep2.ok is True
    failing = [("O3", OX(3)), ("O", OX(0))]
    failing2 = [("O32", SumObject(((OX(3), 2),))), ("O", OX(0))]
    assert check_sod(X, failing).ok == check_sod(X, failing2).ok is False


def test_tilting_of_sum_equals_blockwise_vanishing():
    """A + B is tilting iff all four graded blocks vanish in degree > 0."""
    pairs = [(F, G), (F, OX(0)), (OZ(1), OX(0))]
    from conetilt.objects import hom_objects

    for a, b in pairs:
        whole = is_tilting(X, direct_sum(a, b)).ok
        blocks = [
            hom_objects(X, x, y)[1:] for x in (a, b) for y in (a, b)
        ]
        assert whole == all(all(d == 0 for d in dims) for dims in blocks)


def test_stack_window_examples():
    assert stack_exceptional_check(X, 0, 5).ok
    bad = stack_exceptional_check(X, 0, 6)
    assert not bad.ok
    assert "O(6)" in bad.first_violation and "O(0)" in bad.first_violation
    assert stack_exceptional_check(X, 0, 0).ok


def test_stack_hom_dims_rule():
    # on the stack every twist is invertible: Hom^3(O(6), O) = k
    assert stack_hom_dims(X, 6, 0) == (0, 0, 0, 1)
    assert stack_hom_dims(X, 0, 0) == (1, 0, 0, 0)


def test_stack_window_surface():
    assert stack_exceptional_check(S, 0, 3).ok
    assert not stack_exceptional_check(S, 0, 4).ok


def test_rank_square_identity():
    blocks = end_blocks(X, [F, G], ["F", "G"])
    ident = rank_square_identity(blocks)
    assert ident.holds and ident.total == 45 and ident.sum_of_squares == 45
    sblocks = end_blocks(S, [FS], ["FS"])
    sident = rank_square_identity(sblocks)
    assert not sident.holds and (sident.total, sident.sum_of_squares) == (2, 4)
    trivial = end_blocks(X, [OX(0)], ["O"])
    assert rank_square_identity(trivial).holds


def test_sod_report_reproduces_vanishing_pattern():
    """The report must show exactly the published vanishing and blocks."""
    rep = check_sod(X, [("FG", direct_sum(F, G)), ("O", OX(0)), ("O3", OX(3))])
    # later-to-earlier all vanish
    for i in range(3):
        for j in range(i):
            assert rep.pairwise[i][j] == (0, 0, 0, 0)
    # earlier-to-later as computed from the tables
    assert rep.pairwise[0][1] == (18, 0, 0, 0)
    assert rep.pairwise[0][2] == (135, 0, 0, 0)
    assert rep.pairwise[1][2] == (11, 0, 0, 0)
