"""Inverting the filling map: blocking test, reorder, path search, pipeline."""

import pytest

from kralcove.alcove import enumerate_admissible, is_admissible, lambda_chain, omega_chain
from kralcove.columns import Filling
from kralcove.fill import fill
from kralcove.inverse import (
    NoPathError,
    invert,
    is_blocked_off,
    path,
    path_segment,
    reorder,
    sweep,
)
from kralcove.weyl import CircularOrder, LieType, RootLabel, signed_alphabet

A3 = LieType("A", 3)
A4 = LieType("A", 4)
A6 = LieType("A", 6)
B2 = LieType("B", 2)
B3 = LieType("B", 3)
B4 = LieType("B", 4)
B8 = LieType("B", 8)
C2 = LieType("C", 2)
D4 = LieType("D", 4)
D8 = LieType("D", 8)


# ---------------------------------------------------------------------------
# the blocking test

BLOCKED_LEFT = (1, 4, -2, -3, 5)
BLOCKED_RIGHT = (1, 5, -2, 3, 8)


def test_blocked_pair():
    report = is_blocked_off(B8, BLOCKED_LEFT, BLOCKED_RIGHT, 4)
    assert report.blocked
    assert report.position == 4
    assert report.bound == 3
    assert report.branch == "standard"
    assert bool(report)


def test_same_pair_is_not_blocked_at_other_rows():
    for i in (1, 2, 3, 5):
        assert not is_blocked_off(B8, BLOCKED_LEFT, BLOCKED_RIGHT, i)


def test_identical_positive_columns_never_block():
    # zero sign flips is an even count, so the parity clause fails
    col = (1, 2, 3, 4, 5)
    for i in range(1, 6):
        assert not is_blocked_off(B8, col, col, i)


def test_types_a_and_c_never_block():
    assert not is_blocked_off(LieType("C", 8), BLOCKED_LEFT, BLOCKED_RIGHT, 4)
    assert not is_blocked_off(LieType("A", 8), (1, 2, 3, 4, 5), (2, 3, 4, 5, 6), 3)


def test_mirror_clauses_only_fire_in_type_d():
    # bound -3 sits below the row value 3 on the barred side, the letters
    # 3 and 4 are exhausted by both prefixes, and row 2 flips + to -
    assert is_blocked_off(D4, (4, 3), (4, -3), 2).branch == "mirror"
    assert not is_blocked_off(B4, (4, 3), (4, -3), 2)
    assert is_blocked_off(D8, BLOCKED_LEFT, BLOCKED_RIGHT, 4).branch == "standard"


def test_blocking_row_must_sit_inside_the_prefixes():
    with pytest.raises(ValueError):
        is_blocked_off(B8, BLOCKED_LEFT, BLOCKED_RIGHT, 6)
    with pytest.raises(ValueError):
        is_blocked_off(B8, BLOCKED_LEFT, BLOCKED_RIGHT, 0)


# ---------------------------------------------------------------------------
# reorder

def test_reorder_type_a():
    b = Filling(A6, (4, 3, 3), ((3, 5, 6), (2, 3, 4), (1, 2, 4), (2,)))
    assert reorder(A6, b).columns == ((3, 5, 6), (3, 2, 4), (4, 2, 1), (2,))


def test_reorder_type_b_avoids_the_blocking_letter():
    # the circularly nearest letter at row 4 is 3, but pairing it with
    # the -3 blocks the pair off, so the 8 is taken and the 3 drops to
    # the unguarded bottom row
    b = Filling(B8, (1,) * 5, ((1, 4, -2, -3, 5), (1, 3, 5, 8, -2)))
    assert reorder(B8, b).columns == ((1, 4, -2, -3, 5), (1, 5, -2, 8, 3))


def test_reorder_keeps_a_single_column():
    b = Filling(B3, (1, 1), ((-2, 1), (1, 2)))
    assert reorder(B3, b).columns[0] == (-2, 1)


def test_reorder_recovers_the_raw_column_order():
    # the raw filling's columns satisfy the adjacency conditions the
    # reorder output is the unique sorted-equivalent solution of
    for lt, lam in ((A3, (3, 2)), (C2, (2,)), (B3, (1, 1)), (D4, (1, 1))):
        chain = lambda_chain(lt, lam)
        for fs in enumerate_admissible(chain):
            result = fill(lt, lam, fs.J, chain)
            assert reorder(lt, result.sorted).columns == result.raw.columns


# ---------------------------------------------------------------------------
# path_segment

def _left_rows(lt, k):
    half = [p for p in omega_chain(lt, k) if p.side == "left"]
    rows = {}
    for p in half:
        row = p.root.j if p.stage == "IV" else p.root.i
        rows.setdefault(row, []).append(p)
    return rows


def test_path_segment_worked_row_sweeps():
    rows = _left_rows(B3, 2)
    top = path_segment(B3, (-3, -2, 1), 2, (1, 3), rows[2], 1)
    assert [str(s.root) for s in top.steps] == ["(2,3)", "(2,-3)", "(1,-2)"]
    assert [s.stage for s in top.steps] == ["I", "III", "IV"]
    assert [s.window for s in top.steps] == [(-3, 1, -2), (-3, 2, -1), (-2, 3, -1)]
    assert top.skips == ()
    assert not top.passed
    assert (top.m_one, top.m_three) == (1, 2)

    bottom = path_segment(B3, top.end, 1, (1, 3), rows[1], 1 + len(rows[2]))
    assert [str(s.root) for s in bottom.steps] == ["(1,-3)"]
    assert bottom.end == (1, 3, 2)
    # the plain rule calls for (1,3) first, but its word is blocked off
    # at 1 by 1, so the sweep skips it and settles at stage III
    assert [(str(s.root), s.stage) for s in bottom.skips] == [("(1,3)", "I")]
    assert bottom.skips[0].window == (-1, 3, -2)
    assert (bottom.m_one, bottom.m_three) == (-1, 1)


def test_path_segment_row_already_at_target():
    rows = _left_rows(B3, 2)
    trace = path_segment(B3, (1, -2, 3), 1, (1, 3), rows[1], 5)
    assert trace.steps == () and trace.skips == ()
    assert trace.end == (1, -2, 3)
    assert trace.segment_start == 5


def test_path_segment_reports_missing_path():
    # row 1 can reach 3 with both swaps available, but not with the
    # segment cut after the first one
    segment = list(omega_chain(A3, 1))
    with pytest.raises(NoPathError):
        path_segment(A3, (1, 2, 3), 1, (3,), segment[:1], 1)


def test_sweep_checks_rows_without_segments():
    # the right half of a type C column has no reflections for row 1,
    # so a target that differs there is unreachable
    right = [p for p in omega_chain(C2, 2) if p.side == "right"]
    with pytest.raises(NoPathError):
        sweep(C2, (1, 2), (2, 2), right, 1)


# ---------------------------------------------------------------------------
# path

def test_path_worked_type_a_run():
    b = Filling(A4, (3, 2, 1), ((1, 3, 4), (1, 2), (2,)))
    assert reorder(A4, b).columns == b.columns
    result = path(A4, b)
    assert result.subset.J == (1, 2, 4, 5, 8)
    assert [str(r) for r in result.subset.T] == [
        "(3,4)", "(2,4)", "(2,3)", "(2,4)", "(1,2)"
    ]
    windows = [s.window for t in result.rows for s in t.steps]
    assert windows == [
        (1, 2, 4, 3), (1, 3, 4, 2), (1, 4, 3, 2), (1, 2, 3, 4), (2, 1, 3, 4)
    ]


def test_path_of_the_smallest_tensor_element_is_empty():
    for lt, lam in ((A3, (3, 2)), (B3, (1, 1))):
        chain = lambda_chain(lt, lam)
        smallest = fill(lt, lam, (), chain).sorted
        result = path(lt, reorder(lt, smallest), chain)
        assert result.subset.J == ()


def test_path_trace_collection_can_be_dropped():
    b = Filling(A4, (3, 2, 1), ((1, 3, 4), (1, 2), (2,)))
    result = path(A4, b, collect_trace=False)
    assert result.rows == ()
    assert result.subset.J == (1, 2, 4, 5, 8)


# ---------------------------------------------------------------------------
# the full pipeline

def test_invert_worked_sorted_filling():
    sorted_filling = Filling(A3, (3, 2), ((2, 3), (1, 2), (1,)))
    assert invert(A3, sorted_filling).subset.J == (1, 2, 3, 5)


def test_invert_accepts_bare_columns():
    assert invert(A3, [(2, 3), (1, 2), (1,)], (3, 2)).subset.J == (1, 2, 3, 5)
    # a bare zero column is split into the sign-change pair internally
    assert invert(B2, [(0,)], (1,)).subset.J == (1, 4)
    with pytest.raises(ValueError):
        invert(A3, [(2, 3), (1, 2), (1,)])


def test_invert_of_the_empty_fill_is_empty():
    for lt, lam in ((A3, (3, 2)), (C2, (1, 1)), (B3, (1, 1)), (D4, (1,))):
        chain = lambda_chain(lt, lam)
        image = fill(lt, lam, (), chain).sorted
        assert invert(lt, image).subset.J == ()


ROUNDTRIP_CASES = [
    (A3, (3, 2)),
    (A4, (3, 2, 1)),
    (C2, (1, 1)),
    (C2, (2,)),
    (B2, (2,)),
    (B3, (1, 1)),
    (B3, (2,)),
    (D4, (1,)),
    (D4, (1, 1)),
]


@pytest.mark.parametrize("lt,lam", ROUNDTRIP_CASES, ids=lambda v: str(v))
def test_invert_recovers_every_admissible_subset(lt, lam):
    chain = lambda_chain(lt, lam)
    for fs in enumerate_admissible(chain):
        image = fill(lt, lam, fs.J, chain).sorted
        assert invert(lt, image, collect_trace=False).subset.J == fs.J


def test_recovered_subsets_are_admissible():
    chain = lambda_chain(B3, (1, 1))
    for fs in enumerate_admissible(chain):
        image = fill(B3, (1, 1), fs.J, chain).sorted
        assert is_admissible(invert(B3, image).subset)


# ---------------------------------------------------------------------------
# trace shape

def _all_traces(lt, lam):
    chain = lambda_chain(lt, lam)
    for fs in enumerate_admissible(chain):
        image = fill(lt, lam, fs.J, chain).sorted
        yield from invert(lt, image).rows


def test_row_steps_advance_without_passing_the_target():
    # each applied reflection lands in the half-open circular interval
    # from the current row value to the target, except an unconditional
    # first step escaping a blocked pair
    for lt, lam in ((B3, (2,)), (D4, (2,))):
        for trace in _all_traces(lt, lam):
            value = trace.entry[trace.row - 1]
            for position, step in enumerate(trace.steps):
                order = CircularOrder(value, signed_alphabet(lt.rank))
                landed = step.window[trace.row - 1]
                if position == 0 and trace.passed:
                    assert step.root == RootLabel.delta(trace.row, trace.row + 1)
                    assert not order.upto(landed, trace.target)
                else:
                    assert order.upto(landed, trace.target)
                value = landed
            if trace.steps:
                assert trace.end[trace.row - 1] == trace.target


def test_skips_happen_only_at_the_swap_stage():
    seen = 0
    for lt, lam in ((B3, (2, 1)), (D4, (1, 1))):
        for trace in _all_traces(lt, lam):
            for skip in trace.skips:
                assert skip.stage == "I"
                seen += 1
    assert seen > 0


def test_pass_moves_escape_blocked_pairs():
    passes = [t for t in _all_traces(B2, (2,)) if t.passed]
    assert len(passes) == 1
    (trace,) = passes
    # the one move allowed to pass its target is the adjacent swap at
    # the bottom of the column, applied without the interval test
    assert trace.steps[0].root == RootLabel.delta(trace.row, trace.row + 1)
    order = CircularOrder(trace.entry[trace.row - 1], signed_alphabet(2))
    assert not order.upto(trace.steps[0].window[trace.row - 1], trace.target)
