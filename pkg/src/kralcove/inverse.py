"""Inverting the filling map: blocked-off tests, reorder, path search.

The forward map multiplies reflections at chosen chain positions and
reads columns off the window.  Going back from a sorted filling takes
two passes per column: reorder its entries so that consecutive columns
can be joined by a quantum Bruhat path (the circularly smallest unused
letter is placed next to its left neighbour, subject to a blocking
test), then recover that path greedily as a subsequence of the chain.
The positions used form the subset J.

>>> from .weyl import LieType
>>> lt = LieType("A", 3)
>>> sorted_filling = Filling(lt, (3, 2), ((2, 3), (1, 2), (1,)))
>>> invert(lt, sorted_filling).subset.J
(1, 2, 3, 5)
"""

from __future__ import annotations

from dataclasses import dataclass

from .alcove import (
    LEFT,
    RIGHT,
    WHOLE,
    ChainPosition,
    FoldingSubset,
    LambdaChain,
    conjugate,
    fold,
    lambda_chain,
    validate_partition,
)
from .columns import Filling, extend, split
from .weyl import (
    CircularOrder,
    LieType,
    RootLabel,
    SignedPermutation,
    apply_reflection,
    identity_window,
    signed_alphabet,
    unsigned_alphabet,
)

__all__ = [
    "NoPathError",
    "BlockedOffReport",
    "PathStep",
    "RowTrace",
    "PathResult",
    "is_blocked_off",
    "reorder",
    "path_segment",
    "sweep",
    "path",
    "invert",
]


class NoPathError(ValueError):
    """No subsequence of the chain segment reaches the target column."""


def _order(lt: LieType, base: int) -> CircularOrder:
    alphabet = unsigned_alphabet(lt.rank) if lt.family == "A" else signed_alphabet(lt.rank)
    return CircularOrder(base, alphabet)


# ---------------------------------------------------------------------------
# the blocking test

@dataclass(frozen=True)
class BlockedOffReport:
    """Outcome of the blocking test at one row.

    ``branch`` tells which set of clauses fired: "standard" for the
    bound below the row value, "mirror" for the reflected clauses that
    only exist in type D, None when the pair is not blocked.
    """

    blocked: bool
    position: int
    bound: int
    branch: str | None

    def __bool__(self) -> bool:
        return self.blocked


def _blocked_standard(left, right, i: int, b: int, n: int) -> bool:
    li = left[i - 1]
    if not abs(li) <= b < n:
        return False
    if abs(li) == b and li != -b:
        return False
    need = set(range(1, b + 1))
    if not need <= {abs(x) for x in left[:i]}:
        return False
    if not need <= {abs(x) for x in right[:i]}:
        return False
    flips = sum(1 for l, r in zip(left[:i], right[:i]) if l < 0 < r)
    return flips % 2 == 1


def _blocked_mirror(left, right, i: int, b: int, n: int) -> bool:
    li = left[i - 1]
    if not -abs(li) <= b < 0:
        return False
    if -abs(li) == b and li != -b:
        return False
    need = set(range(-b, n + 1))
    if not need <= {abs(x) for x in left[:i]}:
        return False
    if not need <= {abs(x) for x in right[:i]}:
        return False
    flips = sum(1 for l, r in zip(left[:i], right[:i]) if r < 0 < l)
    return flips % 2 == 1


def is_blocked_off(lt: LieType, left, right, i: int) -> BlockedOffReport:
    """Test whether the column pair is blocked off at row i by right[i].

    A blocked pair admits no connecting chain path that keeps row i at
    or below its target, so both the reorder guard and the stage-I
    guard of the path search consult this.  The standard clauses ask
    for a positive bound b below the rank with the letter interval 1..b
    exhausted by both prefixes and an odd number of sign flips from
    barred to unbarred; type D adds the mirrored clauses with a barred
    bound.  Types A and C are never blocked.

    >>> from .weyl import LieType
    >>> report = is_blocked_off(LieType("B", 8), (1, 4, -2, -3, 5), (1, 5, -2, 3, 8), 4)
    >>> report.blocked, report.bound
    (True, 3)
    """
    left = tuple(left)
    right = tuple(right)
    if not 1 <= i <= min(len(left), len(right)):
        raise ValueError(f"row {i} is outside the prefixes {left} / {right}")
    b = right[i - 1]
    n = lt.rank
    if lt.family in ("A", "C"):
        return BlockedOffReport(False, i, b, None)
    if _blocked_standard(left, right, i, b, n):
        return BlockedOffReport(True, i, b, "standard")
    if lt.family == "D" and _blocked_mirror(left, right, i, b, n):
        return BlockedOffReport(True, i, b, "mirror")
    return BlockedOffReport(False, i, b, None)


# ---------------------------------------------------------------------------
# reordering columns

def reorder(lt: LieType, filling: Filling) -> Filling:
    """Rewrite each column into the order the raw filling map produces.

    The first column is kept as given.  Every later entry is the
    circularly smallest leftover letter measured from the entry beside
    it in the previous column; in types B and D a letter that would
    block the pair off at its row is passed over.  The bottom entry of
    each column takes the last leftover with no guard.

    >>> from .weyl import LieType
    >>> lt = LieType("A", 6)
    >>> b = Filling(lt, (4, 3, 3), ((3, 5, 6), (2, 3, 4), (1, 2, 4), (2,)))
    >>> reorder(lt, b).columns
    ((3, 5, 6), (3, 2, 4), (4, 2, 1), (2,))
    """
    columns = list(filling.columns)
    out = [tuple(columns[0])]
    for col in columns[1:]:
        prev = out[-1]
        h = len(col)
        remaining = list(col)
        chosen: list[int] = []
        for j in range(1, h + 1):
            ranked = sorted(remaining, key=_order(lt, prev[j - 1]).pos)
            if j == h:
                pick = ranked[0]
            else:
                pick = next(
                    (
                        x
                        for x in ranked
                        if not is_blocked_off(lt, prev[:j], (*chosen, x), j)
                    ),
                    None,
                )
                if pick is None:
                    raise ValueError(
                        f"every leftover letter blocks column {len(out) + 1} at row {j}"
                    )
            chosen.append(pick)
            remaining.remove(pick)
        out.append(tuple(chosen))
    return Filling(lt, filling.lam, tuple(out))


# ---------------------------------------------------------------------------
# path search

@dataclass(frozen=True)
class PathStep:
    """One considered reflection: chain index, root, stage, and the word
    it produces (for a skipped candidate, the word it would have
    produced)."""

    index: int
    root: RootLabel
    stage: str
    window: SignedPermutation


@dataclass(frozen=True)
class RowTrace:
    """Everything one row sweep did with its chain segment.

    ``skips`` holds the swap candidates that passed the circular
    interval test but were refused because applying them would block
    the words off; ``passed`` marks the unconditional first step that
    moves the row value past its target to escape a blocked pair.
    ``m_one`` and ``m_three`` are the largest row values reachable
    through the swap stage alone and through everything up to the sign
    change, measured at entry.
    """

    row: int
    target: int
    entry: SignedPermutation
    steps: tuple[PathStep, ...]
    skips: tuple[PathStep, ...]
    passed: bool
    m_one: int | None
    m_three: int | None
    segment_start: int
    segment_length: int

    @property
    def end(self) -> SignedPermutation:
        return self.steps[-1].window if self.steps else self.entry


def _prospective_value(v: SignedPermutation, root: RootLabel, i: int) -> int:
    """The row-i entry after applying root, without building the window."""
    if root.kind == "delta":
        return v[root.j - 1] if root.i == i else v[root.i - 1]
    if root.kind == "sigma":
        return -v[root.j - 1] if root.i == i else -v[root.i - 1]
    return -v[i - 1]


def _display_row(position: ChainPosition) -> int:
    root = position.root
    return root.j if position.stage == "IV" else root.i


def _entry_maxima(lt: LieType, u: SignedPermutation, i: int, c: int, k: int):
    n = lt.rank
    order = _order(lt, u[i - 1])
    pool = [u[l - 1] for l in range(k + 1, n + 1)]
    m_one = max([u[i - 1]] + [x for x in pool if order.upto(x, c)], key=order.pos)
    if lt.family == "A":
        return m_one, None
    pool += [-x for x in pool] + [-u[i - 1]]
    m_three = max([u[i - 1]] + [x for x in pool if order.upto(x, c)], key=order.pos)
    return m_one, m_three


def path_segment(
    lt: LieType,
    u: SignedPermutation,
    i: int,
    target,
    segment,
    base_index: int = 1,
) -> RowTrace:
    """Move row i of u onto its target letter using one chain segment.

    Scans the segment in chain order and applies every reflection that
    advances the row value without passing the target letter, in the
    circular order based at the current value.  A swap-stage candidate
    is skipped, and recorded, when applying it would block the words
    off at this row; the sign change in type B additionally requires an
    unbarred value, which is part of its rule rather than a skip.  When
    the pair is blocked off at entry and the segment opens with the
    adjacent swap below the column, that swap is applied without any
    test; it is the one move allowed to pass the target.  Raises
    NoPathError when the scan ends with the row short of the target.

    ``base_index`` is the chain index of the first segment position, so
    steps carry positions in the full chain.
    """
    target = tuple(target)
    c = target[i - 1]
    positions = list(segment)
    if u[i - 1] == c:
        return RowTrace(i, c, u, (), (), False, None, None, base_index, len(positions))
    m_one, m_three = _entry_maxima(lt, u, i, c, len(target))
    v = u
    steps: list[PathStep] = []
    skips: list[PathStep] = []
    passed = False
    start = 0
    if (
        positions
        and positions[0].root == RootLabel.delta(i, i + 1)
        and is_blocked_off(lt, v[:i], target[:i], i)
    ):
        v = apply_reflection(v, positions[0].root)
        steps.append(PathStep(base_index, positions[0].root, positions[0].stage, v))
        passed = True
        start = 1
    for offset in range(start, len(positions)):
        if v[i - 1] == c:
            break
        pos = positions[offset]
        value = _prospective_value(v, pos.root, i)
        if not _order(lt, v[i - 1]).upto(value, c):
            continue
        if pos.stage == "II" and lt.family == "B" and v[i - 1] < 0:
            continue
        w = apply_reflection(v, pos.root)
        if pos.stage == "I" and is_blocked_off(lt, w[:i], target[:i], i):
            skips.append(PathStep(base_index + offset, pos.root, pos.stage, w))
            continue
        v = w
        steps.append(PathStep(base_index + offset, pos.root, pos.stage, v))
    if v[i - 1] != c:
        raise NoPathError(f"row {i} ends at {v[i - 1]}, short of {c}")
    return RowTrace(
        i, c, u, tuple(steps), tuple(skips), passed, m_one, m_three,
        base_index, len(positions),
    )


def sweep(lt: LieType, u: SignedPermutation, target, positions, base_index: int = 1):
    """Run path_segment over every row segment of one half-column.

    ``positions`` is the contiguous chain run for the half, in chain
    order, so rows descend and each row's positions sit together.  A
    row with no segment (the top row of a right half in types C and D)
    must already hold its target letter.  Returns the final window and
    the per-row traces.
    """
    target = tuple(target)
    v = u
    traces: list[RowTrace] = []
    seen: set[int] = set()
    offset = 0
    while offset < len(positions):
        row = _display_row(positions[offset])
        stop = offset
        while stop < len(positions) and _display_row(positions[stop]) == row:
            stop += 1
        trace = path_segment(
            lt, v, row, target, positions[offset:stop], base_index + offset
        )
        v = trace.end
        traces.append(trace)
        seen.add(row)
        offset = stop
    for row in range(len(target), 0, -1):
        if row not in seen and v[row - 1] != target[row - 1]:
            raise NoPathError(
                f"row {row} has no chain segment and holds {v[row - 1]}, "
                f"not {target[row - 1]}"
            )
    return v, traces


@dataclass(frozen=True)
class PathResult:
    subset: FoldingSubset
    rows: tuple[RowTrace, ...]


def path(
    lt: LieType,
    reordered: Filling,
    chain: LambdaChain | None = None,
    *,
    collect_trace: bool = True,
) -> PathResult:
    """Collect the folding subset whose raw filling is the given one.

    Walks the chain column by column, one sweep per half (per column in
    type A), with the matching column of the filling as target; the
    window carries over between sweeps.  The input must be reordered,
    not sorted.  With collect_trace off the traces are dropped as they
    are produced, which bulk verification wants.
    """
    if chain is None:
        chain = lambda_chain(lt, reordered.lam)
    sides = (WHOLE,) if lt.family == "A" else (LEFT, RIGHT)
    positions = chain.positions
    v = identity_window(lt.rank)
    J: list[int] = []
    rows: list[RowTrace] = []
    cursor = 0
    col_iter = iter(reordered.columns)
    for column in range(1, len(conjugate(reordered.lam)) + 1):
        for side in sides:
            begin = cursor
            while (
                cursor < len(positions)
                and positions[cursor].column == column
                and positions[cursor].side == side
            ):
                cursor += 1
            v, traces = sweep(
                lt, v, next(col_iter), positions[begin:cursor], begin + 1
            )
            for trace in traces:
                J.extend(step.index for step in trace.steps)
            if collect_trace:
                rows.extend(traces)
    return PathResult(fold(chain, tuple(sorted(J))), tuple(rows))


# ---------------------------------------------------------------------------
# the full pipeline

def _assemble(lt: LieType, lam, columns) -> Filling:
    """Split and extend bare KN columns into the enumerated filling form."""
    lam = validate_partition(lam)
    heights = conjugate(lam)
    columns = [tuple(col) for col in columns]
    if len(columns) != len(heights):
        raise ValueError(
            f"{len(columns)} columns do not fill a shape with {len(heights)}"
        )
    if lt.family == "A":
        return Filling(lt, lam, tuple(columns))
    doubled: list[tuple[int, ...]] = []
    for col, h in zip(columns, heights):
        pair = extend(lt, split(lt, col), h)
        doubled.extend((pair.left, pair.right))
    return Filling(lt, lam, tuple(doubled))


def invert(lt: LieType, tensor, lam=None, *, collect_trace: bool = True) -> PathResult:
    """Recover the folding subset that fills to the given tensor element.

    Accepts a Filling in the enumerated form (split and extended
    outside type A) or a bare sequence of KN columns together with the
    shape, which is split and extended here.  The subset J in the
    result satisfies fill(J).sorted == the enumerated form.
    """
    if isinstance(tensor, Filling):
        filling = tensor
    else:
        if lam is None:
            raise ValueError("a bare column sequence needs the shape")
        filling = _assemble(lt, lam, tensor)
    return path(lt, reorder(lt, filling), collect_trace=collect_trace)
