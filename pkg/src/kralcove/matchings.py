"""Matched pairs of split column halves and the conditions they satisfy.

Splitting and extending a column produce two columns of equal height
whose rows correspond: an untouched letter is matched to itself, a
substitute t to the paired letter z it replaced (and z-bar to t-bar), a
zero substitute t to t-bar, and an extension letter a-bar to a.  The
initial matching records that correspondence positionally.  Correcting
re-seats the right column row by row against the sorted left column,
and reordering transports a corrected pair along any row permutation
while steering around the blocked-off pattern.  check_conditions_SER
decides the four conditions that characterize exactly the pairs of
adjacent columns joined by a quantum Bruhat graph path along the
right-half chain of reflections.

>>> pair = initial_matching(LieType("B", 8), (5, 0, -8, -5), 6)
>>> pair.right
(5, -7, -8, -4, 2, 1)
>>> corrected_matching(pair).right
(5, -8, -7, -4, 1, 2)
"""

from __future__ import annotations

from dataclasses import dataclass

from .columns import KNColumn, extend, split
from .inverse import is_blocked_off
from .weyl import CircularOrder, LieType, signed_alphabet, unsigned_alphabet

__all__ = [
    "MatchedPair",
    "initial_matching",
    "corrected_matching",
    "reordered_matching",
    "check_conditions_SER",
]

Column = tuple[int, ...]


@dataclass(frozen=True)
class MatchedPair:
    """Two columns of equal height, row i of the left matched to row i
    of the right."""

    type: LieType
    left: Column
    right: Column

    def __post_init__(self):
        if len(self.left) != len(self.right):
            raise ValueError(
                f"matched columns differ in height: {len(self.left)} != {len(self.right)}"
            )
        n = self.type.rank
        for col in (self.left, self.right):
            if any(x == 0 or abs(x) > n for x in col):
                raise ValueError(f"column {list(col)} has letters outside rank {n}")
            if len({abs(x) for x in col}) != len(col):
                raise ValueError(f"column {list(col)} repeats an absolute value")

    @property
    def height(self) -> int:
        return len(self.left)

    def rows(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.left, self.right))


def _entries(col) -> Column:
    return col.entries if isinstance(col, KNColumn) else tuple(col)


def _order(lt: LieType, base: int) -> CircularOrder:
    alphabet = (
        unsigned_alphabet(lt.rank) if lt.family == "A" else signed_alphabet(lt.rank)
    )
    return CircularOrder(base, alphabet)


def initial_matching(lt: LieType, col, k: int | None = None) -> MatchedPair:
    """Split a column, extend to height k, and match the rows.

    Each left entry is matched by provenance: itself when untouched, the
    replaced letter z for a substitute t (with z-bar matched to t-bar),
    t-bar for a zero substitute t, and a for an extension letter a-bar.

    >>> initial_matching(LieType("B", 8), (5, 0, -8, -5), 4).rows()
    ((4, 5), (7, -7), (-8, -8), (-5, -4))
    """
    entries = _entries(col)
    if k is None:
        k = len(entries)
    if lt.family == "A":
        if k != len(entries):
            raise ValueError("type A columns do not extend")
        return MatchedPair(lt, entries, entries)
    base = split(lt, col)
    pair = extend(lt, base, k)
    left_set, right_set = set(base.left), set(base.right)
    ts = sorted((x for x in left_set - right_set if x > 0), reverse=True)
    zs = sorted((x for x in right_set - left_set if x > 0), reverse=True)
    zero_ts = set(ts[: len(ts) - len(zs)])
    t_of = dict(zip(zs, ts[len(ts) - len(zs) :]))
    z_of = {t: z for z, t in t_of.items()}
    right = []
    for v in pair.left:
        if v in z_of:
            right.append(z_of[v])
        elif v < 0 and -v in t_of:
            right.append(-t_of[-v])
        elif v in zero_ts:
            right.append(-v)
        elif v in left_set:
            right.append(v)
        else:
            right.append(-v)
    return MatchedPair(lt, pair.left, tuple(right))


def corrected_matching(pair: MatchedPair) -> MatchedPair:
    """Re-seat the right column against the increasing left column.

    Row by row, the remaining right entry closest after the left entry
    in the circular order moves up; the last row keeps what is left.
    """
    left = pair.left
    right = list(pair.right)
    k = pair.height
    for i in range(k - 1):
        order = _order(pair.type, left[i])
        j = min(range(i, k), key=lambda l: order.pos(right[l]))
        right[i], right[j] = right[j], right[i]
    return MatchedPair(pair.type, left, tuple(right))


def reordered_matching(pair: MatchedPair, sigma) -> MatchedPair:
    """Transport a corrected matching along a row permutation.

    Both columns are permuted by sigma (sigma[i] is the source row of
    new row i, zero-based); the right column is then re-seated as in
    corrected_matching, except that a candidate whose promotion would
    leave the pair blocked off at the current row is passed over.

    >>> lt = LieType("B", 8)
    >>> fixed = corrected_matching(initial_matching(lt, (5, 0, -8, -5), 6))
    >>> reordered_matching(fixed, (0, 1, 2, 3, 4, 5)) == fixed
    True
    """
    lt = pair.type
    k = pair.height
    if sorted(sigma) != list(range(k)):
        raise ValueError(f"{sigma} is not a permutation of 0..{k - 1}")
    left = tuple(pair.left[s] for s in sigma)
    right = [pair.right[s] for s in sigma]
    for i in range(k - 1):
        order = _order(lt, left[i])
        allowed = [
            l
            for l in range(i, k)
            if not is_blocked_off(lt, left[: i + 1], (*right[:i], right[l]), i + 1)
        ]
        if not allowed:
            raise ValueError(
                f"every remaining entry leaves {list(left)} blocked off at row {i + 1}"
            )
        j = min(allowed, key=lambda l: order.pos(right[l]))
        right[i], right[j] = right[j], right[i]
    return MatchedPair(lt, left, tuple(right))


def check_conditions_SER(pair: MatchedPair, parts=(1, 2, 3, 4)) -> bool:
    """Decide the split-extended-reordered column conditions.

    1. The absolute values of the two columns agree as sets.
    2. No letter strictly between a left entry and its matched right
       entry (circularly, from the left entry) has an absolute value
       missing from the columns.
    3. Rows of equal sign weakly increase, and the number of rows that
       are negative on the left and positive on the right is even.
    4. For rows i < l: left i never equals right l; right l lies
       strictly between left i and right i only if seating it at row i
       would leave the pair blocked off there; and no proper prefix is
       blocked off as matched.

    The parts argument selects which of the four to evaluate.

    >>> lt = LieType("B", 8)
    >>> check_conditions_SER(corrected_matching(initial_matching(lt, (5, 0, -8, -5), 6)))
    True
    """
    lt = pair.type
    left, right = pair.left, pair.right
    k = pair.height
    checks = set(parts)
    if not checks <= {1, 2, 3, 4}:
        raise ValueError(f"unknown condition parts: {sorted(checks - {1, 2, 3, 4})}")
    if 1 in checks:
        if sorted(abs(x) for x in left) != sorted(abs(x) for x in right):
            return False
    if 2 in checks:
        present = {abs(x) for x in left}
        for a, c in zip(left, right):
            order = _order(lt, a)
            if any(
                order.between(j, c) for j in order.alphabet if abs(j) not in present
            ):
                return False
    if 3 in checks:
        if any(a > c for a, c in zip(left, right) if (a > 0) == (c > 0)):
            return False
        if sum(1 for a, c in zip(left, right) if a < 0 < c) % 2:
            return False
    if 4 in checks:
        for i in range(k - 1):
            order = _order(lt, left[i])
            for l in range(i + 1, k):
                if left[i] == right[l]:
                    return False
                if order.between(right[l], right[i]) and not is_blocked_off(
                    lt, left[: i + 1], (*right[:i], right[l]), i + 1
                ):
                    return False
            if is_blocked_off(lt, left[: i + 1], right[: i + 1], i + 1):
                return False
    return True
