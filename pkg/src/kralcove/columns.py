"""Kashiwara-Nakashima columns: validity, splitting, extension, and the
enumeration of column crystals and their tensor products.

A column is a top-to-bottom tuple of letters, strictly increasing except
that 0 may repeat (type B only) and that n-bar may be followed by n
(type D only), subject to the pair condition: when j and j-bar both
occur, j in the a-th box from the top and j-bar in the b-th box from the
bottom, a + b <= j.

Splitting replaces a column C by a pair (lC, rC) without paired or zero
letters: each unbarred z with z-bar also present is swapped for a fresh
lower letter t (z -> t on the left, z-bar -> t-bar on the right), and in
type B each 0 takes the greatest free letter outright (t on the left,
t-bar on the right).  Type D first turns each adjacent (n, n-bar) pair
into two 0s and then proceeds as type B.  Extension pads a split pair up
to a target height with the smallest free letters, barred on the left
and unbarred on the right.

>>> pair = split(LieType("B", 8), (5, 0, -8, -5))
>>> pair
SplitPair(left=(4, 7, -8, -5), right=(5, -8, -7, -4), height=4, extended=False)
>>> extend(LieType("B", 8), pair, 6)
SplitPair(left=(4, 7, -8, -5, -2, -1), right=(1, 2, 5, -8, -7, -4), height=6, extended=True)
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .alcove import Partition, conjugate, validate_partition
from .weyl import LieType, letter_key

__all__ = [
    "KNColumn",
    "SplitPair",
    "Filling",
    "validate_kn",
    "enumerate_kn_columns",
    "split",
    "unsplit",
    "extend",
    "enumerate_KR",
    "enumerate_tensor",
    "parse_column",
    "format_column",
    "parse_filling",
    "format_filling",
    "filling_to_json",
    "filling_from_json",
]

Column = tuple[int, ...]


@dataclass(frozen=True)
class KNColumn:
    type: LieType
    entries: Column

    def __post_init__(self):
        if not validate_kn(self.type, self.entries):
            raise ValueError(f"not a valid {self.type} column: {list(self.entries)}")


@dataclass(frozen=True)
class SplitPair:
    left: Column
    right: Column
    height: int
    extended: bool = False


@dataclass(frozen=True)
class Filling:
    """Columns side by side; shape lam in type A, doubled otherwise."""

    type: LieType
    lam: Partition
    columns: tuple[Column, ...]

    @property
    def doubled(self) -> bool:
        return self.type.family != "A"

    def __post_init__(self):
        heights = conjugate(self.lam)
        if self.doubled:
            heights = tuple(h for h in heights for _ in range(2))
        if tuple(len(c) for c in self.columns) != heights:
            raise ValueError(
                f"column heights {[len(c) for c in self.columns]} do not match "
                f"{'doubled ' if self.doubled else ''}shape {self.lam}"
            )


def _entries(col) -> Column:
    return col.entries if isinstance(col, KNColumn) else tuple(col)


# ---------------------------------------------------------------------------
# validity and enumeration


def validate_kn(lt: LieType, col) -> bool:
    """Decide the column conditions for the family.

    >>> validate_kn(LieType("B", 6), (2, 3, 0, 0, -2))
    True
    >>> validate_kn(LieType("C", 2), (1, -1))
    False
    >>> validate_kn(LieType("C", 2), (2, -2))
    True
    """
    entries = _entries(col)
    n = lt.rank
    for x in entries:
        if abs(x) > n:
            return False
        if x == 0 and lt.family != "B":
            return False
        if x < 0 and lt.family == "A":
            return False
    for prev, cur in zip(entries, entries[1:]):
        if letter_key(prev, n) < letter_key(cur, n):
            continue
        if lt.family == "B" and prev == cur == 0:
            continue
        if lt.family == "D" and prev == -n and cur == n:
            continue
        return False
    # pair condition: topmost j against bottommost j-bar
    h = len(entries)
    for j in range(1, n + 1):
        if j in entries and -j in entries:
            a = entries.index(j) + 1
            b = h - _rindex(entries, -j)
            if a + b > j:
                return False
    return True


def _rindex(entries: Column, x: int) -> int:
    return len(entries) - 1 - entries[::-1].index(x)


def column_alphabet(lt: LieType) -> tuple[int, ...]:
    n = lt.rank
    if lt.family == "A":
        return tuple(range(1, n + 1))
    letters = list(range(1, n + 1)) + list(range(-n, 0))
    if lt.family == "B":
        letters.insert(n, 0)
    return tuple(letters)


def enumerate_kn_columns(lt: LieType, height: int) -> list[KNColumn]:
    """Every valid column of the given height, in lexicographic order.

    >>> [c.entries for c in enumerate_kn_columns(LieType("B", 2), 1)]
    [(1,), (2,), (0,), (-2,), (-1,)]
    """
    if height < 0 or height > lt.rank:
        raise ValueError(f"height {height} out of range for {lt}")
    n = lt.rank
    alphabet = column_alphabet(lt)
    out: list[KNColumn] = []
    stack: list[int] = []

    def grow():
        if len(stack) == height:
            if validate_kn(lt, tuple(stack)):
                out.append(KNColumn(lt, tuple(stack)))
            return
        for x in alphabet:
            if stack:
                prev = stack[-1]
                ok = letter_key(prev, n) < letter_key(x, n)
                ok = ok or (lt.family == "B" and prev == x == 0)
                ok = ok or (lt.family == "D" and prev == -n and x == n)
                if not ok:
                    continue
            stack.append(x)
            grow()
            stack.pop()

    grow()
    return out


# ---------------------------------------------------------------------------
# splitting


def split(lt: LieType, col) -> SplitPair:
    """Split a column into its doubled form (lC, rC).

    Raises ValueError when the required substitute letters do not exist
    (they always do for valid KN columns).
    """
    entries = _entries(col)
    n = lt.rank
    if lt.family == "A":
        return SplitPair(entries, entries, len(entries), False)
    if lt.family == "D":
        entries = _convert_extreme_pairs(entries, n)
    used = {abs(x) for x in entries if x != 0}
    paired = sorted(
        {z for z in used if z in entries and -z in entries},
        key=lambda z: -letter_key(z, n),
    )
    # type B zeros act as the greatest members of the substitution list
    subs_for = [0] * entries.count(0) + paired
    t_prev = None
    t_for: dict[int, int] = {}
    zero_ts: list[int] = []
    for z in subs_for:
        bound = min(
            (x for x in (t_prev, z if z else None) if x is not None),
            default=n + 1,
        )
        t = next(
            (t for t in range(bound - 1, 0, -1) if t not in used),
            None,
        )
        if t is None:
            raise ValueError(f"column {list(entries)} is not splittable in {lt}")
        used.add(t)
        t_prev = t
        if z == 0:
            zero_ts.append(t)
        else:
            t_for[z] = t
    left, right = [], []
    zi = iter(zero_ts)
    for x in entries:
        if x == 0:
            t = next(zi)
            left.append(t)
            right.append(-t)
        elif x > 0 and x in t_for:
            left.append(t_for[x])
            right.append(x)
        elif x < 0 and -x in t_for:
            left.append(x)
            right.append(-t_for[-x])
        else:
            left.append(x)
            right.append(x)
    left.sort(key=lambda x: letter_key(x, n))
    right.sort(key=lambda x: letter_key(x, n))
    return SplitPair(tuple(left), tuple(right), len(entries), False)


def _convert_extreme_pairs(entries: Column, n: int) -> Column:
    """Type D preprocessing: each adjacent (n, n-bar) pair becomes two 0s.

    A leftover n or n-bar, or a reversed (n-bar, n) pair, stays put; the
    reversed pair then goes through the ordinary paired-letter
    substitution, which keeps the two orderings of the pair distinct.
    """
    out = list(entries)
    i = 0
    while i < len(out) - 1:
        if out[i] == n and out[i + 1] == -n:
            out[i] = out[i + 1] = 0
            i += 2
        else:
            i += 1
    return tuple(out)


def unsplit(lt: LieType, pair: SplitPair) -> Column:
    """Reverse the substitutions of :func:`split` (not defined in type D,
    where the zero conversion forgets the order of an (n, n-bar) pair).
    """
    if lt.family == "D":
        raise ValueError("type D splitting is not reversible")
    if lt.family == "A":
        return pair.left
    n = lt.rank
    left, right = set(pair.left), set(pair.right)
    ts = sorted((x for x in left - right if x > 0), key=lambda t: -t)
    zs = sorted((x for x in right - left if x > 0), key=lambda z: -z)
    zeros = len(ts) - len(zs)
    col = [x for x in pair.left if x in right]  # untouched letters
    col += [0] * zeros
    col += zs + [-z for z in zs]
    return tuple(sorted(col, key=lambda x: letter_key(x, n)))


def extend(lt: LieType, pair: SplitPair, k: int) -> SplitPair:
    """Pad a split pair to height k with the smallest free letters.

    The appended letters are i_1 < ... < i_m unbarred on the right and
    their bars on the left, where each i_t is the minimal letter whose
    absolute value is absent from both columns and from earlier choices.
    """
    n = lt.rank
    r = pair.height
    if not r <= k <= n:
        raise ValueError(f"cannot extend height {r} to {k} with rank {n}")
    if k == r:
        return SplitPair(pair.left, pair.right, r, True)
    used = {abs(x) for x in pair.left} | {abs(x) for x in pair.right}
    free = [i for i in range(1, n + 1) if i not in used]
    if len(free) < k - r:
        raise ValueError(f"no {k - r} free letters remain to extend {pair}")
    fresh = free[: k - r]
    left = sorted(pair.left + tuple(-i for i in fresh), key=lambda x: letter_key(x, n))
    right = sorted(pair.right + tuple(fresh), key=lambda x: letter_key(x, n))
    return SplitPair(tuple(left), tuple(right), k, True)


# ---------------------------------------------------------------------------
# crystals as sets


def enumerate_KR(lt: LieType, r: int) -> list[SplitPair]:
    """The column crystal of height r as extended split pairs.

    Types A and C take the single constituent of height r; types B and D
    also take heights r-2, r-4, ..., each split and extended up to r.

    >>> pairs = enumerate_KR(LieType("C", 2), 2)
    >>> len(pairs), len(set(pairs))
    (5, 5)
    """
    heights = [r] if lt.family in ("A", "C") else list(range(r, -1, -2))
    out = []
    for h in heights:
        for col in enumerate_kn_columns(lt, h):
            out.append(extend(lt, split(lt, col.entries), r))
    return out


def enumerate_tensor(lt: LieType, lam) -> list[Filling]:
    """All fillings of the (doubled) shape, one KR factor per column.

    >>> len(enumerate_tensor(LieType("B", 2), (2,)))
    25
    """
    lam = validate_partition(lam)
    factors = [enumerate_KR(lt, k) for k in conjugate(lam)]
    fillings = []
    for combo in itertools.product(*factors):
        if lt.family == "A":
            columns = tuple(p.left for p in combo)
        else:
            columns = tuple(
                half for p in combo for half in (p.left, p.right)
            )
        fillings.append(Filling(lt, lam, columns))
    return fillings


# ---------------------------------------------------------------------------
# text and JSON forms


def parse_column(text: str) -> Column:
    """Parse ``"5,0,-8,-5"`` (top to bottom)."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def format_column(col) -> str:
    return ",".join(str(x) for x in _entries(col))


def parse_filling(lt: LieType, lam, text: str) -> Filling:
    """Parse columns joined by ``|``, e.g. ``"1,2|1,-2"``."""
    columns = tuple(parse_column(part) for part in text.split("|"))
    return Filling(lt, validate_partition(lam), columns)


def format_filling(filling: Filling) -> str:
    return "|".join(format_column(c) for c in filling.columns)


def filling_to_json(filling: Filling) -> dict:
    return {
        "type": filling.type.family,
        "rank": filling.type.rank,
        "lambda": list(filling.lam),
        "columns": [list(c) for c in filling.columns],
    }


def filling_from_json(data: dict) -> Filling:
    lt = LieType(data["type"], data["rank"])
    return Filling(
        lt,
        validate_partition(data["lambda"]),
        tuple(tuple(c) for c in data["columns"]),
    )
