"""Letters, signed permutations, roots, and circular orders for the
classical Weyl groups of types A, B, C, D.

Letters are signed integers: ``i`` for an unbarred letter, ``-i`` for its
bar, so that barring is negation.  The total order is

    1 < 2 < ... < n < -n < ... < -1

with the sentinel ``0`` (used only inside type-B columns, never in
windows) sitting between ``n`` and ``-n``.  A signed permutation is kept
in window notation as a tuple of nonzero letters whose absolute values
are a permutation of ``1..n``; type A windows have no barred entries.

>>> w = parse_window("1 -4 3 2")
>>> format_window(w)
'1 -4 3 2'
>>> apply_reflection((1, 2, 3), RootLabel.sigma(2, 3))
(1, -3, -2)
>>> length((2, 3, 1), LieType("A", 3))
2
>>> rho_pairing(RootLabel.delta(1, 3), LieType("A", 3))
2
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "LieType",
    "RootLabel",
    "CircularOrder",
    "SignedPermutation",
    "bar",
    "letter_key",
    "signed_alphabet",
    "unsigned_alphabet",
    "identity_window",
    "validate_window",
    "is_even_signed",
    "parse_window",
    "format_window",
    "parse_root",
    "apply_reflection",
    "root_image",
    "positive_roots",
    "length",
    "rho_pairing",
    "circ_pos",
    "circ_between",
    "circ_upto",
    "weyl_group",
    "weyl_order",
]

# a signed permutation in window notation: (w(1), ..., w(n)), no zeros
SignedPermutation = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class LieType:
    """A classical family together with the window length n.

    ``rank`` is the number of letters, so ``LieType("A", 3)`` is the
    symmetric group on three letters (the Lie algebra A_2).
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        if self.family == "D" and self.rank < 2:
            raise ValueError("type D needs rank at least 2")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def bar(x: int) -> int:
    """Bar a letter: bar(i) = -i, bar(0) = 0."""
    return -x


def letter_key(x: int, n: int) -> int:
    """Sort key realizing 1 < ... < n < 0 < -n < ... < -1.

    >>> sorted([-1, 2, 0, -3, 1], key=lambda x: letter_key(x, 3))
    [1, 2, 0, -3, -1]
    """
    if x > 0:
        return 2 * (x - 1)
    if x == 0:
        return 2 * n - 1
    return 2 * (2 * n + x)


def signed_alphabet(n: int) -> tuple[int, ...]:
    """The alphabet 1, ..., n, -n, ..., -1 in increasing order."""
    return tuple(range(1, n + 1)) + tuple(range(-n, 0))


def unsigned_alphabet(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


# ---------------------------------------------------------------------------
# windows


def identity_window(n: int) -> SignedPermutation:
    return tuple(range(1, n + 1))


def validate_window(window: SignedPermutation, family: str = "B") -> None:
    """Raise ValueError unless ``window`` is a valid window for the family.

    Type A forbids barred letters.  Type D is *not* restricted to evenly
    many bars here; that is a property of some elements, tested by
    :func:`is_even_signed` where an operation needs it.
    """
    n = len(window)
    if 0 in window:
        raise ValueError("0 is not a letter of any window")
    if sorted(abs(x) for x in window) != list(range(1, n + 1)):
        raise ValueError(f"not a signed permutation window: {window}")
    if family == "A" and any(x < 0 for x in window):
        raise ValueError(f"type A window may not contain barred letters: {window}")


def is_even_signed(window: SignedPermutation) -> bool:
    """Whether the window has evenly many barred letters (D_n membership)."""
    return sum(1 for x in window if x < 0) % 2 == 0


def parse_window(text: str) -> SignedPermutation:
    """Parse a space-separated window such as ``"1 -4 3 2"``.

    >>> parse_window("2 -1")
    (2, -1)
    >>> parse_window("1 0 2")
    Traceback (most recent call last):
        ...
    ValueError: 0 is not a letter of any window
    """
    window = tuple(int(part) for part in text.split())
    validate_window(window)
    return window


def format_window(window: SignedPermutation) -> str:
    return " ".join(str(x) for x in window)


# ---------------------------------------------------------------------------
# roots

DELTA = "delta"  # e_i - e_j, written (i, j)
SIGMA = "sigma"  # e_i + e_j, written (i, -j)
DIAG = "diag"  # e_i in type B, 2 e_i in type C, written (i, -i)


@dataclass(frozen=True, order=True)
class RootLabel:
    """A positive root named by row indices, as it appears in chains.

    ``delta(i, j)`` is e_i - e_j, ``sigma(i, j)`` is e_i + e_j, and
    ``diag(i)`` is the short/long root on the i-th coordinate (e_i in
    type B, 2 e_i in type C; absent from types A and D).  Always i < j.
    """

    kind: str
    i: int
    j: int

    @staticmethod
    def delta(i: int, j: int) -> "RootLabel":
        if not 0 < i < j:
            raise ValueError(f"need 0 < i < j, got ({i}, {j})")
        return RootLabel(DELTA, i, j)

    @staticmethod
    def sigma(i: int, j: int) -> "RootLabel":
        if not 0 < i < j:
            raise ValueError(f"need 0 < i < j, got ({i}, {j})")
        return RootLabel(SIGMA, i, j)

    @staticmethod
    def diag(i: int) -> "RootLabel":
        if i < 1:
            raise ValueError(f"need i >= 1, got {i}")
        return RootLabel(DIAG, i, i)

    def to_pair(self) -> list[int]:
        """Two-integer form: [i, j] for delta, [i, -j] for sigma and diag."""
        if self.kind == DELTA:
            return [self.i, self.j]
        return [self.i, -self.j]

    @staticmethod
    def from_pair(pair: "list[int] | tuple[int, int]") -> "RootLabel":
        a, b = pair
        if b > 0:
            return RootLabel.delta(a, b)
        if a == -b:
            return RootLabel.diag(a)
        return RootLabel.sigma(a, -b)

    def __str__(self) -> str:
        a, b = self.to_pair()
        return f"({a},{b})"


def parse_root(text: str) -> RootLabel:
    """Parse ``"(2,3)"``, ``"(2,-3)"``, or ``"(2,-2)"``.

    >>> parse_root("(2,-3)")
    RootLabel(kind='sigma', i=2, j=3)
    """
    inner = text.strip()
    if inner.startswith("(") and inner.endswith(")"):
        inner = inner[1:-1]
    a, b = (int(part) for part in inner.split(","))
    return RootLabel.from_pair((a, b))


def positive_roots(lt: LieType) -> list[RootLabel]:
    """All positive roots of the family, delta then sigma then diag.

    >>> [str(r) for r in positive_roots(LieType("C", 2))]
    ['(1,2)', '(1,-2)', '(1,-1)', '(2,-2)']
    """
    n = lt.rank
    roots = [RootLabel.delta(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    if lt.family != "A":
        roots += [RootLabel.sigma(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    if lt.family in ("B", "C"):
        roots += [RootLabel.diag(i) for i in range(1, n + 1)]
    return roots


def apply_reflection(window: SignedPermutation, root: RootLabel) -> SignedPermutation:
    """Right-multiply a window by the reflection of ``root``.

    The three kinds act on positions: delta(i, j) swaps the entries in
    rows i and j; sigma(i, j) swaps them with a sign flip; diag(i) flips
    the sign of row i.

    >>> apply_reflection((1, 2, 3), RootLabel.delta(2, 3))
    (1, 3, 2)
    >>> apply_reflection((1, 2, 3), RootLabel.diag(2))
    (1, -2, 3)
    """
    n = len(window)
    i, j = root.i, root.j
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"root {root} out of range for window of length {n}")
    out = list(window)
    if root.kind == DELTA:
        out[i - 1], out[j - 1] = window[j - 1], window[i - 1]
    elif root.kind == SIGMA:
        out[i - 1], out[j - 1] = -window[j - 1], -window[i - 1]
    else:
        out[i - 1] = -window[i - 1]
    return tuple(out)


def root_image(window: SignedPermutation, root: RootLabel) -> tuple[RootLabel, int]:
    """Write w(root) as (positive root, sign).

    The window acts on coordinates by w(e_i) = sign(w(i)) e_{|w(i)|};
    the image of a positive root is a root again, and this normalizes it
    to a positive one with a sign in {+1, -1}.

    >>> root_image((2, 3, 1), RootLabel.delta(2, 3))
    (RootLabel(kind='delta', i=1, j=3), -1)
    >>> root_image((1, -2), RootLabel.diag(2))
    (RootLabel(kind='diag', i=2, j=2), -1)
    """
    a = window[root.i - 1]
    if root.kind == DIAG:
        return RootLabel.diag(abs(a)), (1 if a > 0 else -1)
    b = window[root.j - 1]
    s_a = 1 if a > 0 else -1
    s_b = 1 if b > 0 else -1
    if root.kind == DELTA:
        s_b = -s_b
    # now the image is s_a * e_|a| + s_b * e_|b|
    p, q = abs(a), abs(b)
    if s_a == s_b:
        return RootLabel.sigma(min(p, q), max(p, q)), s_a
    if p < q:
        return RootLabel.delta(p, q), s_a
    return RootLabel.delta(q, p), -s_a


def length(window: SignedPermutation, lt: LieType) -> int:
    """Coxeter length: the number of positive roots sent to negative ones.

    >>> length((1, 2, 3), LieType("A", 3))
    0
    >>> length((3, 2, 1), LieType("A", 3))
    3
    >>> length((2, -1), LieType("C", 2))
    2
    """
    return sum(1 for r in positive_roots(lt) if root_image(window, r)[1] < 0)


def rho_pairing(root: RootLabel, lt: LieType) -> int:
    """The pairing of rho (half the sum of positive roots) with the coroot.

    >>> rho_pairing(RootLabel.sigma(1, 2), LieType("B", 2))
    2
    >>> all(rho_pairing(RootLabel.delta(i, i + 1), LieType("D", 5)) == 1
    ...     for i in range(1, 5))
    True
    """
    n, i, j = lt.rank, root.i, root.j
    if root.kind == DELTA:
        return j - i
    if root.kind == SIGMA:
        if lt.family == "A":
            raise ValueError("type A has no sigma roots")
        return {"B": 2 * n + 1, "C": 2 * n + 2, "D": 2 * n}[lt.family] - i - j
    if lt.family == "B":
        return 2 * (n - i) + 1
    if lt.family == "C":
        return n + 1 - i
    raise ValueError(f"type {lt.family} has no diag roots")


# ---------------------------------------------------------------------------
# circular orders

def circ_pos(a: int, x: int, n: int, signed: bool = True) -> int:
    """Steps from ``a`` to ``x`` clockwise around the alphabet circle.

    The signed circle is 1, 2, ..., n, -n, ..., -1 (and back to 1); the
    unsigned one, used in type A, is 1, 2, ..., n.  Zero means x == a.
    """
    if not signed:
        return (x - a) % n
    oa = a - 1 if a > 0 else 2 * n + a
    ox = x - 1 if x > 0 else 2 * n + x
    return (ox - oa) % (2 * n)


@dataclass(frozen=True)
class CircularOrder:
    """The total order ``base ≺ base+1 ≺ ...`` wrapping around an alphabet.

    >>> o = CircularOrder(5, unsigned_alphabet(6))
    >>> o.pos(2), o.pos(4)
    (3, 5)
    >>> o.between(2, 4)
    True
    """

    base: int
    alphabet: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base not in self.alphabet:
            raise ValueError(f"base {self.base} not in alphabet")

    def pos(self, x: int) -> int:
        m = len(self.alphabet)
        return (self.alphabet.index(x) - self.alphabet.index(self.base)) % m

    def before(self, x: int, y: int) -> bool:
        """x ≺ y in this order (strict)."""
        return self.pos(x) < self.pos(y)

    def between(self, x: int, c: int) -> bool:
        """base ≺ x ≺ c, both strict."""
        return 0 < self.pos(x) < self.pos(c)

    def upto(self, x: int, c: int) -> bool:
        """base ≺ x ⪯ c."""
        return 0 < self.pos(x) <= self.pos(c)


def circ_between(a: int, x: int, c: int, order: CircularOrder) -> bool:
    """True iff a ≺ x ≺ c in the circular order based at ``a``.

    The order argument supplies the alphabet; the comparison is always
    rebased at ``a``.

    >>> circ_between(5, 2, 4, CircularOrder(5, unsigned_alphabet(6)))
    True
    >>> circ_between(3, 1, 3, CircularOrder(3, unsigned_alphabet(6)))
    False
    """
    rebased = order if order.base == a else CircularOrder(a, order.alphabet)
    return rebased.between(x, c)


def circ_upto(a: int, x: int, c: int, order: CircularOrder) -> bool:
    """True iff a ≺ x ⪯ c in the circular order based at ``a``."""
    rebased = order if order.base == a else CircularOrder(a, order.alphabet)
    return rebased.upto(x, c)


# ---------------------------------------------------------------------------
# the group itself

def weyl_order(lt: LieType) -> int:
    """|W| for the family: n!, 2^n n!, or 2^(n-1) n!.

    >>> weyl_order(LieType("B", 3))
    48
    """
    n = lt.rank
    base = math.factorial(n)
    if lt.family == "A":
        return base
    if lt.family == "D":
        return base << (n - 1)
    return base << n


def weyl_group(lt: LieType) -> Iterator[SignedPermutation]:
    """Iterate over all windows of the group, in a deterministic order."""
    n = lt.rank
    for perm in itertools.permutations(range(1, n + 1)):
        if lt.family == "A":
            yield perm
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if lt.family == "D" and signs.count(-1) % 2:
                continue
            yield tuple(s * v for s, v in zip(signs, perm))
