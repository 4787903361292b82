"""Chains of roots for a dominant weight, foldings, and admissible subsets.

A partition lambda determines a sequence of positive roots (its
lambda-chain) by concatenating one segment per column of the Young
diagram.  A subset J of chain positions is admissible when folding the
chain at those positions walks a directed path in the quantum Bruhat
graph; these subsets are the model's objects.

Type A columns contribute the single displayed segment; types B and C
contribute a left half (four stages per row, top row down to row one)
and a right half; type D uses the same display with every (i, i-bar)
root removed.

>>> chain = lambda_chain(LieType("A", 3), (3, 2))
>>> [str(p.root) for p in chain.positions]
['(2,3)', '(1,3)', '(2,3)', '(1,3)', '(1,2)', '(1,3)']
>>> fs = fold(chain, (1, 2, 3, 5))
>>> is_admissible(fs)
True
>>> fs.J_minus
(3, 5)
"""

from __future__ import annotations

from dataclasses import dataclass

from .qbg import edge_kind
from .weyl import (
    LieType,
    RootLabel,
    SignedPermutation,
    apply_reflection,
    identity_window,
    root_image,
)

__all__ = [
    "ChainPosition",
    "LambdaChain",
    "FoldingSubset",
    "Partition",
    "conjugate",
    "max_column_height",
    "omega_chain",
    "lambda_chain",
    "fold",
    "is_admissible",
    "enumerate_admissible",
    "chain_to_text",
    "subset_to_json",
    "ENUMERATION_GUARD",
]

Partition = tuple[int, ...]

LEFT = "left"
RIGHT = "right"
WHOLE = "whole"

ENUMERATION_GUARD = 48  # longest chain enumerate_admissible will walk


@dataclass(frozen=True)
class ChainPosition:
    root: RootLabel
    column: int  # which conjugate-partition column this segment belongs to
    side: str  # "left" / "right" halves, or "whole" in type A
    stage: str  # "I", "II", "III", "IV"


@dataclass(frozen=True)
class LambdaChain:
    type: LieType
    lam: Partition
    positions: tuple[ChainPosition, ...]

    def __len__(self) -> int:
        return len(self.positions)

    def roots(self) -> tuple[RootLabel, ...]:
        return tuple(p.root for p in self.positions)


@dataclass(frozen=True)
class FoldingSubset:
    """A chain with folding positions J and everything derived from them.

    ``gammas[k-1]`` is the folded root at position k written as a
    positive root with a sign; positions in J sort into ``J_plus`` or
    ``J_minus`` by that sign.
    """

    chain: LambdaChain
    J: tuple[int, ...]  # 1-based chain positions, strictly increasing
    T: tuple[RootLabel, ...]
    gammas: tuple[tuple[RootLabel, int], ...]
    J_plus: tuple[int, ...]
    J_minus: tuple[int, ...]

    def end(self) -> SignedPermutation:
        """The full product of the folding reflections."""
        w = identity_window(self.chain.type.rank)
        for r in self.T:
            w = apply_reflection(w, r)
        return w


def conjugate(lam: Partition) -> Partition:
    """Column heights of the Young diagram.

    >>> conjugate((3, 2))
    (2, 2, 1)
    """
    lam = validate_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def validate_partition(lam) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
        raise ValueError(f"not a partition: {lam}")
    return tuple(x for x in lam if x > 0)


def max_column_height(lt: LieType) -> int:
    """Tallest column a lambda-chain of this type accepts."""
    if lt.family == "A":
        return lt.rank - 1
    if lt.family == "D":
        return lt.rank - 2
    return lt.rank


def omega_chain(lt: LieType, k: int, column: int = 1) -> list[ChainPosition]:
    """The chain segment for one column of height k.

    Type A gives the single run (i, j) with i descending from k and j
    ascending past k.  Types B/C give the left half (rows k down to 1,
    each in four stages) followed by the right half; type D is the left
    half with stage II dropped, then the type-C right half.

    The right half of a type C or D segment runs over rows k down to 2,
    each row holding only its stage IV roots.  In type B every row of
    the right half opens with the sign-change root (i, -i) and row 1 is
    kept, so each short-root hyperplane is crossed twice per row, once
    per half.  Dropping those crossings would leave the height-k
    segment too short: crossings of the hyperplane normal to e_i must
    appear twice because the k-th fundamental coweight pairs to 2 with
    the short root e_i, and without them no subset can reach the split
    pair of a column containing zeroes.

    >>> [str(p.root) for p in omega_chain(LieType("A", 4), 3)]
    ['(3,4)', '(2,4)', '(1,4)']
    """
    n = lt.rank
    if not 1 <= k <= max_column_height(lt):
        raise ValueError(f"column height {k} out of range for {lt}")
    if lt.family == "A":
        return [
            ChainPosition(RootLabel.delta(i, j), column, WHOLE, "I")
            for i in range(k, 0, -1)
            for j in range(k + 1, n + 1)
        ]
    positions = []
    for i in range(k, 0, -1):  # left half, top row first
        for j in range(k + 1, n + 1):
            positions.append(ChainPosition(RootLabel.delta(i, j), column, LEFT, "I"))
        if lt.family != "D":
            positions.append(ChainPosition(RootLabel.diag(i), column, LEFT, "II"))
        for j in range(n, k, -1):
            positions.append(ChainPosition(RootLabel.sigma(i, j), column, LEFT, "III"))
        for j in range(i - 1, 0, -1):
            positions.append(ChainPosition(RootLabel.sigma(j, i), column, LEFT, "IV"))
    bottom = 0 if lt.family == "B" else 1
    for i in range(k, bottom, -1):  # right half
        if lt.family == "B":
            positions.append(ChainPosition(RootLabel.diag(i), column, RIGHT, "II"))
        for j in range(i - 1, 0, -1):
            positions.append(ChainPosition(RootLabel.sigma(j, i), column, RIGHT, "IV"))
    return positions


def lambda_chain(lt: LieType, lam) -> LambdaChain:
    """Concatenate the column segments of the conjugate partition.

    >>> len(lambda_chain(LieType("C", 2), (1,)).positions)
    3
    """
    lam = validate_partition(lam)
    positions = []
    for column, k in enumerate(conjugate(lam), start=1):
        positions.extend(omega_chain(lt, k, column))
    return LambdaChain(lt, lam, tuple(positions))


def fold(chain: LambdaChain, J) -> FoldingSubset:
    """Fold the chain at positions J (1-based, strictly increasing).

    gamma_k applies the reflections at folding positions before k to the
    chain root at k; admissibility is not required.
    """
    J = tuple(int(j) for j in J)
    m = len(chain.positions)
    if any(a >= b for a, b in zip(J, J[1:])) or any(not 1 <= j <= m for j in J):
        raise ValueError(f"J must be strictly increasing within 1..{m}: {J}")
    folding = set(J)
    window = identity_window(chain.type.rank)
    gammas = []
    J_plus, J_minus = [], []
    for k, pos in enumerate(chain.positions, start=1):
        gamma = root_image(window, pos.root)
        gammas.append(gamma)
        if k in folding:
            (J_plus if gamma[1] > 0 else J_minus).append(k)
            window = apply_reflection(window, pos.root)
    T = tuple(chain.positions[j - 1].root for j in J)
    return FoldingSubset(chain, J, T, tuple(gammas), tuple(J_plus), tuple(J_minus))


def is_admissible(fs: FoldingSubset) -> bool:
    """Whether the folding reflections trace a quantum Bruhat graph path.

    Each folding position must give an edge from the prefix product so
    far; the test is the length-based one, so it covers type D too.
    """
    lt = fs.chain.type
    window = identity_window(lt.rank)
    for root in fs.T:
        if edge_kind(lt, window, root) is None:
            return False
        window = apply_reflection(window, root)
    return True


def enumerate_admissible(chain: LambdaChain, guard: int = ENUMERATION_GUARD) -> list[FoldingSubset]:
    """All admissible subsets of the chain, in lexicographic J order.

    Depth-first: a subset is extended one position at a time, branching
    on "fold here" only when the quantum Bruhat graph has the required
    edge, so only admissible prefixes are ever visited.

    >>> [fs.J for fs in enumerate_admissible(lambda_chain(LieType("A", 3), (1,)))]
    [(), (1,), (1, 2)]
    """
    m = len(chain.positions)
    if m > guard:
        raise ValueError(f"chain length {m} exceeds the enumeration guard {guard}")
    lt = chain.type
    roots = chain.roots()
    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def walk(k: int, window: SignedPermutation) -> None:
        if k == m:
            found.append(tuple(prefix))
            return
        walk(k + 1, window)
        if edge_kind(lt, window, roots[k]) is not None:
            prefix.append(k + 1)
            walk(k + 1, apply_reflection(window, roots[k]))
            prefix.pop()

    walk(0, identity_window(lt.rank))
    return [fold(chain, J) for J in sorted(found)]


# ---------------------------------------------------------------------------
# text and JSON forms


def chain_to_text(chain: LambdaChain) -> str:
    """One root per line, with its column, side, and stage."""
    lines = []
    for k, pos in enumerate(chain.positions, start=1):
        lines.append(
            f"{k:>3}  {str(pos.root):<8} column={pos.column} "
            f"side={pos.side} stage={pos.stage}"
        )
    return "\n".join(lines)


def subset_to_json(fs: FoldingSubset) -> dict:
    """The interchange form: {"lambda": ..., "type": ..., "rank": ..., "J": [...]}."""
    return {
        "lambda": list(fs.chain.lam),
        "type": fs.chain.type.family,
        "rank": fs.chain.type.rank,
        "J": list(fs.J),
    }
