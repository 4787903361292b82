"""The filling map from folding subsets to column fillings.

Walking the lambda-chain left to right while multiplying in the
reflections at the chosen positions produces a prefix product at each
half-column boundary; reading off the first ``height`` window entries
at each boundary yields one column of the filling.  Sorting every
column increasingly gives the sorted filling, which lands in the tensor
product of column crystals.

>>> from .weyl import LieType
>>> result = fill(LieType("A", 3), (3, 2), (1, 2, 3, 5))
>>> result.raw.columns
((2, 3), (2, 1), (1,))
>>> result.sorted.columns
((2, 3), (1, 2), (1,))
"""

from __future__ import annotations

from dataclasses import dataclass

from .alcove import LambdaChain, conjugate, lambda_chain, validate_partition
from .columns import Filling
from .weyl import LieType, SignedPermutation, apply_reflection, identity_window, letter_key

__all__ = ["FillResult", "fill", "fill_result_to_json"]


@dataclass(frozen=True)
class FillResult:
    subset: tuple[int, ...]
    raw: Filling
    sorted: Filling
    prefix_products: tuple[SignedPermutation, ...]


def fill(lt: LieType, lam, J, chain: LambdaChain | None = None) -> FillResult:
    """Fill the (doubled) shape from the subset J of chain positions.

    J is taken as a set of 1-based positions; it does not have to be
    admissible, although the output is only a crystal element when it
    is.  A prebuilt chain for (lt, lam) may be passed to avoid
    reconstruction inside enumeration loops.
    """
    lam = validate_partition(lam)
    if chain is None:
        chain = lambda_chain(lt, lam)
    J = tuple(sorted(set(J)))
    if J and not (1 <= J[0] and J[-1] <= len(chain)):
        raise ValueError(f"subset {J} out of range for a chain of length {len(chain)}")
    chosen = set(J)

    window = identity_window(lt.rank)
    sides = ("whole",) if lt.family == "A" else ("left", "right")
    columns: list[tuple[int, ...]] = []
    products: list[SignedPermutation] = []
    positions = chain.positions
    cursor = 0
    index = 0
    for column, height in enumerate(conjugate(lam), start=1):
        for side in sides:
            while (
                cursor < len(positions)
                and positions[cursor].column == column
                and positions[cursor].side == side
            ):
                index += 1
                if index in chosen:
                    window = apply_reflection(window, positions[cursor].root)
                cursor += 1
            products.append(window)
            columns.append(window[: height])
    raw = Filling(lt, lam, tuple(columns))
    n = lt.rank
    sorted_columns = tuple(
        tuple(sorted(c, key=lambda x: letter_key(x, n))) for c in columns
    )
    return FillResult(J, raw, Filling(lt, lam, sorted_columns), tuple(products))


def fill_result_to_json(result: FillResult) -> dict:
    return {
        "J": list(result.subset),
        "raw": [list(c) for c in result.raw.columns],
        "sorted": [list(c) for c in result.sorted.columns],
    }
