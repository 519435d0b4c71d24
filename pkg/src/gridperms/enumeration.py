"""Exhaustive desk-scale sweeps of grid classes.

Two independent pipelines generate class members: filtering all n!
permutations through the gridding search, and encoding all length-n words
over the cell alphabet.  For matrices whose row-column graph is a forest
the two agree; comparing them is the main cross-check this module exists
for.  Both refuse to start when the search space exceeds a cap.
"""
from __future__ import annotations

from itertools import permutations, product

from .codec import alphabet, encode
from .graphs import SignAssignment
from .gridding import GriddedPermutation, in_grid_class
from .matrices import GridMatrix
from .perms import Permutation

FACTORIAL_CAP = 9
WORD_BUDGET = 10**7


class LimitExceededError(Exception):
    """The requested sweep is larger than the configured cap."""


def enumerate_class(
    matrix: GridMatrix, n: int, cap: int = FACTORIAL_CAP
) -> set[Permutation]:
    """All length-n members of the matrix's grid class.

    Filters the n! permutations of length n through the gridding search,
    so this is exhaustive but only viable for small n (default cap 9).
    """
    if n < 0:
        raise ValueError(f"length must be nonnegative: {n}")
    if n > cap:
        raise LimitExceededError(f"n = {n} exceeds the factorial cap {cap}")
    return {
        pi
        for entries in permutations(range(1, n + 1))
        if in_grid_class(pi := Permutation(entries), matrix)
    }


def enumerate_via_words(
    matrix: GridMatrix,
    signs: SignAssignment,
    n: int,
    budget: int = WORD_BUDGET,
    gridded: bool = False,
) -> set[Permutation] | set[GriddedPermutation]:
    """Images of all length-n words under the encoder.

    Returns plain permutations deduplicated (distinct words may encode the
    same permutation); pass gridded=True to keep the griddings instead.
    The sweep has |alphabet| ** n words and refuses to exceed ``budget``.
    """
    if n < 0:
        raise ValueError(f"length must be nonnegative: {n}")
    letters = sorted(alphabet(matrix))
    if len(letters) ** n > budget:
        raise LimitExceededError(
            f"{len(letters)} ** {n} words exceed the budget {budget}"
        )
    images = (encode(matrix, signs, word) for word in product(letters, repeat=n))
    if gridded:
        return set(images)
    return {gp.perm for gp in images}


def counting_sequence(
    matrix: GridMatrix, n_max: int, cap: int = FACTORIAL_CAP
) -> tuple[int, ...]:
    """Class sizes at lengths 1..n_max, e.g. (1, 2, 5) for a 1x2 all-ones
    matrix."""
    return tuple(len(enumerate_class(matrix, n, cap)) for n in range(1, n_max + 1))
