"""Griddings: cutting a permutation's plot into cells that match a matrix.

A gridding of a length-n permutation for a t x u matrix is a pair of weakly
increasing division sequences, 1 = c_1 <= ... <= c_(t+1) = n+1 over indices
and 1 = r_1 <= ... <= r_(u+1) = n+1 over values.  Column k spans indices
[c_k, c_(k+1)) and row l spans values [r_l, r_(l+1)), so consecutive equal
divisions make empty columns or rows.  The gridding is valid for a matrix
when every cell's entries are increasing, decreasing, or absent as the
matrix entry is 1, -1, or 0.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .matrices import Cell, GridMatrix
from .perms import Permutation


@dataclass(frozen=True)
class Gridding:
    """Division sequences; ``cols[k-1]`` is c_k and ``rows[l-1]`` is r_l."""

    cols: tuple[int, ...]
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cols", tuple(int(c) for c in self.cols))
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        for name, divisions in (("cols", self.cols), ("rows", self.rows)):
            if len(divisions) < 2:
                raise ValueError(f"{name} needs at least two divisions")
            if divisions[0] != 1:
                raise ValueError(f"{name} must start at 1: {divisions}")
            if any(a > b for a, b in zip(divisions, divisions[1:])):
                raise ValueError(f"{name} must be weakly increasing: {divisions}")
        if self.cols[-1] != self.rows[-1]:
            raise ValueError(
                f"column and row divisions must share the endpoint n+1: "
                f"{self.cols[-1]} != {self.rows[-1]}"
            )

    @property
    def t(self) -> int:
        return len(self.cols) - 1

    @property
    def u(self) -> int:
        return len(self.rows) - 1

    @property
    def n(self) -> int:
        return self.cols[-1] - 1

    def cell_of(self, index: int, value: int) -> Cell:
        """The cell (k, l) whose index and value ranges cover the point."""
        if not 1 <= index <= self.n or not 1 <= value <= self.n:
            raise ValueError(f"point ({index}, {value}) outside 1..{self.n}")
        return bisect_right(self.cols, index), bisect_right(self.rows, value)

    @classmethod
    def parse(cls, text: str) -> "Gridding":
        """Parse the ``cols=1,3,5,10 rows=1,6,10`` form (either order)."""
        parts = {}
        for token in text.split():
            key, _, values = token.partition("=")
            if key not in ("cols", "rows") or key in parts or not values:
                raise ValueError(f"cannot parse gridding from {text!r}")
            try:
                parts[key] = tuple(int(v) for v in values.split(","))
            except ValueError:
                raise ValueError(f"cannot parse gridding from {text!r}") from None
        if set(parts) != {"cols", "rows"}:
            raise ValueError(f"cannot parse gridding from {text!r}")
        return cls(parts["cols"], parts["rows"])

    def format(self) -> str:
        cols = ",".join(str(c) for c in self.cols)
        rows = ",".join(str(r) for r in self.rows)
        return f"cols={cols} rows={rows}"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class GriddedPermutation:
    """A permutation with a gridding that is valid for ``matrix``."""

    perm: Permutation
    matrix: GridMatrix
    gridding: Gridding

    def __post_init__(self) -> None:
        if not check_gridding(self.perm, self.matrix, self.gridding):
            raise ValueError(
                f"{self.gridding} is not a valid gridding of {self.perm} "
                f"for the matrix"
            )

    def cell_of(self, index: int) -> Cell:
        """The cell holding the entry at the given index."""
        return self.gridding.cell_of(index, self.perm.entries[index - 1])

    def __str__(self) -> str:
        return f"{self.perm} ({self.gridding})"


def _require_shape(pi: Permutation, matrix: GridMatrix, g: Gridding) -> None:
    if g.t != matrix.t or g.u != matrix.u:
        raise ValueError(
            f"gridding shape {g.t}x{g.u} does not match matrix {matrix.t}x{matrix.u}"
        )
    if g.n != len(pi):
        raise ValueError(f"divisions end at {g.n + 1}, expected {len(pi) + 1}")


def check_gridding(pi: Permutation, matrix: GridMatrix, g: Gridding) -> bool:
    """Whether g is a valid gridding of pi for the matrix.

    Valid means each cell (k, l) of the grid holds an increasing sequence if
    entry(k, l) = 1, a decreasing one if -1, and nothing if 0.  Malformed
    divisions (wrong shape or endpoint) raise ValueError; a well-formed
    gridding that violates a cell condition just returns False.
    """
    _require_shape(pi, matrix, g)
    # One ascending-index pass: within a cell, indices arrive in order, so
    # comparing against the previous value seen there settles monotonicity.
    last_seen: dict[Cell, int] = {}
    for index, value in enumerate(pi, start=1):
        cell = g.cell_of(index, value)
        entry = matrix.entry(*cell)
        if entry == 0:
            return False
        previous = last_seen.get(cell)
        if previous is not None and (value > previous) != (entry == 1):
            return False
        last_seen[cell] = value
    return True


def _division_sequences(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All weakly increasing sequences 1 = d_1 <= ... <= d_(parts+1) = n+1,
    in lexicographic order."""
    for middle in combinations_with_replacement(range(1, n + 2), parts - 1):
        yield (1,) + middle + (n + 1,)


def find_gridding(pi: Permutation, matrix: GridMatrix) -> Gridding | None:
    """The lexicographically least valid gridding of pi, or None.

    Searches column divisions in lexicographic order with row divisions
    innermost, so the first hit is the least (cols, rows) pair.  Exhaustive:
    None means no gridding exists.
    """
    n = len(pi)
    for cols in _division_sequences(n, matrix.t):
        col_band = [bisect_right(cols, index) for index in range(1, n + 1)]
        for rows in _division_sequences(n, matrix.u):
            last_seen: dict[Cell, int] = {}
            for index, value in enumerate(pi, start=1):
                cell = (col_band[index - 1], bisect_right(rows, value))
                entry = matrix.entry(*cell)
                if entry == 0:
                    break
                previous = last_seen.get(cell)
                if previous is not None and (value > previous) != (entry == 1):
                    break
                last_seen[cell] = value
            else:
                return Gridding(cols, rows)
    return None


def in_grid_class(pi: Permutation, matrix: GridMatrix) -> bool:
    """Whether pi has any valid gridding for the matrix."""
    return find_gridding(pi, matrix) is not None
