"""0/+1/-1 grid matrices, indexed (column, row) from the bottom-left corner.

``entry(3, 2)`` is the entry in the 3rd column from the left and 2nd row
from the bottom, so a t x u matrix has t columns and u rows.  The text
format, in contrast, is visual: u lines with the top row first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Cell = tuple[int, int]

_TOKEN_TO_ENTRY = {"0": 0, ".": 0, "1": 1, "+": 1, "-1": -1, "-": -1}
_ENTRY_TO_TOKEN = {0: ".", 1: "+", -1: "-"}


@dataclass(frozen=True)
class GridMatrix:
    """A t x u matrix over {0, +1, -1}.

    ``columns[k-1][l-1]`` stores entry (k, l); both coordinates are 1-based
    from the bottom-left.
    """

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "columns", tuple(tuple(col) for col in self.columns)
        )
        if not self.columns or not self.columns[0]:
            raise ValueError("matrix needs at least one column and one row")
        u = len(self.columns[0])
        if any(len(col) != u for col in self.columns):
            raise ValueError("ragged matrix columns")
        for col in self.columns:
            for e in col:
                if e not in (0, 1, -1):
                    raise ValueError(f"matrix entries must be 0, 1 or -1, got {e}")

    @property
    def t(self) -> int:
        """Number of columns."""
        return len(self.columns)

    @property
    def u(self) -> int:
        """Number of rows."""
        return len(self.columns[0])

    def entry(self, k: int, l: int) -> int:
        if not (1 <= k <= self.t and 1 <= l <= self.u):
            raise ValueError(f"cell ({k}, {l}) outside a {self.t}x{self.u} matrix")
        return self.columns[k - 1][l - 1]

    def nonzero_cells(self) -> tuple[Cell, ...]:
        """All cells (k, l) with a nonzero entry, sorted by column then row."""
        return tuple(
            (k, l)
            for k in range(1, self.t + 1)
            for l in range(1, self.u + 1)
            if self.columns[k - 1][l - 1] != 0
        )

    @classmethod
    def from_cells(cls, t: int, u: int, cells: Mapping[Cell, int]) -> "GridMatrix":
        """Build a t x u matrix from a {(k, l): entry} mapping; missing cells are 0."""
        for (k, l) in cells:
            if not (1 <= k <= t and 1 <= l <= u):
                raise ValueError(f"cell ({k}, {l}) outside a {t}x{u} matrix")
        return cls(
            tuple(
                tuple(cells.get((k, l), 0) for l in range(1, u + 1))
                for k in range(1, t + 1)
            )
        )

    @classmethod
    def from_rows(cls, rows_top_first: Iterable[Iterable[int]]) -> "GridMatrix":
        """Build from rows in visual orientation (top row first)."""
        rows = [tuple(row) for row in rows_top_first]
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one column and one row")
        u = len(rows)
        t = len(rows[0])
        if any(len(row) != t for row in rows):
            raise ValueError("ragged matrix rows")
        # rows[0] is the top row, i.e. row index u counted from the bottom
        return cls(
            tuple(
                tuple(rows[u - l][k - 1] for l in range(1, u + 1))
                for k in range(1, t + 1)
            )
        )

    @classmethod
    def parse(cls, text: str) -> "GridMatrix":
        """Parse the text format: u lines, top row first, tokens from
        {0, 1, -1} or the aliases {., +, -}."""
        rows = []
        for line in text.splitlines():
            tokens = line.split()
            if not tokens:
                continue
            try:
                rows.append([_TOKEN_TO_ENTRY[tok] for tok in tokens])
            except KeyError as exc:
                raise ValueError(f"bad matrix token {exc.args[0]!r} in line {line!r}") from None
        if not rows:
            raise ValueError("empty matrix text")
        return cls.from_rows(rows)

    def format(self) -> str:
        """Render in the text format (top row first, . + - tokens)."""
        lines = []
        for l in range(self.u, 0, -1):
            lines.append(" ".join(_ENTRY_TO_TOKEN[self.columns[k - 1][l - 1]]
                                  for k in range(1, self.t + 1)))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.format()
