"""Word codec for grid classes with a sign assignment.

Words over the alphabet of nonzero cells encode gridded permutations: the
j-th letter names the cell that receives the j-th entry, and the column and
row signs dictate where within each column and row the new entry lands.
Decoding reverses this for a given gridded permutation by reading off the
per-column and per-row orders in which entries must have been inserted and
merging them into one linear order.  The merge is conflict-free whenever the
matrix's row-column graph is a forest; otherwise the orders can disagree,
which ``decode`` reports as InconsistentOrdersError.

Containment of gridded permutations corresponds to the subword order on
words, which is what makes word images useful for sweeping grid classes.
"""
from __future__ import annotations

from heapq import heappop, heappush

from .graphs import SignAssignment
from .gridding import Gridding, GriddedPermutation
from .matrices import Cell, GridMatrix
from .perms import Permutation

Letter = Cell  # (column, row) of a nonzero cell
Word = tuple[Letter, ...]


class InconsistentOrdersError(Exception):
    """The row and column orders admit no common linear extension."""


def alphabet(matrix: GridMatrix) -> frozenset[Letter]:
    """The letters available to words over this matrix: its nonzero cells."""
    return frozenset(matrix.nonzero_cells())


def parse_word(text: str) -> Word:
    """Parse whitespace-separated ``k,l`` pairs, e.g. ``3,1 3,1 2,2``.

    >>> parse_word("3,1 3,1 2,2")
    ((3, 1), (3, 1), (2, 2))
    >>> parse_word("")
    ()
    """
    letters = []
    for token in text.split():
        fields = token.split(",")
        if len(fields) != 2:
            raise ValueError(f"cannot parse letter {token!r}")
        try:
            k, l = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"cannot parse letter {token!r}") from None
        if k < 1 or l < 1:
            raise ValueError(f"letter coordinates must be positive: {token!r}")
        letters.append((k, l))
    return tuple(letters)


def format_word(word: Word) -> str:
    return " ".join(f"{k},{l}" for k, l in word)


def _ordered_positions(
    positions_per_group: list[list[int]], signs: tuple[int, ...]
) -> dict[int, int]:
    """Rank letter positions group by group, reversing negative groups.

    Concatenating the groups (columns left to right, or rows bottom to top)
    and ranking from 1 gives each position its coordinate.
    """
    coordinate = {}
    rank = 1
    for positions, sign in zip(positions_per_group, signs):
        for j in positions if sign == 1 else reversed(positions):
            coordinate[j] = rank
            rank += 1
    return coordinate


def encode(matrix: GridMatrix, signs: SignAssignment, word: Word) -> GriddedPermutation:
    """The gridded permutation spelled out by a word.

    Letter j = (k, l) contributes the entry of cell (k, l) that is j-th
    oldest there.  Within column k the entries of later letters go to the
    right if c_k = +1 and to the left if c_k = -1; within row l the entries
    of later letters go above if r_l = +1 and below if r_l = -1.  Column
    divisions fall out of the per-column letter counts, rows likewise.
    """
    if not signs.verify(matrix):
        raise ValueError("sign assignment does not match the matrix")
    letters = alphabet(matrix)
    for letter in word:
        if letter not in letters:
            raise ValueError(f"letter {letter} is not a nonzero cell of the matrix")

    by_column: list[list[int]] = [[] for _ in range(matrix.t)]
    by_row: list[list[int]] = [[] for _ in range(matrix.u)]
    for j, (k, l) in enumerate(word):
        by_column[k - 1].append(j)
        by_row[l - 1].append(j)
    x = _ordered_positions(by_column, signs.col_signs)
    y = _ordered_positions(by_row, signs.row_signs)

    entries = [0] * len(word)
    for j in range(len(word)):
        entries[x[j] - 1] = y[j]

    cols, rows = [1], [1]
    for positions in by_column:
        cols.append(cols[-1] + len(positions))
    for positions in by_row:
        rows.append(rows[-1] + len(positions))
    # GriddedPermutation re-validates the cell conditions on construction.
    return GriddedPermutation(
        Permutation(entries), matrix, Gridding(tuple(cols), tuple(rows))
    )


def subword_leq(v: Word, w: Word) -> bool:
    """Whether v occurs in w as a not-necessarily-contiguous subword."""
    it = iter(w)
    return all(letter in it for letter in v)


def row_col_orders(
    gp: GriddedPermutation, signs: SignAssignment
) -> dict[tuple[str, int], tuple[int, ...]]:
    """The insertion order of entries within each column and each row.

    Keys are ("col", k) and ("row", l); each maps to the values of that
    band's entries, oldest first.  In column k entries were inserted left to
    right when c_k = +1 and right to left when c_k = -1, so the order lists
    them by index, ascending or descending.  Row orders list values of a
    band ascending or descending as r_l is +1 or -1.
    """
    if not signs.verify(gp.matrix):
        raise ValueError("sign assignment does not match the matrix")
    pi, g = gp.perm, gp.gridding
    orders: dict[tuple[str, int], tuple[int, ...]] = {}
    for k in range(1, g.t + 1):
        band = pi.entries[g.cols[k - 1] - 1 : g.cols[k] - 1]
        orders[("col", k)] = band if signs.col_signs[k - 1] == 1 else band[::-1]
    for l in range(1, g.u + 1):
        band = tuple(v for v in range(g.rows[l - 1], g.rows[l]))
        orders[("row", l)] = band if signs.row_signs[l - 1] == 1 else band[::-1]
    return orders


def decode(gp: GriddedPermutation, signs: SignAssignment) -> Word:
    """A word that encodes back to the given gridded permutation.

    Merges the row and column orders into one linear order on the entries
    and reads off each entry's cell.  Only cover pairs (consecutive entries
    of one order) are recorded; ties are broken toward the entry with the
    least index, so the output is deterministic.  Distinct valid words can
    exist (letters of independent cells commute), so round trips are stable
    at the gridded-permutation level, not the word level.

    Raises InconsistentOrdersError when the orders conflict, which can only
    happen if the matrix's row-column graph has a cycle.
    """
    orders = row_col_orders(gp, signs)
    pi = gp.perm
    n = len(pi)
    index_of = {value: index for index, value in enumerate(pi, start=1)}

    successors: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    predecessors = {v: 0 for v in range(1, n + 1)}
    cover_pairs = set()
    for order in orders.values():
        for a, b in zip(order, order[1:]):
            # A valid sign assignment rules out opposed pairs outright.
            assert (b, a) not in cover_pairs, f"contradictory pair {a}, {b}"
            if (a, b) not in cover_pairs:
                cover_pairs.add((a, b))
                successors[a].append(b)
                predecessors[b] += 1

    ready = [index_of[v] for v in predecessors if predecessors[v] == 0]
    ready.sort()
    word = []
    while ready:
        index = heappop(ready)
        word.append(gp.cell_of(index))
        for succ in successors[pi.entries[index - 1]]:
            predecessors[succ] -= 1
            if predecessors[succ] == 0:
                heappush(ready, index_of[succ])
    if len(word) != n:
        raise InconsistentOrdersError(
            "row and column orders have no common linear extension"
        )
    return tuple(word)
