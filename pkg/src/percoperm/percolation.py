"""Cell-level bootstrap percolation on permutation matrices.

A 0-cell mutates to 1 once at least two of its four orthogonal neighbors
hold a 1; 1s never revert.  Grids are stored top-origin: row 1 is the top
row, matching the usual display of c_{i,j}.  Each row is a bitmask with
bit (col - 1) set when the cell holds a 1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm import Word, check_permutation

Cell = tuple[int, int]  # (row, col), both 1-based, row 1 at the top

__all__ = [
    "Cell",
    "Grid",
    "PercolationTrace",
    "MutationLayers",
    "Tile",
    "FinalConfiguration",
    "matrix_of",
    "mutable_cells",
    "mutate",
    "percolate",
    "mutation_layers",
    "final_configuration",
    "is_full",
    "render_trace",
]


@dataclass(frozen=True)
class Grid:
    """An n x n 0/1 matrix; immutable."""

    n: int
    rows: tuple[int, ...]

    def get(self, row: int, col: int) -> int:
        return (self.rows[row - 1] >> (col - 1)) & 1

    def ones(self) -> set[Cell]:
        out = set()
        for i, bits in enumerate(self.rows, 1):
            while bits:
                low = bits & -bits
                out.add((i, low.bit_length()))
                bits ^= low
        return out

    def count_ones(self) -> int:
        return sum(bits.bit_count() for bits in self.rows)

    def render(self) -> str:
        return "\n".join(
            "".join(str(self.get(i, j)) for j in range(1, self.n + 1))
            for i in range(1, self.n + 1)
        )


@dataclass(frozen=True)
class PercolationTrace:
    initial: Grid
    steps: tuple[Cell, ...]
    final: Grid


@dataclass(frozen=True)
class MutationLayers:
    """Minimum step counts L(c) and the layer sets U_0..U_{n^2-n}.

    L maps every initially-zero cell to the minimum number of steps any
    mutation sequence needs before that cell can have mutated; cells that
    no sequence ever mutates carry the sentinel n^2.  U[0] holds the
    initial 1-cells and U[i] holds the cells with L(c) = i.
    """

    L: dict[Cell, int]
    U: tuple[frozenset[Cell], ...]


@dataclass(frozen=True)
class Tile:
    row: int  # top-left corner, top-origin
    col: int
    size: int


@dataclass(frozen=True)
class FinalConfiguration:
    tiles: tuple[Tile, ...]
    condensed: Word

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(t.size for t in self.tiles)


def matrix_of(p: Sequence[int]) -> Grid:
    """Permutation matrix of p, drawn as its graph.

    The 1 for column j sits at row p(j) counted from the bottom, i.e.
    top-origin row n - p(j) + 1.
    """
    p = check_permutation(p)
    n = len(p)
    rows = [0] * n
    for j, v in enumerate(p, 1):
        rows[n - v] |= 1 << (j - 1)
    return Grid(n, tuple(rows))


def _mutable_rows(g: Grid) -> list[int]:
    """Per-row bitmask of mutable cells (0-cells with >= 2 one-neighbors)."""
    n, rows = g.n, g.rows
    full = (1 << n) - 1
    out = []
    for i, row in enumerate(rows):
        up = rows[i - 1] if i > 0 else 0
        down = rows[i + 1] if i + 1 < n else 0
        west = (row << 1) & full
        east = row >> 1
        at_least_two = (
            (up & down)
            | (up & west)
            | (up & east)
            | (down & west)
            | (down & east)
            | (west & east)
        )
        out.append(at_least_two & ~row & full)
    return out


def _cells_of_rows(masks: Iterable[int]) -> Iterator[Cell]:
    for i, bits in enumerate(masks, 1):
        while bits:
            low = bits & -bits
            yield (i, low.bit_length())
            bits ^= low


def mutable_cells(g: Grid) -> set[Cell]:
    """The set of cells currently eligible to mutate."""
    return set(_cells_of_rows(_mutable_rows(g)))


def mutate(g: Grid, cell: Cell) -> Grid:
    """Return g with ``cell`` flipped to 1; rejects non-mutable cells."""
    row, col = cell
    if not (1 <= row <= g.n and 1 <= col <= g.n):
        raise ValueError(f"cell {cell} out of range for n={g.n}")
    if not (_mutable_rows(g)[row - 1] >> (col - 1)) & 1:
        raise ValueError(f"cell {cell} is not mutable")
    rows = list(g.rows)
    rows[row - 1] |= 1 << (col - 1)
    return Grid(g.n, tuple(rows))


def percolate(
    g: Grid,
    policy: str = "first-scan",
    *,
    seed: int = 0,
    script: Sequence[Cell] | None = None,
) -> PercolationTrace:
    """Run percolation to completion and record every step.

    Policies:
      - "first-scan": mutate the first mutable cell in row-major order
        (deterministic; the default).
      - "random": mutate a uniformly chosen mutable cell, driven by ``seed``.
      - "scripted": apply ``script`` verbatim; it must be a valid complete
        sequence (every step mutable when applied, no mutable cell left).

    By order-invariance the final grid does not depend on the policy.
    """
    if policy == "scripted":
        if script is None:
            raise ValueError("scripted policy requires a script")
        cur = g
        steps = []
        for cell in script:
            cur = mutate(cur, cell)  # raises on a non-mutable step
            steps.append(cell)
        if mutable_cells(cur):
            raise ValueError("scripted sequence is incomplete")
        return PercolationTrace(g, tuple(steps), cur)

    if policy == "random":
        rng = random.Random(seed)
    elif policy != "first-scan":
        raise ValueError(f"unknown policy {policy!r}")

    rows = list(g.rows)
    steps: list[Cell] = []
    while True:
        masks = _mutable_rows(Grid(g.n, tuple(rows)))
        candidates = list(_cells_of_rows(masks))
        if not candidates:
            break
        cell = candidates[0] if policy == "first-scan" else rng.choice(candidates)
        rows[cell[0] - 1] |= 1 << (cell[1] - 1)
        steps.append(cell)
    return PercolationTrace(g, tuple(steps), Grid(g.n, tuple(rows)))


def _successors(n: int, rows: tuple[int, ...]) -> Iterator[tuple[Cell, tuple[int, ...]]]:
    for cell in _cells_of_rows(_mutable_rows(Grid(n, rows))):
        nxt = list(rows)
        nxt[cell[0] - 1] |= 1 << (cell[1] - 1)
        yield cell, tuple(nxt)


def mutation_layers(g: Grid) -> MutationLayers:
    """Exact L(c) and U_i by breadth-first search over reachable grid states.

    The search is exponential in the worst case and is deliberately gated
    to n <= 5; it exists as a provably correct oracle, not a fast method.
    """
    n = g.n
    if n > 5:
        raise ValueError("mutation_layers oracle is limited to n <= 5")
    sentinel = n * n
    initial_ones = g.ones()
    L: dict[Cell, int] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (i, j) not in initial_ones:
                L[(i, j)] = sentinel

    seen = {g.rows}
    frontier = [g.rows]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for rows in frontier:
            for cell, new_rows in _successors(n, rows):
                if L[cell] == sentinel:
                    L[cell] = depth
                if new_rows not in seen:
                    seen.add(new_rows)
                    nxt.append(new_rows)
        frontier = nxt

    layers = [frozenset(initial_ones)]
    for i in range(1, n * n - n + 1):
        layers.append(frozenset(c for c, d in L.items() if d == i))
    return MutationLayers(L, tuple(layers))


def _column_run(g: Grid, col: int) -> tuple[int, int]:
    """(top, bottom) rows of the contiguous 1-run in a column of a final grid."""
    rows = [i for i in range(1, g.n + 1) if g.get(i, col)]
    top, bottom = rows[0], rows[-1]
    if rows != list(range(top, bottom + 1)):
        raise AssertionError(f"column {col} run is broken: {rows}")
    return top, bottom


def _condense(tile_tops: Sequence[int]) -> Word:
    """Condensed permutation from the tiles' top rows, listed left to right."""
    m = len(tile_tops)
    rank = {t: k for k, t in enumerate(sorted(tile_tops), 1)}
    return tuple(m - rank[t] + 1 for t in tile_tops)


def final_configuration(p: Sequence[int]) -> FinalConfiguration:
    """Percolate matrix_of(p) and extract the final square unitary tiles.

    Tiles are reported left to right; the condensed permutation collapses
    each tile to a single cell and is itself no-growth.
    """
    p = check_permutation(p)
    n = len(p)
    g = percolate(matrix_of(p)).final
    tiles: list[Tile] = []
    col = 1
    while col <= n:
        top, bottom = _column_run(g, col)
        size = bottom - top + 1
        for c in range(col + 1, col + size):
            if _column_run(g, c) != (top, bottom):
                raise AssertionError("final tile is not square")
        tiles.append(Tile(top, col, size))
        col += size
    return FinalConfiguration(tuple(tiles), _condense([t.row for t in tiles]))


def is_full(p: Sequence[int]) -> bool:
    """True iff the matrix of p percolates to a single tile of size n."""
    return len(final_configuration(p).tiles) == 1


def render_trace(trace: PercolationTrace) -> str:
    """Frame-by-frame rendering: 0/1 grids separated by blank lines."""
    frames = [trace.initial.render()]
    cur = list(trace.initial.rows)
    for row, col in trace.steps:
        cur[row - 1] |= 1 << (col - 1)
        frames.append(Grid(trace.initial.n, tuple(cur)).render())
    return "\n\n".join(frames)
