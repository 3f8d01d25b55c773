"""Tile merging as bracketing of the permutation string.

A meld is a binary tree over a consecutive run of positions whose leaf
values form a consecutive integer interval.  Two adjacent melds merge
when their value intervals abut: the merged node is Round "( , )" when
the left meld's values precede the right's, Square "[ , ]" when they
follow.  Running merges to exhaustion reproduces the final configuration
of cell-level percolation, one macro step per merge.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perm import Word, check_permutation
from .percolation import FinalConfiguration, Tile, _condense

__all__ = [
    "Kind",
    "Meld",
    "MergeOutcome",
    "merge_run",
    "merge_eager",
    "serialize_meld",
    "parse_meld",
    "top_level_kind",
    "components_via_bracketing",
    "final_value_intervals",
    "quick_is_full",
]


class Kind(enum.Enum):
    ROUND = "round"
    SQUARE = "square"


@dataclass(frozen=True)
class Meld:
    """Leaf (value at a position) or a Round/Square merge of two melds.

    ``lo..hi`` is the value interval, ``start..end`` the 1-based position
    span; both are contiguous by construction.
    """

    lo: int
    hi: int
    start: int
    end: int
    kind: Kind | None = None
    left: "Meld | None" = None
    right: "Meld | None" = None

    @classmethod
    def leaf(cls, value: int, pos: int) -> "Meld":
        return cls(value, value, pos, pos)

    @classmethod
    def merge(cls, left: "Meld", right: "Meld") -> "Meld":
        if left.end + 1 != right.start:
            raise ValueError("melds are not position-adjacent")
        if left.hi + 1 == right.lo:
            kind = Kind.ROUND
        elif right.hi + 1 == left.lo:
            kind = Kind.SQUARE
        else:
            raise ValueError("meld values do not form a consecutive interval")
        return cls(
            min(left.lo, right.lo),
            max(left.hi, right.hi),
            left.start,
            right.end,
            kind,
            left,
            right,
        )

    @property
    def is_leaf(self) -> bool:
        return self.kind is None

    def leaves(self) -> Iterator[int]:
        """Leaf values in position order."""
        if self.is_leaf:
            yield self.lo
        else:
            yield from self.left.leaves()
            yield from self.right.leaves()

    def word(self) -> Word:
        return tuple(self.leaves())


@dataclass(frozen=True)
class MergeOutcome:
    melds: tuple[Meld, ...]
    full: bool
    tiles: FinalConfiguration


def _mergeable(a: Meld, b: Meld) -> bool:
    return a.hi + 1 == b.lo or b.hi + 1 == a.lo


def _outcome(melds: list[Meld], n: int) -> MergeOutcome:
    tiles = tuple(Tile(n - m.hi + 1, m.start, m.hi - m.lo + 1) for m in melds)
    condensed = _condense([t.row for t in tiles])
    return MergeOutcome(tuple(melds), len(melds) == 1, FinalConfiguration(tiles, condensed))


def merge_run(p: Sequence[int], direction: str = "left") -> MergeOutcome:
    """Run the left- or right-merging algorithm to exhaustion.

    Each pass scans the meld list (index 1 upward for "left", from the
    last pair downward for "right"), merges the first mergeable adjacent
    pair found, and restarts the scan; termination is a pass with no
    merge.
    """
    p = check_permutation(p)
    if direction not in ("left", "right"):
        raise ValueError(f"unknown direction {direction!r}")
    melds = [Meld.leaf(v, i) for i, v in enumerate(p, 1)]
    while True:
        pairs = range(len(melds) - 1)
        if direction == "right":
            pairs = reversed(pairs)
        for i in pairs:
            if _mergeable(melds[i], melds[i + 1]):
                melds[i : i + 2] = [Meld.merge(melds[i], melds[i + 1])]
                break
        else:
            break
    return _outcome(melds, len(p))


def merge_eager(p: Sequence[int]) -> MergeOutcome:
    """The "eager" reading of left-to-right merging.

    A single traversal merges pairs as it finds them, and a freshly
    created meld is immediately re-merged with its right neighbor while
    possible; the traversal only restarts once the list is exhausted.
    This variant can violate the right-child property that merge_run's
    left direction guarantees (4231 is the witness), so nothing else in
    the package depends on it.
    """
    p = check_permutation(p)
    melds = [Meld.leaf(v, i) for i, v in enumerate(p, 1)]
    while True:
        merged_any = False
        i = 0
        while i < len(melds) - 1:
            if _mergeable(melds[i], melds[i + 1]):
                merged_any = True
                while i < len(melds) - 1 and _mergeable(melds[i], melds[i + 1]):
                    melds[i : i + 2] = [Meld.merge(melds[i], melds[i + 1])]
            i += 1
        if not merged_any:
            break
    return _outcome(melds, len(p))


def serialize_meld(m: Meld) -> str:
    """Bracketing string: "(l r)" for Round, "[l r]" for Square, value for a leaf."""
    if m.is_leaf:
        return str(m.lo)
    left = serialize_meld(m.left)
    right = serialize_meld(m.right)
    if m.kind is Kind.ROUND:
        return f"({left} {right})"
    return f"[{left} {right}]"


def parse_meld(text: str, _start: int = 1) -> Meld:
    """Inverse of serialize_meld (used for round-tripping)."""
    meld, rest = _parse_meld(text.strip(), _start)
    if rest:
        raise ValueError(f"trailing input: {rest!r}")
    return meld


def _parse_meld(text: str, start: int) -> tuple[Meld, str]:
    if not text:
        raise ValueError("empty meld text")
    if text[0] in "([":
        close = ")" if text[0] == "(" else "]"
        left, rest = _parse_meld(text[1:], start)
        if not rest.startswith(" "):
            raise ValueError("expected space between siblings")
        right, rest = _parse_meld(rest[1:], left.end + 1)
        if not rest.startswith(close):
            raise ValueError(f"expected {close!r}")
        node = Meld.merge(left, right)
        expected = Kind.ROUND if close == ")" else Kind.SQUARE
        if node.kind is not expected:
            raise ValueError("bracket kind does not match the value intervals")
        return node, rest[1:]
    digits = ""
    while text and text[0].isdigit():
        digits, text = digits + text[0], text[1:]
    if not digits:
        raise ValueError("expected a value")
    return Meld.leaf(int(digits), start), text


def top_level_kind(p: Sequence[int]) -> Kind:
    """Kind of the root bracket of a full permutation (n >= 2).

    The kind is algorithm-independent: Square iff p is indecomposable.
    """
    p = check_permutation(p)
    if len(p) < 2:
        raise ValueError("top-level kind requires n >= 2")
    outcome = merge_run(p, "left")
    if not outcome.full:
        raise ValueError("permutation is not full")
    return outcome.melds[0].kind


def components_via_bracketing(p: Sequence[int]) -> list[Word]:
    """Indecomposable components read off the left bracketing of a full permutation.

    While the root is Round its right child is the rightmost remaining
    component; peeling iteratively yields comps(p).
    """
    p = check_permutation(p)
    outcome = merge_run(p, "left")
    if not outcome.full:
        raise ValueError("permutation is not full")
    node = outcome.melds[0]
    rear: list[Word] = []
    while node.kind is Kind.ROUND:
        rear.append(node.right.word())
        node = node.left
    rear.append(node.word())
    return rear[::-1]


def final_value_intervals(p: Sequence[int]) -> list[tuple[int, int]]:
    """Value interval (lo, hi) of each final tile, left to right.

    One O(n) stack pass: push each value as a unit interval and merge
    with the top while the intervals abut.  Pairs below the top are never
    mergeable, so the result is a complete merge; by order-invariance it
    equals the final configuration of any merging order.
    """
    stack: list[tuple[int, int]] = []
    for a in p:
        lo = hi = a
        while stack:
            l2, h2 = stack[-1]
            if h2 + 1 == lo:
                lo = l2
            elif hi + 1 == l2:
                hi = h2
            else:
                break
            stack.pop()
        stack.append((lo, hi))
    return stack


def quick_is_full(p: Sequence[int]) -> bool:
    """Fast fullness test used by the counting loops; input is not validated."""
    return len(final_value_intervals(p)) == 1
