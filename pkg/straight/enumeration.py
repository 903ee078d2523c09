"""
Enumeration of semistandard tableaux and of filling spaces.

The SSYT basis is labelled S_1 > S_2 > ... > S_K in row word order, with
1-based indices throughout.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import factorial
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from .config import JSON_FORMAT_VERSION
from .errors import ValidationError
from .tableau import Content, Filling, Partition, Row, row_word


def check_shape_content(shape: Partition, content: Content):
    """Raise unless |shape| = |content|."""
    if shape.size != content.size:
        raise ValidationError(
            f"Shape {shape} has {shape.size} cells but content {content} sums to {content.size}"
        )


@dataclass
class RowTrieNode:
    """
    Basis tableaux that agree on every row read so far.

    ``need`` counts the values 0..n of the row that led here, ``low`` is the
    smallest basis index below the node and ``index`` is set on complete
    tableaux.
    """
    need: Tuple[int, ...] = ()
    children: Dict[Row, "RowTrieNode"] = field(default_factory=dict)
    low: int = 0
    index: int = 0


def build_row_trie(tableaux: Sequence[Filling], n: int) -> RowTrieNode:
    """Trie of the tableaux rows, top row first; children keep increasing ``low``."""
    root = RowTrieNode()
    for i, tableau in enumerate(tableaux, 1):
        node = root
        node.low = node.low or i
        for row in tableau.rows:
            child = node.children.get(row)
            if child is None:
                need = [0] * (n + 1)
                for v in row:
                    need[v] += 1
                child = node.children[row] = RowTrieNode(tuple(need), low=i)
            node = child
        node.index = i
    return root


@dataclass(frozen=True)
class SSYTBasis:
    """The semistandard tableaux of one shape and content, S_1 > ... > S_K."""
    shape: Partition
    content: Content
    tableaux: Tuple[Filling, ...]
    _index: Dict[Filling, int] = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(self.tableaux, 1)})

    def __len__(self) -> int:
        return len(self.tableaux)

    def __iter__(self) -> Iterator[Filling]:
        return iter(self.tableaux)

    def __contains__(self, tableau) -> bool:
        return tableau in self._index

    @property
    def kostka(self) -> int:
        return len(self.tableaux)

    @cached_property
    def row_trie(self) -> RowTrieNode:
        return build_row_trie(self.tableaux, self.content.n)

    def tableau(self, i: int) -> Filling:
        """S_i, 1-based."""
        if not 1 <= i <= len(self.tableaux):
            raise ValidationError(f"Index {i} outside 1..{len(self.tableaux)}")
        return self.tableaux[i - 1]

    def index(self, tableau: Filling) -> int:
        """The i with S_i = tableau."""
        try:
            return self._index[tableau]
        except KeyError:
            raise ValidationError(f"Not a member of the basis:\n{tableau}") from None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "format": JSON_FORMAT_VERSION,
            "shape": list(self.shape.parts),
            "content": list(self.content.counts),
            "kostka": self.kostka,
            "tableaux": [[list(row) for row in t.rows] for t in self.tableaux],
        }


def enumerate_ssyt(shape: Partition, content: Content) -> SSYTBasis:
    """All SSYT of the given shape and content, descending in row word order."""
    check_shape_content(shape, content)
    n = content.n
    lengths = shape.parts
    cells = [(r, c) for r, width in enumerate(lengths) for c in range(width)]
    grid: List[List[int]] = [[0] * width for width in lengths]
    remaining = [0] + list(content.counts)
    found: List[Filling] = []

    def backtrack(pos: int):
        if pos == len(cells):
            found.append(Filling.from_rows(grid, n))
            return
        r, c = cells[pos]
        low = 1
        if c > 0:
            low = max(low, grid[r][c - 1])
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        for v in range(low, n + 1):
            if remaining[v] == 0:
                continue
            remaining[v] -= 1
            grid[r][c] = v
            backtrack(pos + 1)
            remaining[v] += 1
        grid[r][c] = 0

    backtrack(0)
    found.sort(key=row_word, reverse=True)
    return SSYTBasis(shape, content, tuple(found))


def kostka(shape: Partition, content: Content) -> int:
    """Number of SSYT of the given shape and content."""
    return len(enumerate_ssyt(shape, content))


def count_fillings(shape: Partition, content: Content) -> int:
    """|F(shape, content)| as a multinomial coefficient."""
    check_shape_content(shape, content)
    total = factorial(shape.size)
    for z in content.counts:
        total //= factorial(z)
    return total


def _word_to_filling(word, shape: Partition, n: int) -> Filling:
    rows, start = [], 0
    for width in shape.parts:
        rows.append(word[start:start + width])
        start += width
    return Filling.from_rows(rows, n)


def iter_fillings(shape: Partition, content: Content) -> Iterator[Filling]:
    """Every filling of F(shape, content), in increasing row word order."""
    check_shape_content(shape, content)
    for word in multiset_permutations(list(content.multiset())):
        yield _word_to_filling(word, shape, content.n)


def iter_column_strict(shape: Partition, content: Content) -> Iterator[Filling]:
    """Every tableau (strictly increasing columns) of the given shape and content."""
    check_shape_content(shape, content)
    n = content.n
    lengths = shape.column_lengths
    remaining = list(content.counts)
    chosen: List[Tuple[int, ...]] = []

    def backtrack(c: int):
        if c == len(lengths):
            yield Filling(tuple(chosen), n)
            return
        available = [v for v in range(1, n + 1) if remaining[v - 1] > 0]
        for col in combinations(available, lengths[c]):
            for v in col:
                remaining[v - 1] -= 1
            chosen.append(col)
            yield from backtrack(c + 1)
            chosen.pop()
            for v in col:
                remaining[v - 1] += 1

    yield from backtrack(0)
