"""
Rearrangement coefficients.

R[F, S] is the signed count of multipermutations pi such that F_pi has the
same row content as S. It is computed by backtracking row by row: every row
picks one unused entry from each of its columns so that the picks match the
row content of S, and the sign of pi is accumulated from inversions as the
positions are chosen.
"""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from . import config
from .config import JSON_FORMAT_VERSION
from .enumeration import RowTrieNode, SSYTBasis
from .errors import ValidationError
from .tableau import (
    Filling,
    MultiPermutation,
    apply,
    check_comparable,
    iter_multipermutations,
    row_word,
)


# ============================================================================
# Rearrangement coefficients
# ============================================================================

def _signed_rearrangements(filling: Filling, target: Filling) -> int:
    """Sum of sign(pi) over pi with filling_pi row-content-equal to target."""
    columns = filling.columns
    row_lengths = target.shape.parts
    n = max(filling.n, target.n)
    residual = []
    for row in target.rows:
        need = [0] * (n + 1)
        for v in row:
            need[v] += 1
        residual.append(need)
    used = [0] * len(columns)
    total = 0

    def place(r: int, c: int, sign: int):
        nonlocal total
        if c == row_lengths[r]:
            if r + 1 == len(row_lengths):
                total += sign
            else:
                place(r + 1, 0, sign)
            return
        col = columns[c]
        mask = used[c]
        need = residual[r]
        for p, v in enumerate(col):
            if (mask >> p) & 1 or need[v] == 0:
                continue
            # inversions added: earlier rows already holding a later position
            flips = bin(mask >> (p + 1)).count("1") & 1
            need[v] -= 1
            used[c] = mask | (1 << p)
            place(r, c + 1, -sign if flips else sign)
            need[v] += 1
            used[c] = mask

    place(0, 0, 1)
    return total


def rcoeff(filling: Filling, target: Filling) -> int:
    """The rearrangement coefficient R[filling, target]."""
    check_comparable(filling, target)
    if not filling.is_cardinal:
        return 0
    if filling.shape.width == 2 and target.is_cardinal:
        if not prune_admissible(filling, schain_data(target)):
            return 0
    return _signed_rearrangements(filling, target)


def rcoeff_row(filling: Filling, basis: SSYTBasis, k: Optional[int] = None) -> Tuple[int, ...]:
    """
    (R[F, S_1], ..., R[F, S_k]) in a single search; k defaults to K.

    F must already be a filling of the basis shape and content. Rows are
    placed top down against the basis row trie, so tableaux sharing their
    upper rows share the work of placing them.
    """
    size = len(basis)
    k = size if k is None else min(k, size)
    out = [0] * k
    if not k or not filling.is_cardinal:
        return tuple(out)
    columns = filling.columns
    widths = basis.shape.parts
    last = len(widths) - 1
    used = [0] * len(columns)

    def descend(r: int, node: RowTrieNode, sign: int):
        for child in node.children.values():
            if child.low > k:
                break
            place(r, 0, child, list(child.need), sign)

    def place(r: int, c: int, node: RowTrieNode, need: List[int], sign: int):
        if c == widths[r]:
            if r == last:
                out[node.index - 1] += sign
            else:
                descend(r + 1, node, sign)
            return
        col = columns[c]
        mask = used[c]
        for p, v in enumerate(col):
            if (mask >> p) & 1 or not need[v]:
                continue
            flips = bin(mask >> (p + 1)).count("1") & 1
            need[v] -= 1
            used[c] = mask | (1 << p)
            place(r, c + 1, node, need, -sign if flips else sign)
            need[v] += 1
            used[c] = mask

    descend(0, basis.row_trie, 1)
    return tuple(out)


@dataclass(frozen=True)
class RearrangementMatrix:
    """M[i][j] = R[S_i, S_j] on an SSYT basis; lower unitriangular."""
    basis: SSYTBasis
    entries: Tuple[Tuple[int, ...], ...]

    def coeff(self, i: int, j: int) -> int:
        """R[S_i, S_j], 1-based."""
        return self.entries[i - 1][j - 1]

    @cached_property
    def _below(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        return tuple(
            tuple((j + 1, v) for j, v in enumerate(row[:i]) if v)
            for i, row in enumerate(self.entries)
        )

    def nonzero_below(self, i: int) -> Tuple[Tuple[int, int], ...]:
        """Pairs (j, R[S_i, S_j]) with j < i and a nonzero coefficient."""
        return self._below[i - 1]

    def dense(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def is_unitriangular(self) -> bool:
        return all(
            v == (1 if i == j else 0)
            for i, row in enumerate(self.entries)
            for j, v in enumerate(row)
            if j >= i
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "format": JSON_FORMAT_VERSION,
            "kostka": len(self.entries),
            "matrix": self.dense(),
        }


def rcoeff_matrix(basis: SSYTBasis, threads: Optional[int] = None) -> RearrangementMatrix:
    """R[S_i, S_j] for every pair; entries with j > i are zero by triangularity."""
    tableaux = basis.tableaux
    size = len(tableaux)
    basis.row_trie  # built once, before any worker reads it

    def row(i: int) -> Tuple[int, ...]:
        return rcoeff_row(tableaux[i], basis, i + 1) + (0,) * (size - i - 1)

    threads = threads or config.THREADS
    if threads > 1 and size > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = tuple(pool.map(row, range(size)))
    else:
        rows = tuple(row(i) for i in range(size))
    return RearrangementMatrix(basis, rows)


# ============================================================================
# Two-column structures: S-chains, S-opposites, S-pairs, S-left
# ============================================================================

@dataclass(frozen=True)
class SChainData:
    """Chain structure of a two-column cardinal filling S."""
    once: FrozenSet[int]
    chains: Dict[int, Tuple[Tuple[int, ...], ...]] = field(hash=False)
    opposites: Dict[int, int] = field(hash=False)
    pairs: FrozenSet[Tuple[int, int]]
    left: FrozenSet[int]


def _two_column(filling: Filling) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    if filling.shape.width != 2:
        raise ValidationError(f"Expected a two-column filling, got shape {filling.shape}")
    if not filling.is_cardinal:
        raise ValidationError("Expected a cardinal filling")
    return filling.columns[0], filling.columns[1]


def schain_data(target: Filling) -> SChainData:
    """S-chains of every once-occurring value of a two-column cardinal S."""
    first, second = _two_column(target)
    counts = Counter(first + second)
    once = frozenset(v for v, k in counts.items() if k == 1)
    row_in_first = {v: r for r, v in enumerate(first)}
    row_in_second = {v: r for r, v in enumerate(second)}

    chains: Dict[int, Tuple[Tuple[int, ...], ...]] = {}
    opposites: Dict[int, int] = {}

    # chains starting in column two always end on a once-occurring column-one value
    for b, start in enumerate(second):
        if start not in once:
            continue
        chain = []
        r = b
        while True:
            pair = (second[r], first[r])
            chain.append(pair)
            if first[r] in once:
                opposites[start] = first[r]
                break
            r = row_in_second[first[r]]
        chains[start] = tuple(chain)

    # chains starting in column one may run off the bottom of column two
    for a, start in enumerate(first):
        if start not in once:
            continue
        chain = []
        r = a
        while True:
            if r >= len(second):
                chain.append((first[r],))
                break
            chain.append((first[r], second[r]))
            if second[r] in once:
                opposites[start] = second[r]
                break
            r = row_in_first[second[r]]
        chains[start] = tuple(chain)

    pairs = frozenset((opposites[j], j) for j in second if j in once)
    left = frozenset(i for i in first if i in once and i not in opposites)
    return SChainData(once, chains, opposites, pairs, left)


def prune_admissible(filling: Filling, data: SChainData) -> bool:
    """False when an S-pair shares a column of F or an S-left value leaves column one."""
    first, second = _two_column(filling)
    first_set, second_set = set(first), set(second)
    for a, b in data.pairs:
        if {a, b} <= first_set or {a, b} <= second_set:
            return False
    return all(c in first_set for c in data.left)


def pair_exchange_criterion(filling: Filling, target: Filling) -> bool:
    """
    Whether two-column F is one pair exchange away from S in row content.

    F must differ from S in row content in exactly two rows m, n (both within
    column two) such that {j_m, i_n} is an S-pair, j_n and i_m are duplicated
    in S, j_m and i_n sit in different columns of F, j_n is in row n of F and
    i_m is in row m of F.
    """
    check_comparable(filling, target)
    a_col, b_col = _two_column(filling)
    i_col, j_col = _two_column(target)
    differing = [
        r for r, (x, y) in enumerate(zip(filling.rows, target.rows))
        if sorted(x) != sorted(y)
    ]
    if len(differing) != 2 or max(differing) >= len(j_col):
        return False
    data = schain_data(target)
    pairs = {frozenset(p) for p in data.pairs}
    f_rows = filling.rows
    for m, n in (tuple(differing), tuple(reversed(differing))):
        if frozenset((j_col[m], i_col[n])) not in pairs:
            continue
        if j_col[n] in data.once or i_col[m] in data.once:
            continue
        same_column = ({j_col[m], i_col[n]} <= set(a_col)
                       or {j_col[m], i_col[n]} <= set(b_col))
        if same_column:
            continue
        if j_col[n] in f_rows[n] and i_col[m] in f_rows[m]:
            return True
    return False


# ============================================================================
# Column splits and row completions
# ============================================================================

def split(filling: Filling, j: int) -> Tuple[Filling, Filling]:
    """(F^(j), F^(j-hat)): columns j, j+1 and everything else."""
    if not 1 <= j < filling.shape.width:
        raise ValidationError(f"Split column {j} outside 1..{filling.shape.width - 1}")
    cols = filling.columns
    pair = Filling(cols[j - 1:j + 1], filling.n)
    rest = Filling(cols[:j - 1] + cols[j + 1:], filling.n)
    return pair, rest


class RowCompletions(NamedTuple):
    """Row completions of (F^(j-hat))_gamma to S and their shared row content."""
    fillings: FrozenSet[Filling]
    row_content: Optional[Tuple[Tuple[int, ...], ...]]


def row_completions(rest: Filling, target: Filling, gamma: MultiPermutation) -> RowCompletions:
    """
    Every two-column N whose row content added to that of rest_gamma gives S.

    The shape of N is read off as the row lengths of S minus those of rest.
    """
    moved = apply(rest, gamma)
    moved_rows = moved.rows
    row_content = []
    for r, row in enumerate(target.rows):
        have = Counter(moved_rows[r]) if r < len(moved_rows) else Counter()
        need = Counter(row)
        need.subtract(have)
        if any(k < 0 for k in need.values()):
            return RowCompletions(frozenset(), None)
        row_content.append(tuple(sorted(need.elements())))
    row_content = tuple(row_content)

    options = [sorted(set(_orderings(vals))) for vals in row_content if vals]
    fillings = set()
    for rows in product(*options):
        try:
            fillings.add(Filling.from_rows(rows, target.n))
        except ValidationError:
            return RowCompletions(frozenset(), None)
    return RowCompletions(frozenset(fillings), row_content)


def _orderings(values: Tuple[int, ...]):
    if len(values) == 2:
        return [values, (values[1], values[0])]
    return [values]


def rcoeff_via_split(filling: Filling, target: Filling, j: int) -> int:
    """
    Right hand side of the column-split identity:

        sum over multipermutations gamma of the shape of F^(j-hat) of
        sign(gamma) * R[F^(j), N^gamma]

    with any representative row completion N^gamma.
    """
    check_comparable(filling, target)
    pair, rest = split(filling, j)
    total = 0
    for gamma in iter_multipermutations(rest.shape):
        completions = row_completions(rest, target, gamma)
        if not completions.fillings:
            continue
        representative = min(completions.fillings, key=lambda f: f.columns)
        if sorted(row_word(representative)) != sorted(row_word(pair)):
            continue
        total += gamma.sign * rcoeff(pair, representative)
    return total
