"""
Straightening fillings into the SSYT basis.

The closed method expands F = sum_j R[F, S_j] * D(S_j), where the D-basis is
built once per (shape, content) from the rearrangement matrix. The classical
method rewrites column-strict tableaux with Plücker relations until only
semistandard ones remain. Both return a Straightening over the same basis.
"""

import heapq
from dataclasses import dataclass
from functools import cached_property
from itertools import count
from typing import Any, Dict, List, Optional, Tuple

from . import config
from .config import DEFAULT_REWRITE_CAP, JSON_FORMAT_VERSION
from .enumeration import SSYTBasis
from .errors import ResourceCapError, ValidationError
from .rearrangement import RearrangementMatrix, rcoeff_row
from .relations import FillingSpaceVector, filling_index, pluecker_expand, reduce_to_ssyt
from .tableau import Filling, LinearCombination, content_of, sort_columns, standardize
from .utils import format_coeff

CLOSED = "closed"
CLASSICAL = "classical"
CHAIN = "chain"
PATHS = "paths"
ORACLE = "oracle"
METHODS = (CLOSED, CLASSICAL, CHAIN, PATHS, ORACLE)


@dataclass(frozen=True)
class DBasis:
    """Row j of ``rows`` is D(S_j) expanded over S_1..S_K."""
    basis: SSYTBasis
    matrix: RearrangementMatrix
    rows: Tuple[Tuple[int, ...], ...]
    depths: Tuple[int, ...]

    def expansion(self, j: int) -> LinearCombination:
        """D(S_j) as a combination of basis indices, 1-based."""
        return LinearCombination((i, c) for i, c in enumerate(self.rows[j - 1], 1))

    def text(self, j: int) -> str:
        return format_terms(self.expansion(j))

    @cached_property
    def sparse_rows(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """Nonzero (0-based column, value) pairs of every row."""
        return tuple(tuple((i, v) for i, v in enumerate(row) if v) for row in self.rows)


@dataclass(frozen=True)
class Straightening:
    """F = sum_i a_i S_i."""
    input: Filling
    basis: SSYTBasis
    coefficients: Tuple[int, ...]
    method: str
    steps: int = 0

    def terms(self) -> List[Tuple[int, int, Filling]]:
        """Nonzero (index, coefficient, tableau) in increasing index order."""
        return [
            (i, c, self.basis.tableau(i))
            for i, c in enumerate(self.coefficients, 1) if c
        ]

    def combination(self) -> LinearCombination:
        return LinearCombination((t, c) for _, c, t in self.terms())

    def coeff(self, i: int) -> int:
        return self.coefficients[i - 1]

    def text(self) -> str:
        return format_terms(LinearCombination((i, c) for i, c, _ in self.terms()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "format": JSON_FORMAT_VERSION,
            "input": [list(row) for row in self.input.rows],
            "method": self.method,
            "terms": [
                {"coeff": c, "index": i, "tableau": [list(row) for row in t.rows]}
                for i, c, t in self.terms()
            ],
        }


def format_terms(combination: LinearCombination) -> str:
    """``+1·S5 −1·S4``, highest index first; ``0`` when empty."""
    if not combination:
        return "0"
    return " ".join(f"{format_coeff(c)}·S{i}" for i, c in sorted(combination.items(), reverse=True))


# ============================================================================
# D-basis
# ============================================================================

def depths(matrix: RearrangementMatrix) -> Tuple[int, ...]:
    """Depth of every D-basis element, in index order."""
    found: List[int] = []
    for i in range(1, len(matrix.entries) + 1):
        below = matrix.nonzero_below(i)
        found.append(1 + max(found[k - 1] for k, _ in below) if below else 0)
    return tuple(found)


def depth(j: int, matrix: RearrangementMatrix) -> int:
    """Length of the longest path leaving S_j in the coefficient graph."""
    if not 1 <= j <= len(matrix.entries):
        raise ValidationError(f"Index {j} outside 1..{len(matrix.entries)}")
    return depths(matrix)[j - 1]


def build_dbasis(basis: SSYTBasis, matrix: RearrangementMatrix) -> DBasis:
    """D(S_i) = S_i - sum_{j<i} R[S_i, S_j] D(S_j)."""
    if len(matrix.entries) != len(basis):
        raise ValidationError(
            f"Matrix of size {len(matrix.entries)} does not fit a basis of {len(basis)}"
        )
    size = len(basis)
    rows: List[List[int]] = []
    for i in range(1, size + 1):
        row = [0] * size
        row[i - 1] = 1
        for j, r in matrix.nonzero_below(i):
            for x, v in enumerate(rows[j - 1]):
                if v:
                    row[x] -= r * v
        rows.append(row)
    return DBasis(basis, matrix, tuple(tuple(row) for row in rows), depths(matrix))


def _chain_sums(i: int, matrix: RearrangementMatrix) -> Dict[int, int]:
    """
    x -> signed sum over chains i = b_0 < ... < b_d = x of
    (-1)^d R[S_{b_d}, S_{b_{d-1}}] ... R[S_{b_1}, S_{b_0}].
    """
    sums = {i: 1}
    for x in range(i + 1, len(matrix.entries) + 1):
        total = 0
        for y, r in matrix.nonzero_below(x):
            if y in sums:
                total -= r * sums[y]
        if total:
            sums[x] = total
    return sums


def dbasis_coeff_closed(i: int, j: int, matrix: RearrangementMatrix) -> int:
    """Coefficient of S_i in D(S_j), from the chain formula."""
    size = len(matrix.entries)
    if not (1 <= i <= size and 1 <= j <= size):
        raise ValidationError(f"Indices ({i}, {j}) outside 1..{size}")
    return _chain_sums(i, matrix).get(j, 0)


# ============================================================================
# Closed straightening
# ============================================================================

def check_member(filling: Filling, basis: SSYTBasis) -> Filling:
    """F over the basis alphabet; shape and content must match the basis."""
    if filling.shape != basis.shape:
        raise ValidationError(f"Shape mismatch: {filling.shape} vs {basis.shape}")
    if max((v for col in filling.columns for v in col), default=0) > basis.content.n:
        raise ValidationError(f"Filling uses values above {basis.content.n}")
    filling = filling.with_alphabet(basis.content.n)
    if content_of(filling) != basis.content:
        raise ValidationError(f"Content {content_of(filling)} does not match {basis.content}")
    return filling


def standard_index(filling: Filling, basis: SSYTBasis) -> int:
    """k with S_k = std(F), for a cardinal F."""
    return basis.index(standardize(filling))


def _zero(filling: Filling, basis: SSYTBasis, method: str) -> Straightening:
    return Straightening(filling, basis, (0,) * len(basis), method)


def straighten_closed(filling: Filling, basis: SSYTBasis, dbasis: DBasis) -> Straightening:
    """
    F = sum_{j <= k} R[F, S_j] D(S_j), with S_k = std(F).

    All the R[F, S_j] come out of one search against the basis row trie, and
    only the nonzero entries of each D-basis row are visited.
    """
    filling = check_member(filling, basis)
    if not filling.is_cardinal:
        return _zero(filling, basis, CLOSED)
    weights = rcoeff_row(filling, basis, standard_index(filling, basis))

    coefficients = [0] * len(basis)
    for row, w in zip(dbasis.sparse_rows, weights):
        if not w:
            continue
        for i, v in row:
            coefficients[i] += w * v
    return Straightening(filling, basis, tuple(coefficients), CLOSED)


def _chain_coefficient(weights: Tuple[int, ...], i: int, matrix: RearrangementMatrix) -> int:
    if i > len(weights):
        return 0
    return sum(
        weights[x - 1] * c
        for x, c in _chain_sums(i, matrix).items() if x <= len(weights)
    )


def coefficient_chain(filling: Filling, i: int, basis: SSYTBasis,
                      matrix: RearrangementMatrix) -> int:
    """a_i as a signed sum over increasing index chains ending at most at std(F)."""
    filling = check_member(filling, basis)
    if not filling.is_cardinal:
        raise ValidationError("coefficient_chain needs a cardinal filling")
    weights = rcoeff_row(filling, basis, standard_index(filling, basis))
    return _chain_coefficient(weights, i, matrix)


def straighten_chain(filling: Filling, basis: SSYTBasis,
                     matrix: RearrangementMatrix) -> Straightening:
    """Every a_i from the chain sums, sharing one row of R[F, S_j]."""
    filling = check_member(filling, basis)
    if not filling.is_cardinal:
        return _zero(filling, basis, CHAIN)
    weights = rcoeff_row(filling, basis, standard_index(filling, basis))
    coefficients = tuple(
        _chain_coefficient(weights, i, matrix) for i in range(1, len(basis) + 1)
    )
    return Straightening(filling, basis, coefficients, CHAIN)


# ============================================================================
# Classical straightening
# ============================================================================

Expansion = Tuple[Tuple[Filling, int], ...]


def _column_key(tableau: Filling) -> Tuple[Tuple[int, ...], ...]:
    """Columns right to left, each read largest first; every rewrite increases it."""
    return tuple(tuple(sorted(col, reverse=True)) for col in reversed(tableau.columns))


def _violation(tableau: Filling) -> Optional[Tuple[int, int]]:
    """(j, r) of the leftmost column pair and topmost row with T(r, j) > T(r, j+1)."""
    cols = tableau.columns
    for j in range(len(cols) - 1):
        left, right = cols[j], cols[j + 1]
        for r in range(len(right)):
            if left[r] > right[r]:
                return j + 1, r + 1
    return None


def _expand(tableau: Filling) -> Expansion:
    """T as a signed sum of column-strict tableaux via one Plücker relation."""
    j, r = _violation(tableau)
    generator = pluecker_expand(tableau, j, r)
    out: Dict[Filling, int] = {}
    for term, c in generator.terms.items():
        if term == tableau or not term.is_cardinal:
            continue
        sorted_term, sign = sort_columns(term)
        out[sorted_term] = out.get(sorted_term, 0) - c * sign
    return tuple((t, c) for t, c in out.items() if c)


def straighten_classical(filling: Filling, basis: SSYTBasis,
                         rewrite_cap: int = DEFAULT_REWRITE_CAP,
                         memo: Optional[Dict[Filling, Expansion]] = None) -> Straightening:
    """
    Rewrite with Plücker relations until every tableau is semistandard.

    The smallest violating tableau (columns compared right to left) is
    expanded first, at its leftmost column pair and topmost violating row.
    """
    filling = check_member(filling, basis)
    if not filling.is_cardinal:
        return _zero(filling, basis, CLASSICAL)
    memo = {} if memo is None else memo

    start, sign = sort_columns(filling)
    combo: Dict[Filling, int] = {start: sign}
    heap: List[Tuple[Tuple, int, Filling]] = []
    queued = set()
    tiebreak = count()

    def push(tableau: Filling):
        if tableau not in queued and not tableau.is_semistandard:
            queued.add(tableau)
            heapq.heappush(heap, (_column_key(tableau), next(tiebreak), tableau))

    push(start)
    steps = 0
    while heap:
        _, _, tableau = heapq.heappop(heap)
        c = combo.pop(tableau, 0)
        if not c:
            continue
        steps += 1
        if steps > rewrite_cap:
            raise ResourceCapError(f"Classical straightening exceeded {rewrite_cap} rewrites")
        if tableau not in memo:
            memo[tableau] = _expand(tableau)
        for term, s in memo[tableau]:
            total = combo.get(term, 0) + c * s
            if total:
                combo[term] = total
            else:
                combo.pop(term, None)
            push(term)

    coefficients = [0] * len(basis)
    for tableau, c in combo.items():
        coefficients[basis.index(tableau) - 1] = c
    return Straightening(filling, basis, tuple(coefficients), CLASSICAL, steps)


# ============================================================================
# Oracle and dispatch
# ============================================================================

def straighten_oracle(filling: Filling, basis: SSYTBasis, cap: int = config.DEFAULT_ORACLE_CAP,
                      exhaustive: bool = False) -> Straightening:
    """Straightening read off exact elimination of the relation space."""
    filling = check_member(filling, basis)
    index = filling_index(basis.shape, basis.content, cap)
    reduced = reduce_to_ssyt(FillingSpaceVector.from_filling(index, filling), basis,
                             exhaustive=exhaustive, cap=cap)
    coefficients = [0] * len(basis)
    for tableau, c in reduced.items():
        coefficients[basis.index(tableau) - 1] = c
    return Straightening(filling, basis, tuple(coefficients), ORACLE)
