"""
Relations and the elimination oracle.

Generators of the relation space (Grassmann, Plücker, simple Plücker) plus an
exact membership test and SSYT reduction built on sympy's sparse rational
matrices. The oracle never consults the straightening formulas.

By default the oracle works modulo the Grassmann relations in closed form: a
filling is identified with sign * (its column-sorted tableau), or with zero
when a column repeats a value. Only the simple Plücker generators then need
elimination. ``exhaustive=True`` eliminates every generator over the full
filling space instead, which is only practical for tiny shapes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, Iterator, Optional, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .config import DEFAULT_ORACLE_CAP
from .enumeration import (
    SSYTBasis,
    check_shape_content,
    count_fillings,
    iter_column_strict,
    iter_fillings,
)
from .errors import ResourceCapError, StraightError, ValidationError
from .tableau import Content, Filling, LinearCombination, Partition, sort_columns
from .utils import log

GRASSMANN = "grassmann"
PLUECKER = "pluecker"
SIMPLE_PLUECKER = "simple-pluecker"


@dataclass(frozen=True)
class RelationGenerator:
    """One generator of the relation space, as a signed sum of fillings."""
    kind: str
    terms: LinearCombination = field(compare=False)
    column: Optional[int] = None
    exchanged: Optional[int] = None


# ============================================================================
# Generators
# ============================================================================

def pluecker_expand(filling: Filling, j: int, m: int) -> RelationGenerator:
    """
    E - sum of F over every m-subset of column j's positions.

    Each F puts the top m entries of column j+1 into the chosen positions of
    column j (top to bottom), and the displaced entries become the top m of
    column j+1 in the same order.
    """
    cols = filling.columns
    if not 1 <= j < len(cols):
        raise ValidationError(f"Column pair ({j}, {j + 1}) outside the diagram")
    left, right = cols[j - 1], cols[j]
    if not 1 <= m <= min(len(left), len(right)):
        raise ValidationError(f"Exchange count {m} outside 1..{min(len(left), len(right))}")

    top, rest = right[:m], right[m:]
    terms = [(filling, 1)]
    for positions in combinations(range(len(left)), m):
        new_left = list(left)
        for pos, value in zip(positions, top):
            new_left[pos] = value
        new_right = tuple(left[pos] for pos in positions) + rest
        swapped = cols[:j - 1] + (tuple(new_left), new_right) + cols[j + 1:]
        terms.append((Filling(swapped, filling.n), -1))

    kind = SIMPLE_PLUECKER if m == 1 else PLUECKER
    return RelationGenerator(kind, LinearCombination(terms), column=j, exchanged=m)


def grassmann_generators(shape: Partition, content: Content) -> Iterator[RelationGenerator]:
    """E + F for every filling E and every adjacent in-column transposition."""
    for filling in iter_fillings(shape, content):
        cols = filling.columns
        for c, col in enumerate(cols):
            for r in range(len(col) - 1):
                swapped = list(col)
                swapped[r], swapped[r + 1] = swapped[r + 1], swapped[r]
                other = Filling(cols[:c] + (tuple(swapped),) + cols[c + 1:], filling.n)
                yield RelationGenerator(
                    GRASSMANN, LinearCombination([(filling, 1), (other, 1)]), column=c + 1,
                )


def simple_pluecker_generators(shape: Partition, content: Content) -> Iterator[RelationGenerator]:
    for filling in iter_fillings(shape, content):
        for j in range(1, shape.width):
            yield pluecker_expand(filling, j, 1)


def general_pluecker_generators(
    shape: Partition, content: Content, m: Optional[int] = None,
) -> Iterator[RelationGenerator]:
    """Plücker generators at every column pair; every admissible m unless one is given."""
    column_lengths = shape.column_lengths
    for filling in iter_fillings(shape, content):
        for j in range(1, shape.width):
            limit = min(column_lengths[j - 1], column_lengths[j])
            counts = range(1, limit + 1) if m is None else ([m] if m <= limit else [])
            for count in counts:
                yield pluecker_expand(filling, j, count)


# ============================================================================
# Filling space vectors
# ============================================================================

@dataclass(frozen=True)
class FillingIndex:
    """F(shape, content) in row word order; the position is the rank."""
    shape: Partition
    content: Content
    fillings: Tuple[Filling, ...]
    _rank: Dict[Filling, int] = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_rank", {f: i for i, f in enumerate(self.fillings)})

    def __len__(self) -> int:
        return len(self.fillings)

    def rank(self, filling: Filling) -> int:
        try:
            return self._rank[filling.with_alphabet(self.content.n)]
        except KeyError:
            raise ValidationError(f"Filling not in F({self.shape}; {self.content}):\n{filling}") from None


@lru_cache(maxsize=16)
def filling_index(shape: Partition, content: Content, cap: int = DEFAULT_ORACLE_CAP) -> FillingIndex:
    """The whole filling space, refused beyond ``cap`` fillings."""
    total = count_fillings(shape, content)
    if total > cap:
        raise ResourceCapError(
            f"F({shape}; {content}) has {total} fillings, above the oracle cap of {cap}"
        )
    return FillingIndex(shape, content, tuple(iter_fillings(shape, content)))


class FillingSpaceVector:
    """Exact rational vector over F(shape, content), stored sparsely by rank."""

    def __init__(self, index: FillingIndex, coeffs: Optional[Dict[int, Fraction]] = None):
        self.index = index
        self.coeffs: Dict[int, Fraction] = {
            rank: Fraction(c) for rank, c in (coeffs or {}).items() if c
        }

    @classmethod
    def from_combination(cls, index: FillingIndex, combination: Iterable) -> "FillingSpaceVector":
        """From a LinearCombination (or (filling, coeff) pairs) over fillings."""
        items = combination.items() if hasattr(combination, "items") else combination
        coeffs: Dict[int, Fraction] = {}
        for filling, c in items:
            rank = index.rank(filling)
            coeffs[rank] = coeffs.get(rank, 0) + Fraction(c)
        return cls(index, coeffs)

    @classmethod
    def from_filling(cls, index: FillingIndex, filling: Filling) -> "FillingSpaceVector":
        return cls(index, {index.rank(filling): Fraction(1)})

    def _check_index(self, other: "FillingSpaceVector"):
        if self.index != other.index:
            raise ValidationError("Vectors live on different filling spaces")

    def __add__(self, other: "FillingSpaceVector") -> "FillingSpaceVector":
        self._check_index(other)
        coeffs = dict(self.coeffs)
        for rank, c in other.coeffs.items():
            coeffs[rank] = coeffs.get(rank, 0) + c
        return FillingSpaceVector(self.index, coeffs)

    def __sub__(self, other: "FillingSpaceVector") -> "FillingSpaceVector":
        return self + other.scale(-1)

    def scale(self, factor) -> "FillingSpaceVector":
        return FillingSpaceVector(self.index, {r: c * factor for r, c in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, FillingSpaceVector):
            return self.index == other.index and self.coeffs == other.coeffs
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def to_combination(self) -> LinearCombination:
        return LinearCombination(
            (self.index.fillings[rank], c) for rank, c in self.coeffs.items()
        )


# ============================================================================
# Factor space elimination
# ============================================================================

def _normalize(value: Fraction):
    return value.numerator if value.denominator == 1 else value


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class FactorSpace:
    """
    Reduced row echelon form of the relation generators of F(shape, content).

    Coordinates list the non-semistandard ones first so that every pivot
    lands outside the SSYT; reduction then leaves a residual supported on
    SSYT coordinates only.
    """

    def __init__(self, shape: Partition, content: Content, exhaustive: bool = False,
                 cap: int = DEFAULT_ORACLE_CAP):
        check_shape_content(shape, content)
        self.shape = shape
        self.content = content
        self.exhaustive = exhaustive
        self.index = filling_index(shape, content, cap)

        if exhaustive:
            pool = self.index.fillings
        else:
            pool = tuple(iter_column_strict(shape, content))
        ordered = [f for f in pool if not f.is_semistandard] + [f for f in pool if f.is_semistandard]
        self.coordinates: Tuple[Filling, ...] = tuple(ordered)
        self._column = {f: i for i, f in enumerate(self.coordinates)}

        rows = [row for row in (self._project(g.terms) for g in self._generators()) if row]
        log(f"Eliminating {len(rows)} relations over {len(self.coordinates)} coordinates "
            f"for shape {shape}, content {content}")
        self._pivot_rows = self._eliminate(rows)
        log(f"Relation rank {len(self._pivot_rows)}")

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    def _generators(self) -> Iterator[RelationGenerator]:
        if self.exhaustive:
            yield from grassmann_generators(self.shape, self.content)
            yield from simple_pluecker_generators(self.shape, self.content)
            return
        # modulo Grassmann only the entry moved to the top of column j+1 matters
        for tableau in self.coordinates:
            cols = tableau.columns
            for j in range(1, len(cols)):
                right = cols[j]
                for t in range(len(right)):
                    reordered = (right[t],) + right[:t] + right[t + 1:]
                    moved = Filling(cols[:j] + (reordered,) + cols[j + 1:], tableau.n)
                    yield pluecker_expand(moved, j, 1)

    def _project(self, terms: Iterable) -> Dict[int, Fraction]:
        """Coordinates of a combination of fillings; zero entries dropped."""
        row: Dict[int, Fraction] = {}
        for filling, c in terms.items() if hasattr(terms, "items") else terms:
            filling = filling.with_alphabet(self.content.n)
            if self.exhaustive:
                target, sign = filling, 1
            elif not filling.is_cardinal:
                continue
            else:
                target, sign = sort_columns(filling)
            col = self._column[target]
            row[col] = row.get(col, 0) + sign * Fraction(c)
        return {k: v for k, v in row.items() if v}

    def _eliminate(self, rows) -> Dict[int, Dict[int, Fraction]]:
        if not rows:
            return {}
        dod = {
            i: {j: QQ(v.numerator, v.denominator) for j, v in row.items()}
            for i, row in enumerate(rows)
        }
        matrix = DomainMatrix(dod, (len(rows), len(self.coordinates)), QQ)
        rref, pivots = matrix.rref()
        echelon = dict(rref.to_sparse().rep)
        pivot_rows = {}
        for i, p in enumerate(pivots):
            pivot_rows[p] = {j: _from_qq(v) for j, v in echelon.get(i, {}).items()}
        return pivot_rows

    def residual(self, vector: FillingSpaceVector) -> Dict[int, Fraction]:
        """Coordinates of the vector after eliminating every pivot."""
        if vector.index.shape != self.shape or vector.index.content != self.content:
            raise ValidationError("Vector is indexed by a different filling space")
        v = self._project(vector.to_combination())
        for p in sorted(self._pivot_rows):
            c = v.get(p)
            if not c:
                continue
            for j, x in self._pivot_rows[p].items():
                v[j] = v.get(j, 0) - c * x
            v = {k: x for k, x in v.items() if x}
        return v

    def contains(self, vector: FillingSpaceVector) -> bool:
        return not self.residual(vector)

    def reduce(self, vector: FillingSpaceVector) -> LinearCombination:
        """The SSYT combination congruent to the vector."""
        residual = self.residual(vector)
        terms = []
        for col, c in residual.items():
            tableau = self.coordinates[col]
            if not tableau.is_semistandard:
                raise StraightError(
                    f"Elimination left a non-semistandard coordinate:\n{tableau}"
                )
            terms.append((tableau, _normalize(c)))
        return LinearCombination(terms)


@lru_cache(maxsize=16)
def factor_space(shape: Partition, content: Content, exhaustive: bool = False,
                 cap: int = DEFAULT_ORACLE_CAP) -> FactorSpace:
    return FactorSpace(shape, content, exhaustive, cap)


def membership_verify(vector: FillingSpaceVector, shape: Partition, content: Content,
                      exhaustive: bool = False, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """True iff the vector lies in the relation space A(shape, content)."""
    if vector.index.shape != shape or vector.index.content != content:
        raise ValidationError(
            f"Vector indexed by F({vector.index.shape}; {vector.index.content}), "
            f"expected F({shape}; {content})"
        )
    return factor_space(shape, content, exhaustive, cap).contains(vector)


def reduce_to_ssyt(vector: FillingSpaceVector, basis: SSYTBasis,
                   exhaustive: bool = False, cap: int = DEFAULT_ORACLE_CAP) -> LinearCombination:
    """The unique SSYT combination w with vector - w in the relation space."""
    space = factor_space(basis.shape, basis.content, exhaustive, cap)
    return space.reduce(vector)
