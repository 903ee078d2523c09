"""
Shapes, fillings and multipermutations.

Fillings are stored column-major: ``columns[c][r]`` is the value in row
``r + 1`` of column ``c + 1``. Every type here is an immutable value.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .errors import ValidationError

Column = Tuple[int, ...]
Row = Tuple[int, ...]


# ============================================================================
# Partitions and contents
# ============================================================================

@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise ValidationError(f"Partition parts must be positive integers: {parts}")
        if any(b > a for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"Partition must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        """Number of columns, lambda_1 (0 for the empty partition)."""
        return self.parts[0] if self.parts else 0

    @property
    def column_lengths(self) -> Tuple[int, ...]:
        return conjugate(self).parts

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def conjugate(shape: Partition) -> Partition:
    """Column lengths of the Young diagram: zeta_c = #{i : lambda_i >= c}."""
    return Partition(tuple(
        sum(1 for part in shape.parts if part >= c)
        for c in range(1, shape.width + 1)
    ))


@dataclass(frozen=True)
class Content:
    """Multiplicities z_1..z_n of the values 1..n; n is explicit."""
    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        object.__setattr__(self, "counts", counts)
        if not counts:
            raise ValidationError("Content needs an alphabet of at least one value")
        if any(not isinstance(z, int) or z < 0 for z in counts):
            raise ValidationError(f"Content entries must be nonnegative integers: {counts}")

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def size(self) -> int:
        return sum(self.counts)

    def multiset(self) -> Tuple[int, ...]:
        """Values in increasing order, each repeated by its multiplicity."""
        return tuple(v for v, z in enumerate(self.counts, 1) for _ in range(z))

    def __str__(self) -> str:
        return ",".join(str(z) for z in self.counts)


# ============================================================================
# Fillings
# ============================================================================

@dataclass(frozen=True)
class Filling:
    """
    A filling of a Young diagram with values in [n].

    ``n`` defaults to the largest value present when not given. It is left
    out of equality and hashing; the alphabet of a space is its Content.
    """
    columns: Tuple[Column, ...]
    n: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        columns = tuple(tuple(col) for col in self.columns)
        object.__setattr__(self, "columns", columns)
        if any(len(col) == 0 for col in columns):
            raise ValidationError("Filling columns must be nonempty")
        lengths = [len(col) for col in columns]
        if any(b > a for a, b in zip(lengths, lengths[1:])):
            raise ValidationError(f"Column lengths must be weakly decreasing: {lengths}")
        values = [v for col in columns for v in col]
        n = self.n if self.n is not None else max(values, default=1)
        object.__setattr__(self, "n", n)
        if any(not isinstance(v, int) or v < 1 or v > n for v in values):
            raise ValidationError(f"Filling values must lie in [1, {n}]: {values}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: Optional[int] = None) -> "Filling":
        rows = [tuple(row) for row in rows if len(row) > 0]
        lengths = [len(row) for row in rows]
        if any(b > a for a, b in zip(lengths, lengths[1:])):
            raise ValidationError(f"Row lengths must be weakly decreasing: {lengths}")
        width = lengths[0] if lengths else 0
        columns = tuple(
            tuple(row[c] for row in rows if len(row) > c)
            for c in range(width)
        )
        return cls(columns, n)

    @property
    def shape(self) -> Partition:
        return conjugate(Partition(tuple(len(col) for col in self.columns)))

    @property
    def rows(self) -> Tuple[Row, ...]:
        height = len(self.columns[0]) if self.columns else 0
        return tuple(
            tuple(col[r] for col in self.columns if len(col) > r)
            for r in range(height)
        )

    def __getitem__(self, cell: Tuple[int, int]) -> int:
        """Value at the 1-based cell (r, c)."""
        r, c = cell
        return self.columns[c - 1][r - 1]

    @property
    def is_cardinal(self) -> bool:
        return all(len(set(col)) == len(col) for col in self.columns)

    @property
    def is_tableau(self) -> bool:
        return all(all(a < b for a, b in zip(col, col[1:])) for col in self.columns)

    @property
    def is_semistandard(self) -> bool:
        return self.is_tableau and all(
            all(a <= b for a, b in zip(row, row[1:])) for row in self.rows
        )

    @property
    def is_numbering(self) -> bool:
        return all(z == 1 for z in content_of(self).counts)

    @property
    def is_standard(self) -> bool:
        return self.is_numbering and self.is_semistandard

    def with_alphabet(self, n: int) -> "Filling":
        return Filling(self.columns, n)

    def __str__(self) -> str:
        return format_filling(self).rstrip("\n")


def content_of(filling: Filling) -> Content:
    """Number of cells holding each value 1..n."""
    counts = Counter(v for col in filling.columns for v in col)
    return Content(tuple(counts.get(v, 0) for v in range(1, filling.n + 1)))


def row_word(filling: Filling) -> Tuple[int, ...]:
    """Rows read left to right, top row first."""
    return tuple(v for row in filling.rows for v in row)


def check_comparable(e: Filling, f: Filling):
    """Raise unless e and f share shape and content."""
    if e.shape != f.shape:
        raise ValidationError(f"Shape mismatch: {e.shape} vs {f.shape}")
    if sorted(row_word(e)) != sorted(row_word(f)):
        raise ValidationError("Content mismatch between fillings")


def row_word_cmp(e: Filling, f: Filling) -> int:
    """-1 if e precedes f in row word order, 0 if equal, 1 otherwise."""
    check_comparable(e, f)
    we, wf = row_word(e), row_word(f)
    return (we > wf) - (we < wf)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation in one-line notation over 1..k, by cycle count."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sort_columns(filling: Filling) -> Tuple[Filling, int]:
    """
    Sort each column strictly increasing.

    Returns the tableau T = F_sigma together with sign(sigma).
    """
    if not filling.is_cardinal:
        raise ValidationError("sort_columns needs a cardinal filling")
    sign = 1
    columns = []
    for col in filling.columns:
        order = sorted(range(len(col)), key=col.__getitem__)
        sign *= permutation_sign([i + 1 for i in order])
        columns.append(tuple(col[i] for i in order))
    return Filling(tuple(columns), filling.n), sign


def standardize(filling: Filling) -> Filling:
    """Sort every column increasing, then every row weakly increasing."""
    sorted_cols = Filling(tuple(tuple(sorted(col)) for col in filling.columns), filling.n)
    return Filling.from_rows([sorted(row) for row in sorted_cols.rows], filling.n)


def same_row_content(e: Filling, f: Filling) -> bool:
    """True iff every row of e holds the same multiset as that row of f."""
    if e.shape != f.shape:
        raise ValidationError(f"Shape mismatch: {e.shape} vs {f.shape}")
    return all(sorted(a) == sorted(b) for a, b in zip(e.rows, f.rows))


# ============================================================================
# Multipermutations
# ============================================================================

@dataclass(frozen=True)
class MultiPermutation:
    """One permutation per column, each in one-line notation over 1..zeta_c."""
    perms: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        perms = tuple(tuple(p) for p in self.perms)
        object.__setattr__(self, "perms", perms)
        for p in perms:
            if sorted(p) != list(range(1, len(p) + 1)):
                raise ValidationError(f"Not a permutation: {p}")

    @classmethod
    def identity(cls, shape: Partition) -> "MultiPermutation":
        return cls(tuple(tuple(range(1, k + 1)) for k in shape.column_lengths))

    @property
    def column_lengths(self) -> Tuple[int, ...]:
        return tuple(len(p) for p in self.perms)

    @property
    def sign(self) -> int:
        sign = 1
        for p in self.perms:
            sign *= permutation_sign(p)
        return sign

    def compose(self, other: "MultiPermutation") -> "MultiPermutation":
        """Componentwise (self o other)(r) = self(other(r))."""
        if self.column_lengths != other.column_lengths:
            raise ValidationError("Multipermutations act on different shapes")
        return MultiPermutation(tuple(
            tuple(p[q[r] - 1] for r in range(len(q)))
            for p, q in zip(self.perms, other.perms)
        ))

    def inverse(self) -> "MultiPermutation":
        inv = []
        for p in self.perms:
            q = [0] * len(p)
            for r, image in enumerate(p, 1):
                q[image - 1] = r
            inv.append(tuple(q))
        return MultiPermutation(tuple(inv))


def apply(filling: Filling, pi: MultiPermutation) -> Filling:
    """F_pi(r, c) = F(pi_c(r), c)."""
    lengths = tuple(len(col) for col in filling.columns)
    if lengths != pi.column_lengths:
        raise ValidationError(f"Multipermutation columns {pi.column_lengths} do not fit {lengths}")
    return Filling(tuple(
        tuple(col[p[r] - 1] for r in range(len(col)))
        for col, p in zip(filling.columns, pi.perms)
    ), filling.n)


def iter_multipermutations(shape: Partition) -> Iterator[MultiPermutation]:
    """Every multipermutation of the shape, columns varying lexicographically."""
    per_column = [list(permutations(range(1, k + 1))) for k in shape.column_lengths]
    for choice in product(*per_column):
        yield MultiPermutation(choice)


# ============================================================================
# Linear combinations
# ============================================================================

class LinearCombination(Mapping):
    """Finite formal sum with exact coefficients; zero terms are dropped."""

    def __init__(self, terms: Optional[Iterable[Tuple[object, object]]] = None):
        self._terms: Dict[object, object] = {}
        for key, coeff in terms or ():
            self._add(key, coeff)

    def _add(self, key, coeff):
        total = self._terms.get(key, 0) + coeff
        if total:
            self._terms[key] = total
        else:
            self._terms.pop(key, None)

    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, key):
        return self._terms.get(key, 0)

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        return LinearCombination(list(self.items()) + list(other.items()))

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        return self + other.scale(-1)

    def scale(self, factor) -> "LinearCombination":
        return LinearCombination((k, c * factor) for k, c in self.items())

    def __eq__(self, other):
        if isinstance(other, LinearCombination):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"LinearCombination({self._terms!r})"


# ============================================================================
# Text format
# ============================================================================

def parse_filling(text: str, n: Optional[int] = None) -> Filling:
    """
    Parse one row per line, cells as space separated integers.

    Blank lines are ignored; row lengths must be weakly decreasing.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append([int(cell) for cell in line.split()])
        except ValueError as exc:
            raise ValidationError(f"Line {lineno}: not a row of integers: {line!r}") from exc
    if not rows:
        raise ValidationError("Empty filling")
    return Filling.from_rows(rows, n)


def format_filling(filling: Filling) -> str:
    """Inverse of parse_filling, with a trailing newline."""
    return "".join(" ".join(str(v) for v in row) + "\n" for row in filling.rows)
