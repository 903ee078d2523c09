"""Shared fixtures: the worked examples plus hypothesis strategies for small fillings."""

import matplotlib

matplotlib.use("Agg")

import pytest
from hypothesis import strategies as st
from sympy.utilities.iterables import multiset_permutations, partitions

from straight.enumeration import enumerate_ssyt, kostka
from straight.rearrangement import rcoeff_matrix
from straight.straightening import build_dbasis
from straight.tableau import Content, Filling, MultiPermutation, Partition


def rows(*rows_):
    """Filling from row tuples, alphabet inferred."""
    return Filling.from_rows(rows_)


# ----------------------------------------------------------------------------
# Worked examples
# ----------------------------------------------------------------------------

DBASIS_SHAPE = Partition((4, 3, 2))
DBASIS_CONTENT = Content((2, 2, 3, 2))
DBASIS_TABLEAUX = [
    rows((1, 1, 3, 4), (2, 2, 4), (3, 3)),
    rows((1, 1, 3, 3), (2, 2, 4), (3, 4)),
    rows((1, 1, 2, 4), (2, 3, 3), (3, 4)),
    rows((1, 1, 2, 3), (2, 3, 4), (3, 4)),
    rows((1, 1, 2, 3), (2, 3, 3), (4, 4)),
    rows((1, 1, 2, 2), (3, 3, 3), (4, 4)),
]
DBASIS_F = rows((2, 1, 1, 3), (3, 3, 2), (4, 4))

GRAPH_SHAPE = Partition((3, 3, 2))
GRAPH_CONTENT = Content((1, 2, 1, 2, 2))
GRAPH_TABLEAUX = [
    rows((1, 2, 4), (2, 4, 5), (3, 5)),
    rows((1, 2, 4), (2, 3, 5), (4, 5)),
    rows((1, 2, 3), (2, 4, 5), (4, 5)),
    rows((1, 2, 3), (2, 4, 4), (5, 5)),
    rows((1, 2, 2), (3, 4, 5), (4, 5)),
    rows((1, 2, 2), (3, 4, 4), (5, 5)),
]
GRAPH_EDGES = {(6, 5), (6, 2), (6, 1), (5, 2), (5, 1), (4, 3), (4, 2)}
GRAPH_F = rows((2, 2, 1), (4, 3, 5), (5, 4))

# two fillings of shape (4,2,2) with content (2,2,2,2)
PAIR_F = rows((2, 1, 4, 1), (3, 2), (4, 3))
PAIR_S = rows((1, 1, 4, 4), (2, 2), (3, 3))
PAIR_PI = MultiPermutation(((3, 1, 2), (1, 2, 3), (1,), (1,)))


@pytest.fixture(scope="session")
def dbasis_basis():
    return enumerate_ssyt(DBASIS_SHAPE, DBASIS_CONTENT)


@pytest.fixture(scope="session")
def dbasis_matrix(dbasis_basis):
    return rcoeff_matrix(dbasis_basis)


@pytest.fixture(scope="session")
def dbasis_example(dbasis_basis, dbasis_matrix):
    return build_dbasis(dbasis_basis, dbasis_matrix)


@pytest.fixture(scope="session")
def graph_basis():
    return enumerate_ssyt(GRAPH_SHAPE, GRAPH_CONTENT)


@pytest.fixture(scope="session")
def graph_matrix(graph_basis):
    return rcoeff_matrix(graph_basis)


# ----------------------------------------------------------------------------
# Strategies
# ----------------------------------------------------------------------------

SMALL_SHAPES = [
    (1,), (2,), (1, 1), (2, 1), (1, 1, 1), (3, 1), (2, 2), (2, 1, 1),
    (3, 2), (2, 2, 1), (3, 1, 1), (3, 2, 1), (2, 2, 2), (4, 2), (3, 3),
]

TWO_COLUMN_SHAPES = [(2, 1), (2, 2), (2, 1, 1), (2, 2, 1), (2, 2, 2), (2, 2, 1, 1), (2, 1, 1, 1)]


def _split_word(shape, word):
    out, start = [], 0
    for width in shape:
        out.append(word[start:start + width])
        start += width
    return out


@st.composite
def filling_pairs(draw, shapes=SMALL_SHAPES, max_value=4):
    """(F, S) of one shape and content; S is an arbitrary rearrangement of F's values."""
    shape = draw(st.sampled_from(shapes))
    size = sum(shape)
    word = draw(st.lists(st.integers(1, max_value), min_size=size, max_size=size))
    other = draw(st.permutations(word))
    n = max(word)
    return (
        Filling.from_rows(_split_word(shape, word), n),
        Filling.from_rows(_split_word(shape, list(other)), n),
    )


@st.composite
def multipermutations(draw, shape):
    return MultiPermutation(tuple(
        tuple(draw(st.permutations(range(1, k + 1)))) for k in shape.column_lengths
    ))


# ----------------------------------------------------------------------------
# Exhaustive spaces
# ----------------------------------------------------------------------------

def partitions_of(size):
    """Every partition of ``size`` as a weakly decreasing tuple."""
    return [
        tuple(sorted((part for part, mult in p.items() for _ in range(mult)), reverse=True))
        for p in partitions(size)
    ]


def contents_of_size(size, ordered=True):
    """
    Contents without zero entries summing to ``size``.

    With ``ordered=False`` only weakly decreasing ones are kept, one per
    relabelling of the values.
    """
    out = []
    for parts in partitions_of(size):
        if ordered:
            out.extend(tuple(c) for c in multiset_permutations(list(parts)))
        else:
            out.append(parts)
    return out


def spaces_of_size(size, ordered=True, min_width=1):
    """(Partition, Content) pairs of one size with at least one SSYT."""
    return [
        (Partition(shape), Content(content))
        for shape in partitions_of(size) if shape[0] >= min_width
        for content in contents_of_size(size, ordered)
        if kostka(Partition(shape), Content(content))
    ]
