from itertools import permutations

import pytest

from conftest import DBASIS_CONTENT, DBASIS_SHAPE, DBASIS_TABLEAUX
from straight.enumeration import (
    count_fillings,
    enumerate_ssyt,
    iter_column_strict,
    iter_fillings,
    kostka,
)
from straight.errors import ValidationError
from straight.tableau import Content, Filling, Partition, row_word


def brute_force_ssyt(shape, content):
    found = set()
    for word in set(permutations(content.multiset())):
        rows, start = [], 0
        for width in shape.parts:
            rows.append(word[start:start + width])
            start += width
        f = Filling.from_rows(rows, content.n)
        if f.is_semistandard:
            found.add(f)
    return found


def test_worked_basis_in_order(dbasis_basis):
    assert list(dbasis_basis) == [t.with_alphabet(4) for t in DBASIS_TABLEAUX]
    assert dbasis_basis.kostka == 6


def test_basis_indexing(dbasis_basis):
    s3 = DBASIS_TABLEAUX[2].with_alphabet(4)
    assert dbasis_basis.tableau(3) == s3
    assert dbasis_basis.index(s3) == 3
    assert s3 in dbasis_basis
    with pytest.raises(ValidationError):
        dbasis_basis.tableau(7)


def test_basis_json(dbasis_basis):
    doc = dbasis_basis.to_dict()
    assert doc["format"] == 1
    assert doc["shape"] == [4, 3, 2]
    assert doc["kostka"] == 6
    assert doc["tableaux"][0] == [[1, 1, 3, 4], [2, 2, 4], [3, 3]]


@pytest.mark.parametrize("shape,content,expected", [
    ((1, 1), (2, 0), 0),
    ((2, 1), (1, 1, 1), 2),
    ((2, 2), (1, 1, 1, 1), 2),
    ((3, 2), (1, 1, 1, 1, 1), 5),
    ((2, 1), (2, 1), 1),
    ((3,), (1, 1, 1), 1),
    ((2,), (2,), 1),
    ((4, 3, 2), (2, 2, 3, 2), 6),
    ((3, 3, 2), (1, 2, 1, 2, 2), 6),
])
def test_kostka(shape, content, expected):
    assert kostka(Partition(shape), Content(content)) == expected


@pytest.mark.parametrize("shape,content", [
    ((2, 1), (1, 1, 1)),
    ((2, 2), (1, 2, 1)),
    ((3, 2), (2, 2, 1)),
    ((2, 2, 1), (1, 2, 1, 1)),
    ((3, 1, 1), (2, 1, 1, 1)),
])
def test_matches_brute_force(shape, content):
    shape, content = Partition(shape), Content(content)
    basis = enumerate_ssyt(shape, content)
    assert set(basis) == brute_force_ssyt(shape, content)
    words = [row_word(t) for t in basis]
    assert words == sorted(words, reverse=True)


def test_kostka_symmetric_in_content():
    shape = Partition((3, 2, 1))
    counts = {kostka(shape, Content(c)) for c in set(permutations((2, 2, 1, 1)))}
    assert len(counts) == 1


def test_size_mismatch():
    with pytest.raises(ValidationError):
        enumerate_ssyt(Partition((2, 1)), Content((1, 1)))


def test_count_fillings():
    assert count_fillings(Partition((4, 3, 2)), Content((2, 2, 3, 2))) == 7560
    assert count_fillings(Partition((2, 1)), Content((1, 1, 1))) == 6


def test_fillings_in_row_word_order():
    shape, content = Partition((2, 1)), Content((2, 1))
    fillings = list(iter_fillings(shape, content))
    assert len(fillings) == count_fillings(shape, content) == 3
    words = [row_word(f) for f in fillings]
    assert words == sorted(words)
    assert len(set(fillings)) == 3


def test_column_strict():
    shape, content = Partition((2, 2)), Content((1, 1, 1, 1))
    tableaux = list(iter_column_strict(shape, content))
    # choose the first column: C(4, 2) = 6
    assert len(tableaux) == 6
    assert all(t.is_tableau for t in tableaux)
    assert len(set(tableaux)) == 6

    worked = list(iter_column_strict(DBASIS_SHAPE, DBASIS_CONTENT))
    assert set(enumerate_ssyt(DBASIS_SHAPE, DBASIS_CONTENT)) <= set(worked)
