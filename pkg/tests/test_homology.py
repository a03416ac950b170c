import random

import pytest

from borromean.homology import AbelianGroup, IntegerMatrix, abelianization_matrix, h1, smith_normal_form
from borromean.presentation import parse_presentation
from oracles import determinantal_divisors, naive_smith_diagonal


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def test_small_examples():
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == [0, 0]
    assert smith_normal_form([[5]]).diagonal == [5]
    assert smith_normal_form([[-3]]).diagonal == [3]
    assert smith_normal_form([]).diagonal == []


def test_transforms_diagonalize():
    rng = random.Random(3)
    for _ in range(50):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        M = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        S = smith_normal_form(M, transforms=True)
        D = matmul(matmul(S.left, M), S.right)
        for i in range(m):
            for j in range(n):
                assert D[i][j] == (S.diagonal[i] if i == j else 0)


def test_against_determinantal_divisors():
    rng = random.Random(11)
    for _ in range(100):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        M = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        assert smith_normal_form(M).diagonal == determinantal_divisors(M)
        assert naive_smith_diagonal(M) == determinantal_divisors(M)


def test_abelianization_matrix():
    P = parse_presentation("< X, Y | X^2*Y^-1, X*Y*X^-1*Y^-1 >")
    assert abelianization_matrix(P).tolist() == [[2, -1], [0, 0]]
    assert IntegerMatrix([[1, 2]]).shape == (1, 2)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("< F | >", "Z"),
        ("< P, Q, R | >", "Z^3"),
        ("< X | X^5 >", "Z/5"),
        ("< X, Y | X^2, Y^4 >", "Z/2 x Z/4"),
        ("< X, Y | X^2*Y^3 >", "Z"),
        ("< X, Y | X^6, Y^4 >", "Z/2 x Z/12"),
        ("< X | X >", "trivial"),
        ("< X, Y | X^2 >", "Z/2 x Z"),
    ],
)
def test_h1(text, expected):
    assert str(h1(parse_presentation(text))) == expected


def test_abelian_group_validation():
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 2))
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    assert AbelianGroup(0).is_trivial
    assert AbelianGroup(3).to_json() == {"free_rank": 3, "torsion": [], "text": "Z^3"}
