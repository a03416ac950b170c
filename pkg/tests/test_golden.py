from fractions import Fraction

import pytest

from borromean.golden import ONE, PHI, ZERO, GoldenMatrix, GoldenNumber, GoldenVector


def test_phi_squared():
    assert PHI * PHI == PHI + 1
    assert PHI * (PHI - 1) == ONE
    assert PHI.inverse() == PHI - 1
    assert PHI ** -2 == 2 - PHI


def test_conjugate_and_norm():
    x = GoldenNumber(3, -2)
    assert x * x.conjugate() == GoldenNumber(x.norm())
    assert PHI.conjugate() == 1 - PHI
    assert PHI.norm() == -1


@pytest.mark.parametrize(
    "x, s",
    [
        (ZERO, 0),
        (PHI, 1),
        (1 - PHI, -1),
        (PHI - GoldenNumber(Fraction(1618, 1000)), 1),
        (PHI - GoldenNumber(Fraction(1619, 1000)), -1),
        (GoldenNumber(-3, 2), 1),
        (GoldenNumber(-4, 2), -1),
    ],
)
def test_exact_sign(x, s):
    assert x.sign() == s
    if s:
        assert (float(x) > 0) == (s > 0)


def test_ordering_and_division():
    assert 1 < PHI < 2
    assert (PHI / PHI) == ONE
    assert 2 / PHI == 2 * PHI - 2
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_rejects_floats():
    with pytest.raises(TypeError):
        GoldenNumber(1.5)


def test_text_and_json():
    assert str(PHI) == "phi"
    assert str(GoldenNumber(1, -1)) == "1 - phi"
    assert str(GoldenNumber("1/2", 3)) == "1/2 + 3*phi"
    assert GoldenNumber("1/2", 3).to_json() == {"a": "1/2", "b": "3"}


def test_vectors():
    u = GoldenVector(1, 0, PHI)
    v = GoldenVector(PHI, 1, 0)
    assert u.cross(v).dot(u) == ZERO
    assert u.norm2() == PHI + 2
    assert u.same_direction(u.scale(PHI)) and not u.same_direction(-u)


def test_matrices():
    M = GoldenMatrix([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
    assert M.determinant() == ONE
    assert (M @ M.inverse()).is_identity()
    assert M.transpose() == M.inverse()
    assert M.trace() == ONE
    N = GoldenMatrix([[PHI, 1, 0], [0, PHI, 0], [0, 0, 1]])
    assert (N.inverse() @ N).is_identity()
    with pytest.raises(ValueError):
        GoldenMatrix([[1, 2], [3, 4]])
