import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhbound.bounds import CodeParams
from qhbound.families import odd_family, rect_family, square_family


@pytest.mark.parametrize(
    "a, expected", [(3, (9, 1, 4, 3)), (1, (1, 1, 0, 1)), (5, (25, 1, 16, 5))]
)
def test_square_family(a, expected):
    assert square_family(a) == CodeParams(*expected)


def test_rect_family_examples():
    assert rect_family(3, 4) == CodeParams(12, 1, 6, 3)
    assert rect_family(1, 7) == CodeParams(7, 1, 0, 1)
    assert rect_family(6, 6) == square_family(6)


@pytest.mark.parametrize(
    "t, expected", [(1, (9, 1, 4, 3)), (2, (25, 1, 16, 5)), (3, (49, 1, 36, 7))]
)
def test_odd_family(t, expected):
    assert odd_family(t) == CodeParams(*expected)


@pytest.mark.parametrize("bad", [lambda: square_family(0), lambda: rect_family(0, 3),
                                 lambda: rect_family(2, 0), lambda: odd_family(0)])
def test_zero_dimensions_rejected(bad):
    with pytest.raises(ValueError):
        bad()


@given(st.integers(1, 500))
def test_odd_is_square_of_odd_side(t):
    assert odd_family(t) == square_family(2 * t + 1)


@given(st.integers(1, 200), st.integers(1, 200))
def test_rect_symmetric_and_stabilizer_count(a, b):
    p = rect_family(a, b)
    assert p == rect_family(b, a)
    assert p.n - p.k - p.r == a + b - 2
