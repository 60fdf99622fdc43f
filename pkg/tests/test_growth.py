import pytest

from dslab.growth import TOO_LARGE, ackermann, alpha, alpha2, growth_row, growth_table


@pytest.mark.parametrize("k,j,v", [(1, 3, 6), (2, 3, 8), (2, 10, 1024), (3, 1, 2), (3, 3, 16), (4, 2, 4), (4, 3, 65536)])
def test_ackermann_values(k, j, v):
    assert ackermann(k, j) == v


def test_ackermann_too_large():
    assert ackermann(5, 3) is TOO_LARGE
    assert ackermann(3, 6) is TOO_LARGE
    assert str(TOO_LARGE) == "TOO_LARGE"
    with pytest.raises(ValueError):
        ackermann(0, 1)


@pytest.mark.parametrize("n,k", [(1, 1), (6, 1), (7, 2), (8, 2), (9, 3), (16, 3), (17, 4), (65536, 4), (65537, 5)])
def test_alpha(n, k):
    assert alpha(n) == k


def test_alpha2():
    assert alpha2(100, 100) == 1
    assert alpha2(1, 2 ** 20) >= 2
    assert alpha2(2 ** 20, 2 ** 20) <= alpha2(1, 2 ** 20)


def test_ratio_increases_with_i():
    rows = growth_table([(1, 1, 1), (2, 1, 1), (3, 1, 1)])
    ratios = [r.ratio for r in rows]
    assert ratios == sorted(ratios) and len(set(ratios)) == 3


def test_growth_row_closed_forms():
    r = growth_row(2, 1, 1)
    assert (r.leaves, r.length, r.alphabet) == (8, 30, 22)
    big = growth_row(3, 2, 1)
    assert big.leaves is TOO_LARGE and big.as_dict()["length"] == "TOO_LARGE"
