import math

import pytest

from intprob import partitions as pt
from intprob.errors import BudgetError, ValidationError


def test_partitions_of_zero():
    assert pt.partitions_of(0) == [()]


def test_partitions_of_three_reverse_lex():
    assert pt.partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]


def test_partitions_of_ten_count():
    lams = pt.partitions_of(10)
    assert len(lams) == 42
    assert len(set(lams)) == 42
    assert all(sum(l) == 10 for l in lams)
    assert len(lams) == pt.partition_count(10)


@pytest.mark.parametrize("n", range(13))
def test_enumeration_matches_recurrence(n):
    assert len(pt.partitions_of(n)) == pt.partition_count(n)


def test_cap():
    with pytest.raises(BudgetError):
        pt.partitions_of(41)


def test_max_len():
    lams = pt.partitions_of(6, max_len=2)
    assert lams == [(6,), (5, 1), (4, 2), (3, 3)]


def test_conjugate_involution():
    for lam in pt.partitions_of(8):
        assert pt.conjugate(pt.conjugate(lam)) == lam
    assert pt.conjugate((4, 3, 2)) == (3, 3, 2, 1)


def test_check_partition_rejects():
    with pytest.raises(ValidationError):
        pt.check_partition((1, 2))
    with pytest.raises(ValidationError):
        pt.check_partition((2, -1))
    assert pt.check_partition((3, 1, 0, 0)) == (3, 1)


def test_strips():
    assert pt.is_horizontal_strip((3, 1), (1,))
    assert not pt.is_horizontal_strip((1, 1), ())
    assert pt.is_vertical_strip((1, 1), ())
    assert not pt.is_vertical_strip((2,), ())
    assert pt.interlaces((1,), (2, 1))
    assert not pt.interlaces((3,), (2, 1))


def test_dim_std_single_row():
    for n in range(1, 10):
        assert pt.dim_std((n,)) == 1


def test_dim_std_22():
    assert pt.dim_std((2, 2)) == 2


@pytest.mark.parametrize("n", range(0, 9))
def test_dim_std_vs_enumeration(n):
    for lam in pt.partitions_of(n):
        assert pt.dim_std(lam) == pt.dim_std_enumerate(lam)


def test_burnside_small():
    # sum of squared tableau counts over |lam|=3 is 1 + 4 + 1 = 3!
    vals = [pt.dim_std(lam) ** 2 for lam in pt.partitions_of(3)]
    assert sorted(vals) == [1, 1, 4]
    assert sum(vals) == math.factorial(3)


def test_dim_ssyt():
    assert pt.dim_ssyt((), 3) == 1
    assert pt.dim_ssyt((2, 1), 2) == 2
    assert pt.dim_ssyt((1, 1, 1), 2) == 0


@pytest.mark.parametrize("n", range(0, 7))
def test_dim_ssyt_vs_enumeration(n):
    for lam in pt.partitions_of(n):
        for N in (1, 2, 3):
            assert pt.dim_ssyt(lam, N) == pt.ssyt_enumerate(lam, N)


def test_point_config():
    assert pt.occupied((), -0.5)
    assert not pt.occupied((), 0.5)
    # lam = (2): particles at 3/2, -3/2, -5/2, ...
    assert pt.occupied((2,), 1.5)
    assert not pt.occupied((2,), 0.5)
    assert not pt.occupied((2,), -0.5)
    assert pt.occupied((2,), -1.5)
    cfg = pt.to_point_config((2,), 3)
    assert [float(c) for c in cfg] == [1.5, -1.5, -2.5]
