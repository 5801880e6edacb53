import random
from math import comb

import pytest

from lincode import BudgetExceededError, FieldMatrix, LinearCode, PrimeField, ProjectivePoint, level_scan, min_distance
from lincode.mindist import projective_points, subsets
from lincode.oracle import oracle_min_distance

from codegen import EX41_X, EX41_Y, EX42_X, EX42_Y, canonical, ex41, ex42, random_code, random_codes


def test_subsets():
    assert list(subsets(4, 2)) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert list(subsets(3, 0)) == [()]
    assert len(list(subsets(6, 3))) == 20
    with pytest.raises(ValueError):
        list(subsets(3, 4))


def test_projective_point():
    assert ProjectivePoint.from_vector([0, 3, 1], 5).coords == (0, 1, 2)
    with pytest.raises(ValueError):
        ProjectivePoint((0, 0))
    with pytest.raises(ValueError):
        ProjectivePoint((0, 2))


def test_projective_points_count():
    basis = [(1, 0, 0), (0, 1, 0)]
    pts = projective_points(basis, 3)
    assert len(pts) == (3**2 - 1) // 2 == len(set(pts))
    with pytest.raises(BudgetExceededError):
        projective_points(basis, 3, cap=3)


def test_level_scan_examples(kernel):
    assert level_scan(ex41(), 1, kernel=kernel) == ()
    assert level_scan(ex41(), 2, kernel=kernel) == ()
    assert {p.coords for p in level_scan(ex41(), 3, kernel=kernel)} == EX41_X
    assert {p.coords for p in level_scan(ex42(), 3, kernel=kernel)} == EX42_X


def test_min_distance_examples(kernel):
    rep = min_distance(ex41(), kernel=kernel)
    assert rep.d == 3 and {x.coords for x in rep.X} == EX41_X and set(rep.Y) == EX41_Y
    assert rep.subsets_examined == {1: 6, 2: 15, 3: 20}
    assert rep.levels_scanned == (1, 3)
    rep = min_distance(ex42(), kernel=kernel)
    assert rep.d == 3 and len(rep.Y) == 7 and set(rep.Y) == EX42_Y


def test_identity_code(kernel):
    k = 4
    rep = min_distance(LinearCode(FieldMatrix.identity(PrimeField(3), k)), kernel=kernel)
    assert rep.d == 1
    units = {tuple(int(i == j) for j in range(k)) for i in range(k)}
    assert {x.coords for x in rep.X} == units and set(rep.Y) == units


@pytest.mark.parametrize("q", [2, 3, 5])
def test_repetition_code(kernel, q):
    n = 5
    rep = min_distance(LinearCode.from_rows(q, [[1] * n]), kernel=kernel)
    assert rep.d == n and [x.coords for x in rep.X] == [(1,)] and rep.Y == ((1,) * n,)


def test_start_level(kernel):
    base = min_distance(ex42(), kernel=kernel)
    for s in (1, 2, 3):
        rep = min_distance(ex42(), start_level=s, kernel=kernel)
        assert (rep.d, rep.X, rep.Y) == (base.d, base.X, base.Y)
        assert min(rep.subsets_examined) == s
    with pytest.raises(ValueError):
        min_distance(ex42(), start_level=0)
    with pytest.raises(ValueError):
        min_distance(ex42(), start_level=5)


def test_block_identity_lower_bound():
    # [I | I | I] has every nonzero codeword of weight >= 3, so 3 is a valid start
    k, s = 3, 3
    rows = [[int(i == j) for _ in range(s) for j in range(k)] for i in range(k)]
    code = LinearCode.from_rows(2, rows)
    assert min_distance(code, start_level=s).Y == min_distance(code).Y
    assert min_distance(code).d == s


def test_work_budget():
    code = random_code(random.Random(2), 2, 10, 40)
    with pytest.raises(BudgetExceededError) as info:
        min_distance(code, max_work=1000)
    stats = info.value.stats
    assert stats["subsets_examined"] == {1: 40, 2: comb(40, 2)}
    assert stats["next_level"] == 3


@pytest.mark.parametrize("q,k_range,n_max,count", [(2, (1, 6), 11, 40), (3, (1, 4), 7, 25), (5, (1, 3), 6, 20)])
def test_oracle_equivalence(kernel, q, k_range, n_max, count):
    for code in random_codes(q * 7 + n_max, count, q, k_range, n_max):
        rep = min_distance(code, kernel=kernel)
        d, words = oracle_min_distance(code)
        assert rep.d == d
        assert {canonical(y, q) for y in rep.Y} == {canonical(w, q) for w in words}
        if q == 2:
            assert set(rep.Y) == set(words)
        assert 1 <= rep.d <= code.n - code.k + 1
        assert all(code.is_codeword(y) and sum(1 for v in y if v) == d for y in rep.Y)
        assert list(rep.X) == sorted(rep.X)
        for j in range(1, d):
            assert level_scan(code, j, kernel=kernel) == ()


def test_threads_do_not_change_report():
    code = random_code(random.Random(8), 2, 5, 16)
    one = min_distance(code, threads=1)
    for t in (2, 5, 8):
        other = min_distance(code, threads=t)
        assert (other.d, other.X, other.Y, other.subsets_examined) == (one.d, one.X, one.Y, one.subsets_examined)
