import random

import pytest
from hypothesis import given, settings, strategies as st

from lincode import (
    DegenerateGeneratorError,
    FieldMatrix,
    InternalConsistencyError,
    LinearCode,
    PrimeField,
    ShapeError,
    cyclic_generator_matrix,
    macwilliams_transform,
)
from lincode.code import EnumeratorPolynomial, WeightDistribution
from lincode.errors import BudgetExceededError
from lincode.linalg import mat_mul, nullspace_basis, rank, transpose, vstack
from lincode.oracle import oracle_pairwise_distance, span_weight_distribution

from codegen import EX41_CODEWORDS, EX42_ROWS, ex41, ex42, random_code

GF2 = PrimeField(2)


def test_new_code_validation():
    c = ex41()
    assert (c.k, c.n, c.q) == (3, 6, 2)
    with pytest.raises(DegenerateGeneratorError, match="degenerate column 2"):
        LinearCode.from_rows(2, [[1, 0, 1], [0, 0, 1]])
    with pytest.raises(DegenerateGeneratorError, match="not full rank"):
        LinearCode.from_rows(2, [[1, 1], [1, 1]])
    with pytest.raises(ShapeError):
        LinearCode.from_rows(2, [[1], [1]])


def test_encode():
    assert ex41().encode([1, 0, 0]) == (1, 0, 0, 1, 1, 0)
    assert ex41().encode([0, 0, 0]) == (0,) * 6
    assert ex42().encode([0, 0, 0, 1]) == (0, 0, 0, 1, 0, 1, 1)
    with pytest.raises(ShapeError):
        ex41().encode([1, 0])


def test_is_codeword():
    c = ex41()
    assert c.is_codeword([0, 1, 1, 1, 1, 0])
    assert c.is_codeword([0] * 6)
    assert not c.is_codeword([0, 1, 1, 1, 0, 0])
    assert all(c.is_codeword(v) for v in EX41_CODEWORDS)
    with pytest.raises(ShapeError):
        c.is_codeword([1, 0])


def test_augment():
    Gw = ex41().augment([0, 1, 1, 1, 0, 0])
    assert Gw.tolist() == [
        [1, 0, 0, 1, 1, 0],
        [0, 1, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 1],
        [0, 1, 1, 1, 0, 0],
    ]
    Gw = ex42().augment([1, 1, 0, 1, 0, 1, 1])
    assert Gw.tolist() == EX42_ROWS + [[1, 1, 0, 1, 0, 1, 1]]
    assert rank(ex41().augment([1, 1, 1, 0, 0, 0])) == 3


def test_cyclic():
    assert cyclic_generator_matrix([1, 0, 1, 1], 7, GF2).tolist() == EX42_ROWS
    assert cyclic_generator_matrix([1], 3, GF2).tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert cyclic_generator_matrix([1, 1], 3, GF2).tolist() == [[1, 1, 0], [0, 1, 1]]
    assert cyclic_generator_matrix([1, 1, 0, 0], 3, GF2).shape == (2, 3)
    with pytest.raises(ValueError):
        cyclic_generator_matrix([1, 0, 0, 1], 3, GF2)
    with pytest.raises(ValueError):
        cyclic_generator_matrix([0, 0], 3, GF2)


def test_dual_matrix():
    for c in (ex41(), ex42()):
        H = c.dual_matrix()
        assert H.shape == (c.n - c.k, c.n)
        assert rank(H) == c.n - c.k
        assert not any(any(r) for r in mat_mul(c.G, transpose(H)).data)
    ident = LinearCode(FieldMatrix.identity(GF2, 4))
    assert ident.dual_matrix().shape == (0, 4)


def test_weight_distribution_examples():
    assert ex41().weight_distribution().alpha == (1, 0, 0, 4, 3, 0, 0)
    wd = ex42().weight_distribution()
    assert wd.alpha[3] == 7
    assert wd.alpha == (1, 0, 0, 7, 7, 0, 0, 1)
    assert wd.min_distance == 3 and wd.total == 16
    for q in (2, 3, 5):
        rep = LinearCode.from_rows(q, [[1] * 5]).weight_distribution()
        assert rep.alpha == (1, 0, 0, 0, 0, q - 1)


def test_weight_distribution_budget():
    c = random_code(random.Random(0), 2, 10, 12)
    with pytest.raises(BudgetExceededError, match="too large"):
        c.weight_distribution(budget=512)


def test_macwilliams_examples():
    ex41_dual = span_weight_distribution(ex41().dual_matrix())
    assert macwilliams_transform(ex41().weight_distribution(), 2, 3).alpha == ex41_dual
    assert macwilliams_transform(ex42().weight_distribution(), 2, 4).alpha == (1, 0, 0, 0, 7, 0, 0, 0)
    assert span_weight_distribution(ex42().dual_matrix()) == (1, 0, 0, 0, 7, 0, 0, 0)
    for q in (2, 3):
        full = LinearCode(FieldMatrix.identity(PrimeField(q), 3)).weight_distribution()
        assert macwilliams_transform(full, q, 3).alpha == (1, 0, 0, 0)


def test_macwilliams_rejects_garbage():
    with pytest.raises(InternalConsistencyError):
        macwilliams_transform([1, 2, 0], 2, 1)


def test_enumerator_polynomial():
    W = ex42().weight_distribution().polynomial()
    assert str(W) == "X^7 + 7*X^4Y^3 + 7*X^3Y^4 + Y^7"
    assert W(1, 1) == 16
    # evaluated form of the identity at a few integer points
    Wd = macwilliams_transform(W, 2, 4)
    for X, Y in [(1, 1), (2, 1), (3, -2), (5, 7)]:
        assert 2**4 * Wd(X, Y) == W(X + Y, X - Y)
    assert str(EnumeratorPolynomial((0, 0))) == "0"
    assert WeightDistribution((1, 0, 3)).min_distance == 2


@st.composite
def small_codes(draw):
    q = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(2, 7))
    k = draw(st.integers(1, n))
    seed = draw(st.integers(0, 2**32))
    return random_code(random.Random(seed), q, k, n)


@given(small_codes(), st.data())
@settings(max_examples=60, deadline=None)
def test_encode_properties(c, data):
    x1 = tuple(data.draw(st.integers(0, c.q - 1)) for _ in range(c.k))
    x2 = tuple(data.draw(st.integers(0, c.q - 1)) for _ in range(c.k))
    y1 = c.encode(x1)
    assert c.is_codeword(y1)
    if x1 != x2:
        assert y1 != c.encode(x2)


@given(small_codes())
@settings(max_examples=60, deadline=None)
def test_weight_equals_pairwise_distance(c):
    assert c.weight_distribution().min_distance == oracle_pairwise_distance(c)


@given(small_codes())
@settings(max_examples=60, deadline=None)
def test_dual_of_dual(c):
    H = c.dual_matrix()
    if H.rows == 0:
        return
    back = FieldMatrix.from_rows(c.field, nullspace_basis(H), cols=c.n)
    assert rank(back) == c.k
    assert rank(vstack(back, c.G)) == c.k


def test_macwilliams_random_codes():
    rng = random.Random(11)
    for _ in range(60):
        q = rng.choice([2, 3, 5])
        n = rng.randint(2, 7 if q > 2 else 11)
        k = rng.randint(1, n)
        if q**k > 1 << 12 or q ** (n - k) > 1 << 12:
            continue
        c = random_code(rng, q, k, n)
        predicted = macwilliams_transform(c.weight_distribution(), q, k).alpha
        assert predicted == span_weight_distribution(c.dual_matrix())
