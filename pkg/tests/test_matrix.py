"""Exact matrix arithmetic and tensor-leg helpers."""

import random
from fractions import Fraction

import pytest

from ordexp.errors import DimensionMismatch, SingularOperator
from ordexp.matrix import (
    Matrix,
    aux_block,
    commutator,
    kron_embed,
    partial_trace_first,
    permutation_op,
)


def rand_matrix(rng, size=2, bound=5):
    return Matrix(
        [[Fraction(rng.randint(-bound, bound)) for _ in range(size)] for _ in range(size)]
    )


def test_constructor_rejects_bad_shapes():
    with pytest.raises(DimensionMismatch):
        Matrix([])
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3]])


def test_equality_and_hash():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]])
    assert a == b
    assert hash(a) == hash(b)
    assert a != Matrix([[1, 2], [3, 5]])


def test_arithmetic_basics():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    assert a + b - b == a
    assert -a + a == Matrix.zeros(2)
    assert a * Matrix.identity(2) == a
    assert Matrix.identity(2) * a == a
    assert a * b == Matrix([[2, 1], [4, 3]])
    assert 2 * a == a + a
    assert a * Fraction(1, 2) + a * Fraction(1, 2) == a


def test_matmul_shape_check():
    a = Matrix([[1, 2]])
    with pytest.raises(DimensionMismatch):
        a * a


def test_trace_transpose():
    a = Matrix([[1, 2], [3, 4]])
    assert a.trace() == 5
    assert a.transpose() == Matrix([[1, 3], [2, 4]])
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2]]).trace()


def test_inverse_round_trip_exact():
    # regression: exact augmentation must start from the identity columns
    rng = random.Random(5)
    count = 0
    while count < 20:
        a = rand_matrix(rng, size=3)
        try:
            inv = a.inverse()
        except SingularOperator:
            continue
        count += 1
        assert a * inv == Matrix.identity(3)
        assert inv * a == Matrix.identity(3)
        assert inv.is_exact()


def test_inverse_float_backend():
    a = Matrix([[2.0, 1.0], [1.0, 1.0]])
    prod = a * a.inverse()
    assert (prod - Matrix.identity(2)).max_abs() < 1e-12


def test_inverse_singular_raises():
    with pytest.raises(SingularOperator):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_is_exact_and_to_float():
    a = Matrix([[Fraction(1, 3), 1], [0, 2]])
    assert a.is_exact()
    f = a.to_float()
    assert not f.is_exact()
    assert abs(f.data[0][0] - 1 / 3) < 1e-15


def test_max_abs():
    assert Matrix([[1, -7], [3, 2]]).max_abs() == 7


def test_commutator_antisymmetry_and_jacobi():
    rng = random.Random(11)
    a, b, c = (rand_matrix(rng) for _ in range(3))
    assert commutator(a, b) == -commutator(b, a)
    jac = (
        commutator(a, commutator(b, c))
        + commutator(b, commutator(c, a))
        + commutator(c, commutator(a, b))
    )
    assert jac.is_zero()


def test_kron_block_structure():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 5], [6, 7]])
    k = a.kron(b)
    assert k.rows == 4
    # top-left block is a[0][0] * b
    assert Matrix([row[:2] for row in k.data[:2]]) == b
    assert Matrix([row[2:] for row in k.data[:2]]) == 2 * b


def test_kron_mixed_product():
    rng = random.Random(3)
    a, b, c, d = (rand_matrix(rng) for _ in range(4))
    assert a.kron(b) * c.kron(d) == (a * c).kron(b * d)


def test_kron_embed_single_slot_matches_kron():
    a = Matrix([[1, 2], [3, 4]])
    eye = Matrix.identity(2)
    assert kron_embed(a, (0,), 2, 2) == a.kron(eye)
    assert kron_embed(a, (1,), 2, 2) == eye.kron(a)


def test_kron_embed_product_and_commutation():
    rng = random.Random(9)
    a, b = rand_matrix(rng), rand_matrix(rng)
    same = kron_embed(a, (1,), 3, 2) * kron_embed(b, (1,), 3, 2)
    assert same == kron_embed(a * b, (1,), 3, 2)
    x = kron_embed(a, (0,), 3, 2)
    y = kron_embed(b, (2,), 3, 2)
    assert x * y == y * x
    assert x * y == kron_embed(a.kron(b), (0, 2), 3, 2)


def test_kron_embed_slot_order_transposes_legs():
    p = permutation_op(2)
    rng = random.Random(13)
    a, b = rand_matrix(rng), rand_matrix(rng)
    ab = a.kron(b)
    # swapping the slot list conjugates by the flip
    assert kron_embed(ab, (1, 0), 2, 2) == p * ab * p


def test_kron_embed_validation():
    a = Matrix([[1, 2], [3, 4]])
    with pytest.raises(DimensionMismatch):
        kron_embed(a, (0, 0), 2, 2)
    with pytest.raises(DimensionMismatch):
        kron_embed(a, (2,), 2, 2)
    with pytest.raises(DimensionMismatch):
        kron_embed(a, (0, 1), 2, 2)


def test_permutation_op_flips_and_squares_to_identity():
    for dim in (2, 3):
        p = permutation_op(dim)
        assert p * p == Matrix.identity(dim * dim)
        rng = random.Random(dim)
        a = rand_matrix(rng, size=dim)
        b = rand_matrix(rng, size=dim)
        assert p * a.kron(b) * p == b.kron(a)


def test_partial_trace_first():
    rng = random.Random(17)
    a, b = rand_matrix(rng), rand_matrix(rng)
    assert partial_trace_first(a.kron(b), 2) == a.trace() * b
    p = permutation_op(2)
    assert partial_trace_first(p, 2) == Matrix.identity(2)


def test_aux_block_reads_slot_zero_blocks():
    rng = random.Random(19)
    a, b = rand_matrix(rng), rand_matrix(rng)
    k = a.kron(b)
    for i in range(2):
        for j in range(2):
            assert aux_block(k, i, j, 2) == a.data[i][j] * b
    # the flip has e_ba in block (a, b)
    p = permutation_op(2)
    e10 = Matrix([[0, 0], [1, 0]])
    assert aux_block(p, 0, 1, 2) == e10


def test_aux_block_shape_check():
    with pytest.raises(DimensionMismatch):
        aux_block(Matrix.identity(3), 0, 0, 2)
