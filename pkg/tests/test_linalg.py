from fractions import Fraction

import pytest

from planecurves import linalg
from planecurves.linalg import RationalMatrix
from planecurves import modular


def test_rank_identity():
    M = RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert linalg.rank(M) == 3


def test_rank_dependent_rows():
    M = RationalMatrix([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    assert linalg.rank(M) == 2


def test_rank_empty():
    assert linalg.rank(RationalMatrix.zero(0, 5)) == 0
    assert linalg.rank(RationalMatrix.zero(5, 0)) == 0


def test_rref_canonical():
    M = RationalMatrix([[2, 4, 2], [1, 3, 5]])
    R = linalg.rref(M)
    assert R.entries[0] == [Fraction(1), Fraction(0), Fraction(-7)]
    assert R.entries[1] == [Fraction(0), Fraction(1), Fraction(4)]


def test_rref_of_rref_is_fixed_point():
    M = RationalMatrix([[3, 1, 4, 1], [5, 9, 2, 6], [5, 3, 5, 8]])
    R = linalg.rref(M)
    assert linalg.rref(R) == R


def test_rref_fractions():
    M = RationalMatrix([[Fraction(1, 2), Fraction(1, 3)], [1, 1]])
    R = linalg.rref(M)
    assert R.entries == [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]


def test_nullspace_annihilates():
    M = RationalMatrix([[1, 2, 3, 4], [4, 3, 2, 1]])
    basis = linalg.nullspace_basis(M)
    assert len(basis) == 2
    for v in basis:
        assert all(x == 0 for x in linalg.matvec(M, v))


def test_nullspace_canonical_units():
    # one unit coordinate per free column, ascending
    M = RationalMatrix([[1, 2, 3, 4], [4, 3, 2, 1]])
    basis = linalg.nullspace_basis(M)
    free = [2, 3]
    for vec, j in zip(basis, free):
        assert vec[j] == 1
        assert all(vec[jj] == 0 for jj in free if jj != j)


def test_nullspace_zero_matrix():
    basis = linalg.nullspace_basis(RationalMatrix.zero(2, 3))
    assert len(basis) == 3


def test_subspace_dimension():
    vecs = [
        [Fraction(1), Fraction(0), Fraction(1)],
        [Fraction(0), Fraction(1), Fraction(1)],
        [Fraction(1), Fraction(1), Fraction(2)],
    ]
    assert linalg.subspace_dimension(vecs) == 2
    assert linalg.subspace_dimension([]) == 0


def test_subspace_dimension_mismatched_lengths():
    with pytest.raises(ValueError):
        linalg.subspace_dimension([[Fraction(1)], [Fraction(1), Fraction(2)]])


def test_rank_nullity():
    M = RationalMatrix(
        [[1, 2, 3, 4, 5], [0, 1, 0, 1, 0], [1, 3, 3, 5, 5], [2, 2, 2, 2, 2]]
    )
    assert linalg.rank(M) + len(linalg.nullspace_basis(M)) == M.cols


def test_transpose_rank_agrees():
    M = RationalMatrix([[1, 2], [3, 4], [5, 6], [7, 8]])
    assert linalg.rank(M) == linalg.rank(M.transpose())


def test_large_entries_stay_exact():
    big = 10**40
    M = RationalMatrix([[big, big + 1], [big - 1, big]])
    # determinant is big^2 - (big^2 - 1) = 1, so full rank
    assert linalg.rank(M) == 2


def test_mod_rank_lower_bounds_exact_rank():
    M = RationalMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    A = linalg._to_integer_rows(M.entries)
    assert modular.mod_rank(modular.reduce_array(A)) <= linalg.rank(M)
    assert modular.mod_rank(modular.reduce_array(A)) == 3


def test_mod_rank_rows_selects_independent_rows():
    import numpy as np

    A = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]], dtype=np.int64)
    rank, rows = modular.mod_rank_rows(A.copy())
    assert rank == 2
    assert rows == [0, 2]


def test_mod_rref_kernel_matches_exact():
    import numpy as np

    A = np.array([[1, 2, 3, 4], [4, 3, 2, 1]], dtype=object)
    p = modular.PRIME
    piv, ker, piv_rows = modular.mod_rref_kernel(
        (A % p).astype(np.int64), p
    )
    assert piv == (0, 1)
    assert piv_rows == [0, 1]
    exact = linalg.int_kernel(A.copy())
    assert ker.shape[0] == len(exact)
    for krow, evec in zip(ker, exact):
        for res, val in zip(krow, evec):
            assert (val.numerator - res * val.denominator) % p == 0


def test_multimodular_kernel_matches_exact():
    import random

    import numpy as np

    rng = random.Random(11)
    for _ in range(10):
        n, m, r = 6, 7, 4
        B = np.array(
            [[rng.randint(-30, 30) for _ in range(m)] for _ in range(r)],
            dtype=object,
        )
        C = np.array(
            [[rng.randint(-9, 9) for _ in range(r)] for _ in range(n)],
            dtype=object,
        )
        A = C @ B
        exact = linalg.int_kernel(A.copy())
        assert linalg.multimodular_kernel(A.copy(), len(exact)) == exact
        # unknown-dimension mode discovers and certifies the same kernel
        assert linalg.multimodular_kernel(A.copy()) == exact


def test_multimodular_kernel_big_entries():
    import numpy as np

    big = 10**45
    A = np.array([[big, big + 1, 1], [1, 2, 3]], dtype=object)
    exact = linalg.int_kernel(A.copy())
    assert linalg.multimodular_kernel(A.copy(), 1) == exact


def test_multimodular_kernel_wrong_expectation():
    import numpy as np

    A = np.array([[1, 0, 0], [0, 1, 0], [0, 0, 1]], dtype=object)
    with pytest.raises(ValueError):
        linalg.multimodular_kernel(A, 2)
    assert linalg.multimodular_kernel(A.copy(), 0) == []
