import random

import pytest
import sympy
from sympy.matrices.normalforms import hermite_normal_form
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from racgk.intlinalg import (ColumnSolver, Lattice, invariant_factors,
                             kernel_basis, mat_mul, row_hnf,
                             smith_normal_form)


def check_snf(mat):
    diag, u, v = smith_normal_form(mat)
    m, n = len(mat), len(mat[0]) if mat else 0
    prod = mat_mul(mat_mul(u, mat), v)
    for i in range(m):
        for j in range(n):
            expected = diag[i] if i == j and i < len(diag) else 0
            assert prod[i][j] == expected
    for a, b in zip(diag, diag[1:]):
        assert a > 0 and b % a == 0
    return diag


def test_snf_examples():
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]
    assert check_snf([[1, 1]]) == [1]
    assert check_snf([[0, 0], [0, 0]]) == []


def test_snf_matches_sympy_randomized():
    rng = random.Random(7)
    for _ in range(150):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        diag = check_snf(mat)
        sd = sympy_snf(sympy.Matrix(mat))
        expected = sorted(abs(sd[i, i]) for i in range(min(m, n)) if sd[i, i])
        assert diag == expected


def test_kernel_basis():
    rng = random.Random(11)
    for _ in range(100):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        mat = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        ker = kernel_basis(mat)
        assert len(ker) == n - len(invariant_factors(mat))
        for vec in ker:
            assert all(sum(row[j] * vec[j] for j in range(n)) == 0
                       for row in mat)


def test_row_hnf_canonical():
    rows = [[2, 4], [0, 6]]
    h = row_hnf(rows)
    assert h == [[2, 4], [0, 6]]
    # HNF is independent of generator order and redundancy
    assert row_hnf([[0, 6], [2, 4], [2, 10]]) == h


def test_row_hnf_tracked_combinations():
    rng = random.Random(13)
    for _ in range(100):
        g = rng.randint(1, 5)
        n = rng.randint(1, 5)
        rows = [[rng.randint(-7, 7) for _ in range(n)] for _ in range(g)]
        h, exprs = row_hnf(rows, track=True)
        for row, e in zip(h, exprs):
            comb = [sum(e[i] * rows[i][j] for i in range(g)) for j in range(n)]
            assert comb == row


def test_hnf_spans_same_lattice_as_sympy():
    rng = random.Random(17)
    for _ in range(60):
        g = rng.randint(1, 4)
        n = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(g)]
        ours = Lattice(n, rows)
        try:
            sh = hermite_normal_form(sympy.Matrix(rows).T)
        except Exception:
            continue
        theirs = [[int(sh[i, c]) for i in range(n)]
                  for c in range(sh.shape[1])]
        for vec in theirs:
            assert vec in ours
        other = Lattice(n, theirs) if theirs else None
        for vec in ours.basis:
            assert other is not None and vec in other


def test_lattice_membership_certificate():
    lat = Lattice(2, [[1, 0], [0, 2]], track=True)
    ok, cert = lat.membership([3, 4])
    assert ok
    assert cert == [3, 2]
    ok, reason = lat.membership([0, 1])
    assert not ok
    assert "congruence" in reason
    ok, cert = lat.membership([0, 0])
    assert ok and cert == [0, 0]


def test_lattice_index():
    whole = Lattice(2, [[1, 0], [0, 1]])
    sub = Lattice(2, [[2, 0], [0, 3]])
    assert sub.index_in(whole) == 6


def test_column_solver():
    cols = [[1, 0, 2], [0, 3, 1]]
    solver = ColumnSolver(cols)
    assert solver.solve([2, 3, 5]) == [2, 1]
    assert solver.solve([1, 1, 1]) is None


def test_column_solver_rejects_dependent():
    with pytest.raises(ValueError):
        ColumnSolver([[1, 2], [2, 4]])
