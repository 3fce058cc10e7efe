import random

from so32cr.scalars import GQ
from so32cr.linalg import (
    NO_SOLUTION,
    Matrix,
    Subspace,
    inverse,
    kernel,
    rank,
    rref,
    solve,
    unit_vec,
    vec,
)

I = GQ(0, 1)


def test_kernel_identity_is_zero():
    assert kernel(Matrix.identity(2)).dim == 0


def test_kernel_hand_eliminated():
    # [[1, i], [-i, 1]] has rank 1; kernel spanned by (-i, 1).
    m = Matrix([[1, I], [-I, 1]])
    k = kernel(m)
    assert k.dim == 1
    assert k.contains(vec([-I, 1]))
    for row in m.rows:
        assert sum(
            (a * b for a, b in zip(row, vec([-I, 1]))), GQ(0)
        ).is_zero()


def test_kernel_zero_matrix_full():
    assert kernel(Matrix.zero(3, 3)).dim == 3


def test_rank_nullity():
    rng = random.Random(7)
    for _ in range(30):
        m = rng.randrange(1, 7)
        n = rng.randrange(1, 7)
        a = Matrix(
            [
                [GQ(rng.randrange(-3, 4), rng.randrange(-3, 4)) for _ in range(n)]
                for _ in range(m)
            ]
        )
        assert rank(a) + kernel(a).dim == n


def test_solve_identity():
    x, ker = solve(Matrix.identity(3), vec([1, I, GQ(0, -2)]))
    assert x == vec([1, I, GQ(0, -2)])
    assert ker.dim == 0


def test_solve_underdetermined():
    a = Matrix([[1, 1]])
    res = solve(a, vec([2]))
    assert res is not NO_SOLUTION
    x, ker = res
    assert a.apply(x) == vec([2])
    assert x == vec([2, 0])
    assert ker.dim == 1 and ker.contains(vec([1, -1]))


def test_solve_inconsistent():
    a = Matrix([[1], [0]])
    assert solve(a, vec([0, 1])) is NO_SOLUTION


def test_subspace_canonical_equality():
    rng = random.Random(13)
    for _ in range(25):
        n = rng.randrange(2, 8)
        k = rng.randrange(1, n + 1)
        base = [
            [GQ(rng.randrange(-3, 4), rng.randrange(-3, 4)) for _ in range(n)]
            for _ in range(k)
        ]
        s1 = Subspace(n, base)
        # random invertible recombination of the same spanning set
        mixed = []
        for _ in range(k + 2):
            w = [GQ(0)] * n
            for row in base:
                c = GQ(rng.randrange(-2, 3), rng.randrange(-2, 3))
                w = [a + c * b for a, b in zip(w, row)]
            mixed.append(w)
        s2 = Subspace(n, mixed)
        assert s2.dim <= s1.dim
        if s2.dim == s1.dim:
            assert s1 == s2
            assert s1.basis == s2.basis


def test_lattice_basics():
    e1, e2, e3 = (unit_vec(3, i) for i in range(3))
    a = Subspace(3, [e1])
    b = Subspace(3, [e2])
    assert a.intersect(b).dim == 0
    assert a.intersect(a) == a
    c = Subspace(3, [e1, e2])
    d = Subspace(3, [e2, e3])
    assert c.intersect(d) == Subspace(3, [e2])


def test_dimension_formula_randomized():
    # dim A + dim B == dim(A+B) + dim(A∩B), 500 pairs, ambient dim <= 12
    rng = random.Random(2024)
    for _ in range(500):
        n = rng.randrange(1, 13)
        def rand_space():
            k = rng.randrange(0, n + 1)
            return Subspace(
                n,
                [
                    [GQ(rng.randrange(-2, 3), rng.randrange(-2, 3)) for _ in range(n)]
                    for _ in range(k)
                ],
            )
        a, b = rand_space(), rand_space()
        s = a.sum(b)
        i = a.intersect(b)
        assert a.dim + b.dim == s.dim + i.dim
        assert s.contains_subspace(a) and s.contains_subspace(b)
        assert a.contains_subspace(i) and b.contains_subspace(i)


def test_rref_idempotent_and_inverse():
    m = Matrix([[2, I], [1, 1], [GQ(0, -1), 3]])
    r, piv = rref(m)
    assert rref(r)[0] == r
    sq = Matrix([[1, I], [0, 2]])
    assert sq @ inverse(sq) == Matrix.identity(2)
