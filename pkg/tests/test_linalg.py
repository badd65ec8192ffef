import random
from fractions import Fraction

from hopfsl2.cyclo import CycScalar, euler_phi, rational, root_of_unity
from hopfsl2.extfield import Tower, split_roots, find_field_roots, poly_eval
from hopfsl2.linalg import (
    identity,
    kron,
    mat_eq,
    mat_inv,
    mat_mul,
    nullspace,
    rank,
    solve,
)


def _rand_mat(rng, m, rows, cols):
    phi = euler_phi(m)
    return [
        [CycScalar(m, [Fraction(rng.randint(-2, 2)) for _ in range(phi)]) for _ in range(cols)]
        for _ in range(rows)
    ]


def test_inverse_and_identity():
    rng = random.Random(2)
    done = 0
    while done < 10:
        a = _rand_mat(rng, 4, 3, 3)
        try:
            inv = mat_inv(a)
        except ArithmeticError:
            continue
        done += 1
        assert mat_eq(mat_mul(a, inv), identity(a[0][0].one(), 3))


def test_nullspace_exact():
    rng = random.Random(9)
    a = _rand_mat(rng, 4, 3, 5)
    basis = nullspace(a)
    assert len(basis) >= 2
    zero = a[0][0].zero()
    for v in basis:
        out = [sum((a[i][j] * v[j] for j in range(5)), zero) for i in range(3)]
        assert all(x.is_zero() for x in out)


def test_solve_consistent_and_inconsistent():
    one = rational(1)
    zero = rational(0)
    a = [[one, zero], [one, zero]]
    assert solve(a, [one, one]) is not None
    assert solve(a, [one, zero]) is None


def test_rank_and_kron():
    one = rational(1)
    zero = rational(0)
    a = [[one, zero], [zero, one]]
    b = [[one, one], [zero, one]]
    k = kron(a, b)
    assert rank(k) == 4
    assert len(k) == 4 and len(k[0]) == 4


def test_tower_arithmetic():
    # Q(zeta_12)[s]/(s^3 + 2)
    base_one = rational(1, 12)
    minpoly = (rational(2, 12), rational(0, 12), rational(0, 12), base_one)
    tw = Tower.make(minpoly)
    s = tw.gen()
    assert s**3 == tw.lift(-2)
    x = s * s + tw.lift(root_of_unity(12, 1))
    assert x * x.inv() == tw.lift(1)
    assert Tower.make(minpoly) is tw  # interning


def test_split_roots_cubic_radical():
    # x^3 + 2 over Q(zeta_6): irreducible, splits over one tower step
    one = rational(1, 6)
    poly = [rational(2, 6), rational(0, 6), rational(0, 6), one]
    roots, sample = split_roots(poly)
    assert len(roots) == 3
    tower = sample.tower
    lifted = [tower.lift(c) for c in poly]
    for r in roots:
        assert poly_eval(lifted, r).is_zero()


def test_find_field_roots_binomial():
    # x^2 - q over Q(zeta_3): root is the canonical 2n-th root
    q = root_of_unity(3, 1)
    poly = [-q, q.zero(), q.one()]
    roots, rem = find_field_roots(poly)
    assert len(roots) == 2
    for r in roots:
        assert (r * r - q).is_zero()
