from cubicgeom.field import rat
from cubicgeom.linalg import ExactMatrix, det3, cross3


def test_rank_and_kernel():
    m = ExactMatrix([[rat(1), rat(2), rat(3)],
                     [rat(2), rat(4), rat(6)],
                     [rat(0), rat(1), rat(1)]])
    assert m.rank() == 2
    (vec,) = m.kernel_basis()
    assert all(sum(row[j] * vec[j] for j in range(3)) == 0
               for row in [[rat(1), rat(2), rat(3)], [rat(0), rat(1), rat(1)]])


def test_det_exact():
    m = ExactMatrix([[rat(2), rat(0)], [rat(7), rat(1, 3)]])
    assert m.det() == rat(2, 3)
    assert det3([[rat(1), rat(0), rat(0)],
                 [rat(0), rat(1), rat(0)],
                 [rat(0), rat(0), rat(1)]]) == 1


def test_solve():
    m = ExactMatrix([[rat(1), rat(1)], [rat(1), rat(-1)]])
    x = m.solve([rat(3), rat(1)])
    assert x == [rat(2), rat(1)]


def test_cross3_orthogonal():
    u = [rat(1), rat(2), rat(3)]
    v = [rat(4), rat(5), rat(6)]
    w = cross3(u, v)
    assert sum(a * b for a, b in zip(u, w)) == 0
    assert sum(a * b for a, b in zip(v, w)) == 0


def test_identity_and_mul_vec():
    m = ExactMatrix.identity(3)
    assert m.mul_vec([rat(4), rat(5), rat(6)]) == [rat(4), rat(5), rat(6)]
    assert m.transpose().rank() == 3
