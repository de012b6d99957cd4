import pytest

from cubicgeom.field import rat
from cubicgeom.multipoly import (MultiPoly, monomials, homogeneous_gcd,
                                 common_factor, common_cubic_factor)


def _xyz():
    return [MultiPoly.variable(i, 3) for i in range(3)]


def test_ring_operations():
    x, y, z = _xyz()
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.degree() == 2
    assert p.evaluate([rat(3), rat(2), rat(0)]) == 5


def test_divide_exact_roundtrip():
    x, y, z = _xyz()
    a = x * x + y * z
    b = x + y + z.scale(rat(2))
    assert (a * b).divide_exact(b) == a
    with pytest.raises(ValueError):
        (a * b + MultiPoly.constant(3, rat(1))).divide_exact(b)


def test_monomials_grlex_count():
    assert len(monomials(4, 3)) == 20
    assert len(monomials(3, 2)) == 6
    assert monomials(2, 1) == [(1, 0), (0, 1)]


def test_homogeneous_gcd():
    x, y, z = _xyz()
    g = x + y
    a = g * (x - z)
    b = g * (y + z) * (x + z)
    got = homogeneous_gcd(a, b)
    assert got.monic() == g.monic()


def test_common_factor_of_list():
    x, y, z = _xyz()
    g = x - y
    forms = [g * x, g * y, g * (x + z)]
    assert common_factor(forms).monic() == g.monic()


def test_common_cubic_factor_splits():
    x, y, z = _xyz()
    g = (x + y) * (y + z) * (x + z)
    sextics = [g * x * y * z, g * x * x * x, g * (x + y + z) * y * y]
    factor, quotients = common_cubic_factor(sextics)
    assert factor.degree() == 3
    assert all(q.degree() == 3 for q in quotients)
    assert all(factor * q == s for q, s in zip(quotients, sextics))


def test_substitute_and_gradient():
    x, y, z = _xyz()
    p = x * x * y
    q = p.substitute([y, z, x])          # x->y, y->z, z->x
    assert q == y * y * z
    gx = p.partial(0)
    assert gx == (x * y).scale(rat(2))
    assert [g.nvars for g in p.gradient()] == [3, 3, 3]
