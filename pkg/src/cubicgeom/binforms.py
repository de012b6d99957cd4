"""Binary forms: root extraction for cubics and exact deflation by known roots.

A binary form of degree d in (s, t) is held as a coefficient list
[c_0, ..., c_d] meaning  c_0 s^d + c_1 s^(d-1) t + ... + c_d t^d.
A projective root (a : b) corresponds to the linear factor  b s - a t.
"""

from __future__ import annotations

from .field import QQ, rat, is_rational
from .multipoly import MultiPoly


class MultipleRootError(ValueError):
    """The cubic has a repeated root; the construction that needs simple roots stops here."""


class NotARootError(ValueError):
    """A claimed root does not annihilate the form."""


def binary_from_poly(p):
    """Dense coefficient list of a homogeneous MultiPoly in 2 variables."""
    d = p.degree()
    out = [rat(0)] * (d + 1)
    for (i, j), c in p.terms.items():
        out[j] = c
    return out


def binary_to_poly(coeffs):
    d = len(coeffs) - 1
    return MultiPoly(2, {(d - j, j): c for j, c in enumerate(coeffs) if c})


def eval_binary(coeffs, a, b):
    d = len(coeffs) - 1
    acc = rat(0)
    pa = [rat(1)]
    pb = [rat(1)]
    for _ in range(d):
        pa.append(pa[-1] * a)
        pb.append(pb[-1] * b)
    for j, c in enumerate(coeffs):
        if c:
            acc = acc + c * pa[d - j] * pb[j]
    return acc


def deflate_binary_form(coeffs, known_roots):
    """Divide out the linear factors of the given roots (with multiplicities).

    known_roots: iterable of ((a, b), multiplicity).  Raises NotARootError if a
    claimed root fails to annihilate the current quotient.
    """
    cur = list(coeffs)
    for (a, b), mult in known_roots:
        for _ in range(mult):
            if eval_binary(cur, a, b):
                raise NotARootError(f"({a} : {b}) is not a root")
            cur = _deflate_once(cur, a, b)
    return cur


def _deflate_once(coeffs, a, b):
    """Exact quotient by (b s - a t); the caller guarantees (a : b) is a root."""
    d = len(coeffs) - 1
    if b:
        binv = 1 / b if is_rational(b) else b.inverse()
        out = []
        # c_j = b q_j - a q_{j-1}  =>  q_j = (c_j + a q_{j-1}) / b
        for j in range(d):
            prev = out[-1] if out else rat(0)
            out.append((coeffs[j] + a * prev) * binv)
        return out
    # factor is -a t: c_j = -a q_{j-1}, and c_0 = 0 since (1:0) is a root
    ainv = 1 / a if is_rational(a) else a.inverse()
    return [-c * ainv for c in coeffs[1:]]


def _trim(v):
    while v and not v[-1]:
        v.pop()
    return v


def _univ_gcd_degree(p, q):
    """Degree of gcd of two dense (constant-first) univariate polys over a field."""
    p, q = _trim(list(p)), _trim(list(q))
    while q:
        inv = 1 / q[-1] if is_rational(q[-1]) else q[-1].inverse()
        while len(p) >= len(q):
            f = p[-1] * inv
            off = len(p) - len(q)
            for i in range(len(q)):
                p[off + i] = p[off + i] - f * q[i]
            p.pop()
            _trim(p)
        p, q = q, p
    return len(p) - 1


def _rational_roots(dense):
    """Rational roots of a square-free dense constant-first poly over Q, deg <= 3.

    Works by the monic transform y = a_n t (so rational roots become integer
    roots of a monic integer polynomial) plus exact integer bisection, which
    stays fast even when the coefficients are enormous.
    """
    from math import gcd, lcm
    roots = []
    dense = _trim(list(dense))
    if dense and not dense[0]:
        roots.append(rat(0))
        dense = dense[1:]
    den = 1
    for c in dense:
        den = lcm(den, int(c.denominator))
    ints = [int(c.numerator) * (den // int(c.denominator)) for c in dense]
    n = len(ints) - 1
    if n <= 0:
        return sorted(roots)
    g = 0
    for a in ints:
        g = gcd(g, a)
    ints = [a // g for a in ints]
    if n == 1:
        roots.append(rat(-ints[0], ints[1]))
        return sorted(roots)
    an = ints[-1]
    monic = [ints[k] * an ** (n - 1 - k) for k in range(n)] + [1]
    for y in _integer_roots_monic(monic):
        roots.append(rat(y, an))
    return sorted(roots)


def _eval_int(poly, x):
    acc = 0
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _integer_roots_monic(g):
    """Integer roots of a square-free monic integer poly of degree 2 or 3."""
    from math import isqrt
    n = len(g) - 1
    bound = 1 + max(abs(c) for c in g[:-1])
    seps = {-bound - 1, bound + 1}
    # integer brackets around the critical points keep each remaining
    # interval monotone, so one sign-change bisection per interval suffices
    approx = []
    if n == 3:
        a, b, c = 3, 2 * g[2], g[1]
        disc = b * b - 4 * a * c
        if disc > 0:
            r = isqrt(disc)
            approx += [(-b - r) // (2 * a), (-b + r) // (2 * a)]
    elif n == 2:
        approx.append(-g[1] // 2)
    for v in approx:
        seps.update(range(v - 1, v + 3))
    seps = sorted(x for x in seps if -bound - 1 <= x <= bound + 1)
    found = [s for s in seps if _eval_int(g, s) == 0]
    for lo, hi in zip(seps, seps[1:]):
        root = _bisect_integer_root(g, lo, hi)
        if root is not None:
            found.append(root)
    return sorted(set(found))


def _bisect_integer_root(g, lo, hi):
    flo, fhi = _eval_int(g, lo), _eval_int(g, hi)
    if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
        return None
    while hi - lo > 1:
        mid = (lo + hi) // 2
        fm = _eval_int(g, mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return None


def solve_cubic(coeffs, tower=QQ):
    """Roots of a binary cubic c0 t^3 + c1 t^2 u + c2 t u^2 + c3 u^3.

    Returns a list of ((t, u), tower) pairs, one root per irreducible factor:
    rational roots stay in the given tower; an irreducible quadratic or cubic
    factor contributes a single root in a fresh degree-2/3 extension.
    Raises MultipleRootError on a repeated root.
    """
    if len(coeffs) != 4:
        raise ValueError("expected 4 coefficients")
    vals = []
    for c in coeffs:
        r = c if is_rational(c) else c.as_rational()
        if r is None:
            raise NotImplementedError("root extraction beyond Q coefficients")
        vals.append(rat(r))
    if not any(vals):
        raise ValueError("cubic is identically zero")
    c0, c1, c2, c3 = vals
    roots = []
    # root at infinity (1 : 0) when the t^3 coefficient vanishes
    if not c0:
        if not c1:
            raise MultipleRootError("(1 : 0) is a repeated root")
        roots.append(((tower.embed(rat(1)), tower.embed(rat(0))), tower))
    # dehomogenize: p(t) = f(t, 1), coefficients constant-first
    dense = [c3, c2, c1, c0]
    while dense and not dense[-1]:
        dense.pop()
    dp = [dense[k] * k for k in range(1, len(dense))]
    if _univ_gcd_degree(dense, dp) > 0:
        raise MultipleRootError("repeated finite root")
    rational = _rational_roots(dense)
    residual = dense
    for r in rational:
        roots.append(((tower.embed(r), tower.embed(rat(1))), tower))
        residual = _deflate_dense(residual, r)
    deg = len(residual) - 1
    if deg >= 2:
        lead = residual[-1]
        minpoly = [c / lead for c in residual]
        ext = tower.extend([tower.embed(c) if not tower.is_rational_field() else c
                            for c in minpoly])
        roots.append(((ext.gen(), ext.one()), ext))
    return roots


def _deflate_dense(dense, r):
    """Exact quotient of a constant-first dense poly by (x - r)."""
    out = [rat(0)] * (len(dense) - 1)
    carry = rat(0)
    for k in reversed(range(1, len(dense))):
        carry = dense[k] + carry * r
        out[k - 1] = carry
    return out
