"""Sparse multivariate polynomials with exact coefficients.

Terms are stored in a dict keyed by exponent tuples; zero coefficients are
never stored, so equality is dict equality.  Monomial order, where one is
needed, is graded lexicographic.
"""

from __future__ import annotations

import itertools

from .field import QQ, rat, rat_str, is_rational, scalar_from_json


def grlex_key(expo):
    return (sum(expo), expo)


class MultiPoly:
    """A polynomial in `nvars` variables over an exact field."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for expo, coeff in (terms.items() if isinstance(terms, dict) else terms):
                if coeff:
                    expo = tuple(expo)
                    cur = self.terms.get(expo)
                    new = coeff if cur is None else cur + coeff
                    if new:
                        self.terms[expo] = new
                    elif cur is not None:
                        del self.terms[expo]

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i, nvars):
        expo = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {expo: rat(1)})

    @classmethod
    def linear_form(cls, coeffs):
        n = len(coeffs)
        return cls(n, {tuple(1 if j == i else 0 for j in range(n)): c
                       for i, c in enumerate(coeffs) if c})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            new = c if cur is None else cur + c
            if new:
                out[e] = new
            elif cur is not None:
                del out[e]
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    def __neg__(self):
        p = MultiPoly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                cur = out.get(e)
                new = c if cur is None else cur + c
                if new:
                    out[e] = new
                elif cur is not None:
                    del out[e]
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if not c:
            return MultiPoly(self.nvars)
        p = MultiPoly(self.nvars)
        p.terms = {e: co * c for e, co in self.terms.items()}
        return p

    def __pow__(self, n):
        out = MultiPoly.constant(self.nvars, rat(1))
        for _ in range(n):
            out = out * self
        return out

    # -- structure ---------------------------------------------------------

    def leading(self):
        """(exponent, coefficient) of the grlex-largest term."""
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def monic(self):
        if not self.terms:
            return self
        _, c = self.leading()
        return self.scale(1 / c if is_rational(c) else c.inverse())

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), rat(0))

    def evaluate(self, point):
        acc = rat(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                for _ in range(k):
                    term = term * x
            acc = acc + term
        return acc

    def substitute(self, polys):
        """Plug a polynomial in for each variable."""
        acc = MultiPoly(polys[0].nvars)
        for e, c in self.terms.items():
            term = MultiPoly.constant(polys[0].nvars, c)
            for p, k in zip(polys, e):
                for _ in range(k):
                    term = term * p
            acc = acc + term
        return acc

    def partial(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    def gradient(self):
        return [self.partial(i) for i in range(self.nvars)]

    def coeff_vector(self, monomials):
        return [self.terms.get(m, rat(0)) for m in monomials]

    def divide_exact(self, divisor):
        """Exact quotient; raises ValueError if the division leaves a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = divisor.leading()
        lead_inv = 1 / lead_c if is_rational(lead_c) else lead_c.inverse()
        rem = self
        quot = MultiPoly(self.nvars)
        while rem.terms:
            e, c = rem.leading()
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if any(d < 0 for d in diff):
                raise ValueError("inexact polynomial division")
            t = MultiPoly(self.nvars, {diff: c * lead_inv})
            quot = quot + t
            rem = rem - t * divisor
        return quot

    def divides(self, other):
        try:
            other.divide_exact(self)
            return True
        except ValueError:
            return False

    def map_coeffs(self, fn):
        return MultiPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: grlex_key(ec[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = "xyzw" if self.nvars <= 4 else [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i]
                            for i, k in enumerate(e) if k)
            cs = str(c) if is_rational(c) else f"({c!r})"
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)

    def to_json(self):
        return {",".join(map(str, e)): (rat_str(c) if is_rational(c) else c.to_json())
                for e, c in self.sorted_terms()}

    @classmethod
    def from_json(cls, nvars, data, tower=QQ):
        terms = {}
        for key, val in data.items():
            expo = tuple(int(s) for s in key.split(","))
            terms[expo] = scalar_from_json(tower, val)
        return cls(nvars, terms)


def monomials(nvars, degree):
    """All exponent tuples of the given total degree, grlex-descending."""
    out = [e for e in itertools.product(range(degree + 1), repeat=nvars)
           if sum(e) == degree]
    out.sort(key=grlex_key, reverse=True)
    return out


def poly_content_free(p):
    """Primitive part over Q: scale so integer coefficients with content 1, positive lead."""
    if p.is_zero() or any(not is_rational(c) for c in p.terms.values()):
        return p.monic() if p.terms else p
    from math import gcd, lcm
    den = 1
    for c in p.terms.values():
        den = lcm(den, int(c.denominator))
    nums = [int(c.numerator * (den // c.denominator)) for c in p.terms.values()]
    g = 0
    for n in nums:
        g = gcd(g, n)
    _, lead = p.leading()
    sign = -1 if lead < 0 else 1
    return p.scale(rat(sign * den, g))


def _to_recursive(p, var):
    """View p as a univariate poly in `var` with MultiPoly coefficients."""
    coeffs = {}
    for e, c in p.terms.items():
        k = e[var]
        rest = list(e)
        rest[var] = 0
        coeffs.setdefault(k, {})[tuple(rest)] = c
    deg = max(coeffs, default=-1)
    return [MultiPoly(p.nvars, coeffs.get(i, {})) for i in range(deg + 1)]


def _from_recursive(coeffs, var, nvars):
    out = MultiPoly(nvars)
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        shift = MultiPoly(nvars, {tuple(i if j == var else 0 for j in range(nvars)): rat(1)})
        out = out + c * shift
    return out


def _poly_gcd_many(polys):
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
        if g.degree() == 0:
            break
    return poly_content_free(g)


def poly_gcd(a, b):
    """GCD over Q via primitive pseudo-remainder sequences; result is primitive."""
    if a.is_zero():
        return poly_content_free(b)
    if b.is_zero():
        return poly_content_free(a)
    var = next((i for i in range(a.nvars)
                if any(e[i] for e in a.terms) or any(e[i] for e in b.terms)), None)
    if var is None:
        return MultiPoly.constant(a.nvars, rat(1))
    ra, rb = _to_recursive(a, var), _to_recursive(b, var)
    if len(ra) < len(rb):
        ra, rb = rb, ra
    ca, cb = _poly_gcd_many(ra), _poly_gcd_many(rb)
    pa = [c.divide_exact(ca) for c in ra]
    pb = [c.divide_exact(cb) for c in rb]
    cont_gcd = poly_gcd(ca, cb)
    while len(pb) > 1:
        r = _pseudo_rem(pa, pb, var)
        if not r:
            return poly_content_free(_primitive(pb, var, a.nvars) * cont_gcd)
        pa, pb = pb, _to_recursive(_primitive(r, var, a.nvars), var)
    # the sequence dropped to degree 0 in var: the pp-gcd is trivial
    return cont_gcd


def _primitive(coeffs, var, nvars):
    """Primitive part of a recursive poly (content in the remaining vars removed)."""
    cont = _poly_gcd_many([c for c in coeffs if not c.is_zero()])
    out = [c if c.is_zero() else c.divide_exact(cont) for c in coeffs]
    return poly_content_free(_from_recursive(out, var, nvars))


def _pseudo_rem(pa, pb, var):
    """Pseudo-remainder of two recursive polys in var (lists of MultiPoly)."""
    pa = list(pa)
    lead_b = pb[-1]
    while len(pa) >= len(pb):
        shift = len(pa) - len(pb)
        lead_a = pa[-1]
        pa = [c * lead_b for c in pa]
        for i, c in enumerate(pb):
            pa[shift + i] = pa[shift + i] - c * lead_a
        while pa and pa[-1].is_zero():
            pa.pop()
        if not pa:
            break
    return pa


def homogeneous_gcd(a, b):
    """GCD of two homogeneous forms via their minimal-degree syzygy.

    A common factor G of degree g is equivalent to a relation a*v = b*u with
    deg u = deg a - g, deg v = deg b - g; scanning g downward, the first g
    admitting a nontrivial solution is the gcd degree and u = a/G recovers G.
    This stays fast where pseudo-remainder sequences blow up.
    """
    from .linalg import ExactMatrix
    if a.is_zero():
        return poly_content_free(b)
    if b.is_zero():
        return poly_content_free(a)
    if not (a.is_homogeneous() and b.is_homogeneous()):
        return poly_gcd(a, b)
    da, db = a.degree(), b.degree()
    for g in range(min(da, db), 0, -1):
        mons_v = monomials(a.nvars, db - g)
        mons_u = monomials(a.nvars, da - g)
        target = monomials(a.nvars, da + db - g)
        cols = []
        for m in mons_v:
            cols.append((a * MultiPoly(a.nvars, {m: rat(1)})).coeff_vector(target))
        for m in mons_u:
            cols.append((-b * MultiPoly(a.nvars, {m: rat(1)})).coeff_vector(target))
        kern = ExactMatrix(list(map(list, zip(*cols)))).kernel_basis()
        if not kern:
            continue
        vec = kern[0]
        u = MultiPoly(a.nvars, dict(zip(mons_u, vec[len(mons_v):])))
        return poly_content_free(a.divide_exact(u))
    return MultiPoly.constant(a.nvars, rat(1))


def common_factor(forms):
    """GCD of several homogeneous forms over Q (primitive)."""
    forms = list(forms)
    g = forms[0]
    for p in forms[1:]:
        g = homogeneous_gcd(g, p)
        if g.degree() == 0:
            break
    return g


def common_cubic_factor(forms):
    """Split equal-degree forms as (gcd, quotients); gcd may be a unit.

    Verified by exact division: each quotient times the gcd reproduces its form.
    """
    degs = {f.degree() for f in forms}
    if len(degs) != 1:
        raise ValueError("forms must have equal degree")
    if any(not f.is_homogeneous() for f in forms):
        raise ValueError("forms must be homogeneous")
    g = common_factor(forms)
    quotients = [f.divide_exact(g) for f in forms]
    return g, quotients
