"""Exact projective primitives in P^2 and P^3.

Points and plane covectors are canonicalized so the first nonzero coordinate
is 1; lines carry a spanning pair of points and a cached Plucker 6-vector in
the order (01, 02, 03, 12, 13, 23), canonicalized the same way.
"""

from __future__ import annotations

from .field import rat, rat_str, is_rational
from .linalg import ExactMatrix


class CollinearError(ValueError):
    pass


class EqualPlanesError(ValueError):
    pass


class EqualLinesError(ValueError):
    pass


def canonicalize(coords):
    coords = list(coords)
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise ValueError("zero coordinate vector")
    inv = 1 / lead if is_rational(lead) else lead.inverse()
    return tuple(c * inv for c in coords)


class ProjPoint:
    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = canonicalize(coords)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def __len__(self):
        return len(self.coords)

    def map_coords(self, fn):
        return ProjPoint([fn(c) for c in self.coords])

    def to_json(self):
        return [rat_str(c) if is_rational(c) else c.to_json() for c in self.coords]


class ProjPlane:
    """A plane in P^3 as a coefficient covector."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = canonicalize(coeffs)

    def contains(self, point):
        acc = rat(0)
        for a, x in zip(self.coeffs, point.coords):
            acc = acc + a * x
        return not acc

    def contains_line(self, line):
        return self.contains(line.p) and self.contains(line.q)

    def __eq__(self, other):
        return isinstance(other, ProjPlane) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Plane" + repr(list(map(str, self.coeffs)))

    def map_coords(self, fn):
        return ProjPlane([fn(c) for c in self.coeffs])

    def to_json(self):
        return [rat_str(c) if is_rational(c) else c.to_json() for c in self.coeffs]


class ProjLine:
    """A line in P^3 spanned by two points, with cached Plucker coordinates."""

    __slots__ = ("p", "q", "plucker")

    def __init__(self, p, q):
        pc, qc = p.coords, q.coords
        raw = [pc[i] * qc[j] - pc[j] * qc[i]
               for i in range(4) for j in range(i + 1, 4)]
        if not any(raw):
            raise ValueError("points do not span a line")
        self.p = p
        self.q = q
        self.plucker = canonicalize(raw)

    def point_at(self, s, t):
        return ProjPoint([s * a + t * b for a, b in zip(self.p.coords, self.q.coords)])

    def contains(self, point):
        m = ExactMatrix([list(self.p.coords), list(self.q.coords), list(point.coords)])
        return m.rank() == 2

    def __eq__(self, other):
        return isinstance(other, ProjLine) and self.plucker == other.plucker

    def __hash__(self):
        return hash(self.plucker)

    def __repr__(self):
        return f"Line[{self.p!r}, {self.q!r}]"

    def map_coords(self, fn):
        return ProjLine(self.p.map_coords(fn), self.q.map_coords(fn))

    def to_json(self):
        return {"span": [self.p.to_json(), self.q.to_json()],
                "plucker": [rat_str(c) if is_rational(c) else c.to_json()
                            for c in self.plucker]}


def span_plane(p1, p2, p3):
    """The plane through three points of P^3; raises CollinearError."""
    m = ExactMatrix([list(p1.coords), list(p2.coords), list(p3.coords)])
    if m.rank() < 3:
        raise CollinearError("points are collinear")
    kern = m.kernel_basis()
    return ProjPlane(kern[0])


def plane_through_line(line, point):
    """The plane spanned by a line and a point off it."""
    return span_plane(line.p, line.q, point)


def meet_planes(h1, h2):
    """The intersection line of two distinct planes."""
    if h1 == h2:
        raise EqualPlanesError("planes coincide")
    m = ExactMatrix([list(h1.coeffs), list(h2.coeffs)])
    kern = m.kernel_basis()
    return ProjLine(ProjPoint(kern[0]), ProjPoint(kern[1]))


def meet_line_plane(line, plane):
    """The intersection point of a line not contained in the plane."""
    a = sum((c * x for c, x in zip(plane.coeffs, line.p.coords)), rat(0))
    b = sum((c * x for c, x in zip(plane.coeffs, line.q.coords)), rat(0))
    if not a and not b:
        raise ValueError("line lies in the plane")
    # a*s + b*t = 0 at the meeting point
    return line.point_at(b, -a)


def plucker_pairing(l1, l2):
    a, b = l1.plucker, l2.plucker
    return (a[0] * b[5] - a[1] * b[4] + a[2] * b[3]
            + a[3] * b[2] - a[4] * b[1] + a[5] * b[0])


def lines_meet(l1, l2):
    """Whether two distinct lines of P^3 intersect."""
    if l1 == l2:
        raise EqualLinesError("lines coincide")
    return not plucker_pairing(l1, l2)


def meet_lines(l1, l2):
    """The intersection point of two distinct meeting lines."""
    m = ExactMatrix([[l1.p.coords[i], l1.q.coords[i],
                      -l2.p.coords[i], -l2.q.coords[i]] for i in range(4)])
    kern = m.kernel_basis()
    if len(kern) != 1:
        raise ValueError("lines do not meet in a single point")
    s, t = kern[0][0], kern[0][1]
    return l1.point_at(s, t)


def plucker_relation_holds(line):
    v = line.plucker
    return not (v[0] * v[5] - v[1] * v[4] + v[2] * v[3])
