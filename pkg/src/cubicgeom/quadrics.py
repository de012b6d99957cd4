"""Webs of quadrics attached to a tritangent plane, the 45x48/360 quadric
census, the Steinerian desmic quartic with its 12 nodes and 3 desmic
tetrahedra, and the grouping of the 135 line-intersection points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .field import rat, is_rational
from .linalg import ExactMatrix, det3
from .multipoly import MultiPoly, monomials
from .projgeom import (ProjPoint, ProjPlane, plane_through_line, span_plane,
                       meet_lines)
from . import incidence as inc
from .forms import tritangent_planes


class NoSolutionError(ValueError):
    pass


class WrongDimensionError(ValueError):
    pass


class NodeVerificationFailedError(ValueError):
    pass


class NoDesmicPartitionError(ValueError):
    pass


QUADRIC_MONOMIALS = monomials(4, 2)


def _scalar_inv(x):
    return 1 / x if is_rational(x) else x.inverse()


class QuadricSurface:
    """A quadric as a canonicalized symmetric 4x4 matrix."""

    __slots__ = ("mat",)

    def __init__(self, mat):
        lead = next((mat[r][c] for r in range(4) for c in range(4) if mat[r][c]),
                    None)
        if lead is None:
            raise ValueError("zero quadric")
        inv = _scalar_inv(lead)
        self.mat = tuple(tuple(x * inv for x in row) for row in mat)

    @classmethod
    def from_form(cls, q):
        half = rat(1, 2)
        mat = [[rat(0)] * 4 for _ in range(4)]
        for (e, c) in q.terms.items():
            idx = [k for k in range(4) for _ in range(e[k])]
            r, s = idx
            if r == s:
                mat[r][r] = c
            else:
                mat[r][s] = c * half
                mat[s][r] = c * half
        return cls(mat)

    def form(self):
        acc = MultiPoly(4)
        for r in range(4):
            for c in range(4):
                if self.mat[r][c]:
                    e = [0] * 4
                    e[r] += 1
                    e[c] += 1
                    acc = acc + MultiPoly(4, {tuple(e): self.mat[r][c]})
        return acc

    def rank(self):
        return ExactMatrix([list(r) for r in self.mat]).rank()

    def kernel_point(self):
        kern = ExactMatrix([list(r) for r in self.mat]).kernel_basis()
        if len(kern) != 1:
            raise ValueError("kernel is not a single point")
        return ProjPoint(kern[0])

    def coeff_vector(self):
        q = self.form()
        return [q.coefficient(m) for m in QUADRIC_MONOMIALS]

    def __eq__(self, other):
        return isinstance(other, QuadricSurface) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def to_json(self):
        from .field import rat_str
        return [[rat_str(x) if is_rational(x) else x.to_json() for x in row]
                for row in self.mat]


def _restrict_to_plane(form, plane):
    basis = ExactMatrix([list(plane.coeffs)]).kernel_basis()
    params = [MultiPoly.linear_form([basis[m][k] for m in range(3)])
              for k in range(4)]
    return form.substitute(params)


def residual_quadric(surface, plane, pencil_planes):
    """The unique (Q, alpha) with pi_1 pi_2 pi_3 = plane*Q + alpha*F.

    alpha comes from restricting both cubics to the tritangent plane (where
    the plane*Q term dies), and Q by one exact division; Q cuts the surface
    along the three residual conics of the pencil planes.
    """
    product = MultiPoly.constant(4, rat(1))
    for h in pencil_planes:
        product = product * MultiPoly.linear_form(h.coeffs)
    prod_r = _restrict_to_plane(product, plane)
    f_r = _restrict_to_plane(surface.F, plane)
    if prod_r.is_zero():
        alpha = rat(0)
    else:
        lead_m, lead_c = f_r.leading()
        top = prod_r.coefficient(lead_m)
        alpha = top * _scalar_inv(lead_c)
        if f_r.scale(alpha) != prod_r:
            raise NoSolutionError("restricted cubics are not proportional")
    remainder = product - surface.F.scale(alpha)
    if remainder.is_zero():
        raise NoSolutionError("degenerate pencil choice")
    q = remainder.divide_exact(MultiPoly.linear_form(plane.coeffs))
    return QuadricSurface.from_form(q), alpha


def steinerian_nodes(trio, lines):
    """The 12 intersection points of the residual line-pairs cut by the 12
    tritangent planes through the trio's lines other than the trio's own.

    Ordered by trio line, then by the scan order of the other tritangent
    trios; the first four nodes belong to the first line, and so on.
    """
    nodes = []
    for lab in sorted(trio, key=lambda l: inc.LABEL_INDEX[l]):
        for other in inc.TRITANGENT_TRIOS:
            if lab not in other or other == frozenset(trio):
                continue
            m1, m2 = sorted(other - {lab}, key=lambda l: inc.LABEL_INDEX[l])
            nodes.append(meet_lines(lines[m1], lines[m2]))
    if len(nodes) != 12 or len(set(nodes)) != 12:
        raise NodeVerificationFailedError("expected 12 distinct nodes")
    return nodes


def _eval_monomial(expo, coords):
    acc = rat(1)
    for x, k in zip(coords, expo):
        for _ in range(k):
            acc = acc * x
    return acc


def _face_planes(tetrad):
    return [span_plane(*(tetrad[j] for j in range(4) if j != i)) for i in range(4)]


def _face_product(tetrad):
    acc = MultiPoly.constant(4, rat(1))
    for h in _face_planes(tetrad):
        acc = acc * MultiPoly.linear_form(h.coeffs)
    return acc


def desmic_partition(nodes):
    """The unique split of the 12 nodes into 3 tetrahedra with linearly
    dependent face-plane products (checked over all 5775 partitions)."""
    tetrads = {}
    probes = [(rat(1), rat(2), rat(3), rat(5)), (rat(1), rat(-1), rat(2), rat(7)),
              (rat(2), rat(3), rat(-5), rat(1))]
    for combo in itertools.combinations(range(12), 4):
        pts = [nodes[i] for i in combo]
        if not ExactMatrix([list(p.coords) for p in pts]).det():
            continue
        prod = _face_product(pts)
        tetrads[combo] = [prod.evaluate(p) for p in probes]
    found = []
    deg4 = monomials(4, 4)
    for part in _partitions_into_tetrads(12):
        if any(t not in tetrads for t in part):
            continue
        if det3([tetrads[t] for t in part]):
            continue
        forms = [_face_product([nodes[i] for i in t]) for t in part]
        rows = [f.coeff_vector(deg4) for f in forms]
        if ExactMatrix(rows).rank() == 2:
            found.append(part)
    if len(found) != 1:
        raise NoDesmicPartitionError(f"found {len(found)} desmic partitions")
    return found[0]


def _partitions_into_tetrads(n):
    idx = list(range(n))
    for first_rest in itertools.combinations(idx[1:], 3):
        t1 = (0,) + first_rest
        rem = [i for i in idx if i not in t1]
        for second_rest in itertools.combinations(rem[1:], 3):
            t2 = (rem[0],) + second_rest
            t3 = tuple(i for i in rem if i not in t2)
            yield (t1, t2, t3)


@dataclass
class QuadricWeb:
    """A 4-dimensional linear system of quadrics through six of the 12 nodes.

    The base points are one vertex pair from each desmic tetrahedron, chosen
    as the first selection (in a deterministic scan) whose span of quadrics
    is 4-dimensional and whose Jacobian determinant is a quartic singular at
    all 12 nodes.
    """

    trio: frozenset
    plane: ProjPlane
    basis: list              # 4 QuadricSurfaces
    nodes: list              # the 12 nodes, in construction order
    tetrads: tuple           # desmic partition as index tetrads
    base_points: tuple       # indices of the 6 base nodes

    def contains(self, quadric):
        rows = [b.coeff_vector() for b in self.basis]
        return ExactMatrix(rows + [quadric.coeff_vector()]).rank() == 4

    def member(self, lam):
        mat = [[sum((l * b.mat[r][c] for l, b in zip(lam, self.basis)), rat(0))
                for c in range(4)] for r in range(4)]
        return QuadricSurface(mat)


def _jacobian_det(basis):
    """det [S_0 x | S_1 x | S_2 x | S_3 x] for symmetric matrices S_k."""
    cols = [[MultiPoly.linear_form(row) for row in b.mat] for b in basis]
    return _det4([[cols[c][r] for c in range(4)] for r in range(4)])


def quadric_web(surface, trio, lines, plane=None):
    """The web of quadrics attached to a tritangent plane.

    The basis spans the quadrics through six of the 12 Steinerian nodes (one
    vertex pair from each desmic tetrahedron); the admissible pair choice is
    found by a deterministic scan and yields a Jacobian quartic singular at
    all 12 nodes.  The full family of residual quadrics spans 8 dimensions
    (see residual_family_rank), so this 4-dimensional system is the one cut
    by the base-point conditions.
    """
    if plane is None:
        from .forms import tritangent_plane
        plane = tritangent_plane(trio, lines)
    nodes = steinerian_nodes(trio, lines)
    part = desmic_partition(nodes)
    for pairsel in itertools.product(itertools.combinations(range(4), 2),
                                     repeat=3):
        base_idx = tuple(part[ti][a] for ti, pair in enumerate(pairsel)
                         for a in pair)
        rows = [[_eval_monomial(e, nodes[i].coords) for e in QUADRIC_MONOMIALS]
                for i in base_idx]
        kern = ExactMatrix(rows).kernel_basis()
        if len(kern) != 4:
            continue
        basis = [QuadricSurface(_symmetric_matrix(vec)) for vec in kern]
        k_form = _jacobian_det(basis)
        if k_form.is_zero() or k_form.degree() != 4:
            continue
        grad = k_form.gradient()
        if all(k_form.evaluate(n.coords) == 0
               and all(g.evaluate(n.coords) == 0 for g in grad)
               for n in nodes):
            return QuadricWeb(frozenset(trio), plane, basis, nodes, part,
                              base_idx)
    raise WrongDimensionError("no admissible base-point selection found")


def _symmetric_matrix(coeff_vec):
    mat = [[rat(0)] * 4 for _ in range(4)]
    half = rat(1, 2)
    for (e, c) in zip(QUADRIC_MONOMIALS, coeff_vec):
        if not c:
            continue
        idx = [k for k in range(4) for _ in range(e[k])]
        r, s = idx
        if r == s:
            mat[r][r] = c
        else:
            mat[r][s] = mat[r][s] + c * half
            mat[s][r] = mat[s][r] + c * half
    return mat


def _second_plane(line):
    for k in range(4):
        e = [rat(0)] * 4
        e[k] = rat(1)
        pt = ProjPoint(e)
        if not line.contains(pt):
            return plane_through_line(line, pt)
    raise ValueError("line contains all unit points")


def residual_family_rank(surface, trio, lines, plane=None):
    """The exact dimension of the span of all residual quadrics.

    The residual quadric is multilinear in the three pencil members, so the
    span is generated by the 2x2x2 parameter corners; the measured rank is 8.
    """
    trio_sorted = sorted(trio, key=lambda lab: inc.LABEL_INDEX[lab])
    trio_lines = [lines[lab] for lab in trio_sorted]
    if plane is None:
        from .forms import tritangent_plane
        plane = tritangent_plane(trio, lines)
    others = [_second_plane(l) for l in trio_lines]

    def pencil(i, t):
        return ProjPlane([a + t * b for a, b in
                          zip(plane.coeffs, others[i].coeffs)])

    rows = []
    for t1, t2, t3 in itertools.product((rat(0), rat(1), rat(2)), repeat=3):
        q, _ = residual_quadric(surface, plane,
                                [pencil(0, t1), pencil(1, t2), pencil(2, t3)])
        rows.append(q.coeff_vector())
    return ExactMatrix(rows).rank()


@dataclass
class SteinerianQuartic:
    form: MultiPoly
    nodes: list
    web: QuadricWeb
    tetrads: list = None


def steinerian(surface, web, lines):
    """The Steinerian quartic of the web, with its 12 constructed nodes.

    K(x) = det[S_0 x | S_1 x | S_2 x | S_3 x] over the web basis; the nodes
    are the intersection points of the residual line-pairs cut by the 12
    tritangent planes through the trio's lines other than the trio's own
    plane, verified by K = 0, gradient zero and membership on the surface.
    """
    k_form = _jacobian_det(web.basis)
    if k_form.is_zero() or k_form.degree() != 4:
        raise NodeVerificationFailedError("Steinerian is not a quartic")
    nodes = web.nodes
    grad = k_form.gradient()
    for node in nodes:
        if k_form.evaluate(node.coords) or not surface.contains_point(node):
            raise NodeVerificationFailedError(f"node {node} fails K = F = 0")
        if any(g.evaluate(node.coords) for g in grad):
            raise NodeVerificationFailedError(f"gradient does not vanish at {node}")
    tetrads = [tuple(nodes[i] for i in t) for t in web.tetrads]
    return SteinerianQuartic(k_form, nodes, web, tetrads)


def _det4(m):
    acc = MultiPoly(4)
    for perm in itertools.permutations(range(4)):
        sign = rat(1)
        p = list(perm)
        for i in range(4):
            for j in range(i + 1, 4):
                if p[i] > p[j]:
                    sign = -sign
        term = MultiPoly.constant(4, sign)
        for r in range(4):
            term = term * m[r][perm[r]]
        acc = acc + term
    return acc


def six_line_quadric_census(surface, lines, planes=None, trios=None):
    """For each tritangent plane, the 64 residual quadrics of tritangent
    pencil members, with per-set nonsingular counts and global deduplication."""
    planes = planes if planes is not None else tritangent_planes(lines)
    trios = trios if trios is not None else inc.TRITANGENT_TRIOS
    per_set = {}
    membership = {}
    for trio in trios:
        plane = planes[trio]
        choices = []
        for lab in sorted(trio, key=lambda l: inc.LABEL_INDEX[l]):
            others = [planes[t] for t in inc.TRITANGENT_TRIOS
                      if lab in t and t != trio]
            choices.append(others)
        nonsingular = []
        singular_ranks = []
        for triple in itertools.product(*choices):
            q, _ = residual_quadric(surface, plane, list(triple))
            r = q.rank()
            if r == 4:
                nonsingular.append(q)
                membership.setdefault(q, set()).add(trio)
            else:
                singular_ranks.append(r)
        per_set[trio] = {"nonsingular": nonsingular,
                         "singular_ranks": sorted(singular_ranks)}
    distinct = set(membership)
    multiplicities = sorted(len(v) for v in membership.values())
    return {"per_set": per_set, "distinct": distinct,
            "membership": membership, "multiplicities": multiplicities}


def intersection_point_grouping(lines):
    """The 135 pairwise intersection points of the 27 lines, grouped 45x12.

    The group of a tritangent plane consists of the intersection points of
    the residual line-pairs of the 12 other tritangent planes through its
    three lines; every point lies in exactly 4 groups.
    """
    points = {}
    for l1, l2 in itertools.combinations(inc.ALL_LABELS, 2):
        if inc.meets_rule(l1, l2):
            points[frozenset({l1, l2})] = meet_lines(lines[l1], lines[l2])
    groups = {}
    for trio in inc.TRITANGENT_TRIOS:
        members = []
        for lab in sorted(trio, key=lambda l: inc.LABEL_INDEX[l]):
            for other in inc.TRITANGENT_TRIOS:
                if lab in other and other != trio:
                    members.append(points[other - {lab}])
        groups[trio] = members
    return points, groups
