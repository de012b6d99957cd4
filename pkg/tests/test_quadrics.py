from collections import Counter

import pytest

from cubicgeom import incidence as inc
from cubicgeom.field import rat
from cubicgeom.linalg import ExactMatrix
from cubicgeom.multipoly import MultiPoly, monomials
from cubicgeom.quadrics import (QuadricSurface, residual_quadric,
                                residual_family_rank, steinerian_nodes,
                                desmic_partition, quadric_web, steinerian,
                                six_line_quadric_census,
                                intersection_point_grouping, _face_product)


@pytest.fixture(scope="module")
def trio(sorted_trios):
    return sorted_trios[0]


@pytest.fixture(scope="module")
def web(surface, trio, lines, planes):
    return quadric_web(surface, trio, lines, planes[trio])


@pytest.fixture(scope="module")
def quartic(surface, web, lines):
    return steinerian(surface, web, lines)


def test_residual_quadric_of_the_plane_itself(surface, trio, lines, planes):
    plane = planes[trio]
    q, alpha = residual_quadric(surface, plane, [plane, plane, plane])
    form = MultiPoly.linear_form(plane.coeffs)
    assert q == QuadricSurface.from_form(form * form)
    assert alpha == 0


def test_residual_identity(surface, trio, lines, planes):
    # pi_1 pi_2 pi_3 = pi*Q + alpha*F for a genuine triple of tritangent
    # pencil members
    plane = planes[trio]
    labs = sorted(trio, key=lambda l: inc.LABEL_INDEX[l])
    others = [next(planes[t] for t in inc.TRITANGENT_TRIOS
                   if lab in t and t != trio) for lab in labs]
    q, alpha = residual_quadric(surface, plane, others)
    prod = MultiPoly.constant(4, rat(1))
    for h in others:
        prod = prod * MultiPoly.linear_form(h.coeffs)
    residue = prod - surface.F.scale(alpha)
    quotient = residue.divide_exact(MultiPoly.linear_form(plane.coeffs))
    assert QuadricSurface.from_form(quotient) == q


def test_full_family_spans_eight(surface, trio, lines, planes):
    assert residual_family_rank(surface, trio, lines, planes[trio]) == 8


def test_twelve_nodes_constructed(surface, trio, lines):
    nodes = steinerian_nodes(trio, lines)
    assert len(nodes) == 12
    assert len(set(nodes)) == 12
    for n in nodes:
        assert surface.contains_point(n)


def test_desmic_partition_unique_and_dependent(trio, lines):
    nodes = steinerian_nodes(trio, lines)
    part = desmic_partition(nodes)
    assert sorted(i for t in part for i in t) == list(range(12))
    deg4 = monomials(4, 4)
    rows = [_face_product([nodes[i] for i in t]).coeff_vector(deg4)
            for t in part]
    assert ExactMatrix(rows).rank() == 2


def test_web_dimension_four(web):
    assert len(web.basis) == 4
    rows = [b.coeff_vector() for b in web.basis]
    assert ExactMatrix(rows).rank() == 4


def test_web_members_vanish_at_base_points(web):
    for b in web.basis:
        for idx in web.base_points:
            node = web.nodes[idx]
            assert b.form().evaluate(node.coords) == 0


def test_steinerian_quartic_nodes(surface, quartic):
    assert quartic.form.degree() == 4
    grad = quartic.form.gradient()
    for node in quartic.nodes:
        assert quartic.form.evaluate(node.coords) == 0
        assert all(g.evaluate(node.coords) == 0 for g in grad)
        assert surface.contains_point(node)


def test_nodes_come_from_singular_members(web, quartic):
    # K(x) = det[S_0 x | ... | S_3 x], so K(v) = 0 exhibits a combination
    # lambda with (sum lambda_k S_k) v = 0: a member singular at v
    for v in quartic.nodes:
        cols = [[sum(b.mat[r][c] * v.coords[c] for c in range(4))
                 for b in web.basis] for r in range(4)]
        kerns = ExactMatrix(cols).kernel_basis()
        assert kerns, "node admits no singular member"
        lam = kerns[0]
        member = web.member(lam)
        assert ExactMatrix([list(row) for row in member.mat]).rank() <= 3
        assert all(sum(member.mat[r][c] * v.coords[c] for c in range(4)) == 0
                   for r in range(4))


def test_census_counts(surface, lines, planes):
    census = six_line_quadric_census(surface, lines, planes)
    per = Counter(len(v["nonsingular"]) for v in census["per_set"].values())
    assert per == Counter({48: 45})
    assert len(census["distinct"]) == 360
    assert set(census["multiplicities"]) == {6}
    for v in census["per_set"].values():
        assert v["singular_ranks"] == [2] * 16


def test_grouping_135_points(lines):
    points, groups = intersection_point_grouping(lines)
    assert len(points) == 135
    assert len(set(points.values())) == 135
    assert len(groups) == 45
    counts = Counter(p for g in groups.values() for p in g)
    assert all(len(g) == 12 for g in groups.values())
    assert set(counts.values()) == {4}


def test_steinerian_group_matches_nodes(trio, lines, quartic):
    # the grouping entry of the trio's plane consists of its quartic's nodes
    _, groups = intersection_point_grouping(lines)
    assert sorted(groups[frozenset(trio)], key=lambda p: tuple(map(str, p.coords))) == \
        sorted(quartic.nodes, key=lambda p: tuple(map(str, p.coords)))
