from cubicgeom import incidence as inc
from cubicgeom.field import rat
from cubicgeom.multipoly import MultiPoly
from cubicgeom.forms import (tritangent_plane, cayley_salmon,
                             hexahedral_from_cs, cs_from_hexahedral,
                             hexahedral_lines, segre_membership)


def test_tritangent_planes_contain_their_trios(lines, planes):
    assert len(planes) == 45
    for trio, plane in planes.items():
        for lab in trio:
            line = lines[lab]
            assert plane.contains(line.p) and plane.contains(line.q)


def test_tritangent_plane_single(lines):
    trio = inc.TRITANGENT_TRIOS[0]
    plane = tritangent_plane(trio, lines)
    for lab in trio:
        assert plane.contains(lines[lab].p)


def test_cayley_salmon_identity(surface, first_cs):
    forms = first_cs.plane_forms()
    prod1 = forms[0] * forms[1] * forms[2]
    prod2 = forms[3] * forms[4] * forms[5]
    assert prod1.scale(first_cs.lam) + prod2.scale(first_cs.mu) == surface.F


def test_cayley_salmon_many_pairs(surface, lines, planes):
    for pair in sorted(inc.enumerate_trieder_pairs())[:12]:
        cs = cayley_salmon(surface, lines, pair, planes)
        assert cs.lam != 0 and cs.mu != 0


def test_hexahedral_identities(surface, first_cs):
    hexforms = hexahedral_from_cs(first_cs, surface)
    assert len(hexforms) == 3
    for hexform in hexforms:
        total = MultiPoly(4)
        cubes = MultiPoly(4)
        for x in hexform.x:
            total = total + x
            cubes = cubes + x * x * x
        assert total.is_zero()
        assert cubes == surface.F.scale(hexform.c)
        assert hexform.c != 0


def test_hexahedral_lines_and_double_six(surface, lines, first_cs):
    hexform = hexahedral_from_cs(first_cs, surface)[0]
    matched, ds = hexahedral_lines(hexform, lines)
    assert len(matched) == 15
    assert len(set(matched.values())) == 15
    assert inc.is_double_six_labels(ds)


def test_cs_from_hexahedral_ten_splits(surface, first_cs):
    hexform = hexahedral_from_cs(first_cs, surface)[0]
    splits = cs_from_hexahedral(hexform, surface)
    assert len(splits) == 10


def test_segre_membership(surface, first_cs):
    # surface points land on the Segre-cubic slice cut by the extra relation
    from cubicgeom.blowup import sample_surface_points
    hexform = hexahedral_from_cs(first_cs, surface)[0]
    pts = sample_surface_points(surface, 5, seed=2)
    assert segre_membership(hexform, pts)
