import pytest

from cubicgeom.field import rat
from cubicgeom.projgeom import (ProjPoint, ProjPlane, ProjLine, span_plane,
                                plane_through_line, meet_planes, meet_lines,
                                meet_line_plane, lines_meet, plucker_pairing,
                                plucker_relation_holds, CollinearError)


def _pt(*xs):
    return ProjPoint([rat(x) for x in xs])


def test_point_canonicalization():
    assert _pt(2, 4, 6, 0) == _pt(1, 2, 3, 0)
    assert _pt(0, -3, 6, 9) == _pt(0, 1, -2, -3)


def test_span_and_meet_roundtrip():
    p1, p2, p3 = _pt(1, 0, 0, 0), _pt(0, 1, 0, 0), _pt(0, 0, 1, 1)
    h = span_plane(p1, p2, p3)
    for p in (p1, p2, p3):
        assert h.contains(p)
    with pytest.raises(CollinearError):
        span_plane(p1, p2, _pt(1, 1, 0, 0))


def test_plucker_relation_and_meeting():
    l1 = ProjLine(_pt(1, 0, 0, 0), _pt(0, 1, 0, 0))
    l2 = ProjLine(_pt(1, 0, 0, 0), _pt(0, 0, 1, 0))
    l3 = ProjLine(_pt(0, 0, 1, 0), _pt(0, 0, 0, 1))
    assert plucker_relation_holds(l1)
    assert lines_meet(l1, l2)
    assert not lines_meet(l1, l3)
    assert plucker_pairing(l1, l2) == 0
    assert meet_lines(l1, l2) == _pt(1, 0, 0, 0)


def test_meet_planes_and_line_plane():
    h1 = ProjPlane([rat(1), rat(0), rat(0), rat(0)])
    h2 = ProjPlane([rat(0), rat(1), rat(0), rat(0)])
    axis = meet_planes(h1, h2)
    assert h1.contains(axis.p) and h1.contains(axis.q)
    assert h2.contains(axis.p) and h2.contains(axis.q)
    line = ProjLine(_pt(1, 0, 0, 0), _pt(0, 0, 0, 1))
    assert meet_line_plane(line, h1) == _pt(0, 0, 0, 1)


def test_plane_through_line():
    line = ProjLine(_pt(1, 0, 0, 0), _pt(0, 1, 0, 0))
    h = plane_through_line(line, _pt(0, 0, 1, 0))
    assert h == ProjPlane([rat(0), rat(0), rat(0), rat(1)])
