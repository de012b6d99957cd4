import pytest

from cubicgeom import incidence as inc
from cubicgeom.blowup import build_surface, labeled_lines
from cubicgeom.fixtures import species_points
from cubicgeom.forms import tritangent_planes
from cubicgeom.species import (conjugation_action, classify_species,
                               real_tritangent_covectors, involution_census,
                               SPECIES_DS_PATTERN, NotStable)

EXPECT = {1: (27, 45), 2: (15, 15), 3: (7, 5), 4: (3, 7)}


@pytest.fixture(scope="module", params=[1, 2, 3, 4])
def classified(request):
    k = request.param
    surface = build_surface(species_points(k))
    lines = labeled_lines(surface)
    action = conjugation_action(surface, lines)
    return k, surface, lines, action, classify_species(action)


def test_species_assignment(classified):
    k, _, _, _, report = classified
    assert report.species == k
    assert (report.real_lines, report.real_tritangents) == EXPECT[k]


def test_double_six_profiles(classified):
    k, _, _, _, report = classified
    assert (report.ds_both_fixed, report.ds_swapped) == SPECIES_DS_PATTERN[k]


def test_action_is_group_involution(classified, group):
    _, _, _, action, _ = classified
    assert action.is_involution()
    assert action.preserves_incidence()
    assert action.perm in group


def test_covector_count_matches_trio_count(classified):
    _, _, lines, action, report = classified
    planes = tritangent_planes(lines)
    assert real_tritangent_covectors(action, planes) == report.real_tritangents


def test_one_pair_swaps_a5_a6():
    surface = build_surface(species_points(2))
    lines = labeled_lines(surface)
    action = conjugation_action(surface, lines)
    i5, i6 = inc.LABEL_INDEX[inc.a(5)], inc.LABEL_INDEX[inc.a(6)]
    assert action.perm[i5] == i6 and action.perm[i6] == i5


def test_unstable_points_rejected():
    from cubicgeom.fixtures import gauss_tower
    from cubicgeom.blowup import SixPoints
    tower = gauss_tower()
    i, one, zero = tower.gen(), tower.one(), tower.zero()
    pts = SixPoints([[one, zero, zero], [zero, one, zero], [zero, zero, one],
                     [one, one, one], [one, 1 + i, 2 - i],
                     [one, 2 + i * 3, 5 - i]], tower)
    surface = build_surface(pts)
    lines = labeled_lines(surface)
    with pytest.raises(NotStable):
        conjugation_action(surface, lines)


def test_census_contains_all_five_profiles(group):
    census = involution_census(group)
    profiles = set(census)
    assert {(27, 45, 36, 0), (15, 15, 15, 1), (7, 5, 6, 2), (3, 7, 1, 3),
            (3, 13, 0, 12)} <= profiles


def test_species_five_has_no_real_double_six(group):
    # the (3,13) profile fixes no double-six setwise in either sense beyond
    # swaps: no six of pairwise-skew lines is fixed as a six
    census = involution_census(group)
    assert (3, 13, 0, 12) in census
    target = None
    for g in group:
        if inc.compose(g, g) != tuple(range(27)):
            continue
        prof = inc.involution_profile(g, inc.enumerate_double_sixes())
        if prof == (3, 13, 0, 12):
            target = g
            break
    assert target is not None
    for ds in inc.enumerate_double_sixes():
        for six in ds:
            assert inc.act_on_label_set(target, six) != six
