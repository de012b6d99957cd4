import pytest

from cubicgeom import incidence as inc
from cubicgeom.fixtures import fixture_surface
from cubicgeom.blowup import labeled_lines
from cubicgeom.forms import tritangent_planes, cayley_salmon


@pytest.fixture(scope="session")
def surface():
    return fixture_surface()


@pytest.fixture(scope="session")
def lines(surface):
    return labeled_lines(surface)


@pytest.fixture(scope="session")
def planes(lines):
    return tritangent_planes(lines)


@pytest.fixture(scope="session")
def sorted_trios():
    return sorted(inc.TRITANGENT_TRIOS,
                  key=lambda t: sorted(inc.LABEL_INDEX[l] for l in t))


@pytest.fixture(scope="session")
def first_cs(surface, lines, planes):
    pair = sorted(inc.enumerate_trieder_pairs())[0]
    return cayley_salmon(surface, lines, pair, planes)


@pytest.fixture(scope="session")
def group():
    return inc.group_closure()
