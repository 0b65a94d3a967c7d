import pytest

from stringcone.arquiver import build_ar
from stringcone.quiver import adapted_word, parse_quiver
from stringcone.wiring import build_wiring

# the three worked instances used throughout: rank two, the fork-source rank
# three quiver, and the rank four triple-fork quiver
A2_SPEC = "2>1"
A3_SPEC = "2>1,2>3"
D4_SPEC = "4>3,3>1,3>2"


@pytest.fixture(scope="session")
def a2():
    q = parse_quiver(A2_SPEC)
    return q, adapted_word(q)


@pytest.fixture(scope="session")
def a3():
    q = parse_quiver(A3_SPEC)
    return q, adapted_word(q)


@pytest.fixture(scope="session")
def d4():
    q = parse_quiver(D4_SPEC)
    return q, adapted_word(q)


@pytest.fixture(scope="session")
def a3_ar(a3):
    return build_ar(*a3)


@pytest.fixture(scope="session")
def d4_ar(d4):
    return build_ar(*d4)


@pytest.fixture(scope="session")
def a3_wd(a3):
    _, word = a3
    return build_wiring(word, 3)
