import pytest

from jointfix import Family, GenSpec, build_map, build_poset, identity_map, make_standard_poset


@pytest.fixture
def chain3():
    return build_poset(["0", "1", "2"], [("0", "1"), ("1", "2")])


@pytest.fixture
def powerset2():
    return make_standard_poset(GenSpec("powerset", 2))


@pytest.fixture
def vposet():
    """Bottom with two incomparable atoms above it."""
    return build_poset(["bot", "a", "b"], [("bot", "a"), ("bot", "b")])


@pytest.fixture
def succ3(chain3):
    """0 -> 1 -> 2 -> 2 on the 3-chain."""
    return build_map(chain3, "f", {"0": "1", "1": "2", "2": "2"})


@pytest.fixture
def joins2(powerset2):
    """x v {1} and x v {2} on the powerset of {1, 2}."""
    p = powerset2
    f = build_map(p, "j1", {"{}": "{1}", "{1}": "{1}", "{2}": "{1,2}", "{1,2}": "{1,2}"})
    g = build_map(p, "j2", {"{}": "{2}", "{1}": "{1,2}", "{2}": "{2}", "{1,2}": "{1,2}"})
    return Family(p, (f, g))


@pytest.fixture
def id_family(chain3):
    return Family.of(identity_map(chain3))


def pytest_terminal_summary(terminalreporter):
    from _acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
