import pytest

from deltaprime import SqueezePath


def test_rho_rules():
    assert SqueezePath.barrier_first(0.5).rho_of(1e-3) == 0.5
    assert SqueezePath.adjacent().rho_of(1e-3) == 0.0
    assert SqueezePath.power_law(2.0, 2.0).rho_of(0.1) == pytest.approx(0.02)


def test_zero_constant_power_law_is_adjacent():
    assert SqueezePath.power_law(0.0, 2.0) == SqueezePath.adjacent()


def test_constructor_validation():
    with pytest.raises(ValueError):
        SqueezePath.barrier_first(0.0)
    with pytest.raises(ValueError):
        SqueezePath.power_law(-1.0, 2.0)
    with pytest.raises(ValueError):
        SqueezePath.power_law(1.0, 0.0)


@pytest.mark.parametrize("spec,expected", [
    ("adjacent", SqueezePath.adjacent()),
    ("barrier-first:0.5", SqueezePath.barrier_first(0.5)),
    ("linear", SqueezePath.power_law(1.0, 1.0)),
    ("linear:2", SqueezePath.power_law(2.0, 1.0)),
    ("quadratic", SqueezePath.power_law(1.0, 2.0)),
    ("quadratic:0.5", SqueezePath.power_law(0.5, 2.0)),
    ("power:3:1.5", SqueezePath.power_law(3.0, 1.5)),
])
def test_parse_round_trip(spec, expected):
    path = SqueezePath.parse(spec)
    assert path == expected
    assert SqueezePath.parse(path.describe()) == path


@pytest.mark.parametrize("spec", ["bogus", "adjacent:1", "barrier-first",
                                  "power:1", "linear:x", "power:1:2:3"])
def test_parse_rejects_malformed_specs(spec):
    with pytest.raises(ValueError):
        SqueezePath.parse(spec)
