import pytest

from srcy import fixtures


@pytest.fixture(scope="session")
def complexes():
    return {name: fixtures.triangulation(name) for name in fixtures.TRIANGULATIONS}


@pytest.fixture(scope="session")
def fan_data():
    fan = fixtures.subdivision_fan()
    fmono, invmono = fixtures.hypersurface_monomials()
    from srcy.toric import all_charts

    return fan, fmono, invmono, all_charts(fan, invmono)
