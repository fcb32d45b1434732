import pytest

from hopfcalc import Field

FIELDS = [Field(0), Field(3), Field(5), Field(7)]
FIELD_IDS = [str(F) for F in FIELDS]


@pytest.fixture(params=FIELDS, ids=FIELD_IDS)
def field(request):
    return request.param


@pytest.fixture(params=[Field(3), Field(5)], ids=["F3", "F5"])
def small_prime_field(request):
    return request.param


@pytest.fixture(scope="session")
def census3():
    from hopfcalc import census_h4h4
    return census_h4h4(3)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import VERDICTS

    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
