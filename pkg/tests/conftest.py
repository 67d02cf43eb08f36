import pytest

from geopoincare.resolution import Free, Origin, Satellite, build_graph, enumerate_sequences

ACCEPTANCE = pytest.StashKey[dict]()

ONE = (Origin(),)
TWO = (Origin(), Free(1))
CHAIN3 = (Origin(), Free(1), Satellite((1, 2)))
STAR3 = (Origin(), Free(1), Free(1))
CHAIN4 = (Origin(), Free(1), Free(1), Free(2))  # path 3-1-2-4


@pytest.fixture
def one():
    return build_graph(ONE)


@pytest.fixture
def two():
    return build_graph(TWO)


@pytest.fixture
def chain3():
    return build_graph(CHAIN3)


@pytest.fixture(scope="session")
def graphs_upto4():
    return [build_graph(seq) for seq in enumerate_sequences(4)]


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    results = request.config.stash.setdefault(ACCEPTANCE, {})
    name = request.node.name
    results[name] = ("FAIL", "")

    def passed(detail=""):
        results[name] = ("PASS", detail)

    return passed


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results, key=lambda n: int(n.split("_")[2])):
        status, detail = results[name]
        terminalreporter.write_line(f"{status}  {name}  {detail}".rstrip())
