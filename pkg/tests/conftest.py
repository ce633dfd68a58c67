import pytest
from hypothesis import strategies as st

from odd_diagrams.perms import make_permutation


def perm_strategy(max_n=8, min_n=1):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    ).map(make_permutation)


def perm_pair_strategy(max_n=6, min_n=1):
    """Two permutations of the same degree."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(
            st.permutations(list(range(1, n + 1))),
            st.permutations(list(range(1, n + 1))),
        )
    ).map(lambda pair: (make_permutation(pair[0]), make_permutation(pair[1])))


def pytest_addoption(parser):
    parser.addoption(
        "--long",
        action="store_true",
        default=False,
        help="also run the long-running sweeps (n=8 factorization, n=10 census)",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "long: long-running sweep, needs --long")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)
