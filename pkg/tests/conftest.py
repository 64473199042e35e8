import functools
import itertools

import pytest
from hypothesis import settings

from leibniz import GF, QQ
from leibniz.catalog import catalog
from leibniz.corpus import enumerate_corpus

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def exhaustive(n: int, p: int):
    return enumerate_corpus(n, GF(p))


@functools.lru_cache(maxsize=None)
def catalog_entries(p: int | None):
    return catalog(QQ if p is None else GF(p))


@pytest.fixture(scope="session")
def small_corpora():
    """Dims 1-2 over GF(2), GF(3), GF(5) and dim 3 over GF(2)."""
    out = [exhaustive(n, p) for p in (2, 3, 5) for n in (1, 2)]
    out.append(exhaustive(3, 2))
    return out


def brute_span(p: int, n: int, gens):
    """All vectors of span(gens) in GF(p)^n, by direct enumeration."""
    pts = {(0,) * n}
    for g in gens:
        pts = {tuple((a[k] + c * g[k]) % p for k in range(n)) for a in pts for c in range(p)}
    return frozenset(pts)


def all_vectors(p: int, n: int):
    return list(itertools.product(range(p), repeat=n))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[n])
