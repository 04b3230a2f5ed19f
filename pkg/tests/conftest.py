import functools

import pytest

from colebrook.sweep import ERROR_MAP_BOUNDS, DomainSpec, error_map, iteration_map

_CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line; the last call for a number wins."""

    def record(number: int, ok: bool, detail: str) -> None:
        _CRITERIA[number] = (bool(ok), detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        ok, detail = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


ERROR_DOMAIN = DomainSpec.sobol(65536, **ERROR_MAP_BOUNDS)
ITERATION_DOMAIN = DomainSpec.grid(256, 256)


@functools.lru_cache(maxsize=None)
def cached_iteration_map(method: str, start: str):
    return iteration_map(method, start, ITERATION_DOMAIN)


@functools.lru_cache(maxsize=None)
def cached_error_map(estimator: str):
    return error_map(estimator, ERROR_DOMAIN)
