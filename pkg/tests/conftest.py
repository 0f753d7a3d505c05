from __future__ import annotations

import random

import pytest

from clawstem.extremal import SharpFamilyParams, build_sharp_graph
from clawstem.graph import Graph

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def sharp():
    cache = {}

    def get(m: int, k: int):
        if (m, k) not in cache:
            cache[(m, k)] = build_sharp_graph(SharpFamilyParams(m, k))
        return cache[(m, k)]

    return get


def spider(legs: int = 3, length: int = 2) -> tuple[Graph, list[tuple[int, int]]]:
    """Spider with centre 0; returns the graph and its (tree) edge list."""
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges), edges


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    status = "PASS" if report.passed else "FAIL"
    _ACCEPTANCE.append((props["criterion"], status, props.get("detail", "")))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, status, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"{crit:<14} {status}  {detail}")
