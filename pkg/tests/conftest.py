import random

import pytest

from linecist.graph import random_connected_graph


@pytest.fixture
def rng():
    return random.Random(20260101)


def random_corpus(count, lo, hi, seed, p_range=(0.25, 0.8)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(lo, hi)
        out.append(random_connected_graph(n, rng.uniform(*p_range), rng))
    return out


ACCEPTANCE: dict[str, list[tuple[bool, str]]] = {}


def record(criterion, ok, detail=""):
    ACCEPTANCE.setdefault(criterion, []).append((bool(ok), detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s[2:])):
        parts = ACCEPTANCE[name]
        status = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        details = "; ".join(d for _, d in parts if d)
        terminalreporter.write_line(f"{name} {status} {details}")
