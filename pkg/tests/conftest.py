import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome.upper(), props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, outcome, detail in sorted(lines, key=lambda t: int(t[0].split()[0])):
            terminalreporter.write_line(f"[{outcome}] criterion {crit} {detail}".rstrip())
