import contextlib
import time

ACCEPTANCE = []


@contextlib.contextmanager
def criterion(number, title, limit):
    """Time a criterion body and record a PASS/FAIL line for the terminal summary."""
    info = {"detail": ""}
    start = time.perf_counter()
    ok = False
    try:
        yield info
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if elapsed > limit:
            ok = False
            info["detail"] += f" over time limit {limit}s"
        line = (f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'}"
                f" [{elapsed:.2f}s / {limit}s] {info['detail']}".rstrip())
        ACCEPTANCE.append((number, line))
        print(line)
    assert elapsed <= limit, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
