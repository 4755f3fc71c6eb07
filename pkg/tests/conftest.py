import pytest

from coset_atlas import gf

# criterion number -> (title, passed); filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def fields():
    return {q: gf.field_of_order(q) for q in (5, 7, 8, 9, 11, 13)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}")
