ACCEPTANCE_LINES = []


def record(number: int, ok: bool, summary: str) -> str:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {summary}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
