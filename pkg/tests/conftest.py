from hypothesis import settings

# fixed seed and at least 100 cases per property
settings.register_profile("repo", max_examples=100, derandomize=True, deadline=None)
settings.load_profile("repo")


def partition_numbers(n_max):
    """p(0..n_max) by the textbook coin-change recurrence."""
    p = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for n in range(part, n_max + 1):
            p[n] += p[n - part]
    return p


def naive_product(factors, n_max):
    """Expand prod(1 - sign*q^e) as a plain coefficient list, dropping powers above n_max."""
    poly = [1] + [0] * n_max
    for sign, e in factors:
        new = poly[:]
        for i in range(n_max + 1 - e):
            new[i + e] -= sign * poly[i]
        poly = new
    return poly


# acceptance criteria record their outcome here; printed in the terminal summary
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}")
