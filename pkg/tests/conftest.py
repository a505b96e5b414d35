"""Shared pytest wiring: one summary line per acceptance criterion.

The criteria live in test_acceptance.py, one test function each. This hook
collects their outcomes and prints a [ACCEPTANCE] PASS/FAIL line per
criterion after the run, so a glance at the tail of the output answers
"which shipping checks hold" without scanning the dots.
"""

ACCEPTANCE = {
    "test_c01_day4_games": (1, "exhaustive day-4 game arithmetic"),
    "test_c02_omega_power_homomorphism": (2, "w-power homomorphism and monotonicity"),
    "test_c03_order_facts": (3, "w-power vs rational order facts"),
    "test_c04_commensurability": (4, "commensurability laws and leader fibers"),
    "test_c05_certificates": (5, "inverse/root residual certificates"),
    "test_c06_odd_root_desk_check": (6, "odd-degree polynomial root desk check"),
    "test_c07_exp_log": (7, "exp/log series, laws, and round trips"),
    "test_c08_trig_complex": (8, "trig tokens, complex ring, winding counts"),
    "test_c09_sequences": (9, "sequence limits, sections, Omega mode"),
    "test_c10_cli": (10, "CLI round trips, determinism, exit codes"),
}

_results = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if name not in ACCEPTANCE:
        return
    if report.when == "call":
        _results[name] = report.passed
    elif report.failed:
        _results[name] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance")
    for name, (num, label) in sorted(ACCEPTANCE.items(), key=lambda kv: kv[1][0]):
        if name not in _results:
            continue
        status = "PASS" if _results[name] else "FAIL"
        terminalreporter.write_line(f"[ACCEPTANCE] C{num} {label}: {status}")
