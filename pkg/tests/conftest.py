import pytest

# display names for the acceptance checks, in order
ACCEPTANCE = {
    "test_oracle_equivalence": "engine oracle equivalence and deletion identities",
    "test_h_assembly_identity": "h assembly equals direct formula; deg h = alpha - k",
    "test_paths": "paths n = 1..60",
    "test_cycles": "cycles n = 3..60",
    "test_complete_multipartite": "complete multipartite q <= 4, m1 <= 6",
    "test_cameron_walker": "star triangles and random Cameron-Walker graphs",
    "test_antiregular": "antiregular graphs and their complements",
    "test_mary_trees": "perfect and random m-ary trees",
    "test_bipartite_edge_removal": "complete bipartite minus edge sets",
    "test_elimination_soundness": "elimination certificates on connected graphs",
    "test_bipartite_fixtures": "bundled bipartite example graphs",
    "test_hilbert_oracle": "Hilbert function prefix vs standard monomials",
}

_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" not in report.nodeid or name not in ACCEPTANCE:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance")
    for i, (name, label) in enumerate(ACCEPTANCE.items(), start=1):
        outcome = _outcomes.get(name)
        if outcome is None:
            continue
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {i:2d}  {label}")


@pytest.fixture(scope="session")
def corpus():
    from indhilbert.corpus import small_corpus

    return small_corpus()
