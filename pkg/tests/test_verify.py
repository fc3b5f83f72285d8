import pytest

from umbra import verify


def test_report_keeps_first_witness():
    rep = verify.Report("demo", {"m": 1})
    rep.check("always", True)
    rep.check("sometimes", True, {"i": 0})
    rep.check("sometimes", False, lambda: {"i": 1})
    rep.check("sometimes", False, lambda: {"i": 2})
    assert not rep.passed
    assert [r.status for r in rep.results] == ["PASS", "FAIL"]
    assert rep.results[1].witness == {"i": 1}
    assert rep.results[1].instances == 3
    assert rep.lines()[1].startswith("FAIL sometimes [m=1]")
    assert rep.to_json()[1] == {"identity": "sometimes", "parameters": {"m": 1}, "status": "FAIL", "witness": {"i": 1}}


@pytest.mark.parametrize("name,kwargs", [
    ("appendix", {"instances": 4}),
    ("binomial", {"family": "random", "degree": 4}),
    ("binomial", {"family": "rising", "m": 3, "degree": 3}),
    ("basis", {"instances": 10, "degree": 3}),
    ("operators", {"pairs": 5, "degree": 3}),
    ("falling", {"max_m": 2, "degree": 3, "choose_m": 3, "choose_n": 3}),
    ("restriction", {"max_m": 2, "degree": 3, "instances": 1}),
    ("sheffer", {"m": 2, "degree": 3, "random_pairs": 1}),
    ("reductions", {"degree": 4}),
    ("orthogonality", {"max_m": 1, "max_n": 2, "tau_n": 2}),
    ("combinatorial", {"m": 2, "partition_n": 4, "permutation_n": 3}),
])
def test_small_suites_pass(name, kwargs):
    rep = verify.SUITES[name](**kwargs)
    assert rep.results
    assert rep.passed, "\n".join(rep.lines())


def test_suites_are_deterministic():
    a = verify.suite_basis(instances=6, degree=3, seed=4).to_json()
    b = verify.suite_basis(instances=6, degree=3, seed=4).to_json()
    assert a == b
