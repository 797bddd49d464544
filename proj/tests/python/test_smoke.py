from fractions import Fraction

import pytest

import toric_ci as tc

TWISTED_CUBIC = [[1, 1, 1, 1], [0, 1, 2, 3]]


def test_configuration_and_kernel():
    cfg = tc.Configuration(TWISTED_CUBIC)
    assert (cfg.m, cfg.n, cfg.codimension) == (2, 4, 2)
    basis, g = tc.kernel_lattice(cfg)
    assert g == 1
    assert len(basis) == 2
    for col in basis:
        assert all(sum(a * x for a, x in zip(row, col)) == 0 for row in TWISTED_CUBIC)


def test_validation_errors():
    with pytest.raises(tc.InvalidConfiguration):
        tc.Configuration([[0, 1], [0, 2]])
    with pytest.raises(tc.NotHomogeneous):
        tc.Configuration([[0, 1, 2]])
    assert not tc.Configuration([[0, 1, 2]], require_homogeneity=False).homogeneous
    assert issubclass(tc.NotHomogeneous, ValueError)


def test_circuits_and_index():
    cfg = tc.Configuration(TWISTED_CUBIC)
    assert tc.circuits(cfg) == [[1, -2, 1, 0], [2, -3, 0, 1], [1, 0, -3, 2], [0, 1, -2, 1]]
    assert tc.lattice_index(cfg, [[2, -4, 2, 0], [0, 1, -2, 1]]) == 2
    assert tc.binomials([[1, -2, 1, 0]]) == ["x1*x3 - x2^2"]
    with pytest.raises(tc.InvalidBasis):
        tc.lattice_index(cfg, [[1, 0, 0, 0], [0, 1, -2, 1]])


def test_conformal_decomposition():
    cfg = tc.Configuration(TWISTED_CUBIC)
    terms = tc.conformal_decomposition(cfg, [1, -1, -1, 1])
    assert [q for q, _ in terms] == [Fraction(1, 3), Fraction(1, 3)]
    total = [sum(q * w[i] for q, w in terms) for i in range(4)]
    assert total == [1, -1, -1, 1]
    assert tc.circuitize_basis(cfg, [[2, -4, 2, 0], [0, 1, -2, 1]])[0] == [1, -2, 1, 0]


def test_ci_criterion():
    assert tc.is_complete_intersection(tc.decagon_sign_matrix())
    assert tc.find_violation(tc.decagon_sign_matrix()) is None
    assert tc.find_violation([["+", "+", "+"], ["-", "-", "-"]]) == ([0, 1], [0, 1, 2])
    assert tc.brute_force_violation([[1, 1], [-1, -1], [1, -1]]) is None
    assert not tc.is_complete_intersection([[10**30, 1, 2], [-(10**30), -1, -2]])


def test_search_reports():
    found = tc.search(tc.Configuration(TWISTED_CUBIC))
    assert found["verdict"] == "found"
    assert len(found["basis"]) == 2

    cyclic = tc.cyclic_polytope(11, n=14)
    report = tc.search(cyclic, mode="exhaustive")
    assert report["verdict"] == "exhausted-none"
    assert report["counters"]["circuits"] == 91
    c = report["counters"]
    assert c["tested"] + c["pruned_sign"] + c["pruned_rank"] == 121485

    assert tc.search(cyclic, mode="exhaustive", budget=10)["verdict"] == "budget-exceeded"


def test_search_env_budget(monkeypatch):
    monkeypatch.setenv("TORIC_CI_BUDGET", "5")
    assert tc.search(tc.cyclic_polytope(11, n=14))["verdict"] == "budget-exceeded"


def test_decagon_seeded_search():
    decagon = tc.convex_polygon(10)
    report = tc.search(decagon, supports=tc.decagon_quadruples())
    assert report["verdict"] == "found"
    signs = [[(x > 0) - (x < 0) for x in col] for col in report["basis"]]
    expected = tc.decagon_sign_matrix()
    expected_cols = [[expected[i][j] for i in range(10)] for j in range(7)]
    assert sorted(signs) == sorted(expected_cols)


def test_check_basis():
    cfg = tc.Configuration(TWISTED_CUBIC)
    report = tc.check_basis(cfg, tc.curve_ci_basis([0, 1, 2, 3]))
    assert report["verdict"] == "found"
    assert report["g"] == 2


def test_generators_and_bounds():
    assert tc.monomial_curve([2, 3, 5]).matrix == [[1, 1, 1], [0, 1, 3]]
    with pytest.raises(tc.DomainError):
        tc.monomial_curve([0, 2, 4])
    assert tc.bound_threshold(2) == 22
    assert tc.bound_eval(2, 22) == {"d": 2, "n": 22, "lhs": 7315, "rhs": 7220, "holds": True}
    assert tc.codim3_bound(3) == 14


def test_verification_group():
    results = tc.run_verification("bounds")
    assert len(results) == 1
    assert results[0]["passed"]
