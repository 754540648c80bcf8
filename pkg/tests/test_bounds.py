"""
Test the bound evaluations, their slack conventions and the consistency chains.
"""

import math

import pytest

from cliquebound.bounds import *
from cliquebound.graph import degree_stats, triangle_count
from cliquebound.spectral import spectrum_of
from cliquebound.generators import (
    complete_graph, complete_multipartite, cycle_graph, empty_graph, gnp_graph,
    kneser_graph, star_graph,
)
from cliquebound.types import BoundId, BoundKind, BoundStatus
from cliquebound.exceptions import GraphInputError


def test_evaluate_lower_bound():
    e = evaluate(BoundId.TURAN, BoundKind.LOWER_OMEGA, 1.5, 2)
    assert e.holds is True
    assert e.slack == pytest.approx(0.5)
    assert e.status == BoundStatus.EVALUATED
    assert not e.violated
    assert not e.tight()

    e = evaluate(BoundId.TURAN, BoundKind.LOWER_OMEGA, 2.5, 2)
    assert e.holds is False
    assert e.violated
    assert e.slack == pytest.approx(-0.5)


def test_evaluate_upper_and_eigenvalue_kinds():
    """
    Upper bounds and eigenvalue inequalities have slack = value - target.
    """
    e = evaluate(BoundId.FAVARON_UPPER, BoundKind.UPPER_OMEGA, 3.0, 2)
    assert e.holds and e.slack == pytest.approx(1.0)

    e = evaluate(BoundId.STANLEY_MU, BoundKind.EIGENVALUE, 4.0, 4.0 + 1e-9)
    assert e.holds and e.tight()


@pytest.mark.parametrize(
    "value,target,status",
    [
        (None, 2, BoundStatus.UNDEFINED),
        (math.inf, 2, BoundStatus.UNDEFINED),
        (math.nan, 2, BoundStatus.UNDEFINED),
        (1.5, None, BoundStatus.NO_TARGET),
    ],
)
def test_evaluate_unjudged(value, target, status):
    e = evaluate(BoundId.WILF, BoundKind.LOWER_OMEGA, value, target)
    assert e.status == status
    assert e.holds is None
    assert not e.violated


def test_evaluation_dict_round_trip():
    e = evaluate(BoundId.CONJECTURE1, BoundKind.LOWER_OMEGA, 1.59787, 2)
    data = e.to_dict()
    assert data["id"] == "conjecture1"
    assert data["kind"] == "lower-on-omega"
    assert BoundEvaluation.from_dict(data) == e


@pytest.mark.parametrize(
    "g,omega,expected",
    [
        (kneser_graph(5, 2), 2, 1.59787),
        (cycle_graph(7), 2, 1.61530),
        (empty_graph(3), 1, 1.0),
        (complete_multipartite([3, 3]), 2, 2.0),
        (complete_multipartite([2, 2, 2]), 3, 3.0),
        (complete_graph(5), 5, 5 / (5 - 4)),
    ],
)
def test_conjecture1_values(g, omega, expected):
    spectrum = spectrum_of(g)
    e = conjecture1_bound(g.n, spectrum.s_plus, omega)
    assert e.value == pytest.approx(expected, abs=1e-5)
    assert e.holds


@pytest.mark.parametrize("parts", [[3, 3], [2, 2, 2], [4, 4, 4], [1, 1, 1, 1, 1]])
def test_conjecture1_tight_on_regular_multipartite(parts):
    """
    Complete regular multipartite graphs meet the conjectured bound exactly.
    """
    g = complete_multipartite(parts)
    e = conjecture1_bound(g.n, spectrum_of(g).s_plus, len(parts))
    assert abs(e.slack) <= 1e-6
    assert e.tight()


def test_conjecture1_undefined_denominator():
    e = conjecture1_bound(4, 16.0, 3)
    assert e.status == BoundStatus.UNDEFINED
    assert e.value is None


def test_lower_bounds_on_petersen():
    g = kneser_graph(5, 2)
    spectrum = spectrum_of(g)
    stats = degree_stats(g)
    assert turan_bound(g.n, stats.d, 2).value == pytest.approx(10 / 7)
    assert caro_wei_bound(stats.degrees, 2).value == pytest.approx(10 / 7)
    assert wilf_bound(g.n, spectrum.mu, 2).value == pytest.approx(10 / 7)
    assert nikiforov_bound(g.m, spectrum.mu, 2).value == pytest.approx(30 / 21)


def test_nikiforov_undefined_without_edges():
    assert nikiforov_bound(0, 0.0, 1).status == BoundStatus.UNDEFINED


def test_motzkin_straus():
    g = cycle_graph(5)
    uniform = motzkin_straus_bound(g, omega=2)
    assert uniform.value == pytest.approx(turan_bound(5, 2.0).value)
    assert uniform.holds

    # All weight on one edge attains the maximum for omega = 2.
    weighted = motzkin_straus_bound(g, [0.5, 0.5, 0.0, 0.0, 0.0], omega=2)
    assert weighted.value == pytest.approx(2.0)
    assert weighted.tight()
    assert motzkin_straus_value(g, [0.5, 0.5, 0, 0, 0]) == pytest.approx(motzkin_straus_ceiling(2))


@pytest.mark.parametrize(
    "weights",
    [
        [0.5, 0.5],
        [0.5, 0.6, -0.1, 0.0, 0.0],
        [0.3, 0.3, 0.3, 0.0, 0.0],
        [math.nan, 1.0, 0.0, 0.0, 0.0],
    ],
)
def test_motzkin_straus_invalid_weights(weights):
    with pytest.raises(GraphInputError):
        motzkin_straus_value(cycle_graph(5), weights)


def test_chi_lower_bounds_on_c7():
    """
    The Ando-Lin value exceeds omega on C7 but stays below chi.
    """
    g = cycle_graph(7)
    spectrum = spectrum_of(g)
    edwards, ando = chi_lower_bounds(g.m, spectrum.mu, spectrum.s_plus, spectrum.s_minus, 3)
    assert edwards.holds and ando.holds
    assert ando.value == pytest.approx(2.03194, abs=1e-4)
    assert ando.value > 2
    assert ando.value == pytest.approx(ando_lin_ratio_form(spectrum.s_plus, spectrum.s_minus))


def test_chi_bounds_without_edges():
    edwards, ando = chi_lower_bounds(0, 0.0, 0.0, 0.0, 1)
    assert edwards.status == ando.status == BoundStatus.UNDEFINED
    favaron, wu = upper_bounds(0, 0.0, 0.0, 1, 1)
    assert favaron.status == wu.status == BoundStatus.UNDEFINED
    assert ando_lin_ratio_form(0.0, 0.0) is None


def test_upper_bounds():
    g = complete_multipartite([2, 2, 2])
    spectrum = spectrum_of(g)
    favaron, wu = upper_bounds(g.m, spectrum.mu, spectrum.s_plus, 3, 3)
    assert favaron.value == pytest.approx(24 / 4)
    assert wu.value == pytest.approx(24 / 4)
    assert favaron.holds and wu.holds


def test_eigenvalue_checks_on_k5():
    """
    K5 meets the Stanley and Hong inequalities with equality.
    """
    g = complete_graph(5)
    spectrum = spectrum_of(g)
    stanley, wu, hong, elphick = eigenvalue_inequality_checks(g.n, g.m, spectrum.mu, spectrum.s_plus)
    assert stanley_value(g.m) == pytest.approx(4.0, abs=1e-9)
    assert abs(stanley.slack) <= 1e-9
    assert abs(hong.slack) <= 1e-9
    assert hong.value == 16
    assert wu.holds and elphick.holds


def test_eigenvalue_checks_skip_policy():
    g = star_graph(3)
    spectrum = spectrum_of(g)
    checks = eigenvalue_inequality_checks(g.n, g.m, spectrum.mu, spectrum.s_plus, isolated=True)
    assert checks[2].status == BoundStatus.SKIPPED
    assert checks[3].status == BoundStatus.SKIPPED

    checks = eigenvalue_inequality_checks(g.n, g.m, spectrum.mu, spectrum.s_plus, connected=False)
    assert checks[2].status == BoundStatus.EVALUATED
    assert checks[3].status == BoundStatus.SKIPPED


@pytest.mark.parametrize("p,margin", [(4, 2), (5, 11), (6, 24), (12, 186)])
def test_kneser_margin(p, margin):
    assert kneser_margin(p) == margin
    assert kneser_ceiling(p) <= p // 2


def test_random_regime_ceiling():
    assert random_regime_ceiling(0.5) == pytest.approx(3.41421, abs=1e-5)
    assert random_regime_ceiling(0.0) == 1.0
    with pytest.raises(GraphInputError):
        random_regime_ceiling(1.0)


def evaluations_for(g, omega=None, chi=None):
    spectrum = spectrum_of(g)
    stats = degree_stats(g)
    evaluations = [
        turan_bound(g.n, stats.d, omega),
        caro_wei_bound(stats.degrees, omega),
        wilf_bound(g.n, spectrum.mu, omega),
        nikiforov_bound(g.m, spectrum.mu, omega),
        conjecture1_bound(g.n, spectrum.s_plus, omega),
        *chi_lower_bounds(g.m, spectrum.mu, spectrum.s_plus, spectrum.s_minus, chi),
        *upper_bounds(g.m, spectrum.mu, spectrum.s_plus, omega, chi),
    ]
    inputs = ChainInputs(
        n=g.n, m=g.m, d=stats.d, mu=spectrum.mu, mu_min=spectrum.mu_min,
        s_plus=spectrum.s_plus, s_minus=spectrum.s_minus, pi=spectrum.pi,
        t=triangle_count(g), regular=g.is_regular, omega=omega, chi=chi,
    )
    return inputs, evaluations


@pytest.mark.parametrize("seed", range(30))
def test_bound_chain_on_random_graphs(seed):
    g = gnp_graph(10, 0.3 + 0.02 * seed, seed)
    inputs, evaluations = evaluations_for(g)
    assert check_bound_chain(inputs, evaluations) == []


def test_bound_chain_regular_strict():
    """
    The conjectured bound strictly exceeds n/(n-d) on regular graphs with more
    than one positive eigenvalue.
    """
    g = kneser_graph(5, 2)
    inputs, evaluations = evaluations_for(g, 2, 3)
    assert inputs.pi > 1
    assert check_bound_chain(inputs, evaluations) == []


def test_bound_chain_reports_failures():
    g = cycle_graph(5)
    inputs, evaluations = evaluations_for(g, 3, 2)

    broken = [
        BoundEvaluation(e.id, e.kind, e.value * 10, e.target) if e.id == BoundId.TURAN else e
        for e in evaluations
    ]
    failed = check_bound_chain(inputs, broken)
    assert "turan<=wilf" in failed
    assert "turan<=caro_wei" in failed
    assert "omega<=chi" in failed


@pytest.mark.parametrize(
    "evaluation",
    [
        conjecture1_bound(4, (4 - 1e-9) ** 2, 3),
        conjecture1_bound(4, 16.0, 3),
        wilf_bound(5, 5 - 1e-12, 3),
        nikiforov_bound(2, 2.0, 2),
    ],
)
def test_near_zero_denominator_is_undefined(evaluation):
    """
    A denominator within tolerance of zero is undefined, never a huge value.
    """
    assert evaluation.status == BoundStatus.UNDEFINED
    assert evaluation.value is None
    assert not evaluation.violated


def test_bound_chain_regular_tie_within_tolerance():
    """
    On a regular graph the conjectured bound may meet n/(n-d) within rounding
    without failing the chain; a real drop below it still fails.
    """
    g = kneser_graph(5, 2)
    inputs, evaluations = evaluations_for(g, 2, 3)
    turan = next(e.value for e in evaluations if e.id == BoundId.TURAN)

    def with_conjecture1(value):
        return [
            BoundEvaluation(e.id, e.kind, value, e.target) if e.id == BoundId.CONJECTURE1 else e
            for e in evaluations
        ]

    assert "regular_conjecture1>turan" not in check_bound_chain(inputs, with_conjecture1(turan))
    assert "regular_conjecture1>turan" not in check_bound_chain(inputs, with_conjecture1(turan - 1e-12))
    assert "regular_conjecture1>turan" in check_bound_chain(inputs, with_conjecture1(turan - 0.5))
