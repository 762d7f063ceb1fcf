import math

import pytest
from hypothesis import given

from surfdom.bondage import BondageKind, bondage, check_bondage_upper_bounds, removal_increases
from surfdom.graph import complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from surfdom.invariants import BudgetExceeded, NotApplicable
from surfdom.surfaces import AtLeast

from . import oracles
from .conftest import graphs

B = BondageKind


def test_kind_properties():
    assert B.TOTAL_RESTRAINED.forbids_isolated
    assert not B.RESTRAINED.forbids_isolated
    assert [k.symbol for k in B] == ["b_r", "b_tr", "b_R"]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_btr_complete(n):
    res = bondage(complete_graph(n), B.TOTAL_RESTRAINED)
    assert res.is_exact and res.value == n - 1
    assert removal_increases(complete_graph(n), B.TOTAL_RESTRAINED, res.witness)


def test_infinite_when_nothing_can_increase():
    # every vertex of a star is in every restrained dominating set already
    res = bondage(star_graph(3), B.RESTRAINED)
    assert res.status == "infinite" and res.as_bound_value() == math.inf


def test_cap_gives_lower_bound():
    res = bondage(complete_graph(6), B.TOTAL_RESTRAINED, cap=2)
    assert res.status == "unknown"
    assert res.as_bound_value() == AtLeast(3)
    assert "at_least" in res.to_dict()


def test_budget_gives_unknown():
    # 21 candidate sets fit in the budget, the 120 subsets of size <= 2 do not
    res = bondage(complete_graph(6), B.TOTAL_RESTRAINED, budget=100)
    assert res.status == "unknown" and res.lower_bound == 2
    with pytest.raises(BudgetExceeded):
        bondage(complete_graph(6), B.TOTAL_RESTRAINED, budget=20)


def test_not_applicable():
    with pytest.raises(NotApplicable):
        bondage(empty_graph(3), B.TOTAL_RESTRAINED)


def test_upper_bound_listing():
    ub = check_bondage_upper_bounds(complete_graph(5), B.TOTAL_RESTRAINED)
    assert {u.name for u in ub} == {"T2.3", "T2.4"}
    assert [u for u in ub if u.name == "T2.4"][0].value == 4
    ub = check_bondage_upper_bounds(path_graph(4), B.RESTRAINED)
    assert not ub[0].applicable
    ub = check_bondage_upper_bounds(cycle_graph(5), B.ROMAN)
    assert ub[0].value == 3


@given(graphs(min_n=1, max_n=6))
def test_matches_resolving_oracle(g):
    for kind in B:
        iso = kind.forbids_isolated
        if iso and g.has_isolated_vertex():
            continue
        res = bondage(g, kind, cap=g.m)
        want = oracles.bondage(g, kind.value, no_isolated=iso)
        if want is None:
            assert res.status == "infinite"
        else:
            assert res.status == "exact" and res.value == want, kind
            assert removal_increases(g, kind, res.witness)


@given(graphs(min_n=3, max_n=7))
def test_closed_form_upper_bounds_hold(g):
    for kind in B:
        if kind.forbids_isolated and g.has_isolated_vertex():
            continue
        value = bondage(g, kind, cap=g.m).as_bound_value()
        for ub in check_bondage_upper_bounds(g, kind):
            if ub.applicable:
                assert value <= ub.value, (kind, ub)
