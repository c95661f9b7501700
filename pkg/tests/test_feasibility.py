import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import graph_with_target, positive_rationals
from invcent.errors import ValidationError
from invcent.feasibility import check_feasibility, explain
from invcent.graphs import bipartition
from invcent.instances import (
    complete_bipartite_graph,
    complete_graph,
    random_connected_graph,
    random_target,
)
from invcent.stable_sets import Family
from invcent.targets import CentralityTarget


class TestPawFixture:
    def test_all_ones_infeasible_with_tied_witness(self, paw, ones4):
        v = check_feasibility(paw, ones4)
        assert not v.feasible
        assert sorted(v.witness.members) == [1, 4]
        assert v.witness.family is Family.NON_COVERING
        assert (v.lhs, v.rhs) == (2, 2)

    def test_all_witnesses_mode(self, paw, ones4):
        v = check_feasibility(paw, ones4, all_witnesses=True)
        got = [(sorted(r.members), lhs, rhs) for r, lhs, rhs in v.violations]
        assert got == [([1, 4], 2, 2), ([2, 4], 2, 2), ([4], 1, 1)]
        assert v.witness.members == v.violations[0][0].members

    def test_2221_feasible(self, paw, c2221):
        v = check_feasibility(paw, c2221)
        assert v.feasible
        assert v.conditions_checked == 6

    def test_2221_feasible_reduced_checks_four_conditions(self, paw, c2221):
        v = check_feasibility(paw, c2221, use_reduced=True)
        assert v.feasible
        assert v.conditions_checked == 4

    def test_k2_symmetric(self):
        g = complete_graph(2)
        v = check_feasibility(g, CentralityTarget.from_values([1, 1]))
        assert v.feasible


class TestProperties:
    @given(graph_with_target(max_n=6), positive_rationals)
    @settings(max_examples=60)
    def test_scale_invariance(self, gc, alpha):
        g, c = gc
        assert (
            check_feasibility(g, c).feasible
            == check_feasibility(g, c.scaled(alpha)).feasible
        )

    @pytest.mark.parametrize("alpha", [Fraction(1, 3), 2, Fraction(7, 5)])
    def test_scale_invariance_fixture(self, paw, ones4, c2221, alpha):
        for c in (ones4, c2221):
            assert (
                check_feasibility(paw, c).feasible
                == check_feasibility(paw, c.scaled(alpha)).feasible
            )

    @given(graph_with_target(max_n=6))
    @settings(max_examples=80)
    def test_reduced_equals_full(self, gc):
        g, c = gc
        assert (
            check_feasibility(g, c).feasible
            == check_feasibility(g, c, use_reduced=True).feasible
        )

    def test_reduced_equals_full_seeded_n7(self):
        rng = random.Random(77)
        for _ in range(60):
            g = random_connected_graph(7, rng)
            c = random_target(7, rng)
            assert (
                check_feasibility(g, c).feasible
                == check_feasibility(g, c, use_reduced=True).feasible
            )

    @given(graph_with_target(max_n=6))
    @settings(max_examples=60)
    def test_bipartite_parts_must_tie(self, gc):
        g, c = gc
        parts = bipartition(g)
        if parts is None:
            return
        if check_feasibility(g, c).feasible:
            assert c.sum_squares(parts[0]) == c.sum_squares(parts[1])

    def test_bipartite_feasible_instances_tie(self):
        # engineered feasible case so the implication is exercised non-vacuously
        g = complete_bipartite_graph(2, 2)
        c = CentralityTarget.from_values([1, 1, 1, 1])
        assert check_feasibility(g, c).feasible
        parts = bipartition(g)
        assert c.sum_squares(parts[0]) == c.sum_squares(parts[1])

    @given(graph_with_target(max_n=6))
    @settings(max_examples=60)
    def test_pendant_vertex_rule(self, gc):
        g, c = gc
        if not check_feasibility(g, c).feasible:
            return
        from invcent.stable_sets import classify

        for j in g.vertices():
            if g.degree(j) == 1:
                (k,) = g.neighbors(j)
                if classify(g, {j}) is Family.NON_COVERING:
                    assert c.value(j) < c.value(k)

    def test_pendant_rule_direct(self):
        # pendant 4 with value >= its neighbor's forces infeasibility
        g = complete_graph(3)
        g = g.from_edges(4, list(g.edges) + [(3, 4)])
        c = CentralityTarget.from_values([1, 1, 1, 5])
        assert not check_feasibility(g, c).feasible


class TestReporting:
    def test_explain_infeasible(self, paw, ones4):
        text = explain(check_feasibility(paw, ones4))
        assert "{1,4}" in text and "{2,3}" in text
        assert "2 >= 2" in text
        assert "S2" in text

    def test_explain_feasible(self, paw, c2221):
        text = explain(check_feasibility(paw, c2221))
        assert text.startswith("feasible")
        assert "6" in text

    def test_explain_covering_witness(self):
        g = complete_graph(2)
        v = check_feasibility(g, CentralityTarget.from_values([1, 2]))
        assert not v.feasible
        assert v.witness.family is Family.COVERING
        assert "must equal" in explain(v)

    def test_dimension_mismatch(self, paw):
        with pytest.raises(ValidationError):
            check_feasibility(paw, CentralityTarget.from_values([1, 1]))
