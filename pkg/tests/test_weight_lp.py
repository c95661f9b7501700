from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import graph_with_target, positive_rationals
from invcent.errors import ValidationError
from invcent.feasibility import check_feasibility
from invcent.graphs import Graph
from invcent.instances import complete_graph, star_graph
from invcent.spectral import verify_exact
from invcent.targets import CentralityTarget
from invcent.weight_lp import (
    LpStatus,
    farkas_certificate,
    solve_max_min_weight,
)


def weight_system(g: Graph, c: CentralityTarget):
    """Scaled equation data (B, q at eps=0, coupling sums) for substitution checks."""
    cols = {e: k for k, e in enumerate(g.edges)}
    b = [[Fraction(0)] * g.m for _ in range(g.n)]
    coupling = [Fraction(0)] * g.n
    for j in g.vertices():
        for i in g.neighbors(j):
            e = (i, j) if i < j else (j, i)
            b[j - 1][cols[e]] = c.value(i) * c.value(j)
            coupling[j - 1] += c.value(i) * c.value(j)
    q0 = [c.square(j) for j in g.vertices()]
    return b, q0, coupling


class TestPawFixture:
    def test_all_ones_boundary(self, paw, ones4):
        res = solve_max_min_weight(paw, ones4)
        assert res.status is LpStatus.BOUNDARY_ONLY
        assert res.epsilon_star == 0
        assert res.assignment is None
        assert res.weights == {
            (1, 2): 1,
            (1, 3): 0,
            (2, 3): 0,
            (3, 4): 1,
        }

    def test_2221_strictly_feasible(self, paw, c2221):
        res = solve_max_min_weight(paw, c2221)
        assert res.status is LpStatus.STRICTLY_FEASIBLE
        assert res.weights == {
            (1, 2): Fraction(5, 8),
            (1, 3): Fraction(3, 8),
            (2, 3): Fraction(3, 8),
            (3, 4): Fraction(1, 2),
        }
        assert res.epsilon_star == Fraction(3, 8)
        assert res.epsilon_star == res.assignment.min_weight()
        assert verify_exact(paw, res.weights, c2221)

    def test_star_uniform(self):
        g = star_graph(5)
        c = CentralityTarget.from_values([2, 1, 1, 1, 1])
        res = solve_max_min_weight(g, c)
        assert res.status is LpStatus.STRICTLY_FEASIBLE
        assert set(res.weights.values()) == {Fraction(1, 2)}
        assert res.epsilon_star == Fraction(1, 2)

    def test_k2_asymmetric_infeasible(self):
        g = complete_graph(2)
        res = solve_max_min_weight(g, CentralityTarget.from_values([1, 2]))
        assert res.status is LpStatus.INFEASIBLE
        assert res.epsilon_star is None
        assert res.weights is None

    def test_dimension_mismatch(self, paw):
        with pytest.raises(ValidationError):
            solve_max_min_weight(paw, CentralityTarget.from_values([1, 1]))


class TestProperties:
    @given(graph_with_target(max_n=6))
    @settings(max_examples=80)
    def test_solution_satisfies_equations_exactly(self, gc):
        g, c = gc
        res = solve_max_min_weight(g, c)
        if res.weights is None:
            return
        for j in g.vertices():
            total = sum(
                (
                    res.weights[(i, j) if i < j else (j, i)] * c.value(i)
                    for i in g.neighbors(j)
                ),
                Fraction(0),
            )
            assert total == c.value(j)
        assert res.epsilon_star == min(res.weights.values())
        if res.status is LpStatus.STRICTLY_FEASIBLE:
            assert verify_exact(g, res.weights, c)

    @given(graph_with_target(max_n=6))
    @settings(max_examples=80)
    def test_agrees_with_combinatorial_checker(self, gc):
        g, c = gc
        res = solve_max_min_weight(g, c)
        assert (res.status is LpStatus.STRICTLY_FEASIBLE) == check_feasibility(
            g, c
        ).feasible


class TestFarkasCertificate:
    def test_paw_all_ones_certificate(self, paw, ones4):
        eps = Fraction(1, 10)
        x = farkas_certificate(paw, ones4, eps)
        assert x is not None
        b, q0, coupling = weight_system(paw, ones4)
        q = [q0[r] - eps * coupling[r] for r in range(4)]
        for col in range(paw.m):
            assert sum(x[r] * b[r][col] for r in range(4)) <= 0
        assert sum(x[r] * q[r] for r in range(4)) > 0

    def test_paw_2221_no_certificate(self, paw, c2221):
        # closed-form weights are all >= 3/8 > 1/4, so eps = 1/4 stays feasible
        assert farkas_certificate(paw, c2221, Fraction(1, 4)) is None

    def test_k2_large_eps(self):
        g = complete_graph(2)
        c = CentralityTarget.from_values([1, 1])
        x = farkas_certificate(g, c, 2)
        assert x is not None
        b, q0, coupling = weight_system(g, c)
        q = [q0[r] - 2 * coupling[r] for r in range(2)]
        assert sum(x[r] * b[r][0] for r in range(2)) <= 0
        assert sum(x[r] * q[r] for r in range(2)) > 0

    def test_negative_eps_rejected(self, paw, ones4):
        with pytest.raises(ValidationError):
            farkas_certificate(paw, ones4, Fraction(-1, 2))

    @given(graph_with_target(max_n=5), st.integers(0, 3))
    @settings(max_examples=60)
    def test_certificates_verify_by_substitution(self, gc, eps_num):
        g, c = gc
        eps = Fraction(eps_num, 3)
        x = farkas_certificate(g, c, eps)
        if x is None:
            return
        b, q0, coupling = weight_system(g, c)
        q = [q0[r] - eps * coupling[r] for r in range(g.n)]
        for col in range(g.m):
            assert sum(x[r] * b[r][col] for r in range(g.n)) <= 0
        assert sum(x[r] * q[r] for r in range(g.n)) > 0

    @given(graph_with_target(max_n=5))
    @settings(max_examples=40)
    def test_monotone_in_eps(self, gc):
        g, c = gc
        res = solve_max_min_weight(g, c)
        if res.status is LpStatus.INFEASIBLE:
            assert farkas_certificate(g, c, 0) is not None
            return
        eps_star = res.epsilon_star
        # feasible at and below eps*, infeasible strictly above
        assert farkas_certificate(g, c, eps_star) is None
        assert farkas_certificate(g, c, eps_star / 2) is None
        assert farkas_certificate(g, c, eps_star + 1) is not None
