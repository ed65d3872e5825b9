"""Tests for generalized Laguerre polynomials and Gauss-Laguerre rules."""
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import special

from src.core.exceptions import DomainError
from src.specfun import QuadratureRule, gauss_laguerre_rule, laguerre, ln_gamma


def log_moment(rule: QuadratureRule, k: int) -> float:
    """ln Σ w_m ψ_m^k, computed in log space."""
    terms = rule.log_weight_array + k * np.log(rule.node_array)
    top = terms.max()
    return top + math.log(float(np.sum(np.exp(terms - top))))


class TestLaguerre:
    """Test suite for the Laguerre recurrence."""

    def test_degree_zero(self):
        """Test L_0 ≡ 1."""
        assert laguerre(0, 3.5, 7.0) == 1.0

    def test_degree_one(self):
        """Test L_1(x) = 1 + a - x."""
        assert laguerre(1, 0.0, 1.0) == 0.0
        assert laguerre(1, 2.0, 0.5) == pytest.approx(2.5)

    def test_root_of_degree_two(self):
        """Test that 2 - √2 is a root of L_2^{(0)}."""
        assert abs(laguerre(2, 0.0, 2.0 - math.sqrt(2.0))) <= 1e-15

    @pytest.mark.parametrize("degree", [3, 10, 25])
    def test_matches_scipy(self, degree):
        """Test against scipy.special.eval_genlaguerre."""
        for a in (0.0, 4.0, 19.0):
            for x in (0.1, 3.0, 20.0):
                assert laguerre(degree, a, x) == pytest.approx(
                    special.eval_genlaguerre(degree, a, x), rel=1e-10, abs=1e-10
                )


class TestGaussLaguerreRule:
    """Test suite for gauss_laguerre_rule."""

    def test_single_node(self):
        """Test that the order-1 rule for a = 0 is node 1, weight 1."""
        rule = gauss_laguerre_rule(1, 0.0)
        assert rule.nodes[0] == pytest.approx(1.0, rel=1e-14)
        assert rule.weights[0] == pytest.approx(1.0, rel=1e-14)

    def test_two_nodes(self):
        """Test the closed-form order-2 rule for a = 0."""
        rule = gauss_laguerre_rule(2, 0.0)
        root2 = math.sqrt(2.0)
        np.testing.assert_allclose(rule.nodes, [2.0 - root2, 2.0 + root2], rtol=1e-14)
        np.testing.assert_allclose(rule.weights, [(2.0 + root2) / 4.0, (2.0 - root2) / 4.0], rtol=1e-13)

    @pytest.mark.parametrize("order", [5, 10, 30])
    @pytest.mark.parametrize("a", [0.0, 9.0, 19.0, 49.0])
    def test_moment_exactness(self, order, a):
        """Test ∫ x^a e^{-x} x^k dx = Γ(a+k+1) for every k <= 2M-1."""
        rule = gauss_laguerre_rule(order, a)
        for k in range(2 * order):
            rel_error = abs(math.expm1(log_moment(rule, k) - ln_gamma(a + k + 1.0)))
            assert rel_error <= 1e-9, f"k={k}: relative error {rel_error:.3e}"

    @pytest.mark.parametrize("order,a", [(10, 0.0), (40, 9.0), (100, 19.0)])
    def test_matches_scipy_roots(self, order, a):
        """Test nodes and weights against scipy.special.roots_genlaguerre."""
        rule = gauss_laguerre_rule(order, a)
        nodes, weights = special.roots_genlaguerre(order, a)
        np.testing.assert_allclose(rule.nodes, nodes, rtol=1e-10)
        significant = weights > 1e-12 * weights.max()
        np.testing.assert_allclose(np.asarray(rule.weights)[significant], weights[significant], rtol=1e-7)

    @pytest.mark.parametrize("order,a", [(1, 0.0), (7, 2.5), (100, 9.0), (200, 49.0)])
    def test_structure(self, order, a):
        """Test positive increasing nodes, positive weights and Σw = Γ(a+1)."""
        rule = gauss_laguerre_rule(order, a)
        nodes = rule.node_array
        assert len(rule.nodes) == order
        assert np.all(nodes > 0)
        assert np.all(np.diff(nodes) > 0)
        assert np.all(np.isfinite(rule.log_weight_array))
        target = math.exp(ln_gamma(a + 1.0))
        assert abs(sum(rule.weights) - target) / target <= 1e-9

    def test_integrate_polynomial(self):
        """Test the integrate helper on x² with the plain Laguerre weight."""
        rule = gauss_laguerre_rule(3, 0.0)
        assert rule.integrate(lambda x: x ** 2) == pytest.approx(2.0, rel=1e-13)

    def test_rules_are_cached(self, fresh_rule_cache):
        """Test that repeated requests return the same immutable object."""
        first = gauss_laguerre_rule(20, 9.0)
        assert gauss_laguerre_rule(20, 9) is first
        assert len(fresh_rule_cache) == 1

    def test_rule_is_frozen(self):
        """Test that a rule cannot be modified after construction."""
        rule = gauss_laguerre_rule(4, 1.0)
        with pytest.raises(ValidationError):
            rule.order = 5

    def test_invalid_order(self):
        """Test that order 0 raises DomainError."""
        with pytest.raises(DomainError):
            gauss_laguerre_rule(0, 1.0)
