#!/usr/bin/env python3
"""
Test script for the weight parameters, subset weights and data models
"""

import math
import os
import sys
import unittest

import numpy as np

# Add the parent directory to the path so we can import our modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.exceptions import InvalidParameterError
from src.models import ActiveSet, ExponentKind, Method, SweepCell, SweepTable
from src.weights import (
    extension_factor,
    format_p,
    gamma,
    gamma_bar,
    s_u_norm,
    validate_params,
)


class TestValidateParams(unittest.TestCase):
    """Test parameter validation."""

    def test_finite_p(self):
        """p = 2 gives p* = 2 and the element factor 1/3."""
        params = validate_params(2, 1, 2)
        self.assertEqual(params.kind, ExponentKind.FINITE)
        self.assertAlmostEqual(params.p_star, 2.0)
        self.assertAlmostEqual(params.elem_factor, 1 / 3)
        self.assertAlmostEqual(params.decay, 4.0)

    def test_p_one(self):
        """p = 1 takes the distinct branch without a p*."""
        params = validate_params(2, 1, 1)
        self.assertTrue(params.is_p_one)
        self.assertIsNone(params.p_star)
        self.assertIsNone(params.elem_factor)
        self.assertEqual(params.p_label, "1")
        with self.assertRaises(ValueError):
            params.decay

    def test_p_infinity_spellings(self):
        """Infinity is accepted as a string or float."""
        for p in ("inf", "INF", "infinity", math.inf):
            params = validate_params(2, 1, p)
            self.assertEqual(params.kind, ExponentKind.INFINITY)
            self.assertEqual(params.p_star, 1.0)
            self.assertEqual(params.p_label, "inf")

    def test_rejects_slow_decay(self):
        """a must exceed 1/p*."""
        with self.assertRaises(InvalidParameterError):
            validate_params(0.4, 1, "inf")
        with self.assertRaises(InvalidParameterError):
            validate_params(0.5, 1, 2)
        validate_params(0.51, 1, 2)

    def test_rejects_bad_values(self):
        """Nonpositive c, p below one and NaN are rejected."""
        for a, c, p in ((2, 0, 2), (2, -1, 2), (2, 1, 0.5), (2, 1, math.nan), (math.nan, 1, 2)):
            with self.assertRaises(InvalidParameterError):
                validate_params(a, c, p)
        with self.assertRaises(InvalidParameterError):
            validate_params(2, 1, "two")

    def test_invalid_parameter_error_is_value_error(self):
        """Invalid parameters can be caught as ValueError."""
        with self.assertRaises(ValueError):
            validate_params(2, 1, 0)

    def test_format_p(self):
        self.assertEqual(format_p("inf"), "inf")
        self.assertEqual(format_p(1), "1")
        self.assertEqual(format_p("2"), "2")
        self.assertEqual(format_p(1.5), "1.5")


class TestWeights(unittest.TestCase):
    """Test weight evaluation."""

    def test_gamma(self):
        """Product weights match direct products."""
        self.assertAlmostEqual(gamma(validate_params(2, 1, 2), (1, 2)), 0.25)
        self.assertEqual(gamma(validate_params(2, 1, 2), ()), 1.0)
        self.assertAlmostEqual(gamma(validate_params(4, 1, 1), (3,)), 1 / 81)

    def test_gamma_bar(self):
        """Modified weights match the closed form."""
        self.assertAlmostEqual(gamma_bar(validate_params(2, 1, 2), (1,)), 1 / 3)
        self.assertEqual(gamma_bar(validate_params(3, 2, 2), ()), 1.0)
        self.assertAlmostEqual(gamma_bar(validate_params(3, 2, "inf"), (2,)), 1 / 8)

    def test_gamma_bar_rejects_p_one(self):
        with self.assertRaises(InvalidParameterError):
            gamma_bar(validate_params(2, 1, 1), (1,))

    def test_gamma_bar_cross_formula(self):
        """gamma_bar(u) = gamma(u)^{p*} / (p*+1)^{|u|}."""
        rng = np.random.default_rng(7)
        for p in (1.5, 2, 3, "inf"):
            for a, c in ((2, 1), (3, 0.5), (4, 2)):
                params = validate_params(a, c, p)
                for _ in range(50):
                    size = int(rng.integers(0, 7))
                    u = tuple(sorted(int(x) for x in rng.choice(np.arange(1, 40), size, replace=False)))
                    expected = gamma(params, u) ** params.p_star / (params.p_star + 1) ** len(u)
                    self.assertTrue(math.isclose(gamma_bar(params, u), expected, rel_tol=1e-12))

    def test_deep_subsets_do_not_underflow(self):
        """Deep subsets are evaluated in logs and stay positive."""
        params = validate_params(2, 1, "inf")
        u = tuple(range(1, 41))
        value = gamma_bar(params, u)
        self.assertGreater(value, 0.0)
        expected = math.exp(40 * math.log(0.5) - 2 * math.fsum(math.log(j) for j in u))
        self.assertTrue(math.isclose(value, expected, rel_tol=1e-12))

    def test_s_u_norm(self):
        self.assertAlmostEqual(s_u_norm(validate_params(2, 1, 2), (1, 2)), 1 / 3)
        self.assertEqual(s_u_norm(validate_params(2, 1, 1), (1, 2, 3)), 1.0)
        self.assertAlmostEqual(s_u_norm(validate_params(2, 1, "inf"), (1, 2, 3)), 1 / 8)

    def test_domination_monotonicity(self):
        """Shifting indices upwards never increases the modified weight."""
        rng = np.random.default_rng(11)
        grid = [validate_params(a, c, p) for p in (2, "inf") for a in (2, 3, 4) for c in (0.5, 1, 2)]
        for trial in range(10_000):
            params = grid[trial % len(grid)]
            size = int(rng.integers(1, 6))
            u = np.sort(rng.choice(np.arange(1, 30), size, replace=False))
            v = u + np.cumsum(rng.integers(0, 4, size))
            self.assertGreaterEqual(
                gamma_bar(params, tuple(int(x) for x in u)) * (1 + 1e-12),
                gamma_bar(params, tuple(int(x) for x in v)),
            )

    def test_extension_monotonicity(self):
        """Adding an index at least c^{1/a} never increases the modified weight."""
        rng = np.random.default_rng(13)
        grid = [validate_params(a, c, p) for p in (2, "inf") for a in (2, 3, 4) for c in (0.5, 1, 2)]
        for trial in range(10_000):
            params = grid[trial % len(grid)]
            size = int(rng.integers(0, 5))
            u = tuple(sorted(int(x) for x in rng.choice(np.arange(1, 20), size, replace=False)))
            low = max(u[-1] + 1 if u else 1, math.ceil(params.c ** (1 / params.a)), size + 1)
            extended = u + (int(rng.integers(low, low + 10)),)
            self.assertGreaterEqual(
                gamma_bar(params, u) * (1 + 1e-12), gamma_bar(params, extended)
            )

    def test_extension_factor(self):
        params = validate_params(2, 1, 2)
        self.assertAlmostEqual(extension_factor(params, 2), 1 / 48)
        self.assertAlmostEqual(extension_factor(validate_params(2, 2, 1), 1), 2.0)


class TestModels(unittest.TestCase):
    """Test the data models."""

    def test_active_set_properties(self):
        """Size, dimension and membership of an active set."""
        active = ActiveSet(
            members=((), (1,), (2,), (1, 2)),
            method=Method.OPT,
            eps=0.1,
            residual_certificate=0.005,
            budget=0.01,
        )
        self.assertEqual(len(active), 4)
        self.assertEqual(active.dimension, 2)
        self.assertIn((1, 2), active)
        self.assertNotIn((3,), active)
        self.assertTrue(active.is_certified())

    def test_empty_active_set(self):
        active = ActiveSet(
            members=(), method=Method.PW, eps=1.0, residual_certificate=1.0, budget=1.0
        )
        self.assertEqual(active.dimension, 0)
        self.assertTrue(active.is_certified())

    def test_sweep_table_grids(self):
        """Rows are c values, columns are a values."""
        table = SweepTable(
            p_label="2",
            eps=0.01,
            method="opt",
            a_values=[4, 3],
            c_values=[0.5, 1],
            cells=[
                SweepCell(a=4, c=0.5, size=3, d=1),
                SweepCell(a=3, c=0.5, size=5, d=2),
                SweepCell(a=4, c=1, size=4, d=2),
                SweepCell(a=3, c=1, error="boom"),
            ],
        )
        self.assertEqual(table.sizes(), [[3, 5], [4, None]])
        self.assertEqual(table.dims(), [[1, 2], [2, None]])
        with self.assertRaises(KeyError):
            table.cell(2, 2)


if __name__ == "__main__":
    unittest.main()
