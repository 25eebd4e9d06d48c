"""Lemma-check suites and local intersection numbers."""
import pytest

from octica.linsys import HomForm, PLANE_VARS
from octica.poly import MultiPoly
from octica.verify import (bezout_check, check_degree_bounds, check_milnor_lemma,
                           check_nonexistence_suite, intersection_multiplicity)

X = MultiPoly.var(PLANE_VARS, "x")
Y = MultiPoly.var(PLANE_VARS, "y")
Z = MultiPoly.var(PLANE_VARS, "z")


def test_intersection_multiplicity_examples():
    line = HomForm(Y, 1)
    conic = HomForm((Y * Z - X * X).primitive(), 2)
    assert intersection_multiplicity(line, conic, (0, 0, 1)) == 2  # tangency
    other = HomForm((X - Y).primitive(), 1)
    assert intersection_multiplicity(line, other, (0, 0, 1)) == 1  # transversal
    # a [3;3]-point meets its distinguished tangent line with multiplicity 6
    three = HomForm(((Y * Z - X * X) * (Y * Z - 2 * X * X) * (Y * Z - 3 * X * X)).primitive(), 6)
    assert intersection_multiplicity(three, line, (0, 0, 1)) == 6


def test_bezout_bound():
    line = HomForm(Y, 1)
    three = HomForm(((Y * Z - X * X) * (Y * Z - 2 * X * X) * (Y * Z - 3 * X * X)).primitive(), 6)
    assert bezout_check(three, line, [(0, 0, 1)])
    conic = HomForm((Y * Z - X * X).primitive(), 2)
    assert bezout_check(conic, line, [(0, 0, 1)])


def test_component_sharing_is_detected():
    a = HomForm(((Y * Z - X * X) * Y).primitive(), 3)
    b = HomForm(((Y * Z - X * X) * Z).primitive(), 3)
    with pytest.raises(ValueError):
        intersection_multiplicity(a, b, (0, 0, 1))


def test_degree_bounds_suite():
    result = check_degree_bounds()
    assert result.all_passed, result.counterexample
    assert result.instances_checked >= 10


def test_milnor_suite():
    result = check_milnor_lemma()
    assert result.all_passed, result.counterexample


def test_nonexistence_suite():
    result = check_nonexistence_suite()
    assert result.all_passed, result.counterexample
    assert result.instances_checked >= 20
