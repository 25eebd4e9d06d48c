"""Parametric families, rank drops, kernel comparisons, conic certificates."""
import random
from fractions import Fraction

import pytest

from octica.linalg import poly_kernel_basis, rank
from octica.linsys import AnchorError, MultiplicityAtPoint, PLANE_VARS
from octica.paramfam import (ParamMatrix, build_condition_matrix, compare_kernels_at,
                             component_split_report, conic_through, conic_gradient,
                             degenerate_nn_direction_analysis, generic_rank,
                             parametric_nn_family, rank_drop_locus,
                             verify_no_four_33_points)
from octica.poly import MultiPoly

X = MultiPoly.var(PLANE_VARS, "x")
Y = MultiPoly.var(PLANE_VARS, "y")
Z = MultiPoly.var(PLANE_VARS, "z")


def two_flag_matrix():
    family = parametric_nn_family(n=3, degree=8, param="t")
    matrix = build_condition_matrix(family, [MultiplicityAtPoint((1, 0, 0), 4)])
    return family, matrix


def test_family_size_and_matrix_shape():
    family, matrix = two_flag_matrix()
    assert family.size == 33
    assert (matrix.rows, matrix.cols) == (10, 33)


def test_generic_rank_is_maximal():
    _, matrix = two_flag_matrix()
    assert generic_rank(matrix) == 10


def test_rank_drop_locus_is_the_origin_of_the_tangent_parameter():
    _, matrix = two_flag_matrix()
    locus = rank_drop_locus(matrix)
    t = MultiPoly.var(("t",), "t")
    assert locus.minor_gcd == t
    assert locus.radical == t


def test_kernels_at_special_and_generic_values():
    family, matrix = two_flag_matrix()
    at0 = compare_kernels_at(matrix, {"t": Fraction(0)})
    assert (at0.special_dim, at0.limit_dim) == (24, 23)
    assert at0.inclusion_holds and at0.strict
    at1 = compare_kernels_at(matrix, {"t": Fraction(1)})
    assert (at1.special_dim, at1.limit_dim) == (23, 23)
    assert at1.inclusion_holds and not at1.strict

    split0 = component_split_report(family, at0, {"t": Fraction(0)}, Y)
    assert (split0.special_multiplicity, split0.limit_multiplicity) == (1, 2)
    assert split0.split_detected


def test_rank_at_random_off_locus_values():
    _, matrix = two_flag_matrix()
    rng = random.Random(88)
    seen = set()
    count = 0
    while count < 20:
        t0 = Fraction(rng.randint(1, 60))
        if t0 in seen:
            continue
        seen.add(t0)
        special = matrix.specialize({"t": t0})
        assert rank(special) == 10
        count += 1


def test_kernel_dimension_matches_rank():
    _, matrix = two_flag_matrix()
    for t0 in (Fraction(0), Fraction(2), Fraction(-3)):
        cmp_ = compare_kernels_at(matrix, {"t": t0})
        special = matrix.specialize({"t": t0})
        assert cmp_.special_dim == matrix.cols - rank(special)
        assert cmp_.inclusion_holds   # semicontinuity on every invocation


def test_trivial_matrices():
    t = MultiPoly.var(("t",), "t")
    zero = MultiPoly.zero(("t",))
    one = MultiPoly.const(("t",), 1)
    m = ParamMatrix([[one, zero, t, zero, zero],
                     [zero, one, zero, t, zero],
                     [zero, zero, zero, zero, one]], ("t",))
    assert generic_rank(m) == 3
    diag = ParamMatrix([[t, zero], [zero, t]], ("t",))
    locus = rank_drop_locus(diag)
    assert locus.minor_gcd == t * t
    assert locus.radical == t
    assert not locus.empty
    # a constant full-rank matrix never drops rank: unit ideal
    const = ParamMatrix([[one, zero], [t * 0 + 2 * one, one]], ("t",))
    assert rank_drop_locus(const).empty
    # kernels of a constant matrix agree at every parameter value
    cmp_ = compare_kernels_at(ParamMatrix([[one, one, zero]], ("t",)), {"t": Fraction(7)})
    assert cmp_.special_dim == cmp_.limit_dim == 2
    assert cmp_.inclusion_holds and not cmp_.strict


def test_identically_satisfied_conditions_give_zero_matrix():
    # a family already contained in the quadruple-point ideal: imposing that
    # quadruple point contributes only zero rows
    frame = PLANE_VARS + ("t",)
    from octica.poly import monomial_basis
    basis = []
    for (a, b, c) in monomial_basis(3, 8):
        if b + c >= 4:   # multiplicity 4 at (1:0:0)
            basis.append(MultiPoly.monomial(frame, (a, b, c, 0)))
    from octica.paramfam import UniversalFamily
    family = UniversalFamily(8, ("t",), basis)
    matrix = build_condition_matrix(family, [MultiplicityAtPoint((1, 0, 0), 4)])
    assert all(e.is_zero() for row in matrix.entries for e in row)


def test_no_extra_conditions_gives_zero_rows():
    family = parametric_nn_family(n=3, degree=8, param="t")
    matrix = build_condition_matrix(family, [])
    assert matrix.rows == 0
    basis = poly_kernel_basis(matrix.entries, family.size, ("t",))
    assert len(basis) == family.size


def test_degenerate_direction_analysis():
    family, matrix = degenerate_nn_direction_analysis(n=3, degree=6, param="s")
    assert family.size == 16
    assert generic_rank(matrix) == 2
    basis = poly_kernel_basis(matrix.entries, family.size, ("s",))
    assert len(basis) == 14


def test_conic_through_five_points():
    conic = conic_through(points=[(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 2, 4)])
    for p in [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 2, 4)]:
        assert conic.poly.evaluate({"x": Fraction(p[0]), "y": Fraction(p[1]),
                                    "z": Fraction(p[2])}) == 0


def test_conic_through_flags():
    conic = conic_through(points=[(1, 0, 0)], flags=[((0, 0, 1), X + Y), ((0, 1, 0), X + Z)])
    tangent = conic_gradient(conic, (0, 0, 1))
    # gradient parallel to the prescribed flag line
    assert tangent == (X + Y).primitive()


def test_conic_through_degenerate_data_raises():
    with pytest.raises(AnchorError):
        conic_through(points=[(0, 0, 1), (0, 1, 1), (0, 2, 1)],
                      flags=[((1, 0, 0), Y), ((1, 1, 1), (X - Z).primitive())])


def test_four_points_certificate():
    cert = verify_no_four_33_points()
    assert cert.holds
    assert cert.residual_curve_part_explained
    assert cert.residual_points_on_base
    # every rational residual coincidence position lies on the base conic or
    # on a degenerate line
    for (u0, v0) in cert.residual_points:
        vals = {"u": u0, "v": v0}
        on_base = cert.base_conic.poly.rename(("x", "y", "z"))  # same frame trick below
        c0 = cert.coincidence_polys[0]
        # divisibility by the base conic was already certified; just re-check
        # the recorded points against the stored data
        base_val = _eval_uv(cert, u0, v0)
        assert base_val == 0 or any(
            l.evaluate(vals) == 0 for l in cert.degenerate_lines)


def _eval_uv(cert, u0, v0):
    poly = cert.base_conic.poly
    total = Fraction(0)
    for (a, b, c), coeff in poly.terms.items():
        total += coeff * u0 ** a * v0 ** b
    return total


def test_four_points_certificate_negative_control():
    cert = verify_no_four_33_points(perturb=True)
    assert not cert.holds


def test_four_points_certificate_symmetric_rerun():
    # relabelling the two anchored tangents swaps nothing essential: the
    # certificate is reproducible bit for bit on a second invocation
    a = verify_no_four_33_points()
    b = verify_no_four_33_points()
    assert str(a.base_conic) == str(b.base_conic)
    assert [str(p) for p in a.coincidence_polys] == [str(p) for p in b.coincidence_polys]
    assert a.holds and b.holds
