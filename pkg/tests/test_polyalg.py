"""Exact polynomial arithmetic, linear algebra and resultants."""
import random
from fractions import Fraction
from math import comb

import pytest

from octica.linalg import kernel_basis, rank
from octica.poly import (MultiPoly, VariableMismatch, monomial_basis, poly_gcd,
                         resultant, resultant_sylvester, squarefree_decomposition,
                         squarefree_part)

V = ("x", "y", "z")
X = MultiPoly.var(V, "x")
Y = MultiPoly.var(V, "y")
Z = MultiPoly.var(V, "z")


def random_poly(rng, frame=V, max_deg=3, terms=4):
    out = {}
    for _ in range(terms):
        exp = [0] * len(frame)
        for _ in range(rng.randint(0, max_deg)):
            exp[rng.randrange(len(frame))] += 1
        out[tuple(exp)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return MultiPoly(frame, out)


def test_monomial_basis_counts():
    assert len(monomial_basis(3, 8)) == 45
    assert len(monomial_basis(3, 1)) == 3
    assert len(monomial_basis(2, 4)) == 5
    for d in range(13):
        assert len(monomial_basis(3, d)) == comb(d + 2, 2)


def test_monomial_basis_order_is_canonical():
    basis = monomial_basis(3, 2)
    names = []
    for exp in basis:
        names.append("".join(v * e for v, e in zip(V, exp)))
    assert names == ["xx", "xy", "yy", "xz", "yz", "zz"]


def test_ring_laws_on_random_operands():
    rng = random.Random(421)
    for _ in range(500):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
    assert (X ** 2 + Y) * 0 == MultiPoly.zero(V)


def test_substitute_then_derive_commutes():
    rng = random.Random(73)
    for _ in range(40):
        f = random_poly(rng)
        c = Fraction(rng.randint(-3, 3))
        sub = {"z": c}
        left = f.derivative("x").substitute(sub)
        right = f.substitute(sub).derivative("x")
        assert left == right


def test_derivative_examples():
    assert (X ** 3 + Y ** 4).derivative("x") == 3 * X ** 2
    frame = ("x", "y", "t")
    x, y, t = (MultiPoly.var(frame, v) for v in frame)
    assert (y - t * x).substitute({"t": Fraction(0)}) == y


def test_variable_mismatch_raises():
    other = MultiPoly.var(("x", "y"), "x")
    with pytest.raises(VariableMismatch):
        X + other


def test_leibniz_rule():
    rng = random.Random(5)
    for _ in range(30):
        f, g = random_poly(rng), random_poly(rng)
        lhs = (f * g).derivative("y")
        rhs = f.derivative("y") * g + f * g.derivative("y")
        assert lhs == rhs


def test_resultant_examples():
    # frozen sign convention: coefficients of the first argument on top
    assert resultant(Y - X, Y + X, "y") == 2 * X
    # substitution oracle: eliminating y from (x^2 - y, y - 1) leaves x^2 - 1,
    # which the frozen convention produces with a global sign of -1
    by_substitution = (X ** 2 - Y).substitute({"y": Fraction(1)})
    r = resultant(X ** 2 - Y, Y - 1, "y")
    assert r == -by_substitution
    assert r in (by_substitution, -by_substitution)
    f = (X * Y + Z) * (X + Y)
    g = (X * Y + Z) * (X - Y + Z)
    assert resultant(f, g, "x").is_zero()


def test_resultant_matches_sylvester_determinant():
    rng = random.Random(99)
    agree = 0
    for _ in range(120):
        f, g = random_poly(rng), random_poly(rng)
        if f.degree_in("y") <= 0 or g.degree_in("y") <= 0:
            continue
        assert resultant(f, g, "y") == resultant_sylvester(f, g, "y")
        agree += 1
    assert agree > 60


def test_resultant_zero_iff_common_factor():
    rng = random.Random(17)
    for _ in range(40):
        f, g, h = random_poly(rng), random_poly(rng), random_poly(rng)
        if h.degree_in("y") <= 0 or f.degree_in("y") < 0 or g.degree_in("y") < 0:
            continue
        a, b = f * h, g * h
        if a.degree_in("y") <= 0 or b.degree_in("y") <= 0:
            continue
        assert resultant(a, b, "y").is_zero()
        gcd = poly_gcd(f, g)
        if gcd.total_degree() == 0 and f.degree_in("y") > 0 and g.degree_in("y") > 0:
            assert not resultant(f, g, "y").is_zero()


def test_gcd_and_squarefree():
    U = ("x",)
    x = MultiPoly.var(U, "x")
    assert poly_gcd(x ** 2 - 1, x - 1) == x - 1
    dec = squarefree_decomposition(x ** 2 * (x - 1))
    assert [(m, str(p)) for m, p in dec] == [(1, "x - 1"), (2, "x")]
    assert squarefree_part(x ** 2 * (x - 1)) == x * (x - 1)
    dec2 = squarefree_decomposition((x ** 2 + 1) ** 2)
    assert [(m, str(p)) for m, p in dec2] == [(2, "x^2 + 1")]


def test_kernel_basis_examples():
    one, zero = Fraction(1), Fraction(0)
    identity = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert kernel_basis(identity) == []
    zeros = [[zero] * 4, [zero] * 4]
    assert len(kernel_basis(zeros)) == 4


def test_kernel_vectors_are_exact():
    rng = random.Random(31)
    for _ in range(25):
        rows = [[Fraction(rng.randint(-6, 6)) for _ in range(7)] for _ in range(4)]
        for vec in kernel_basis(rows):
            for row in rows:
                assert sum(a * b for a, b in zip(row, vec)) == 0


def test_rank_plus_kernel_is_columns():
    rng = random.Random(11)
    for _ in range(25):
        rows = [[Fraction(rng.randint(-4, 4)) for _ in range(6)] for _ in range(5)]
        assert rank(rows) + len(kernel_basis(rows)) == 6
