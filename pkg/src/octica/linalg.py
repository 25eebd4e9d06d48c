"""Exact linear algebra over Q, over rational function fields, and over Q[t].

Three layers:
  * rref/kernel over any exact field (Fraction entries, or RatFunc entries),
  * fraction-free Bareiss echelon for matrices of polynomials,
  * determinantal divisors over a single-parameter ring Q[t] via Smith-style
    reduction, for rank-drop loci.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import MultiPoly, grevlex_key, poly_gcd


# -- generic field echelon ------------------------------------------------


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; entries may be Fraction or RatFunc.

    Returns (reduced rows, pivot column indices).  Deterministic: pivots are
    chosen as the first nonzero entry scanning rows in order.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [e / inv for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: list[list]) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows: list[list], ncols: int | None = None, one=Fraction(1), zero=Fraction(0)) -> list[list]:
    """Exact right-kernel basis from the reduced echelon form.

    Deterministic: one basis vector per free column, in column order, with a 1
    in the free position.  For an empty row list the full standard basis of
    length `ncols` is returned.
    """
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        return [[one if j == i else zero for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def mat_mul_vec(rows: list[list], vec: list) -> list:
    return [sum((a * b for a, b in zip(row, vec)), start=row[0] * 0) for row in rows]


# -- rational functions ---------------------------------------------------


class RatFunc:
    """Quotient of MultiPolys, normalised so the denominator is primitive
    with positive leading coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(num.vars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = MultiPoly.const(num.vars, 1)
        else:
            g = poly_gcd(num, den)
            if g.total_degree() > 0 or g.constant_value() != 1:
                num = num.exact_div(g)
                den = den.exact_div(g)
            c = den.rational_content()
            den = den * (1 / c)
            num = num * (1 / c)
        self.num = num
        self.den = den

    @staticmethod
    def of(p: MultiPoly) -> "RatFunc":
        return RatFunc(p)

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


# -- fraction-free echelon over polynomial rings --------------------------


def _row_primitive(row: list[MultiPoly]) -> list[MultiPoly]:
    g: MultiPoly | None = None
    for e in row:
        if not e.is_zero():
            g = e if g is None else poly_gcd(g, e)
            if g.is_constant():
                g = None
                break
    if g is None or g.is_constant():
        # still normalise rational content for reproducibility
        nz = [e for e in row if not e.is_zero()]
        if not nz:
            return row
        c = nz[0].rational_content()
        for e in nz[1:]:
            cc = e.rational_content()
            c = Fraction(_gcd_frac(c, cc))
        return [e * (1 / c) for e in row]
    return [e.exact_div(g) for e in row]


def _gcd_frac(a: Fraction, b: Fraction) -> Fraction:
    from math import gcd
    a, b = abs(a), abs(b)
    num = gcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    return Fraction(num, den)


def bareiss_echelon(rows: list[list[MultiPoly]]) -> tuple[list[list[MultiPoly]], list[int]]:
    """Fraction-free row echelon of a polynomial matrix.

    Rows are made primitive before each elimination step; the pivot in each
    column is the candidate of lowest total degree (ties broken by canonical
    term order, then row index), which keeps the output reproducible.
    Returns (echelon rows, pivot column indices); rank = number of pivots.
    """
    if not rows:
        return [], []
    frame = None
    for row in rows:
        for e in row:
            frame = e.vars
            break
        break
    m = [_row_primitive(list(r)) for r in rows]
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        cand = None
        for i in range(r, len(m)):
            e = m[i][c]
            if e.is_zero():
                continue
            key = (e.total_degree(), grevlex_key(e.leading_term()[0]), i)
            if cand is None or key < cand[0]:
                cand = (key, i)
        if cand is None:
            continue
        i = cand[1]
        m[r], m[i] = m[i], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if not f.is_zero():
                m[i] = [piv * e - f * p for e, p in zip(m[i], m[r])]
                m[i] = _row_primitive(m[i])
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def poly_matrix_rank(rows: list[list[MultiPoly]]) -> int:
    return len(bareiss_echelon(rows)[1])


def poly_kernel_basis(rows: list[list[MultiPoly]], ncols: int, frame: Sequence[str]) -> list[list[MultiPoly]]:
    """Right kernel over the fraction field, returned as cleared polynomial
    vectors, each primitive with positive leading coefficient, deterministic."""
    frame = tuple(frame)
    if not rows:
        one = MultiPoly.const(frame, 1)
        zero = MultiPoly.zero(frame)
        return [[one if j == i else zero for j in range(ncols)] for i in range(ncols)]
    rat_rows = [[RatFunc(e) for e in row] for row in rows]
    zero_r = RatFunc(MultiPoly.zero(frame))
    one_r = RatFunc(MultiPoly.const(frame, 1))
    basis = kernel_basis(rat_rows, ncols=ncols, one=one_r, zero=zero_r)
    out: list[list[MultiPoly]] = []
    for vec in basis:
        den = MultiPoly.const(frame, 1)
        for e in vec:
            if e:
                g = poly_gcd(den, e.den)
                den = den * e.den.exact_div(g)
        cleared = [e.num * den.exact_div(e.den) if e else MultiPoly.zero(frame) for e in vec]
        g: MultiPoly | None = None
        for e in cleared:
            if not e.is_zero():
                g = e if g is None else poly_gcd(g, e)
        if g is not None and (g.total_degree() > 0 or g.constant_value() != 1):
            cleared = [e.exact_div(g) if not e.is_zero() else e for e in cleared]
        lead = next(e for e in cleared if not e.is_zero())
        if lead.leading_term()[1] < 0:
            cleared = [-e for e in cleared]
        c = None
        for e in cleared:
            if not e.is_zero():
                cc = e.rational_content()
                c = abs(cc) if c is None else _gcd_frac(c, cc)
        if c is not None and c != 1:
            cleared = [e * (1 / c) for e in cleared]
        out.append(cleared)
    return out


# -- determinantal divisors over Q[t] --------------------------------------


def _uni_divmod(a: MultiPoly, b: MultiPoly, var: str) -> tuple[MultiPoly, MultiPoly]:
    """Euclidean division in Q[var] for polynomials supported on one variable."""
    frame = a.vars
    q = MultiPoly.zero(frame)
    r = a
    db = b.degree_in(var)
    i = frame.index(var)
    lb = b.coeff(tuple(db if j == i else 0 for j in range(len(frame))))
    while not r.is_zero() and r.degree_in(var) >= db:
        dr = r.degree_in(var)
        lr = r.coeff(tuple(dr if j == i else 0 for j in range(len(frame))))
        t = MultiPoly.monomial(frame, tuple(dr - db if j == i else 0 for j in range(len(frame))), lr / lb)
        q = q + t
        r = r - t * b
    return q, r


def determinantal_divisor(rows: list[list[MultiPoly]], r: int, var: str) -> MultiPoly:
    """gcd of all r x r minors of a matrix over Q[var], via Smith reduction.

    Unimodular row/column operations preserve every determinantal divisor, so
    the product of the first r diagonal invariant factors is the answer.
    The result is primitive with positive leading coefficient.
    """
    if r <= 0:
        raise ValueError("order must be positive")
    m = [[e for e in row] for row in rows]
    if not m:
        raise ValueError("empty matrix")
    frame = m[0][0].vars
    nrows, ncols = len(m), len(m[0])
    diag: list[MultiPoly] = []
    top = 0
    while top < min(nrows, ncols):
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                e = m[i][j]
                if not e.is_zero():
                    key = (e.degree_in(var), grevlex_key(e.leading_term()[0]), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for row in m:
            row[top], row[bj] = row[bj], row[top]
        changed = True
        while changed:
            changed = False
            piv = m[top][top]
            for i in range(top + 1, nrows):
                if m[i][top].is_zero():
                    continue
                q, rem = _uni_divmod(m[i][top], piv, var)
                m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                if not rem.is_zero():
                    m[top], m[i] = m[i], m[top]
                    changed = True
                    break
            if changed:
                continue
            for j in range(top + 1, ncols):
                if m[top][j].is_zero():
                    continue
                q, rem = _uni_divmod(m[top][j], piv, var)
                for row in m:
                    row[j] = row[j] - q * row[top]
                if not rem.is_zero():
                    for row in m:
                        row[top], row[j] = row[j], row[top]
                    changed = True
                    break
        diag.append(m[top][top])
        top += 1
    if len(diag) < r:
        return MultiPoly.zero(frame)
    # gcd of r x r minors of the diagonal matrix: gcd over r-subsets of products
    from itertools import combinations

    out: MultiPoly | None = None
    for subset in combinations(diag, r):
        prod = MultiPoly.const(frame, 1)
        for d in subset:
            prod = prod * d
        out = prod if out is None else poly_gcd(out, prod)
        if out.is_constant():
            break
    assert out is not None
    return out.primitive()
