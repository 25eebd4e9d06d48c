"""Universal families of constrained curves over polynomial parameter rings.

The central objects are condition matrices M(t) acting on the coefficients of
a parameter-dependent basis of forms: their generic rank, the locus where the
rank drops, and the comparison between the kernel specialised at a parameter
value and the specialisation of the generic kernel.  A strict inclusion
between the two detects that a numerically defined family splits into
separate components.  The module also hosts the conic machinery culminating
in the certificate that no plane octic carries four triple points with
infinitely-near triple points.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import (determinantal_divisor, kernel_basis, poly_kernel_basis,
                     poly_matrix_rank, rank)
from .linsys import (AnchoredCondition, AnchorError, HomForm, PLANE_VARS, Point,
                     common_divisibility, condition_rows, line_coeffs,
                     normalize_point)
from .poly import MultiPoly, monomial_basis, poly_gcd, squarefree_part

MAX_PARAMS = 4


@dataclass
class UniversalFamily:
    """f = sum a_i * basis_i with basis forms depending on the parameters."""

    degree: int
    params: tuple[str, ...]
    basis: list[MultiPoly]          # frame PLANE_VARS + params

    def __post_init__(self):
        if len(self.params) > MAX_PARAMS:
            raise AnchorError(f"at most {MAX_PARAMS} parameters supported")
        self.frame = PLANE_VARS + self.params

    @property
    def size(self) -> int:
        return len(self.basis)

    def specialize(self, values: dict[str, Fraction]) -> list[MultiPoly]:
        subs = {p: Fraction(values[p]) for p in self.params}
        out = []
        for b in self.basis:
            s = b.substitute(subs)
            out.append(s.rename(PLANE_VARS))
        return out

    def member(self, coeff_vec, values: dict[str, Fraction]) -> HomForm:
        forms = self.specialize(values)
        total = MultiPoly.zero(PLANE_VARS)
        for c, m in zip(coeff_vec, forms):
            total = total + m * c
        return HomForm(total.primitive() if not total.is_zero() else total, self.degree)


@dataclass
class ParamMatrix:
    entries: list[list[MultiPoly]]   # frame = params only
    params: tuple[str, ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def specialize(self, values: dict[str, Fraction]) -> list[list[Fraction]]:
        vals = {p: Fraction(values[p]) for p in self.params}
        return [[e.evaluate(vals) for e in row] for row in self.entries]


def parametric_nn_family(n: int = 3, degree: int = 8, param: str = "t") -> UniversalFamily:
    """Forms of the given degree with an [n;n]-point at (0:0:1) whose tangent
    direction y - t*x varies with the parameter.

    The fixed-tangent monomial basis is sheared by y -> y - t*x, which
    identifies the graded pieces for every parameter value at once.
    """
    frame = PLANE_VARS + (param,)
    x = MultiPoly.var(frame, "x")
    y = MultiPoly.var(frame, "y")
    t = MultiPoly.var(frame, param)
    sheared_y = y - t * x
    basis = []
    for (a, b, c) in monomial_basis(3, degree):
        if a + 2 * b >= 2 * n:
            m = MultiPoly.var(frame, "x") ** a * sheared_y ** b * MultiPoly.var(frame, "z") ** c
            basis.append(m)
    return UniversalFamily(degree, (param,), basis)


def degenerate_nn_direction_analysis(n: int = 3, degree: int = 6, param: str = "s") -> tuple[UniversalFamily, ParamMatrix]:
    """Forms with an [n;n]-point at the standard flag whose blown-up tangent
    cone has a repeated root at the variable direction y/x = s.

    The family is the fixed monomial basis of the [n;n] ideal; the two extra
    rows (the cone as a binary n-ic vanishes doubly at the direction s) are
    polynomial in the parameter, so the kernel of the 2-row matrix at each
    value of s is the degenerate linear system with that second-order datum.
    """
    frame_p = (param,)
    s = MultiPoly.var(frame_p, param)
    one = MultiPoly.const(frame_p, 1)
    zero = MultiPoly.zero(frame_p)
    exps = [e for e in monomial_basis(3, degree) if e[0] + 2 * e[1] >= 2 * n]
    fam_frame = PLANE_VARS + (param,)
    basis = [MultiPoly.monomial(fam_frame, e + (0,)) for e in exps]
    family = UniversalFamily(degree, (param,), basis)
    row1, row2 = [], []
    for (a, b, c) in exps:
        if a + 2 * b == 2 * n:
            row1.append(one * s ** b)
            row2.append(zero if b == 0 else s ** (b - 1) * b)
        else:
            row1.append(zero)
            row2.append(zero)
    return family, ParamMatrix([row1, row2], frame_p)


def build_condition_matrix(family: UniversalFamily, extra_conditions: Sequence[AnchoredCondition]) -> ParamMatrix:
    """M(t) a = 0 characterises family members meeting the extra conditions."""
    rows_q = condition_rows(extra_conditions, family.degree)
    basis_exps = monomial_basis(3, family.degree)
    param_frame = family.params
    coeff_tables = []
    for b in family.basis:
        table = b.coefficients_in(PLANE_VARS)
        coeff_tables.append({exp: p.rename(param_frame) for exp, p in table.items()})
    zero = MultiPoly.zero(param_frame)
    entries = []
    for row in rows_q:
        out_row = []
        for table in coeff_tables:
            acc = zero
            for exp, coeff in zip(basis_exps, row):
                if coeff != 0:
                    p = table.get(exp)
                    if p is not None:
                        acc = acc + p * coeff
            out_row.append(acc)
        entries.append(out_row)
    return ParamMatrix(entries, param_frame)


def generic_rank(M: ParamMatrix) -> int:
    if not M.entries:
        return 0
    return poly_matrix_rank(M.entries)


@dataclass
class RankDropLocus:
    generic_rank: int
    minor_gcd: MultiPoly
    radical: MultiPoly          # squarefree part: the reduced vanishing locus

    @property
    def empty(self) -> bool:
        """True when the rank never drops (the minors generate the unit ideal)."""
        return self.radical.is_constant()

    def is_exactly(self, gen: MultiPoly) -> bool:
        return self.radical == squarefree_part(gen.rename(self.radical.vars))


def rank_drop_locus(M: ParamMatrix) -> RankDropLocus:
    r = generic_rank(M)
    if r == 0:
        raise ValueError("zero matrix has no rank-drop locus")
    if len(M.params) == 1:
        g = determinantal_divisor(M.entries, r, M.params[0])
    else:
        n_minors = 1
        from math import comb
        if comb(M.rows, r) * comb(M.cols, r) > 20000:
            raise NotImplementedError("too many minors for a multi-parameter rank-drop locus")
        from .poly import det_bareiss
        g = None
        for rows_sel in combinations(range(M.rows), r):
            for cols_sel in combinations(range(M.cols), r):
                minor = det_bareiss([[M.entries[i][j] for j in cols_sel] for i in rows_sel])
                if minor.is_zero():
                    continue
                g = minor if g is None else poly_gcd(g, minor)
                if g.is_constant():
                    break
            if g is not None and g.is_constant():
                break
        if g is None:
            g = MultiPoly.zero(M.entries[0][0].vars)
    if g.is_zero():
        raise ValueError("matrix does not attain its generic rank")
    radical = squarefree_part(g) if not g.is_constant() else MultiPoly.const(g.vars, 1)
    return RankDropLocus(r, g.primitive(), radical)


@dataclass
class KernelComparison:
    special_kernel: list[list[Fraction]]
    limit_kernel: list[list[Fraction]]
    inclusion_holds: bool
    strict: bool
    limit_rank_deficient: bool = False

    @property
    def special_dim(self) -> int:
        return len(self.special_kernel)

    @property
    def limit_dim(self) -> int:
        return len(self.limit_kernel)


def _span_contains(span_rows: list[list[Fraction]], vec: list[Fraction]) -> bool:
    if not span_rows:
        return all(c == 0 for c in vec)
    return rank(span_rows) == rank(span_rows + [vec])


def compare_kernels_at(M: ParamMatrix, values: dict[str, Fraction]) -> KernelComparison:
    ncols = M.cols
    special_rows = M.specialize(values)
    special = kernel_basis(special_rows, ncols=ncols)
    generic = poly_kernel_basis(M.entries, ncols, M.params)
    limit = []
    vals = {p: Fraction(values[p]) for p in M.params}
    for vec in generic:
        limit.append([e.evaluate(vals) for e in vec])
    deficient = rank(limit) < len(limit) if limit else False
    inclusion = all(_span_contains(special, v) for v in limit)
    if not inclusion:
        raise AssertionError("kernel limit escaped the specialised kernel; "
                             "semicontinuity violated")
    strict = inclusion and (rank(limit) if limit else 0) < len(special)
    return KernelComparison(special, limit, inclusion, strict, deficient)


@dataclass
class SplitReport:
    witness_line: MultiPoly
    special_multiplicity: int
    limit_multiplicity: int

    @property
    def split_detected(self) -> bool:
        return self.special_multiplicity != self.limit_multiplicity


def component_split_report(family: UniversalFamily, comparison: KernelComparison,
                           values: dict[str, Fraction], witness_line: MultiPoly) -> SplitReport:
    forms_special = [family.member(v, values).poly for v in comparison.special_kernel]
    forms_limit = [family.member(v, values).poly for v in comparison.limit_kernel]
    forms_special = [f for f in forms_special if not f.is_zero()]
    forms_limit = [f for f in forms_limit if not f.is_zero()]
    div_special = common_divisibility(forms_special, witness_line) if forms_special else 0
    div_limit = common_divisibility(forms_limit, witness_line) if forms_limit else 0
    return SplitReport(witness_line, div_special, div_limit)


# -- conics through prescribed data -------------------------------------------


CONIC_EXPS = monomial_basis(3, 2)


def _conic_eval_row(p: Point, frame=None) -> list:
    values = {"x": p[0], "y": p[1], "z": p[2]}
    row = []
    for exp in CONIC_EXPS:
        val = Fraction(1)
        for v, e in zip(PLANE_VARS, exp):
            val *= values[v] ** e
        row.append(val)
    return row


def _conic_gradient_rows(p: Point, line: MultiPoly) -> list[list[Fraction]]:
    """Rows forcing grad Q(p) parallel to the line coefficients (two of the
    three cross-product components suffice; all three are produced and the
    dependent one discarded)."""
    l = line_coeffs(line)
    grads = []
    for v in PLANE_VARS:
        row = []
        for exp in CONIC_EXPS:
            mono = MultiPoly.monomial(PLANE_VARS, exp)
            d = mono.derivative(v)
            row.append(d.evaluate({"x": p[0], "y": p[1], "z": p[2]}))
        grads.append(row)
    cross = [
        [l[2] * a - l[1] * b for a, b in zip(grads[1], grads[2])],
        [l[0] * a - l[2] * b for a, b in zip(grads[2], grads[0])],
        [l[1] * a - l[0] * b for a, b in zip(grads[0], grads[1])],
    ]
    out = []
    for row in cross:
        if any(c != 0 for c in row):
            cand = out + [row]
            if rank(cand) > rank(out):
                out.append(row)
        if len(out) == 2:
            break
    if len(out) != 2:
        raise AnchorError("degenerate tangency constraint for a conic")
    return out


def conic_through(points: Sequence[Point] = (), flags: Sequence[tuple[Point, MultiPoly]] = ()) -> HomForm:
    """The unique conic through the given simple points and tangent flags.

    Each plain point imposes one condition, each flag two; exactly five
    independent conditions are required.
    """
    rows: list[list[Fraction]] = []
    for p in points:
        rows.append(_conic_eval_row(normalize_point(p)))
    for (p, line) in flags:
        p = normalize_point(p)
        if line.evaluate({"x": p[0], "y": p[1], "z": p[2]}) != 0:
            raise AnchorError("flag tangent does not pass through its point")
        rows.extend(_conic_gradient_rows(p, line))
        rows.append(_conic_eval_row(p))
    ker = kernel_basis(rows, ncols=6)
    if len(ker) != 1:
        raise AnchorError(f"conic constraints are not independent: solution space {len(ker)}")
    vec = ker[0]
    terms = {exp: c for exp, c in zip(CONIC_EXPS, vec) if c != 0}
    return HomForm(MultiPoly(PLANE_VARS, terms).primitive(), 2)


def conic_gradient(Q: HomForm, p: Point) -> MultiPoly:
    """Tangent line of a smooth conic at a point on it."""
    coeffs = []
    for v in PLANE_VARS:
        coeffs.append(Q.poly.derivative(v).evaluate({"x": p[0], "y": p[1], "z": p[2]}))
    if all(c == 0 for c in coeffs):
        raise AnchorError("conic is singular at the point")
    terms = {tuple(1 if i == j else 0 for i in range(3)): c
             for j, c in enumerate(coeffs) if c != 0}
    return MultiPoly(PLANE_VARS, terms).primitive()


# -- the four-[3;3]-points certificate ----------------------------------------


@dataclass
class FourPointsCertificate:
    base_conic: HomForm
    coincidence_polys: list[MultiPoly]       # polynomials in (u, v) cutting the locus
    residuals: list[MultiPoly]
    degenerate_lines: list[MultiPoly]
    residual_curve_part_explained: bool
    residual_points: list[tuple[Fraction, Fraction]]
    residual_points_on_base: bool
    holds: bool
    notes: list[str] = field(default_factory=list)


UV = ("u", "v")


def _symbolic_conic(flag_rows: list[list[Fraction]], p4_frame) -> list[MultiPoly]:
    """Conic through two rational flags and the symbolic point (u : v : 1):
    coefficient vector by signed maximal minors of the 5 x 6 condition matrix."""
    sym_row = []
    u = MultiPoly.var(p4_frame, "u")
    v = MultiPoly.var(p4_frame, "v")
    one = MultiPoly.const(p4_frame, 1)
    coords = {"x": u, "y": v, "z": one}
    for exp in CONIC_EXPS:
        val = one
        for w, e in zip(PLANE_VARS, exp):
            for _ in range(e):
                val = val * coords[w]
        sym_row.append(val)
    rows = [[MultiPoly.const(p4_frame, c) for c in r] for r in flag_rows]
    rows.append(sym_row)
    from .poly import det_bareiss
    vec = []
    for j in range(6):
        cols = [k for k in range(6) if k != j]
        minor = det_bareiss([[rows[i][k] for k in cols] for i in range(5)])
        sign = -1 if j % 2 else 1
        vec.append(minor * sign)
    return vec


def _flag_row_pair(p: Point, line: MultiPoly) -> list[list[Fraction]]:
    return _conic_gradient_rows(normalize_point(p), line)


def verify_no_four_33_points(perturb: bool = False) -> FourPointsCertificate:
    """Fix three points and two tangents, build the three conics through a
    variable fourth point, and certify that their tangent directions at the
    fourth point can only coincide on the base conic (or on degenerate
    positions of the fourth point).  With perturb=True a deliberately wrong
    tangent is used and the certificate must fail (negative control)."""
    p1 = normalize_point((0, 0, 1))
    p2 = normalize_point((0, 1, 0))
    p3 = normalize_point((1, 0, 0))
    x = MultiPoly.var(PLANE_VARS, "x")
    y = MultiPoly.var(PLANE_VARS, "y")
    z = MultiPoly.var(PLANE_VARS, "z")
    l1 = (x + y).primitive()
    l2 = (x + z).primitive()
    C0 = conic_through(points=[p3], flags=[(p1, l1), (p2, l2)])
    l3 = conic_gradient(C0, p3)
    notes = []
    frame = UV
    u = MultiPoly.var(frame, "u")
    v = MultiPoly.var(frame, "v")

    def _eval_form_at_uv(f: MultiPoly) -> MultiPoly:
        # substitute (x, y, z) -> (u, v, 1)
        out = MultiPoly.zero(frame)
        for (a, b, c), coeff in f.terms.items():
            out = out + MultiPoly(frame, {(a, b): Fraction(1)}) * coeff
        return out

    l2_used = l2 if not perturb else (x + 2 * y + z).primitive()
    conics = []
    for flags in (((p2, l2), (p3, l3)),            # C1: misses p1
                  ((p1, l1), (p3, l3)),            # C2: misses p2
                  ((p1, l1), (p2, l2_used))):      # C3: misses p3
        rows = _flag_row_pair(*flags[0]) + _flag_row_pair(*flags[1])
        conics.append(_symbolic_conic(rows, frame))

    # tangent line of each conic at p4 = (u : v : 1): gradient evaluated there
    tangents = []
    for vec in conics:
        grads = []
        for w in PLANE_VARS:
            comp = MultiPoly.zero(frame)
            for exp, coeff_mono in zip(CONIC_EXPS, vec):
                mono = MultiPoly.monomial(PLANE_VARS, exp)
                d = mono.derivative(w)
                comp = comp + coeff_mono * _eval_form_at_uv(d)
            grads.append(comp)
        tangents.append(grads)

    def cross(a, b):
        return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]

    psis = []
    for other in (1, 2):
        c = cross(tangents[0], tangents[other])
        psi = c[2]
        if not (c[0] == psi * u and c[1] == psi * v):
            raise AssertionError("tangent lines do not meet at the fourth point")
        psis.append(psi)
    c0_uv = _eval_form_at_uv(C0.poly)

    degenerate_lines = []
    for (a, b) in ((p1, p2), (p1, p3), (p2, p3)):
        from .linsys import line_through
        degenerate_lines.append(_eval_form_at_uv(line_through(a, b)))
    for l in (l1, l2, l3):
        degenerate_lines.append(_eval_form_at_uv(l))

    if any(psi.is_zero() for psi in psis):
        return FourPointsCertificate(C0, psis, [], degenerate_lines, False, [], False, False,
                                     ["a coincidence polynomial vanished identically"])
    residuals = []
    divisible = True
    for psi in psis:
        qq, rr = psi.divmod_by(c0_uv)
        if rr.is_zero():
            residuals.append(qq)
        else:
            divisible = False
            residuals.append(psi)
    if not divisible:
        return FourPointsCertificate(C0, psis, residuals, degenerate_lines,
                                     False, [], False, False,
                                     ["coincidence polynomials are not divisible by the base conic"])

    # every curve component of the residual locus must be a known degenerate line
    # or the base conic again
    g = poly_gcd(residuals[0], residuals[1])
    explained = c0_uv
    for line in degenerate_lines:
        explained = explained * line
    h = g
    while not h.is_constant():
        d = poly_gcd(h, explained)
        if d.is_constant():
            break
        h = h.exact_div(d)
    curve_part_ok = h.is_constant()

    q1 = residuals[0].exact_div(g) if not g.is_constant() else residuals[0]
    q2 = residuals[1].exact_div(g) if not g.is_constant() else residuals[1]
    residual_points: list[tuple[Fraction, Fraction]] = []
    points_ok = True
    if not (q1.is_constant() or q2.is_constant()):
        from .poly import resultant
        if q1.degree_in("v") > 0 and q2.degree_in("v") > 0:
            R = resultant(q1, q2, "v")
        else:
            R = q1 if q1.degree_in("v") == 0 else q2
        if R.is_zero():
            points_ok = False
            notes.append("residual coincidence polynomials share a factor")
        elif not R.is_constant():
            from .singclass import rational_roots
            for u0 in rational_roots(squarefree_part(R.rename(("u", "v"))).substitute({"v": Fraction(1)}).rename(("u",)), "u"):
                sub1 = q1.substitute({"u": u0}).rename(("v",))
                sub2 = q2.substitute({"u": u0}).rename(("v",))
                gg = poly_gcd(sub1, sub2)
                if gg.total_degree() > 0:
                    for v0 in rational_roots(gg, "v"):
                        residual_points.append((u0, v0))
            for (u0, v0) in residual_points:
                vals = {"u": u0, "v": v0}
                on_base = c0_uv.evaluate(vals) == 0
                on_deg = any(l.evaluate(vals) == 0 for l in degenerate_lines)
                if not (on_base or on_deg):
                    points_ok = False
                    notes.append(f"residual coincidence point off the base conic: ({u0}, {v0})")

    holds = divisible and curve_part_ok and points_ok
    return FourPointsCertificate(C0, psis, residuals, degenerate_lines,
                                 curve_part_ok, residual_points, points_ok, holds, notes)
