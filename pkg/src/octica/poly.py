"""Exact sparse multivariate polynomials over the rationals.

Terms are stored as a dict from exponent tuples to nonzero Fractions and
iterated in descending graded reverse lexicographic order, so printed output
and derived bases are reproducible bit for bit.  Parameter rings such as
QQ[t][x,y,z] are handled with a flat variable frame (x, y, z, t, ...) plus
coefficient-grouping views; there is never any floating point.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence


class VariableMismatch(ValueError):
    """Raised when two polynomials disagree on their variable frame."""


def grevlex_key(exponents: tuple[int, ...]) -> tuple:
    """Sort key so that sorting descending yields grevlex order, x > y > z."""
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.vars: tuple[str, ...] = tuple(variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            nv = len(self.vars)
            for exp, c in terms.items():
                if len(exp) != nv:
                    raise VariableMismatch(f"exponent {exp} does not fit frame {self.vars}")
                c = Fraction(c)
                if c != 0:
                    clean[tuple(exp)] = c
        self.terms: dict[tuple[int, ...], Fraction] = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str]) -> "MultiPoly":
        return MultiPoly(variables)

    @staticmethod
    def const(variables: Sequence[str], c) -> "MultiPoly":
        c = Fraction(c)
        if c == 0:
            return MultiPoly(variables)
        return MultiPoly(variables, {(0,) * len(variables): c})

    @staticmethod
    def var(variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatch(f"unknown variable {name!r} in frame {variables}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return MultiPoly(variables, {exp: Fraction(1)})

    @staticmethod
    def monomial(variables: Sequence[str], exponents: Sequence[int], c=1) -> "MultiPoly":
        return MultiPoly(variables, {tuple(exponents): Fraction(c)})

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(exp[i] for exp in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(exp) for exp in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grevlex_key)
        return exp, self.terms[exp]

    def coeff(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def support_vars(self) -> set[str]:
        used: set[str] = set()
        for exp in self.terms:
            for v, e in zip(self.vars, exp):
                if e:
                    used.add(v)
        return used

    # -- ring operations ----------------------------------------------

    def _check_frame(self, other: "MultiPoly") -> None:
        if self.vars != other.vars:
            raise VariableMismatch(f"frames differ: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        self._check_frame(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp, Fraction(0)) + c
            if s == 0:
                terms.pop(exp, None)
            else:
                terms[exp] = s
        out = MultiPoly.__new__(MultiPoly)
        out.vars = self.vars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.vars = self.vars
        out.terms = {exp: -c for exp, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return MultiPoly(self.vars)
            out = MultiPoly.__new__(MultiPoly)
            out.vars = self.vars
            out.terms = {exp: cc * c for exp, cc in self.terms.items()}
            return out
        self._check_frame(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exp, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(exp, None)
                else:
                    terms[exp] = s
        out = MultiPoly.__new__(MultiPoly)
        out.vars = self.vars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus and evaluation --------------------------------------

    def derivative(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        terms: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e:
                new = list(exp)
                new[i] = e - 1
                key = tuple(new)
                s = terms.get(key, Fraction(0)) + c * e
                if s == 0:
                    terms.pop(key, None)
                else:
                    terms[key] = s
        out = MultiPoly.__new__(MultiPoly)
        out.vars = self.vars
        out.terms = terms
        return out

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        missing = self.support_vars() - set(values)
        if missing:
            raise VariableMismatch(f"no values for {sorted(missing)}")
        total = Fraction(0)
        vals = [Fraction(values.get(v, 0)) for v in self.vars]
        for exp, c in self.terms.items():
            t = c
            for val, e in zip(vals, exp):
                if e:
                    t *= val ** e
            total += t
        return total

    def substitute(self, mapping: Mapping[str, "MultiPoly | Fraction | int"],
                   target_vars: Sequence[str] | None = None) -> "MultiPoly":
        """Ring homomorphism sending each variable to a polynomial or constant.

        Variables absent from `mapping` are sent to the variable of the same
        name in the target frame.  The target frame defaults to this frame.
        """
        if target_vars is None:
            target_vars = self.vars
        target_vars = tuple(target_vars)
        images: list[MultiPoly] = []
        for v in self.vars:
            img = mapping.get(v, None)
            if img is None:
                images.append(MultiPoly.var(target_vars, v))
            elif isinstance(img, MultiPoly):
                if img.vars != target_vars:
                    raise VariableMismatch(f"image of {v} uses frame {img.vars}, expected {target_vars}")
                images.append(img)
            else:
                images.append(MultiPoly.const(target_vars, img))
        result = MultiPoly(target_vars)
        # Horner-free expansion with cached powers; fine at the sizes in play.
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.const(target_vars, 1)} for _ in self.vars]
        for exp, c in self.sorted_terms():
            term = MultiPoly.const(target_vars, c)
            for i, e in enumerate(exp):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        p = cache[max(k for k in cache if k <= e)]
                        k = max(k for k in cache if k <= e)
                        while k < e:
                            p = p * images[i]
                            k += 1
                            cache[k] = p
                    term = term * cache[e]
            result = result + term
        return result

    def rename(self, target_vars: Sequence[str], mapping: Mapping[str, str] | None = None) -> "MultiPoly":
        """Re-express in a different frame; names map identically by default."""
        target_vars = tuple(target_vars)
        mapping = mapping or {}
        idx = []
        for v in self.vars:
            name = mapping.get(v, v)
            if name not in target_vars:
                if self.degree_in(v) > 0:
                    raise VariableMismatch(f"variable {v} has no home in {target_vars}")
                idx.append(None)
            else:
                idx.append(target_vars.index(name))
        terms: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            new = [0] * len(target_vars)
            for e, j in zip(exp, idx):
                if e:
                    new[j] += e
            key = tuple(new)
            s = terms.get(key, Fraction(0)) + c
            if s == 0:
                terms.pop(key, None)
            else:
                terms[key] = s
        return MultiPoly(target_vars, terms)

    # -- views ---------------------------------------------------------

    def coefficients_in(self, subvars: Sequence[str]) -> dict[tuple[int, ...], "MultiPoly"]:
        """Group terms by exponents in `subvars`; values live in the rest."""
        subvars = tuple(subvars)
        sub_idx = [self.vars.index(v) for v in subvars]
        rest = tuple(v for v in self.vars if v not in subvars)
        rest_idx = [self.vars.index(v) for v in rest]
        out: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
        for exp, c in self.terms.items():
            key = tuple(exp[i] for i in sub_idx)
            rexp = tuple(exp[i] for i in rest_idx)
            out.setdefault(key, {})[rexp] = c
        return {k: MultiPoly(rest, v) for k, v in out.items()}

    # -- content, division, gcd ---------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with self/c integer, primitive; sign from the leading term."""
        if not self.terms:
            return Fraction(1)
        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = 0
        for n in nums:
            g = math.gcd(g, abs(n))
        l = 1
        for d in dens:
            l = l * d // math.gcd(l, d)
        c = Fraction(g, l)
        if self.leading_term()[1] < 0:
            c = -c
        return c

    def primitive(self) -> "MultiPoly":
        """Integer, coprime coefficients, positive leading coefficient."""
        if not self.terms:
            return self
        return self * (1 / self.rational_content())

    def divmod_by(self, divisor: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Single-divisor division with respect to grevlex; f = q*g + r and no
        term of r is divisible by the leading monomial of g."""
        self._check_frame(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lexp, lc = divisor.leading_term()
        q = MultiPoly(self.vars)
        r = MultiPoly(self.vars)
        work = self
        while work.terms:
            exp, c = work.leading_term()
            diff = tuple(a - b for a, b in zip(exp, lexp))
            if all(d >= 0 for d in diff):
                t = MultiPoly.monomial(self.vars, diff, c / lc)
                q = q + t
                work = work - t * divisor
            else:
                t = MultiPoly.monomial(self.vars, exp, c)
                r = r + t
                work = work - t
        return q, r

    def divides(self, other: "MultiPoly") -> bool:
        q, r = other.divmod_by(self)
        return r.is_zero()

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod_by(divisor)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def __floordiv__(self, divisor: "MultiPoly") -> "MultiPoly":
        return self.exact_div(divisor)

    # -- printing -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


# -- free functions -----------------------------------------------------


def monomial_basis(num_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, in canonical order."""
    if num_vars < 1:
        raise ValueError("need at least one variable")
    exps: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            exps.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, num_vars)
    exps.sort(key=grevlex_key, reverse=True)
    return exps


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Primitive gcd over Q, positive leading coefficient; deterministic."""
    if f.vars != g.vars:
        raise VariableMismatch(f"frames differ: {f.vars} vs {g.vars}")
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    used = f.support_vars() | g.support_vars()
    if not used:
        return MultiPoly.const(f.vars, 1)
    main = [v for v in f.vars if v in used][-1]

    def content_wrt(p: MultiPoly) -> MultiPoly:
        coeffs = list(p.coefficients_in((main,)).items())
        rest_frame = coeffs[0][1].vars
        c = MultiPoly.zero(rest_frame)
        for _, cp in sorted(coeffs):
            c = poly_gcd(c, cp)
            if c.is_constant() and not c.is_zero():
                break
        return c

    def to_main_list(p: MultiPoly) -> list[MultiPoly]:
        by = p.coefficients_in((main,))
        d = max(k[0] for k in by)
        rest_frame = next(iter(by.values())).vars
        out = [MultiPoly.zero(rest_frame) for _ in range(d + 1)]
        for k, cp in by.items():
            out[k[0]] = cp
        return out

    def from_main_list(cs: list[MultiPoly]) -> MultiPoly:
        total = MultiPoly.zero(f.vars)
        xm = MultiPoly.var(f.vars, main)
        for i, cp in enumerate(cs):
            total = total + cp.rename(f.vars) * xm ** i
        return total

    cf = content_wrt(f)
    cg = content_wrt(g)
    cc = poly_gcd(cf, cg).rename(f.vars)
    A = f.exact_div(cf.rename(f.vars))
    B = g.exact_div(cg.rename(f.vars))
    if A.degree_in(main) < B.degree_in(main):
        A, B = B, A
    # primitive polynomial remainder sequence on the main-primitive parts
    while not B.is_zero():
        if B.degree_in(main) <= 0:
            # remainder free of the main variable: the primitive parts are coprime
            A = MultiPoly.const(f.vars, 1)
            break
        R = pseudo_remainder(A, B, main)
        A, B = B, (R.primitive() if not R.is_zero() else R)
    if not A.is_constant() and A.degree_in(main) > 0:
        A = A.exact_div(content_wrt(A).rename(f.vars))
    return (cc * A.primitive()).primitive()


def pseudo_remainder(A: MultiPoly, B: MultiPoly, main: str) -> MultiPoly:
    """prem(A, B) in (R[rest])[main]:  lc(B)^(degA-degB+1) * A = Q*B + prem."""
    da = A.degree_in(main)
    db = B.degree_in(main)
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if da < db:
        return A
    i = A.vars.index(main)

    def coeff_of(p: MultiPoly, k: int) -> MultiPoly:
        terms = {exp: c for exp, c in p.terms.items() if exp[i] == k}
        out = {tuple(e if j != i else 0 for j, e in enumerate(exp)): c for exp, c in terms.items()}
        return MultiPoly(p.vars, out)

    lb = coeff_of(B, db)
    xm = MultiPoly.var(A.vars, main)
    R = A
    for _ in range(da - db + 1):
        dr = R.degree_in(main)
        if dr < db or R.is_zero():
            R = R * lb
            continue
        lr = coeff_of(R, dr)
        R = R * lb - lr * xm ** (dr - db) * B
    return R


def squarefree_decomposition(f: MultiPoly) -> list[tuple[int, MultiPoly]]:
    """f = c * prod piece_i^i with each piece squarefree, pairwise coprime.

    Returns [(i, piece_i)] for the non-constant pieces, sorted by multiplicity.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    h = f.primitive()
    pieces: list[tuple[int, MultiPoly]] = []
    mult = 0
    prev_w: MultiPoly | None = None
    while h.total_degree() > 0:
        g = h
        for v in sorted(h.support_vars()):
            g = poly_gcd(g, h.derivative(v))
        w = h.exact_div(g.rename(h.vars))  # product of the primes dividing h
        if prev_w is not None:
            piece = prev_w.exact_div(poly_gcd(prev_w, w).rename(h.vars)).primitive()
            if piece.total_degree() > 0:
                pieces.append((mult, piece))
        prev_w = w.primitive()
        mult += 1
        h = g.rename(h.vars).primitive()
    if prev_w is not None and prev_w.total_degree() > 0:
        pieces.append((mult, prev_w))
    pieces.sort(key=lambda t: (t[0], grevlex_key(t[1].leading_term()[0])))
    return pieces


def squarefree_part(f: MultiPoly) -> MultiPoly:
    g = f.primitive()
    out = MultiPoly.const(f.vars, 1)
    for _, piece in squarefree_decomposition(g):
        out = out * piece
    return out.primitive()


# -- resultants ----------------------------------------------------------


def sylvester_matrix(f: MultiPoly, g: MultiPoly, main: str) -> list[list[MultiPoly]]:
    """Sylvester matrix in `main`, coefficients of f in the top rows."""
    df = f.degree_in(main)
    dg = g.degree_in(main)
    if df <= 0 and dg <= 0:
        raise ValueError("both polynomials are constant in the eliminated variable")
    i = f.vars.index(main)

    def coeffs(p: MultiPoly, d: int) -> list[MultiPoly]:
        out: list[dict] = [{} for _ in range(d + 1)]
        for exp, c in p.terms.items():
            rest = tuple(e if j != i else 0 for j, e in enumerate(exp))
            out[exp[i]][rest] = c
        return [MultiPoly(p.vars, t) for t in out]

    cf = coeffs(f, df)
    cg = coeffs(g, dg)
    n = df + dg
    zero = MultiPoly.zero(f.vars)
    rows: list[list[MultiPoly]] = []
    for r in range(dg):
        row = [zero] * n
        for k in range(df + 1):
            row[r + k] = cf[df - k]
        rows.append(row)
    for r in range(df):
        row = [zero] * n
        for k in range(dg + 1):
            row[r + k] = cg[dg - k]
        rows.append(row)
    return rows


def det_bareiss(rows: list[list[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant; entries must support exact division."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    frame = rows[0][0].vars
    m = [list(r) for r in rows]
    sign = 1
    prev = MultiPoly.const(frame, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(frame)
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                m[r][c] = (m[k][k] * m[r][c] - m[r][k] * m[k][c]).exact_div(prev)
            m[r][k] = MultiPoly.zero(frame)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def resultant_sylvester(f: MultiPoly, g: MultiPoly, main: str) -> MultiPoly:
    """Reference implementation: Bareiss determinant of the Sylvester matrix.

    Sign convention is frozen by the row layout of `sylvester_matrix`.
    """
    _check_resultant_args(f, g, main)
    return det_bareiss(sylvester_matrix(f, g, main))


def _check_resultant_args(f: MultiPoly, g: MultiPoly, main: str) -> None:
    if f.vars != g.vars:
        raise VariableMismatch(f"frames differ: {f.vars} vs {g.vars}")
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined here")
    if f.degree_in(main) <= 0 or g.degree_in(main) <= 0:
        raise ValueError(f"both arguments must have positive degree in {main}")


def resultant(f: MultiPoly, g: MultiPoly, main: str) -> MultiPoly:
    """Resultant eliminating `main`, equal to `resultant_sylvester` including sign.

    Computed by a subresultant remainder sequence, which is much faster than
    the determinant on the sizes appearing in curve analysis.
    """
    _check_resultant_args(f, g, main)
    A, B = f, g
    swapped = False
    if A.degree_in(main) < B.degree_in(main):
        A, B = B, A
        swapped = True
    i = f.vars.index(main)

    def lc(p: MultiPoly) -> MultiPoly:
        d = p.degree_in(main)
        terms = {tuple(e if j != i else 0 for j, e in enumerate(exp)): c
                 for exp, c in p.terms.items() if exp[i] == d}
        return MultiPoly(p.vars, terms)

    one = MultiPoly.const(f.vars, 1)
    g_, h_ = one, one
    s = 1
    da, db = A.degree_in(main), B.degree_in(main)
    if swapped and (da * db) % 2 == 1:
        s = -s
    while True:
        da, db = A.degree_in(main), B.degree_in(main)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = pseudo_remainder(A, B, main)
        A = B
        if R.is_zero():
            return MultiPoly.zero(f.vars)
        denom = g_ * h_ ** delta
        B = R.exact_div(denom)
        g_ = lc(A)
        if delta > 0:
            h_ = (g_ ** delta).exact_div(h_ ** (delta - 1))
        if B.degree_in(main) <= 0:
            break
    # B is now constant in main (nonzero); finish Cohen's formula
    dA = A.degree_in(main)
    lB = B  # degree 0 in main
    h_ = (lB ** dA).exact_div(h_ ** (dA - 1)) if dA >= 1 else h_
    return h_ * s


def univariate_coeff_list(p: MultiPoly, name: str) -> list[Fraction]:
    """Dense coefficient list (ascending) for a polynomial in a single variable."""
    extra = p.support_vars() - {name}
    if extra:
        raise VariableMismatch(f"not univariate in {name}: also uses {sorted(extra)}")
    d = max(p.degree_in(name), 0)
    out = [Fraction(0)] * (d + 1)
    i = p.vars.index(name)
    for exp, c in p.terms.items():
        out[exp[i]] = c
    return out
