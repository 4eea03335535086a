"""Independent brute-force oracles used only by the test suite.

These deliberately avoid the package's Macaulay-rank and elimination
machinery: smoothness is decided by a chartwise common-zero search on
the partial derivatives through sympy Groebner bases, and matrix ranks
are recomputed by sympy's exact linear algebra.
"""

from __future__ import annotations

from typing import List

import sympy

from quartic_galois.gaussian import GaussianRational
from quartic_galois.linalg import Matrix
from quartic_galois.poly import HomPoly, partials


def gr_to_sympy(c: GaussianRational):
    return (sympy.Rational(c.re.numerator, c.re.denominator)
            + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator))


def hompoly_to_sympy(f: HomPoly, syms) -> sympy.Expr:
    expr = sympy.Integer(0)
    for exp, coeff in f.terms.items():
        term = gr_to_sympy(coeff)
        for s, e in zip(syms, exp):
            if e:
                term *= s ** e
        expr += term
    return sympy.expand(expr)


def oracle_common_projective_zero(forms: List[HomPoly]) -> bool:
    """True iff the forms share a projective zero, by chartwise elimination."""
    nvars = forms[0].nvars
    syms = sympy.symbols(f"x0:{nvars}")
    exprs = [hompoly_to_sympy(f, syms) for f in forms]
    for chart in range(nvars):
        chart_exprs = [e.subs(syms[chart], 1) for e in exprs]
        gens = [s for k, s in enumerate(syms) if k != chart]
        nonzero = [e for e in chart_exprs if e != 0]
        if len(nonzero) < len(chart_exprs):
            # some generator vanishes identically on this chart
            if not nonzero:
                return True
        gb = sympy.groebner(nonzero, *gens, order="grevlex", domain="QQ_I")
        if gb.exprs != [sympy.Integer(1)]:
            return True
    return False


def oracle_is_smooth(f: HomPoly) -> bool:
    """Brute-force smoothness: the partials have no common projective zero."""
    grads = partials(f)
    if any(g.is_zero() for g in grads):
        return False
    return not oracle_common_projective_zero(grads)


def sympy_matrix(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols,
                        [gr_to_sympy(x) for x in m.entries])


def oracle_rank(m: Matrix) -> int:
    return sympy_matrix(m).rank()
