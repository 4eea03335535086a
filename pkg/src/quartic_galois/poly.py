"""Exact homogeneous multivariate polynomials over Q(i).

The central type is HomPoly: a strictly homogeneous form in at most 4
variables with Gaussian-rational coefficients, stored sparsely as a map
from exponent vectors to nonzero coefficients.  Printing and equality
use the graded-lexicographic term order, so all textual output is
canonical and round-trips through the parser bit-exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import ParseError
from .gaussian import ZERO, ONE, GaussianRational, parse_gaussian
from .linalg import Matrix
from . import univariate

Exponent = Tuple[int, ...]
DEFAULT_NAMES = ("X", "Y", "Z", "W")


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> Tuple[Exponent, ...]:
    """All exponent vectors of the given total degree, descending lex."""
    if nvars == 1:
        return ((degree,),)
    out: List[Exponent] = []
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


class HomPoly:
    """A homogeneous polynomial; immutable after construction."""

    __slots__ = ("nvars", "degree", "terms", "names")

    def __init__(self, nvars: int, degree: int,
                 terms: Dict[Exponent, GaussianRational],
                 names: Optional[Tuple[str, ...]] = None):
        if not 1 <= nvars <= 4:
            raise ValueError("HomPoly supports 1..4 variables")
        clean: Dict[Exponent, GaussianRational] = {}
        for exp, coeff in terms.items():
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if sum(exp) != degree:
                raise ValueError(
                    f"term {exp} breaks homogeneity (degree {degree})")
            c = GaussianRational.coerce(coeff)
            if not c.is_zero():
                clean[exp] = c
        self.nvars = nvars
        self.degree = degree
        self.terms = clean
        self.names = tuple(names) if names else DEFAULT_NAMES[:nvars]

    # -- basics -----------------------------------------------------------

    @staticmethod
    def zero(nvars: int, degree: int,
             names: Optional[Tuple[str, ...]] = None) -> "HomPoly":
        return HomPoly(nvars, degree, {}, names)

    @staticmethod
    def constant(nvars: int, value, names=None) -> "HomPoly":
        v = GaussianRational.coerce(value)
        return HomPoly(nvars, 0, {(0,) * nvars: v} if not v.is_zero() else {}, names)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: Exponent) -> GaussianRational:
        return self.terms.get(tuple(exp), ZERO)

    def sorted_terms(self) -> List[Tuple[Exponent, GaussianRational]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.nvars != other.nvars or self.terms != other.terms:
            return False
        return self.is_zero() or self.degree == other.degree

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    # -- arithmetic ---------------------------------------------------------

    def _compat(self, other: "HomPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")
        if not self.is_zero() and not other.is_zero() and self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")

    def __add__(self, other: "HomPoly") -> "HomPoly":
        self._compat(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, ZERO) + c
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
        deg = self.degree if not self.is_zero() else other.degree
        return HomPoly(self.nvars, deg, out, self.names)

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        return self + (-other)

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.nvars, self.degree,
                       {e: -c for e, c in self.terms.items()}, self.names)

    def __mul__(self, other: "HomPoly") -> "HomPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")
        out: Dict[Exponent, GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return HomPoly(self.nvars, self.degree + other.degree, out, self.names)

    def scale(self, c) -> "HomPoly":
        c = GaussianRational.coerce(c)
        if c.is_zero():
            return HomPoly.zero(self.nvars, self.degree, self.names)
        return HomPoly(self.nvars, self.degree,
                       {e: c * v for e, v in self.terms.items()}, self.names)

    def __pow__(self, n: int) -> "HomPoly":
        if n < 0:
            raise ValueError("negative power")
        result = HomPoly(self.nvars, 0, {(0,) * self.nvars: ONE}, self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, point: Sequence) -> GaussianRational:
        vals = [GaussianRational.coerce(x) for x in point]
        if len(vals) != self.nvars:
            raise ValueError("point length mismatch")
        acc = ZERO
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(vals, exp):
                if e:
                    term = term * v ** e
            acc = acc + term
        return acc

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for exp, coeff in self.sorted_terms():
            mono = self._fmt_monomial(exp)
            body, negative = _fmt_coeff(coeff, mono)
            if not parts:
                parts.append("-" + body if negative else body)
            else:
                parts.append(("-" if negative else "+") + body)
        return "".join(parts)

    def _fmt_monomial(self, exp: Exponent) -> str:
        pieces = []
        for name, e in zip(self.names, exp):
            if e == 1:
                pieces.append(name)
            elif e > 1:
                pieces.append(f"{name}^{e}")
        return "*".join(pieces)

    def __repr__(self) -> str:
        return f"HomPoly({self})"


def _fmt_coeff(coeff: GaussianRational, mono: str) -> Tuple[str, bool]:
    """Return (body, negative) with the sign pulled out when printable."""
    if not mono:
        s = str(coeff)
        if s.startswith("-") and (coeff.im == 0 or coeff.re == 0):
            return s[1:], True
        if coeff.im != 0 and coeff.re != 0:
            return f"({coeff})", False
        return s, False
    if coeff.im == 0:
        r = coeff.re
        if r == 1:
            return mono, False
        if r == -1:
            return mono, True
        if r < 0:
            return f"{_fmt_fr(-r)}*{mono}", True
        return f"{_fmt_fr(r)}*{mono}", False
    if coeff.re == 0:
        im = coeff.im
        if im == 1:
            return f"i*{mono}", False
        if im == -1:
            return f"i*{mono}", True
        if im < 0:
            return f"{_fmt_fr(-im)}*i*{mono}", True
        return f"{_fmt_fr(im)}*i*{mono}", False
    return f"({coeff})*{mono}", False


def _fmt_fr(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


# ---------------------------------------------------------------------------
# Parsing.
# ---------------------------------------------------------------------------

def parse_poly(text: str, expected_degree: int,
               names: Tuple[str, ...] = DEFAULT_NAMES) -> HomPoly:
    """Parse a homogeneous form in the given variables.

    Grammar: terms joined by + and -; a term is an optional coefficient
    (integer, rational a/b, i, or a parenthesized Q(i) literal) times a
    monomial written with ^ powers and optional * separators.  Rejects
    inhomogeneous input and wrong total degree.
    """
    nvars = len(names)
    var_index = {name: k for k, name in enumerate(names)}
    n = len(text)
    pos = 0
    terms: List[Tuple[Exponent, GaussianRational, int]] = []

    def skip_ws(p: int) -> int:
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    if pos >= n:
        raise ParseError("empty polynomial", 0)
    first = True
    while pos < n:
        pos = skip_ws(pos)
        if pos >= n:
            break
        sign = ONE
        if text[pos] in "+-":
            if text[pos] == "-":
                sign = GaussianRational(-1)
            pos += 1
        elif not first:
            raise ParseError(f"expected '+' or '-', found {text[pos]!r}", pos)
        first = False
        pos = skip_ws(pos)
        term_start = pos
        coeff = sign
        exps = [0] * nvars
        had_factor = False
        while pos < n:
            pos_before = pos
            pos = skip_ws(pos)
            if pos < n and text[pos] == "*":
                pos = skip_ws(pos + 1)
            if pos >= n or text[pos] in "+-":
                pos = pos_before if pos >= n and not text[pos_before:].strip() else pos
                break
            ch = text[pos]
            if ch == "(":
                close = text.find(")", pos)
                if close < 0:
                    raise ParseError("unbalanced parenthesis", pos)
                try:
                    coeff = coeff * parse_gaussian(text[pos + 1:close])
                except ValueError as exc:
                    raise ParseError(str(exc), pos) from exc
                pos = close + 1
                had_factor = True
            elif ch.isdigit():
                start = pos
                while pos < n and (text[pos].isdigit() or text[pos] == "/"):
                    pos += 1
                try:
                    coeff = coeff * GaussianRational(Fraction(text[start:pos]))
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad number {text[start:pos]!r}", start) from exc
                had_factor = True
            elif ch in ("i", "I"):
                coeff = coeff * GaussianRational(0, 1)
                pos += 1
                had_factor = True
            elif ch in var_index:
                k = var_index[ch]
                pos += 1
                power = 1
                if pos < n and text[pos] == "^":
                    pos += 1
                    start = pos
                    while pos < n and text[pos].isdigit():
                        pos += 1
                    if start == pos:
                        raise ParseError("missing exponent after '^'", pos)
                    power = int(text[start:pos])
                exps[k] += power
                had_factor = True
            else:
                raise ParseError(f"unexpected character {ch!r}", pos)
        if not had_factor:
            raise ParseError("empty term", term_start)
        terms.append((tuple(exps), coeff, term_start))

    degrees = {sum(e) for e, _c, _p in terms}
    if len(degrees) > 1:
        offender = next(p for e, _c, p in terms if sum(e) != max(degrees))
        raise ParseError("inhomogeneous polynomial", offender)
    deg = degrees.pop()
    if deg != expected_degree:
        raise ParseError(
            f"degree mismatch: expected {expected_degree}, found {deg}",
            terms[0][2])
    acc: Dict[Exponent, GaussianRational] = {}
    for exp, coeff, _p in terms:
        s = acc.get(exp, ZERO) + coeff
        if s.is_zero():
            acc.pop(exp, None)
        else:
            acc[exp] = s
    return HomPoly(nvars, expected_degree, acc, names)


# ---------------------------------------------------------------------------
# Projective points.
# ---------------------------------------------------------------------------

class ProjPoint:
    """A point of projective space in canonical form.

    The first nonzero coordinate is scaled to 1, so equality of points
    is plain equality of coordinate tuples.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        vals = [GaussianRational.coerce(c) for c in coords]
        pivot = next((v for v in vals if not v.is_zero()), None)
        if pivot is None:
            raise ValueError("projective point needs a nonzero coordinate")
        self.coords = tuple(v / pivot for v in vals)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coords[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def pivot_index(self) -> int:
        return next(k for k, v in enumerate(self.coords) if not v.is_zero())

    def __str__(self) -> str:
        return ":".join(str(c) for c in self.coords)

    def __repr__(self) -> str:
        return f"ProjPoint({self})"


def parse_point(text: str, dim: int = 4) -> ProjPoint:
    parts = text.strip().strip("[]").split(":")
    if len(parts) != dim:
        raise ParseError(f"expected {dim} coordinates, got {len(parts)}")
    try:
        return ProjPoint([parse_gaussian(p) for p in parts])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# ---------------------------------------------------------------------------
# Operations used throughout the geometry.
# ---------------------------------------------------------------------------

def substitute_linear(f: HomPoly, m: Matrix) -> HomPoly:
    """The pullback f(M x): substitute variable k by row k of M applied to x.

    M may be rectangular (nvars-in rows, nvars-out columns), which
    restricts f to a linear subspace.
    """
    if m.rows != f.nvars:
        raise ValueError(
            f"matrix has {m.rows} rows but polynomial has {f.nvars} variables")
    nout = m.cols
    lin: List[HomPoly] = []
    for i in range(f.nvars):
        row = m.row(i)
        terms = {}
        for j, c in enumerate(row):
            if not c.is_zero():
                e = [0] * nout
                e[j] = 1
                terms[tuple(e)] = c
        lin.append(HomPoly(nout, 1, terms))
    # cache powers of each substituted variable
    powers: List[List[HomPoly]] = []
    max_exp = [0] * f.nvars
    for exp in f.terms:
        for k, e in enumerate(exp):
            max_exp[k] = max(max_exp[k], e)
    one = HomPoly(nout, 0, {(0,) * nout: ONE})
    for k in range(f.nvars):
        cache = [one]
        for e in range(1, max_exp[k] + 1):
            cache.append(cache[-1] * lin[k])
        powers.append(cache)
    out = HomPoly.zero(nout, f.degree)
    for exp, coeff in f.terms.items():
        term = HomPoly(nout, 0, {(0,) * nout: coeff})
        for k, e in enumerate(exp):
            if e:
                term = term * powers[k][e]
        out = out + term
    return out


def partials(f: HomPoly) -> List[HomPoly]:
    """All formal partial derivatives; Euler's identity holds exactly."""
    if f.degree < 1:
        raise ValueError("cannot differentiate a degree-0 form")
    out = []
    for k in range(f.nvars):
        terms: Dict[Exponent, GaussianRational] = {}
        for exp, coeff in f.terms.items():
            if exp[k]:
                e = list(exp)
                e[k] -= 1
                terms[tuple(e)] = coeff * exp[k]
        out.append(HomPoly(f.nvars, f.degree - 1, terms, f.names))
    return out


def directional_derivative(f: HomPoly, p: Sequence) -> HomPoly:
    """sum_k p_k * df/dx_k, the first polar of f at p."""
    vals = [GaussianRational.coerce(x) for x in p]
    out = HomPoly.zero(f.nvars, f.degree - 1, f.names)
    for k, d in enumerate(partials(f)):
        if not vals[k].is_zero():
            out = out + d.scale(vals[k])
    return out


class XDecomposition:
    """f written as sum of c_k * (chart variable)**(d-k).

    c_k is a form of degree k in the remaining variables; c_0 is the
    scalar coefficient of the pure chart power.  reassemble() is exact.
    """

    __slots__ = ("chart", "c", "nvars", "degree", "names")

    def __init__(self, chart: int, c: List[HomPoly], nvars: int,
                 degree: int, names: Tuple[str, ...]):
        self.chart = chart
        self.c = c
        self.nvars = nvars
        self.degree = degree
        self.names = names

    def reassemble(self) -> HomPoly:
        out: Dict[Exponent, GaussianRational] = {}
        for k, ck in enumerate(self.c):
            for exp, coeff in ck.terms.items():
                full = list(exp[:self.chart]) + [self.degree - k] + list(exp[self.chart:])
                out[tuple(full)] = coeff
        return HomPoly(self.nvars, self.degree, out, self.names)


def x_decompose(f: HomPoly, chart: int) -> XDecomposition:
    """Decompose f by powers of the chart variable."""
    if not 0 <= chart < f.nvars:
        raise ValueError("chart index out of range")
    if f.nvars < 2:
        raise ValueError("decomposition needs at least 2 variables")
    rest_names = tuple(nm for k, nm in enumerate(f.names) if k != chart)
    d = f.degree
    buckets: List[Dict[Exponent, GaussianRational]] = [{} for _ in range(d + 1)]
    for exp, coeff in f.terms.items():
        k = d - exp[chart]
        rest = exp[:chart] + exp[chart + 1:]
        buckets[k][rest] = coeff
    c = [HomPoly(f.nvars - 1, k, buckets[k], rest_names) for k in range(d + 1)]
    return XDecomposition(chart, c, f.nvars, d, f.names)


def polar_forms(f: HomPoly, p: Union[ProjPoint, Sequence]) -> List[HomPoly]:
    """The forms e_k with f(s*p + t*q) = sum_k s**(d-k) t**k e_k(q).

    e_0 is the scalar f(p) and e_d is f itself; e_k has degree k in q.
    """
    vals = [GaussianRational.coerce(x) for x in p]
    if len(vals) != f.nvars:
        raise ValueError("point length mismatch")
    d = f.degree
    out: List[Dict[Exponent, GaussianRational]] = [{} for _ in range(d + 1)]
    for exp, coeff in f.terms.items():
        for sub in _sub_exponents(exp):
            k = sum(sub)
            c = coeff
            for idx in range(f.nvars):
                a, j = exp[idx], sub[idx]
                c = c * math.comb(a, j)
                if a - j:
                    c = c * vals[idx] ** (a - j)
                if c.is_zero():
                    break
            if c.is_zero():
                continue
            bucket = out[k]
            s = bucket.get(sub, ZERO) + c
            if s.is_zero():
                bucket.pop(sub, None)
            else:
                bucket[sub] = s
    return [HomPoly(f.nvars, k, out[k], f.names) for k in range(d + 1)]


def _sub_exponents(exp: Exponent) -> List[Exponent]:
    subs: List[Tuple[int, ...]] = [()]
    for e in exp:
        subs = [s + (j,) for s in subs for j in range(e + 1)]
    return subs


def squarefree_profile(f: HomPoly) -> List[int]:
    """Multiset of linear-factor multiplicities of a nonzero binary form.

    Decided entirely by gcds with the derivative; no root extraction.
    "Distinct factors" is equivalent to the profile being all ones.
    """
    if f.nvars != 2:
        raise ValueError("squarefree profile is defined for binary forms")
    if f.is_zero():
        raise ValueError("zero binary form")
    d = f.degree
    coeffs = [f.coeff((j, d - j)) for j in range(d + 1)]
    g = univariate.trim(list(coeffs))
    e = univariate.degree(g)
    profile = [d - e] if d > e else []
    if e > 0:
        profile.extend(univariate.multiplicity_profile(g))
    return sorted(profile)


def binary_to_univariate(f: HomPoly) -> List[GaussianRational]:
    """Coefficient list of f(t, 1) indexed by power of t."""
    if f.nvars != 2:
        raise ValueError("expected a binary form")
    d = f.degree
    return univariate.trim([f.coeff((j, d - j)) for j in range(d + 1)])


def euler_check(f: HomPoly) -> bool:
    """sum_k x_k df/dx_k == deg(f) * f, exactly."""
    acc = HomPoly.zero(f.nvars, f.degree, f.names)
    for k, d in enumerate(partials(f)):
        e = [0] * f.nvars
        e[k] = 1
        xk = HomPoly(f.nvars, 1, {tuple(e): ONE}, f.names)
        acc = acc + xk * d
    return acc == f.scale(f.degree)
