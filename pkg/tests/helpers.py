"""Deterministic random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Tuple

from quartic_galois.gaussian import ONE, GaussianRational, I
from quartic_galois.geometry import is_smooth_plane_quartic
from quartic_galois.linalg import Matrix
from quartic_galois.poly import HomPoly, monomials, squarefree_profile


def rand_gr(rng: random.Random, lo: int = -3, hi: int = 3,
            complex_part: bool = True, denominators: Tuple[int, ...] = (1,)
            ) -> GaussianRational:
    re = Fraction(rng.randint(lo, hi), rng.choice(denominators))
    im = Fraction(rng.randint(lo, hi), rng.choice(denominators)) if complex_part else Fraction(0)
    return GaussianRational(re, im)


def rand_invertible(rng: random.Random, size: int = 4) -> Matrix:
    while True:
        m = Matrix(size, size,
                   [rand_gr(rng, -2, 2) for _ in range(size * size)])
        if not m.det().is_zero():
            return m


def rand_sl2(rng: random.Random, bound: int = 10) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """A random SL2(Z) matrix with entries bounded in absolute value."""
    shear_t = ((1, 1), (0, 1))
    shear_b = ((1, 0), (1, 1))
    swap = ((0, -1), (1, 0))
    while True:
        u = ((1, 0), (0, 1))
        for _ in range(rng.randint(1, 6)):
            step = rng.choice((shear_t, shear_b, swap))
            u = _mul2(u, step)
        if max(abs(x) for row in u for x in row) <= bound:
            return u


def _mul2(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0],
         a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0],
         a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def rand_plane_quartic(rng: random.Random, nterms: int = 8) -> HomPoly:
    mons = list(monomials(3, 4))
    chosen = rng.sample(mons, min(nterms, len(mons)))
    # keep the pure powers so the curve has a chance of being smooth
    for pure in ((4, 0, 0), (0, 4, 0), (0, 0, 4)):
        if pure not in chosen:
            chosen.append(pure)
    terms = {}
    for e in chosen:
        c = rng.randint(-3, 3)
        if e in ((4, 0, 0), (0, 4, 0), (0, 0, 4)) and c == 0:
            c = rng.choice((1, 2, -1))
        if c:
            terms[e] = GaussianRational(c)
    return HomPoly(3, 4, terms, ("Y", "Z", "W"))


def rand_smooth_plane_quartic(rng: random.Random) -> HomPoly:
    while True:
        f = rand_plane_quartic(rng)
        if is_smooth_plane_quartic(f):
            return f


def rand_squarefree_binary_quartic(rng: random.Random) -> HomPoly:
    while True:
        terms = {}
        for e in monomials(2, 4):
            c = rng.randint(-3, 3)
            if e in ((4, 0), (0, 4)) and c == 0:
                c = rng.choice((1, 2, -1))
            if c:
                terms[e] = GaussianRational(c)
        f = HomPoly(2, 4, terms, ("Z", "W"))
        if not f.is_zero() and squarefree_profile(f) == [1] * 4:
            return f


def rand_sparse_quartic(rng: random.Random, nterms: int = 6) -> HomPoly:
    mons = rng.sample(list(monomials(4, 4)), nterms)
    terms = {}
    for e in mons:
        c = rand_gr(rng, -3, 3)
        if not c.is_zero():
            terms[e] = c
    if not terms:
        terms[(4, 0, 0, 0)] = ONE
    return HomPoly(4, 4, terms)


def lift_form1(f4: HomPoly) -> HomPoly:
    """X**4 + F4(Y, Z, W) from a ternary quartic."""
    terms = {(4, 0, 0, 0): ONE}
    for e, c in f4.terms.items():
        terms[(0,) + e] = c
    return HomPoly(4, 4, terms)


def lift_form2(f4: HomPoly) -> HomPoly:
    """X**4 + Y**4 + F4(Z, W) from a binary quartic."""
    terms = {(4, 0, 0, 0): ONE, (0, 4, 0, 0): ONE}
    for e, c in f4.terms.items():
        terms[(0, 0) + e] = c
    return HomPoly(4, 4, terms)


def diag(*values) -> Matrix:
    return Matrix.diagonal(list(values))


SIGMA1 = diag(I, 1, 1, 1)
SIGMA2 = diag(1, I, 1, 1)
SIGMA3 = diag(1, 1, I, 1)
SIGMA4 = diag(1, 1, 1, I)

# fixed mixed corpus (15 smooth, 15 singular) shared by the smoothness
# oracle-agreement and bound-stability tests
SMOOTHNESS_CORPUS = [
    # smooth
    "X^4+Y^4+Z^4+W^4",
    "X^4+Y^4+Z^4+W^4+Y^2*Z*W",
    "X^4+Y^4+Z^4+Z*W^3+W^4",
    "X^3*Y+Y^4+Z^4+W^4",
    "X^4+Y^4+Z^4+W^4+X*Y*Z*W",
    "X^4+2*Y^4+3*Z^4+4*W^4",
    "X^4-Y^4+Z^4-W^4",
    "X^4+Y^4+Z^4+W^4+X^2*Y*Z",
    "X^4+Y^4+Z^4+W^4+Z^2*W^2",
    "X^4+X*Y^3+Z^4+W^4",
    "X^4+Y^4+X*Z^3+Z*W^3",
    "X^4+Y^4+Z^4+W^3*X",
    "X^4+Y^4+Z^3*W+W^3*Z",
    "X^4+Y^3*W+Z^4+W^4",
    "X^4+Y^4+Z^4+W^4+(1+i)*X^2*Y^2",
    # singular
    "X^4+Y^4+Z^4",
    "X^4+Y^4+Z^4+W^4+2*X^2*Y^2",
    "X^4+Y^4+Z^4+W^4-4*X*Y*Z*W",
    "X^4+X^3*Y",
    "X^2*Y^2+Z^2*W^2",
    "X^4+Y^3*Z",
    "Y^4+Z^4+W^4+Y^2*Z*W",
    "X^2*Y*Z+Y^4+Z^4+W^4",
    "X^4+4*X^3*Y+6*X^2*Y^2+4*X*Y^3+Y^4+Z^4+W^4",
    "X^4+Y^4+Z^2*W^2",
    "X^3*W+Y^4+Z^4",
    "X^4+Y^4+Z^4+2*Z^2*W^2+W^4",
    "X^4+X^2*Y^2+Y^4+Z^4+W^4+2*Z^2*W^2",
    "X^4+Y^4+W^4+X^2*Y^2",
    "X^2*Y^2+Y^4+Z^4+W^4",
]
