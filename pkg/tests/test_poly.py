import random
from fractions import Fraction

import pytest

from quartic_galois.errors import ParseError
from quartic_galois.gaussian import GaussianRational as GR
from quartic_galois.gaussian import I, ONE, ZERO
from quartic_galois.linalg import Matrix
from quartic_galois.poly import (HomPoly, ProjPoint, euler_check, monomials,
                                 parse_point, parse_poly, partials,
                                 polar_forms, squarefree_profile,
                                 substitute_linear, x_decompose)

from helpers import rand_gr, rand_invertible, rand_sparse_quartic

FERMAT = parse_poly("X^4+Y^4+Z^4+W^4", 4)


# -- parsing ---------------------------------------------------------------

def test_parse_fermat():
    assert len(FERMAT.terms) == 4
    assert FERMAT.coeff((4, 0, 0, 0)) == ONE
    assert str(FERMAT) == "X^4+Y^4+Z^4+W^4"


def test_parse_rejects_inhomogeneous():
    with pytest.raises(ParseError):
        parse_poly("X^4 + Y^3", 4)


def test_parse_complex_coefficient():
    g = parse_poly("X^4 + (1+i)*Y^2*Z^2 - W^4", 4)
    assert len(g.terms) == 3
    assert g.coeff((0, 2, 2, 0)) == ONE + I
    assert g.coeff((0, 0, 0, 4)) == GR(-1)


def test_parse_degree_mismatch():
    with pytest.raises(ParseError):
        parse_poly("X^3+Y^3+Z^3+W^3", 4)


def test_parse_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse_poly("X^4 + $", 4)
    assert err.value.position >= 0


def test_parse_implicit_star_and_i():
    g = parse_poly("2X^2Y^2 + i*Z^4 - X^4", 4)
    assert g.coeff((2, 2, 0, 0)) == GR(2)
    assert g.coeff((0, 0, 4, 0)) == I


def test_print_parse_round_trip():
    rng = random.Random(41)
    for _ in range(200):
        f = rand_sparse_quartic(rng, rng.randint(1, 8))
        assert parse_poly(str(f), 4) == f


def test_print_canonical_order():
    f = parse_poly("W^4 + X^4", 4)
    assert str(f) == "X^4+W^4"
    g = parse_poly("-X^4 + 1/2*Y^4", 4)
    assert str(g) == "-X^4+1/2*Y^4"


def test_zero_polynomial():
    f = parse_poly("X^4 - X^4", 4)
    assert f.is_zero()
    assert str(f) == "0"


# -- arithmetic -------------------------------------------------------------

def test_addition_degree_guard():
    cubic = HomPoly(4, 3, {(3, 0, 0, 0): ONE})
    with pytest.raises(ValueError):
        FERMAT + cubic


def test_mul_degrees_add():
    q = parse_poly("X^2+Y^2", 2, names=("X", "Y", "Z", "W"))
    assert (q * q).degree == 4
    assert (q * q).coeff((2, 2, 0, 0)) == GR(2)


def test_eval():
    assert FERMAT.eval([1, 0, 0, 0]) == ONE
    assert FERMAT.eval([1, I, 0, 0]) == GR(2)


# -- substitution ------------------------------------------------------------

def test_substitute_diag_i_fixes_fermat():
    m = Matrix.diagonal([I, 1, 1, 1])
    assert substitute_linear(FERMAT, m) == FERMAT


def test_substitute_identity():
    f = parse_poly("X^4+Y^4+Z^4+W^4+Y^2*Z*W", 4)
    assert substitute_linear(f, Matrix.identity(4)) == f


def test_substitute_swap_symmetry():
    swap = Matrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0],
                             [0, 0, 1, 0], [0, 0, 0, 1]])
    assert substitute_linear(FERMAT, swap) == FERMAT


def test_substitute_composition():
    rng = random.Random(42)
    f = rand_sparse_quartic(rng, 5)
    for _ in range(20):
        a = rand_invertible(rng)
        b = rand_invertible(rng)
        lhs = substitute_linear(substitute_linear(f, a), b)
        rhs = substitute_linear(f, a * b)
        assert lhs == rhs


# -- partial derivatives ------------------------------------------------------

def test_partials_fermat():
    p = partials(FERMAT)
    assert [str(g) for g in p] == ["4*X^3", "4*Y^3", "4*Z^3", "4*W^3"]


def test_partials_single_power():
    f = parse_poly("X^4", 4)
    p = partials(f)
    assert str(p[0]) == "4*X^3"
    assert p[1].is_zero() and p[2].is_zero() and p[3].is_zero()


def test_euler_identity_random():
    rng = random.Random(43)
    for _ in range(50):
        f = rand_sparse_quartic(rng, rng.randint(1, 8))
        if not f.is_zero():
            assert euler_check(f)


# -- chart decomposition -------------------------------------------------------

def test_x_decompose_split_form():
    f = parse_poly("X^4+Y^4+Z^4+W^4+Y^2*Z*W", 4)
    xd = x_decompose(f, 0)
    assert xd.c[0].eval([0, 0, 0]) == ONE
    assert xd.c[1].is_zero() and xd.c[2].is_zero() and xd.c[3].is_zero()
    assert str(xd.c[4]) == "Y^4+Y^2*Z*W+Z^4+W^4"


def test_x_decompose_fermat():
    xd = x_decompose(FERMAT, 0)
    assert str(xd.c[4]) == "Y^4+Z^4+W^4"


def test_x_decompose_binomial():
    # (X + Y)**4, frozen from the binomial expansion
    f = parse_poly("X^4+4*X^3*Y+6*X^2*Y^2+4*X*Y^3+Y^4", 4, names=("X", "Y"))
    xd = x_decompose(f, 0)
    assert [str(c) for c in xd.c] == ["1", "4*Y", "6*Y^2", "4*Y^3", "Y^4"]


def test_x_decompose_round_trip_many():
    rng = random.Random(44)
    for _ in range(1000):
        f = rand_sparse_quartic(rng, rng.randint(1, 6))
        chart = rng.randrange(4)
        assert x_decompose(f, chart).reassemble() == f


# -- polar forms ----------------------------------------------------------------

def test_polar_forms_fermat_center():
    e = polar_forms(FERMAT, ProjPoint([1, 0, 0, 0]))
    assert e[0].eval([0, 0, 0, 0]) == ONE          # e0 = f(P)
    assert str(e[1]) == "4*X"                      # from expanding (s + tX)**4
    assert str(e[2]) == "6*X^2"
    assert str(e[3]) == "4*X^3"
    assert e[4] == FERMAT                          # e4 is f itself


def test_polar_e0_vanishes_iff_on_surface():
    f = parse_poly("X^3*Y+Y^4+Z^4+W^4", 4)
    on_s = polar_forms(f, ProjPoint([1, 0, 0, 0]))[0]
    off_s = polar_forms(f, ProjPoint([0, 1, 0, 0]))[0]
    assert on_s.is_zero()
    assert not off_s.is_zero()


def test_polar_expansion_consistency():
    rng = random.Random(45)
    for _ in range(50):
        f = rand_sparse_quartic(rng, 5)
        p = [rand_gr(rng) for _ in range(4)]
        if all(x.is_zero() for x in p):
            continue
        e = polar_forms(f, p)
        s, t = rand_gr(rng), rand_gr(rng)
        q = [rand_gr(rng) for _ in range(4)]
        line_point = [s * pi + t * qi for pi, qi in zip(p, q)]
        direct = f.eval(line_point)
        expanded = ZERO
        for k in range(5):
            expanded = expanded + (s ** (4 - k)) * (t ** k) * e[k].eval(q)
        assert expanded == direct


# -- binary forms ------------------------------------------------------------------

def test_squarefree_profile_examples():
    f = parse_poly("Z^4+W^4", 4, names=("Z", "W"))
    assert squarefree_profile(f) == [1, 1, 1, 1]
    g = parse_poly("Z^2*W^2", 4, names=("Z", "W"))
    assert squarefree_profile(g) == [2, 2]
    h = parse_poly("Z^4-4*Z^3*W+6*Z^2*W^2-4*Z*W^3+W^4", 4, names=("Z", "W"))
    assert squarefree_profile(h) == [4]


def test_squarefree_profile_sums():
    rng = random.Random(46)
    for _ in range(60):
        terms = {}
        for e in monomials(2, 4):
            c = rng.randint(-3, 3)
            if c:
                terms[e] = GR(c)
        f = HomPoly(2, 4, terms, ("Z", "W"))
        if f.is_zero():
            continue
        assert sum(squarefree_profile(f)) == 4


def test_squarefree_profile_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_profile(HomPoly(2, 4, {}, ("Z", "W")))


# -- projective points -----------------------------------------------------------

def test_projpoint_canonical():
    p = ProjPoint([GR(2), GR(4), ZERO, ZERO])
    assert p == ProjPoint([1, 2, 0, 0])
    assert str(p) == "1:2:0:0"
    assert p.pivot_index() == 0


def test_projpoint_rejects_zero():
    with pytest.raises(ValueError):
        ProjPoint([0, 0, 0, 0])


def test_parse_point():
    p = parse_point("0:1:i:1/2")
    assert p.coords == (ZERO, ONE, I, GR(Fraction(1, 2)))
    with pytest.raises(ParseError):
        parse_point("1:2:3")
