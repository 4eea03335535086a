import random

import pytest

from quartic_galois import univariate as uv
from quartic_galois.gaussian import GaussianRational as GR
from quartic_galois.gaussian import I, ONE, ZERO

from helpers import rand_gr


def poly(*coeffs):
    return uv.trim([GR.coerce(c) for c in coeffs])


def from_roots(*roots):
    p = [ONE]
    for r in roots:
        p = uv.mul(p, [-GR.coerce(r), ONE])
    return p


def test_divmod_exact():
    rng = random.Random(4)
    for _ in range(50):
        a = [rand_gr(rng) for _ in range(rng.randint(1, 6))]
        b = [rand_gr(rng) for _ in range(rng.randint(1, 4))]
        a, b = uv.trim(a), uv.trim(b)
        if uv.is_zero(b):
            continue
        q, r = uv.divmod_poly(a, b)
        assert uv.add(uv.mul(q, b), r) == a
        assert uv.degree(r) < uv.degree(b)


def test_gcd_of_common_factor():
    rng = random.Random(5)
    for _ in range(30):
        c = uv.trim([rand_gr(rng) for _ in range(3)])
        if uv.degree(c) < 1:
            continue
        a = uv.mul(c, poly(1, 1))
        b = uv.mul(c, poly(-1, 0, 1))
        g = uv.gcd(a, b)
        # gcd is divisible by the monic form of c
        _, rem = uv.divmod_poly(g, c)
        assert uv.is_zero(rem)


def test_multiplicity_profile_known():
    # (t - 1)**2 * (t + 2)
    p = uv.mul(uv.mul(from_roots(1), from_roots(1)), from_roots(-2))
    assert uv.multiplicity_profile(p) == [1, 2]
    assert uv.multiplicity_profile(from_roots(1, 2, 3)) == [1, 1, 1]
    assert uv.multiplicity_profile(poly(5)) == []


def test_profile_sums_to_degree():
    rng = random.Random(6)
    for _ in range(40):
        roots = [GR(rng.randint(-2, 2), rng.randint(-1, 1))
                 for _ in range(rng.randint(1, 5))]
        p = from_roots(*roots)
        prof = uv.multiplicity_profile(p)
        assert sum(prof) == uv.degree(p)


def test_gaussian_roots_linear_and_quadratic():
    roots, split = uv.gaussian_roots(from_roots(GR(3, 1)))
    assert roots == [GR(3, 1)] and split
    roots, split = uv.gaussian_roots(poly(1, 0, 1))  # u**2 + 1
    assert set(roots) == {I, -I} and split
    roots, split = uv.gaussian_roots(poly(-2, 0, 1))  # u**2 - 2: irrational
    assert roots == [] and not split


def test_gaussian_roots_cubic_mixed():
    # (u - 2)(u**2 - 2): one rational root, two irrational
    p = uv.mul(from_roots(2), poly(-2, 0, 1))
    roots, split = uv.gaussian_roots(p)
    assert roots == [GR(2)] and not split


def test_gaussian_roots_quintic_full_split():
    target = [GR(1), GR(2), I, -I, GR.coerce(1) / GR(2)]
    p = from_roots(*target)
    roots, split = uv.gaussian_roots(p)
    assert split
    assert sorted(r.sort_key() for r in roots) == sorted(
        t.sort_key() for t in target)


def test_gaussian_roots_gaussian_integer_roots():
    # roots 1+i, 3, -i plus an irreducible quadratic factor u**2 + u + 1
    p = uv.mul(from_roots(GR(1, 1), GR(3), GR(0, -1)), poly(1, 1, 1))
    roots, split = uv.gaussian_roots(p)
    assert not split
    assert set(roots) == {GR(1, 1), GR(3), GR(0, -1)}


def test_gaussian_roots_with_multiplicity_and_zero():
    # u**2 * (u - 1)**3
    p = uv.mul([ZERO, ZERO, ONE], uv.mul(uv.mul(from_roots(1), from_roots(1)),
                                         from_roots(1)))
    roots, split = uv.gaussian_roots(p)
    assert set(roots) == {ZERO, ONE} and split


def test_gaussian_roots_rejects_zero():
    with pytest.raises(ValueError):
        uv.gaussian_roots([])
