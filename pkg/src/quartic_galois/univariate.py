"""Dense univariate polynomials over Q(i).

A polynomial is a list of GaussianRational coefficients indexed by
power, with no trailing zeros (the zero polynomial is the empty list).
These helpers back the squarefree analysis of binary forms and the
exact root extraction used by the Galois-point search.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .gaussian import ZERO, ONE, GaussianRational

Poly = List[GaussianRational]


def trim(p: Poly) -> Poly:
    while p and p[-1].is_zero():
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = []
    for k in range(n):
        a = p[k] if k < len(p) else ZERO
        b = q[k] if k < len(q) else ZERO
        out.append(a + b)
    return trim(out)


def neg(p: Poly) -> Poly:
    return [-c for c in p]


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, c: GaussianRational) -> Poly:
    if c.is_zero():
        return []
    return [a * c for a in p]


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            if b.is_zero():
                continue
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_poly(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [ZERO] * max(0, len(p) - len(q) + 1)
    dq = degree(q)
    lead = q[-1]
    while len(r) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        coeff = r[-1] / lead
        quot[shift] = coeff
        for k in range(len(q)):
            r[shift + k] = r[shift + k] - coeff * q[k]
        r.pop()
        trim(r)
    return trim(quot), r


def monic(p: Poly) -> Poly:
    if not p:
        return []
    lead = p[-1]
    if lead == ONE:
        return list(p)
    return [c / lead for c in p]


def gcd(p: Poly, q: Poly) -> Poly:
    a, b = list(p), list(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(p: Poly) -> Poly:
    return trim([p[k] * k for k in range(1, len(p))])


def eval_poly(p: Poly, x: GaussianRational) -> GaussianRational:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_decomposition(p: Poly) -> List[Tuple[Poly, int]]:
    """Yun's algorithm: [(g_m, m)] with p ~ prod g_m**m, each g_m squarefree.

    Constant factors are dropped; valid over any characteristic-zero field.
    """
    if not p:
        raise ValueError("zero polynomial has no squarefree decomposition")
    if degree(p) == 0:
        return []
    out: List[Tuple[Poly, int]] = []
    dp = derivative(p)
    a = gcd(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = sub(c, derivative(b))
    m = 1
    while degree(b) > 0:
        g = gcd(b, d)
        if degree(g) > 0:
            out.append((g, m))
        b2 = divmod_poly(b, g)[0]
        c2 = divmod_poly(d, g)[0]
        b, d = b2, sub(c2, derivative(b2))
        m += 1
    return out


def multiplicity_profile(p: Poly) -> List[int]:
    """Multiset of root multiplicities of p over the complex numbers.

    Computed through gcds only; no root is ever extracted.  The list is
    sorted ascending and its sum is deg(p).
    """
    profile: List[int] = []
    for factor, m in squarefree_decomposition(p):
        profile.extend([m] * degree(factor))
    return sorted(profile)


# ---------------------------------------------------------------------------
# Gaussian integers: support for exact rational-root extraction.
# ---------------------------------------------------------------------------

GInt = Tuple[int, int]  # a + b*i with integer a, b

_GI_UNITS: Tuple[GInt, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


def _gi_mul(x: GInt, y: GInt) -> GInt:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gi_norm(x: GInt) -> int:
    return x[0] * x[0] + x[1] * x[1]


def _gi_divmod(x: GInt, y: GInt) -> Tuple[GInt, GInt]:
    # nearest-integer division: remainder norm < norm(y)
    n = _gi_norm(y)
    pr = x[0] * y[0] + x[1] * y[1]
    pi = x[1] * y[0] - x[0] * y[1]
    qr = (2 * pr + n) // (2 * n)
    qi = (2 * pi + n) // (2 * n)
    q = (qr, qi)
    r = (x[0] - (qr * y[0] - qi * y[1]), x[1] - (qr * y[1] + qi * y[0]))
    return q, r


def _gi_gcd(x: GInt, y: GInt) -> GInt:
    while y != (0, 0):
        x, y = y, _gi_divmod(x, y)[1]
    return x


def _gi_div_exact(x: GInt, y: GInt) -> Optional[GInt]:
    q, r = _gi_divmod(x, y)
    if r == (0, 0):
        return q
    return None


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic below 3.3e24 for this base set
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, budget: int) -> Optional[int]:
    if n % 2 == 0:
        return 2
    for c in range(1, 20):
        x = y = 2
        d = 1
        steps = 0
        while d == 1 and steps < budget:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
            steps += 1
        if 1 < d < n:
            return d
    return None


def _factor_int(n: int, budget: int = 200000) -> Optional[Dict[int, int]]:
    """Prime factorization of n > 0, or None if the budget is exceeded."""
    out: Dict[int, int] = {}
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = None
        for p in (2, 3, 5, 7, 11, 13):
            if m % p == 0:
                f = p
                break
        if f is None:
            i, limit = 17, 100000
            while i * i <= m and i <= limit:
                if m % i == 0:
                    f = i
                    break
                i += 2
        if f is None and m < 10**10:
            # fully trial-divided below the limit squared
            out[m] = out.get(m, 0) + 1
            continue
        if f is None:
            f = _pollard_rho(m, budget)
        if f is None:
            return None
        stack.append(f)
        stack.append(m // f)
    return out


def _sqrt_minus_one_mod(p: int) -> int:
    # p prime, p % 4 == 1
    for a in range(2, p):
        s = pow(a, (p - 1) // 4, p)
        if s * s % p == p - 1:
            return s
    raise ValueError(f"no sqrt(-1) mod {p}")


def _gaussian_prime_above(p: int) -> GInt:
    # p % 4 == 1: returns pi with norm(pi) == p
    s = _sqrt_minus_one_mod(p)
    return _gi_gcd((p, 0), (s, 1))


def _factor_gaussian(z: GInt, budget: int = 200000) -> Optional[List[Tuple[GInt, int]]]:
    """Factor a nonzero Gaussian integer into primes, up to a unit."""
    n = _gi_norm(z)
    if n == 1:
        return []
    nf = _factor_int(n, budget)
    if nf is None:
        return None
    out: List[Tuple[GInt, int]] = []
    rem = z
    for p in sorted(nf):
        if p == 2:
            pi = (1, 1)
            cands = [pi]
        elif p % 4 == 3:
            cands = [(p, 0)]
        else:
            pi = _gaussian_prime_above(p)
            cands = [pi, (pi[0], -pi[1])]
        for c in cands:
            e = 0
            while True:
                q = _gi_div_exact(rem, c)
                if q is None:
                    break
                rem = q
                e += 1
            if e:
                out.append((c, e))
    if _gi_norm(rem) != 1:
        return None
    return out


def _gaussian_divisors(z: GInt, cap: int, budget: int = 200000) -> Optional[List[GInt]]:
    """All divisors of z up to units, or None if infeasible."""
    fac = _factor_gaussian(z, budget)
    if fac is None:
        return None
    divisors: List[GInt] = [(1, 0)]
    for pi, e in fac:
        new: List[GInt] = []
        power: GInt = (1, 0)
        for _ in range(e + 1):
            for d in divisors:
                new.append(_gi_mul(d, power))
                if len(new) > cap:
                    return None
            power = _gi_mul(power, pi)
        divisors = new
    return divisors


def _clear_denominators(p: Poly) -> List[GInt]:
    lcm = 1
    for c in p:
        lcm = lcm * c.re.denominator // math.gcd(lcm, c.re.denominator)
        lcm = lcm * c.im.denominator // math.gcd(lcm, c.im.denominator)
    out = []
    for c in p:
        out.append((int(c.re * lcm), int(c.im * lcm)))
    # remove Gaussian-integer content
    g: GInt = (0, 0)
    for z in out:
        if z != (0, 0):
            g = _gi_gcd(g, z) if g != (0, 0) else z
    if g != (0, 0) and _gi_norm(g) > 1:
        out = [_gi_div_exact(z, g) for z in out]  # type: ignore[misc]
    return out  # type: ignore[return-value]


_SMALL_CANDIDATES = None


def _small_candidates() -> List[GaussianRational]:
    global _SMALL_CANDIDATES
    if _SMALL_CANDIDATES is None:
        vals = []
        rats = [Fraction(n, d) for n in range(-4, 5) for d in (1, 2, 3, 4)]
        for a in rats:
            for b in rats:
                vals.append(GaussianRational(a, b))
        seen = set()
        out = []
        for v in vals:
            k = (v.re, v.im)
            if k not in seen:
                seen.add(k)
                out.append(v)
        _SMALL_CANDIDATES = out
    return _SMALL_CANDIDATES


def gaussian_roots(p: Poly, max_candidates: int = 20000,
                   factor_budget: int = 200000) -> Tuple[List[GaussianRational], bool]:
    """All roots of p lying in Q(i), with a certificate flag.

    Returns (roots, fully_split).  fully_split is True only when the
    returned roots together with their multiplicities account for every
    complex root of p, i.e. p factors completely into linear factors
    over Q(i).  Roots are reported once each (multiplicity dropped) in
    canonical order.

    The search is exact: squarefree reduction, then the rational-root
    theorem over the Gaussian integers (divisor enumeration of the
    extreme coefficients), with degree-at-most-2 factors finished by the
    exact quadratic formula.  When integer factorization exceeds its
    budget the function still returns any roots it found, with
    fully_split=False.
    """
    if not p:
        raise ValueError("zero polynomial")
    if degree(p) == 0:
        return [], True
    roots: List[GaussianRational] = []
    work = monic(p)
    # pull out the root at zero
    while work and work[0].is_zero():
        if ZERO not in roots:
            roots.append(ZERO)
        work = work[1:]
    # root-find on the squarefree factors; completeness is unaffected
    sf_pairs = squarefree_decomposition(work) if degree(work) > 0 else []
    residual_fully_split = True
    for factor, _m in sf_pairs:
        froots, fsplit = _roots_squarefree(factor, max_candidates, factor_budget)
        for r in froots:
            if r not in roots:
                roots.append(r)
        residual_fully_split = residual_fully_split and fsplit
    roots.sort(key=lambda z: z.sort_key())
    return roots, residual_fully_split


def _roots_squarefree(p: Poly, max_candidates: int,
                      factor_budget: int) -> Tuple[List[GaussianRational], bool]:
    d = degree(p)
    if d <= 0:
        return [], True
    if d == 1:
        return [-p[0] / p[1]], True
    if d == 2:
        return _quadratic_roots(p)
    roots: List[GaussianRational] = []
    work = list(p)
    # cheap screen on small values keeps the divisor enumeration short
    for cand in _small_candidates():
        while degree(work) > 2 and eval_poly(work, cand).is_zero():
            roots.append(cand)
            work = divmod_poly(work, [-cand, ONE])[0]
    if degree(work) <= 2:
        sub_roots, split = _roots_squarefree(work, max_candidates, factor_budget)
        return roots + sub_roots, split
    ints = _clear_denominators(work)
    lead = ints[-1]
    const = ints[0]
    if const == (0, 0):
        # zero root was already stripped by the caller of gaussian_roots
        return roots, False
    num_divs = _gaussian_divisors(const, max_candidates, factor_budget)
    den_divs = _gaussian_divisors(lead, max_candidates, factor_budget)
    if num_divs is None or den_divs is None:
        return roots, False
    if len(num_divs) * len(den_divs) * 4 > 40 * max_candidates:
        return roots, False
    seen = set()
    for a in num_divs:
        for b in den_divs:
            base = GaussianRational(Fraction(a[0]), Fraction(a[1])) / GaussianRational(
                Fraction(b[0]), Fraction(b[1]))
            for u in _GI_UNITS:
                cand = base * GaussianRational(u[0], u[1])
                key = (cand.re, cand.im)
                if key in seen:
                    continue
                seen.add(key)
                if eval_poly(work, cand).is_zero():
                    roots.append(cand)
                    work = divmod_poly(work, [-cand, ONE])[0]
                    if degree(work) <= 2:
                        sub_roots, split = _roots_squarefree(
                            work, max_candidates, factor_budget)
                        return roots + sub_roots, split
    return roots, degree(work) == 0


def _quadratic_roots(p: Poly) -> Tuple[List[GaussianRational], bool]:
    from .gaussian import gaussian_sqrt
    c, b, a = p[0], p[1], p[2]
    disc = b * b - GaussianRational(4) * a * c
    s = gaussian_sqrt(disc)
    if s is None:
        # irrational pair of roots: none lie in Q(i), certified
        return [], False
    two_a = GaussianRational(2) * a
    r1 = (-b + s) / two_a
    r2 = (-b - s) / two_a
    return ([r1] if r1 == r2 else [r1, r2]), True
