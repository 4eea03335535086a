"""Outer Galois points of smooth quartic surfaces.

A point P off a smooth quartic S is an outer Galois point when the
projection away from P makes the function-field extension Galois; for
quartic surfaces the group is then cyclic of order 4 and its generator
is a linear homology of period 4 centered at P.

Algebraic criterion used throughout this module.  Complete P to a
basis and write f = c0*T**4 + c1*T**3 + c2*T**2 + c3*T + c4 with c_k a
form of degree k in the complementary variables and c0 = f(P) != 0.
The shear T -> T - c1/(4 c0) always kills the T**3 coefficient; it
kills the T**2 and T coefficients simultaneously exactly when

    8*c0*c2 == 3*c1**2   and   8*c0**2*c3 == 4*c0*c1*c2 - c1**3,

in which case f is equivalent, through a transformation fixing P, to
the split form T**4 + (quartic in the complementary variables), which
is a cyclic Kummer extension since i lies in the ground field.
Equivalently (and basis-freely): the two identities hold iff the first
polar of f at P is a nonzero perfect cube of a linear form, which is
what the enumerator searches for.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (ConsistencyError, InnerPointError, SingularSurfaceError)
from .gaussian import ZERO, ONE, I, GaussianRational
from .geometry import is_smooth_plane_quartic, is_smooth_surface
from .linalg import Matrix
from .poly import (HomPoly, ProjPoint, squarefree_profile, substitute_linear,
                   x_decompose)
from .solver import (DEFAULT_LIMITS, SolverLimits, cube_locus_quadrics,
                     solve_projective)

PROVED_COMPLETE = "proved-complete"
CANDIDATES_ONLY = "candidates-only"


@dataclass(frozen=True)
class LinearAuto:
    """An exact linear automorphism of a quartic: f(M x) == multiplier * f."""
    matrix: Matrix
    multiplier: GaussianRational

    def projective_order(self) -> int:
        m = self.matrix
        if m.is_scalar():
            return 1
        if (m * m).is_scalar():
            return 2
        return 4


def linear_auto(f: HomPoly, m: Matrix) -> LinearAuto:
    """Validate that m preserves the surface of f and package it.

    Requires m**4 == identity exactly (the normalization every homology
    in scope satisfies); computes and checks the multiplier.
    """
    from .errors import SurfaceNotPreservedError, UnnormalizedAutomorphismError
    if m.rows != 4 or m.cols != 4:
        raise ValueError("expected a 4x4 matrix")
    if not (m ** 4).is_identity():
        raise UnnormalizedAutomorphismError(
            "matrix does not satisfy M**4 == I; rescale it inside Q(i)")
    g = substitute_linear(f, m)
    exp0, coeff0 = next(iter(f.sorted_terms()))
    lam = g.coeff(exp0) / coeff0
    if lam.is_zero() or g != f.scale(lam):
        raise SurfaceNotPreservedError(
            "matrix does not map the surface to itself")
    return LinearAuto(m, lam)


@dataclass
class GaloisReport:
    """Outcome of a Galois-point test or search."""
    surface: HomPoly
    points: List[Tuple[ProjPoint, LinearAuto]]
    completeness: str
    normal_form: str

    def point_list(self) -> List[ProjPoint]:
        return [p for p, _g in self.points]

    def to_dict(self) -> Dict:
        return {
            "surface": str(self.surface),
            "normal_form": self.normal_form,
            "completeness": self.completeness,
            "points": [
                {
                    "point": str(p),
                    "generator": [str(x) for x in g.matrix.entries],
                    "multiplier": str(g.multiplier),
                }
                for p, g in self.points
            ],
        }


@lru_cache(maxsize=256)
def _smooth_cached(f: HomPoly) -> bool:
    return is_smooth_surface(f)


def _require_smooth(f: HomPoly) -> None:
    if not _smooth_cached(f):
        raise SingularSurfaceError(
            "the quartic is singular; Galois-point analysis is refused")


def adapted_basis(p: ProjPoint) -> Matrix:
    """Deterministic completion of p to a basis of C^4.

    Column 0 is p itself; the remaining columns are the standard basis
    vectors away from p's pivot coordinate, in increasing order.
    """
    pivot = p.pivot_index()
    cols: List[List[GaussianRational]] = [list(p.coords)]
    for j in range(4):
        if j == pivot:
            continue
        cols.append([ONE if t == j else ZERO for t in range(4)])
    return Matrix.from_columns(cols)


def _chart_coefficients(f: HomPoly, p: ProjPoint,
                        basis: Optional[Matrix] = None) -> List[HomPoly]:
    b = basis if basis is not None else adapted_basis(p)
    fb = substitute_linear(f, b)
    return x_decompose(fb, 0).c


def is_outer_galois_point(f: HomPoly, p: ProjPoint, *,
                          check_smooth: bool = True,
                          basis: Optional[Matrix] = None) -> bool:
    """Decide whether p (off the surface) is an outer Galois point of f.

    The verdict does not depend on the basis completion; a specific one
    may be supplied to exercise exactly that covariance.
    """
    if check_smooth:
        _require_smooth(f)
    if f.eval(p.coords).is_zero():
        raise InnerPointError(
            "point lies on the surface: inner Galois points are out of scope")
    c = _chart_coefficients(f, p, basis)
    c0 = c[0].coeff((0, 0, 0))
    eight_c0 = GaussianRational(8) * c0
    first = c[2].scale(eight_c0) == (c[1] * c[1]).scale(3)
    if not first:
        return False
    lhs = c[3].scale(eight_c0 * c0)
    rhs = (c[1] * c[2]).scale(GaussianRational(4) * c0) - c[1] * c[1] * c[1]
    return lhs == rhs


def galois_generator(f: HomPoly, p: ProjPoint, *,
                     check_smooth: bool = True) -> LinearAuto:
    """The order-4 homology generating the Galois group at p.

    In sheared adapted coordinates the generator is diag(i, 1, 1, 1);
    it is conjugated back to the original coordinates and the exact
    relation f(M x) == multiplier * f is re-verified.
    """
    if not is_outer_galois_point(f, p, check_smooth=check_smooth):
        raise ValueError(f"{p} is not an outer Galois point of this quartic")
    b = adapted_basis(p)
    c = _chart_coefficients(f, p, basis=b)
    c0 = c[0].coeff((0, 0, 0))
    ell = c[1].scale(ONE / (GaussianRational(4) * c0))
    shear_row = [ONE]
    for k in range(3):
        e = tuple(1 if t == k else 0 for t in range(3))
        shear_row.append(-ell.coeff(e))
    shear = Matrix.from_rows([
        shear_row,
        [ZERO, ONE, ZERO, ZERO],
        [ZERO, ZERO, ONE, ZERO],
        [ZERO, ZERO, ZERO, ONE],
    ])
    conj = b * shear
    m = conj * Matrix.diagonal([I, 1, 1, 1]) * conj.inverse()
    g = substitute_linear(f, m)
    exp0, coeff0 = next(iter(f.sorted_terms()))
    lam = g.coeff(exp0) / coeff0
    if g != f.scale(lam):
        raise ConsistencyError(
            "constructed generator fails to preserve the surface")
    return LinearAuto(m, lam)


# ---------------------------------------------------------------------------
# Normal-form recognition (syntactic).
# ---------------------------------------------------------------------------

def _split_variables(f: HomPoly) -> List[int]:
    """Variables v whose only occurrence in f is the pure power v**4."""
    out = []
    for v in range(f.nvars):
        pure = tuple(4 if t == v else 0 for t in range(f.nvars))
        if pure not in f.terms:
            continue
        if all(e[v] == 0 for e in f.terms if e != pure):
            out.append(v)
    return out


def _complement_form(f: HomPoly, split: Sequence[int]) -> HomPoly:
    """The part of f in the non-split variables, as a smaller form."""
    rest = [v for v in range(f.nvars) if v not in split]
    names = tuple(f.names[v] for v in rest)
    terms: Dict[Tuple[int, ...], GaussianRational] = {}
    for e, c in f.terms.items():
        if any(e[v] > 0 for v in split):
            continue
        terms[tuple(e[v] for v in rest)] = c
    return HomPoly(len(rest), 4, terms, names)


def _coordinate_point(v: int) -> ProjPoint:
    return ProjPoint([ONE if t == v else ZERO for t in range(4)])


def _lift_point(sub: ProjPoint, rest: Sequence[int]) -> ProjPoint:
    coords = [ZERO] * 4
    for value, v in zip(sub.coords, rest):
        coords[v] = value
    return ProjPoint(coords)


def _verified_pairs(f: HomPoly, candidates: Sequence[ProjPoint]
                    ) -> List[Tuple[ProjPoint, LinearAuto]]:
    out = []
    seen = set()
    for p in candidates:
        if p in seen:
            continue
        seen.add(p)
        if f.eval(p.coords).is_zero():
            continue
        if is_outer_galois_point(f, p, check_smooth=False):
            out.append((p, galois_generator(f, p, check_smooth=False)))
    out.sort(key=lambda pg: pg[0].sort_key())
    return out


def _extra_points_on_wall(f: HomPoly, sub_form: HomPoly, rest: Sequence[int],
                          limits: SolverLimits) -> Tuple[List[ProjPoint], bool]:
    """Galois candidates inside the coordinate subspace spanned by the
    non-split variables: the polar-cube locus of the complement form."""
    quadrics = cube_locus_quadrics(sub_form)
    if not quadrics:
        return [], False
    sols, complete = solve_projective(quadrics, sub_form.nvars, limits)
    return [_lift_point(s, rest) for s in sols], complete


def recognize_normal_form(f: HomPoly,
                          limits: SolverLimits = DEFAULT_LIMITS) -> GaloisReport:
    """Syntactic recognition of the three split normal forms.

    Detects, up to variable permutation, the monomial-support patterns
    T**4 + F4(three variables), T**4 + U**4 + F4(two variables) and the
    sum of four pure powers; no projective-equivalence search is
    attempted.  The advertised coordinate Galois points are verified
    individually, and completeness of the resulting list is certified
    by solving the residual polar-cube problem on the complementary
    coordinate subspace (an exact, lower-dimensional search).  Anything
    outside the three patterns is reported as unrecognized with the
    verified coordinate points only.
    """
    if f.nvars != 4 or f.degree != 4:
        raise ValueError("expected a quartic form in 4 variables")
    _require_smooth(f)
    split = _split_variables(f)
    rest = [v for v in range(4) if v not in split]
    p = len(split)
    if p == 4:
        pairs = _verified_pairs(f, [_coordinate_point(v) for v in range(4)])
        if len(pairs) != 4:
            raise ConsistencyError("split form lost a coordinate Galois point")
        return GaloisReport(f, pairs, PROVED_COMPLETE, "form-3")
    if p == 2:
        sub = _complement_form(f, split)
        if squarefree_profile(sub) != [1, 1, 1, 1]:
            raise ConsistencyError(
                "smooth split quartic with a repeated binary factor")
        extra, complete = _extra_points_on_wall(f, sub, rest, limits)
        pairs = _verified_pairs(
            f, [_coordinate_point(v) for v in split] + extra)
        status = PROVED_COMPLETE if complete else CANDIDATES_ONLY
        return GaloisReport(f, pairs, status, "form-2")
    if p == 1:
        sub = _complement_form(f, split)
        if not is_smooth_plane_quartic(sub):
            raise ConsistencyError(
                "smooth split quartic with singular complementary curve")
        extra, complete = _extra_points_on_wall(f, sub, rest, limits)
        pairs = _verified_pairs(
            f, [_coordinate_point(v) for v in split] + extra)
        status = PROVED_COMPLETE if complete else CANDIDATES_ONLY
        return GaloisReport(f, pairs, status, "form-1")
    pairs = _verified_pairs(f, [_coordinate_point(v) for v in range(4)])
    return GaloisReport(f, pairs, CANDIDATES_ONLY, "unrecognized")


def _form_label(f: HomPoly) -> str:
    split = len(_split_variables(f))
    return {4: "form-3", 2: "form-2", 1: "form-1"}.get(split, "unrecognized")


def enumerate_outer_galois_points(
        f: HomPoly,
        extra_candidates: Sequence[ProjPoint] = (),
        limits: SolverLimits = DEFAULT_LIMITS) -> GaloisReport:
    """Search for every outer Galois point of a smooth quartic.

    The polar-cube locus is cut out by quadrics in the point
    coordinates; these are solved exactly chart by chart.  The four
    coordinate points and any user candidates are always tested as
    well, so the returned points are correct even when the solver
    cannot certify completeness.  The report is proved-complete only
    when the elimination chain certifies that no complex solution was
    missed; a proved-complete point count outside {0, 1, 2, 4} is
    impossible for smooth quartics and raises ConsistencyError.
    """
    if f.nvars != 4 or f.degree != 4:
        raise ValueError("expected a quartic form in 4 variables")
    _require_smooth(f)
    quadrics = cube_locus_quadrics(f)
    if quadrics:
        sols, complete = solve_projective(quadrics, 4, limits)
    else:
        sols, complete = [], False
    candidates = list(sols)
    candidates.extend(_coordinate_point(v) for v in range(4))
    candidates.extend(extra_candidates)
    pairs = _verified_pairs(f, candidates)
    status = PROVED_COMPLETE if complete else CANDIDATES_ONLY
    if status == PROVED_COMPLETE and len(pairs) not in (0, 1, 2, 4):
        raise ConsistencyError(
            f"certified search returned {len(pairs)} Galois points; "
            "only 0, 1, 2 or 4 are possible for a smooth quartic")
    return GaloisReport(f, pairs, status, _form_label(f))
