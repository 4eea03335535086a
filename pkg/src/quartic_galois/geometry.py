"""Exact projective geometry predicates for quartics.

Smoothness is decided by one exact rank computation: if forms
f_1..f_n of degree 3 in n variables have no common projective zero
they form a regular sequence, so the quotient ring vanishes in degrees
above 3*(n-1) and the degree-(3*(n-1)+1) graded piece of the ideal they
generate must be the full space of forms of that degree.  Conversely a
common zero supports a point evaluation that kills the graded piece.
The rank of the corresponding multiplication (Macaulay) matrix is
therefore full exactly when the zero set is empty.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import DegenerateInputError, UnnormalizedAutomorphismError
from .gaussian import FOURTH_ROOTS, GaussianRational
from .linalg import Matrix, SparseRow, prove_full_column_rank
from .poly import (HomPoly, ProjPoint, monomials, partials,
                   squarefree_profile, substitute_linear)

SubspaceBasis = Sequence[Union[ProjPoint, Sequence]]


def macaulay_rows(gens: Sequence[HomPoly], target_degree: int) -> Tuple[List[SparseRow], int]:
    """Rows of the degree-`target_degree` Macaulay matrix of the generators.

    Row (m, g) is the monomial multiple m*g written in the basis of all
    degree-`target_degree` monomials; the column count is returned with
    the rows.
    """
    nvars = gens[0].nvars
    cols = monomials(nvars, target_degree)
    col_index: Dict[Tuple[int, ...], int] = {e: k for k, e in enumerate(cols)}
    rows: List[SparseRow] = []
    for g in gens:
        shift = target_degree - g.degree
        if shift < 0:
            raise ValueError("generator degree exceeds target degree")
        for mult in monomials(nvars, shift):
            row: SparseRow = {}
            for exp, coeff in g.terms.items():
                e = tuple(a + b for a, b in zip(exp, mult))
                row[col_index[e]] = coeff
            rows.append(row)
    return rows, len(cols)


def jacobian_ideal_is_irrelevant(f: HomPoly, margin: int = 0) -> bool:
    """True iff the partials of f have no common projective zero.

    Tested at degree 3*(nvars-1)+1 (+margin); both settings of margin
    must agree for smooth input, which the test suite checks.
    """
    gens = partials(f)
    if any(g.is_zero() for g in gens):
        return False
    target = (f.degree - 1) * (f.nvars - 1) + 1 + margin
    rows, ncols = macaulay_rows(gens, target)
    return prove_full_column_rank(rows, ncols)


def is_smooth_surface(f: HomPoly, margin: int = 0) -> bool:
    """Exact smoothness test for a quartic surface in P^3."""
    if f.nvars != 4 or f.degree != 4:
        raise ValueError("expected a quartic form in 4 variables")
    if f.is_zero():
        raise ValueError("zero form does not define a surface")
    return jacobian_ideal_is_irrelevant(f, margin)


def is_smooth_plane_quartic(f: HomPoly, margin: int = 0) -> bool:
    """Exact smoothness test for a plane quartic curve."""
    if f.nvars != 3 or f.degree != 4:
        raise ValueError("expected a quartic form in 3 variables")
    if f.is_zero():
        raise ValueError("zero form does not define a curve")
    return jacobian_ideal_is_irrelevant(f, margin)


class EigenDecomposition:
    """Exact eigenstructure of a matrix with M**4 == identity.

    eigenvalues lists the 4th roots of unity with nonzero eigenspace in
    the canonical order 1, -1, i, -i; spaces[k] is an exact basis of
    the corresponding eigenspace.
    """

    __slots__ = ("eigenvalues", "spaces")

    def __init__(self, eigenvalues: List[GaussianRational],
                 spaces: List[List[Tuple[GaussianRational, ...]]]):
        self.eigenvalues = eigenvalues
        self.spaces = spaces

    def space_of(self, mu: GaussianRational) -> Optional[List[Tuple[GaussianRational, ...]]]:
        for ev, sp in zip(self.eigenvalues, self.spaces):
            if ev == mu:
                return sp
        return None


def eigen_decompose_order4(m: Matrix) -> EigenDecomposition:
    """Exact eigenspaces of a 4x4 matrix satisfying M**4 == I.

    Such a matrix is diagonalizable with eigenvalues among the 4th
    roots of unity, so kernel extraction per root is a complete
    decomposition.  Anything else is rejected: rescale the matrix so
    that its fourth power is exactly the identity before calling.
    """
    if m.rows != 4 or m.cols != 4:
        raise ValueError("expected a 4x4 matrix")
    if not (m ** 4).is_identity():
        raise UnnormalizedAutomorphismError(
            "matrix does not satisfy M**4 == I; rescale the matrix "
            "(projective automorphisms must be normalized inside Q(i))")
    eigenvalues: List[GaussianRational] = []
    spaces: List[List[Tuple[GaussianRational, ...]]] = []
    total = 0
    for mu in FOURTH_ROOTS:
        shifted = m - Matrix.identity(4).scale(mu)
        basis = shifted.kernel_basis()
        if basis:
            eigenvalues.append(mu)
            spaces.append(basis)
            total += len(basis)
    if total != 4:
        raise UnnormalizedAutomorphismError(
            "eigenspace dimensions do not sum to 4")
    return EigenDecomposition(eigenvalues, spaces)


class CurveSection:
    """The intersection of a surface with a linear subspace of P^3.

    kind is one of "plane-quartic", "line-in-surface", "finite-points"
    or "point".  A smooth plane quartic has genus 3; a line contained
    in the surface has genus 0; finite sections carry the exact count
    of distinct points.
    """

    __slots__ = ("ambient", "form", "kind", "smooth", "genus", "point_count")

    def __init__(self, ambient: Tuple[ProjPoint, ...], form: HomPoly, kind: str,
                 smooth: Optional[bool], genus: Optional[int],
                 point_count: Optional[int]):
        self.ambient = ambient
        self.form = form
        self.kind = kind
        self.smooth = smooth
        self.genus = genus
        self.point_count = point_count

    def is_curve(self) -> bool:
        return self.kind in ("plane-quartic", "line-in-surface")

    def __repr__(self) -> str:
        return (f"CurveSection(kind={self.kind}, genus={self.genus}, "
                f"smooth={self.smooth}, points={self.point_count})")


def _as_points(basis: SubspaceBasis) -> List[ProjPoint]:
    out = []
    for v in basis:
        out.append(v if isinstance(v, ProjPoint) else ProjPoint(list(v)))
    return out


def section(f: HomPoly, basis: SubspaceBasis) -> CurveSection:
    """Restrict f to the subspace spanned by the basis points.

    dim 3 -> plane quartic (with smoothness and genus); dim 2 -> either
    a line contained in the surface or the finite set of intersection
    points, counted without multiplicity; dim 1 -> point membership.
    """
    pts = _as_points(basis)
    k = len(pts)
    if f.nvars != 4 or f.degree != 4:
        raise ValueError("expected a quartic form in 4 variables")
    if k not in (1, 2, 3):
        raise ValueError("subspace basis must contain 1, 2 or 3 points")
    b = Matrix.from_columns([list(p.coords) for p in pts])
    if b.rank() != k:
        raise ValueError("subspace basis is linearly dependent")
    ambient = tuple(pts)
    if k == 1:
        value = f.eval(pts[0].coords)
        on_surface = value.is_zero()
        return CurveSection(ambient, HomPoly.zero(1, 4), "point",
                            None, None, 1 if on_surface else 0)
    g = substitute_linear(f, b)
    if k == 2:
        if g.is_zero():
            return CurveSection(ambient, g, "line-in-surface", True, 0, None)
        count = len(squarefree_profile(g))
        return CurveSection(ambient, g, "finite-points", None, None, count)
    if g.is_zero():
        raise DegenerateInputError(
            "plane lies inside the quartic; the surface is singular")
    smooth = is_smooth_plane_quartic(g)
    return CurveSection(ambient, g, "plane-quartic", smooth,
                        3 if smooth else None, None)
