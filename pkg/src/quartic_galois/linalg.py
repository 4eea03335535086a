"""Exact dense linear algebra over Q(i).

Rank, kernel and inverse are computed by exact Gaussian elimination
with a deterministic pivot rule (first nonzero in row-major scan), so
every reported basis is reproducible across runs and platforms.

For the large rank certificates needed by the smoothness tests there
is a homomorphic fast path: full column rank is first attempted modulo
a fixed sequence of primes p = 1 (mod 4).  A full-rank image proves
full rank exactly (a nonzero minor mod p lifts); a deficient image
proves nothing and triggers the exact elimination fallback, so the
verdict is always the exact one.  Integer arithmetic only; no floats.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import ParseError
from .gaussian import ZERO, ONE, GaussianRational, parse_gaussian

Vector = Tuple[GaussianRational, ...]
SparseRow = Dict[int, GaussianRational]


class Matrix:
    """An exact rows x cols matrix over Q(i), row-major, immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[GaussianRational]):
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(GaussianRational.coerce(e) for e in entries)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat: List[GaussianRational] = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(GaussianRational.coerce(x) for x in row)
        return Matrix(r, c, flat)

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> "Matrix":
        c = len(cols)
        r = len(cols[0]) if c else 0
        flat = [GaussianRational.coerce(cols[j][i]) for i in range(r) for j in range(c)]
        return Matrix(r, c, flat)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [ONE if i == j else ZERO
                             for i in range(n) for j in range(n)])

    @staticmethod
    def diagonal(values: Sequence) -> "Matrix":
        n = len(values)
        vals = [GaussianRational.coerce(v) for v in values]
        return Matrix(n, n, [vals[i] if i == j else ZERO
                             for i in range(n) for j in range(n)])

    # -- access ----------------------------------------------------------

    def __getitem__(self, ij: Tuple[int, int]) -> GaussianRational:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> List[List[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    # -- algebra ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def _shape_check(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def scale(self, c) -> "Matrix":
        c = GaussianRational.coerce(c)
        return Matrix(self.rows, self.cols, [c * e for e in self.entries])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = ri[k]
                    if a.is_zero():
                        continue
                    acc = acc + a * other.entries[k * other.cols + j]
                out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        vv = [GaussianRational.coerce(x) for x in v]
        out = []
        for i in range(self.rows):
            acc = ZERO
            ri = self.row(i)
            for k in range(self.cols):
                if not ri[k].is_zero():
                    acc = acc + ri[k] * vv[k]
            out.append(acc)
        return tuple(out)

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def det(self) -> GaussianRational:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        a = self.row_lists()
        det = ONE
        for col in range(n):
            piv = None
            for r in range(col, n):
                if not a[r][col].is_zero():
                    piv = r
                    break
            if piv is None:
                return ZERO
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            pval = a[col][col]
            det = det * pval
            for r in range(col + 1, n):
                f = a[r][col] / pval
                if f.is_zero():
                    continue
                for c in range(col, n):
                    a[r][c] = a[r][c] - f * a[col][c]
        return det

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        a = [list(self.row(i)) + [ONE if i == j else ZERO for j in range(n)]
             for i in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if not a[r][col].is_zero():
                    piv = r
                    break
            if piv is None:
                raise ValueError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            pval = a[col][col]
            a[col] = [x / pval for x in a[col]]
            for r in range(n):
                if r == col:
                    continue
                f = a[r][col]
                if f.is_zero():
                    continue
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix.from_rows([row[n:] for row in a])

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.rows) if self.rows == self.cols else False

    def is_scalar(self) -> bool:
        if self.rows != self.cols:
            return False
        d = self[0, 0]
        return self == Matrix.identity(self.rows).scale(d)

    def rank(self) -> int:
        return sparse_rank(self._sparse_rows())

    def kernel_basis(self) -> List[Vector]:
        return kernel_basis_sparse(self._sparse_rows(), self.cols)

    def _sparse_rows(self) -> List[SparseRow]:
        out = []
        for i in range(self.rows):
            row = {j: v for j, v in enumerate(self.row(i)) if not v.is_zero()}
            out.append(row)
        return out

    def __str__(self) -> str:
        return "\n".join("  ".join(str(x) for x in self.row(i))
                         for i in range(self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


def parse_matrix(text: str, rows: int = 4, cols: int = 4) -> Matrix:
    """Parse whitespace-separated Q(i) entries, row-major."""
    tokens = text.split()
    if len(tokens) != rows * cols:
        raise ParseError(
            f"expected {rows * cols} matrix entries, got {len(tokens)}")
    try:
        entries = [parse_gaussian(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return Matrix(rows, cols, entries)


# ---------------------------------------------------------------------------
# Sparse exact elimination (deterministic).
# ---------------------------------------------------------------------------

def _eliminate(rows: Iterable[SparseRow]) -> Dict[int, SparseRow]:
    """Forward-eliminate rows in order; returns {pivot column: row}.

    Each surviving row is normalized to leading coefficient 1 and reduced
    against all earlier pivots, so the result only depends on the input
    order, never on timing or hashing.
    """
    pivots: Dict[int, SparseRow] = {}
    for row in rows:
        work = dict(row)
        while work:
            lead = min(work)
            piv = pivots.get(lead)
            if piv is None:
                coeff = work[lead]
                if coeff != ONE:
                    work = {c: v / coeff for c, v in work.items()}
                pivots[lead] = work
                break
            factor = work[lead]
            for c, v in piv.items():
                nv = work.get(c, ZERO) - factor * v
                if nv.is_zero():
                    work.pop(c, None)
                else:
                    work[c] = nv
        # fully reduced to zero: contributes nothing
    return pivots


def sparse_rank(rows: List[SparseRow]) -> int:
    return len(_eliminate(rows))


def sparse_rref(rows: List[SparseRow]) -> Dict[int, SparseRow]:
    """Fully reduced row echelon form, keyed by pivot column."""
    pivots = _eliminate(rows)
    for lead in sorted(pivots, reverse=True):
        row = pivots[lead]
        for other_lead, other in pivots.items():
            if other_lead >= lead:
                continue
            factor = other.get(lead)
            if factor is None:
                continue
            for c, v in row.items():
                nv = other.get(c, ZERO) - factor * v
                if nv.is_zero():
                    other.pop(c, None)
                else:
                    other[c] = nv
    return pivots


def kernel_basis_sparse(rows: List[SparseRow], ncols: int) -> List[Vector]:
    """Exact basis of the right kernel; empty iff rank == ncols."""
    rref = sparse_rref(rows)
    pivot_cols = sorted(rref)
    free_cols = [c for c in range(ncols) if c not in rref]
    basis: List[Vector] = []
    for f in free_cols:
        v = [ZERO] * ncols
        v[f] = ONE
        for p in pivot_cols:
            coeff = rref[p].get(f)
            if coeff is not None:
                v[p] = -coeff
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# Modular full-rank certificates.
# ---------------------------------------------------------------------------

def _sqrt_minus_one(p: int) -> int:
    for a in range(2, 50):
        s = pow(a, (p - 1) // 4, p)
        if s * s % p == p - 1:
            return s
    raise RuntimeError(f"no sqrt(-1) mod {p}")


# primes = 1 (mod 4), below 2**31 so numpy int64 products cannot overflow
_CERT_PRIMES: Tuple[int, ...] = (2130706433, 469762049, 167772161)
_CERT_ROOTS: Dict[int, int] = {p: _sqrt_minus_one(p) for p in _CERT_PRIMES}


class _BadPrime(Exception):
    pass


def _residue(v: GaussianRational, p: int, s: int, cache: Dict) -> int:
    key = (v.re, v.im)
    r = cache.get(key)
    if r is None:
        dr = v.re.denominator % p
        di = v.im.denominator % p
        if dr == 0 or di == 0:
            raise _BadPrime
        r = (v.re.numerator % p) * pow(dr, p - 2, p) % p
        r = (r + (v.im.numerator % p) * pow(di, p - 2, p) % p * s) % p
        cache[key] = r
    return r


def _rank_mod_p(a: np.ndarray, p: int) -> int:
    n, m = a.shape
    r = 0
    for c in range(m):
        if r == n:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        below = np.nonzero(a[r + 1:, c])[0]
        if below.size:
            rows = below + r + 1
            factors = a[rows, c][:, None]
            a[rows, c:] = (a[rows, c:] - factors * a[r, c:][None, :]) % p
        r += 1
    return r


def prove_full_column_rank(rows: List[SparseRow], ncols: int) -> bool:
    """Exact verdict on whether the sparse row system has rank == ncols.

    Modular images can only certify the positive answer; any deficient
    image falls through to exact elimination, so both answers are exact.
    """
    if len(rows) < ncols:
        return False
    for p in _CERT_PRIMES:
        s = _CERT_ROOTS[p]
        cache: Dict = {}
        try:
            a = np.zeros((len(rows), ncols), dtype=np.int64)
            for i, row in enumerate(rows):
                for c, v in row.items():
                    a[i, c] = _residue(v, p, s, cache)
        except _BadPrime:
            continue
        if _rank_mod_p(a, p) == ncols:
            return True
    return sparse_rank(rows) == ncols


# ---------------------------------------------------------------------------
# Commutation systems.
# ---------------------------------------------------------------------------

def centralizer_dimension(mats: Sequence[Matrix]) -> int:
    """dim over C of {B in gl_4 : B*M = M*B for every M}.

    Computed as the kernel dimension of the stacked linear commutation
    system on the 16 entries of B.  The empty list yields 16 (all of
    gl_4).
    """
    n = 4
    for m in mats:
        if m.rows != n or m.cols != n:
            raise ValueError("centralizer expects 4x4 matrices")
        if m.det().is_zero():
            raise ValueError("centralizer expects invertible matrices")
    if not mats:
        return n * n
    rows: List[SparseRow] = []
    for m in mats:
        for i in range(n):
            for j in range(n):
                row: SparseRow = {}
                # (B*M - M*B)[i, j] = sum_k B[i,k] M[k,j] - M[i,k] B[k,j]
                for k in range(n):
                    c1 = m[k, j]
                    if not c1.is_zero():
                        idx = i * n + k
                        row[idx] = row.get(idx, ZERO) + c1
                    c2 = m[i, k]
                    if not c2.is_zero():
                        idx = k * n + j
                        row[idx] = row.get(idx, ZERO) - c2
                row = {c: v for c, v in row.items() if not v.is_zero()}
                if row:
                    rows.append(row)
    return n * n - sparse_rank(rows)
