"""Integer lattice algebra behind subdivision dilation matrices.

Exact determinants and inverses, Smith normal form with unimodular
transforms, coset representatives of Z^s modulo M Z^s, and the dual set of
evaluation points on the complex torus (roots of unity attached to
representatives of Z^s modulo M^T Z^s).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import SingularMatrixError

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


def _as_int_matrix(rows) -> IntMatrix:
    mat = tuple(tuple(row) for row in rows)
    if not mat or any(len(row) != len(mat) for row in mat):
        raise ValueError("matrix must be square and non-empty")
    for row in mat:
        for x in row:
            if x != int(x):
                raise ValueError(f"matrix entries must be integers, got {x!r}")
    return tuple(tuple(int(x) for x in row) for row in mat)


def identity_matrix(s: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(s)) for i in range(s))


def transpose(rows: IntMatrix) -> IntMatrix:
    return tuple(zip(*rows))


def mat_vec(rows, vec):
    return tuple(sum(r[k] * vec[k] for k in range(len(vec))) for r in rows)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def determinant(rows) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in _as_int_matrix(rows)]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(rows) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse over Q via Gauss-Jordan elimination."""
    mat = _as_int_matrix(rows)
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix {mat} is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def determinant_and_inverse(rows) -> tuple[int, tuple[tuple[Fraction, ...], ...]]:
    det = determinant(rows)
    if det == 0:
        raise SingularMatrixError(f"matrix {rows} is singular")
    return det, rational_inverse(rows)


def integer_inverse(rows) -> IntMatrix:
    """Inverse of a unimodular integer matrix, kept in integers."""
    inv = rational_inverse(rows)
    out = []
    for row in inv:
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def smith_normal_form(rows) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form U·A·V = D for a nonsingular integer matrix.

    U and V are unimodular, D is diagonal with non-negative entries and
    d_i | d_{i+1}.  Raises SingularMatrixError when det(A) = 0.
    """
    a = _as_int_matrix(rows)
    if determinant(a) == 0:
        raise SingularMatrixError(f"matrix {a} is singular")
    n = len(a)
    d = [list(row) for row in a]
    u = [list(row) for row in identity_matrix(n)]
    v = [list(row) for row in identity_matrix(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(n):
        while True:
            entries = [(abs(d[i][j]), i, j)
                       for i in range(t, n) for j in range(t, n) if d[i][j] != 0]
            if not entries:
                break
            _, pi, pj = min(entries)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            # clear column t below the pivot, then row t right of it
            dirty = False
            for i in range(t + 1, n):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    add_row(i, t, -q)
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    add_col(j, t, -q)
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            if any(d[i][t] != 0 for i in range(t + 1, n)):
                continue
            if any(d[t][j] != 0 for j in range(t + 1, n)):
                continue
            # enforce divisibility d_t | d_ij on the remaining block
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if d[i][j] % d[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    return (tuple(tuple(r) for r in u),
            tuple(tuple(r) for r in d),
            tuple(tuple(r) for r in v))


@dataclass(frozen=True)
class ExpandingCheck:
    """Result of an eigenvalue-modulus test, with its method of proof."""

    expanding: bool
    method: str  # "exact" or "numeric"
    detail: str


@dataclass(frozen=True)
class UnityPoint:
    """Point on the complex torus with coordinates exp(2*pi*i*exponent_k).

    Exponents are rationals in [0, 1); for points derived from a dilation
    matrix every denominator divides m = |det(M)|.
    """

    exponents: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.exponents)

    @property
    def order(self) -> int:
        return math.lcm(*(e.denominator for e in self.exponents))

    @property
    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def to_complex(self) -> tuple[complex, ...]:
        import cmath

        return tuple(cmath.exp(2j * cmath.pi * float(e)) for e in self.exponents)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.exponents) + ")"


@dataclass(frozen=True)
class DilationMatrix:
    """Integer s x s dilation matrix with |det| >= 2 and exact inverse."""

    rows: IntMatrix

    def __post_init__(self):
        object.__setattr__(self, "rows", _as_int_matrix(self.rows))
        if abs(determinant(self.rows)) < 2:
            raise ValueError("dilation matrix must have |det| >= 2")

    @classmethod
    def from_rows(cls, rows) -> "DilationMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def s(self) -> int:
        return len(self.rows)

    @cached_property
    def det(self) -> int:
        return determinant(self.rows)

    @property
    def m(self) -> int:
        return abs(self.det)

    @cached_property
    def inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return rational_inverse(self.rows)

    @cached_property
    def adjugate(self) -> IntMatrix:
        # adj(M) = det(M) * M^{-1}, always integer
        return tuple(tuple(int(x * self.det) for x in row) for row in self.inverse)

    @cached_property
    def transposed(self) -> "DilationMatrix":
        return DilationMatrix(transpose(self.rows))

    def apply(self, vec: IntVector) -> IntVector:
        return mat_vec(self.rows, vec)

    def solve(self, vec) -> tuple[Fraction, ...]:
        """Exact M^{-1} * vec."""
        adj = self.adjugate
        return tuple(Fraction(sum(adj[i][k] * vec[k] for k in range(self.s)), self.det)
                     for i in range(self.s))

    def solve_integer(self, vec) -> IntVector | None:
        """M^{-1} * vec when it is an integer vector, else None."""
        adj = self.adjugate
        out = []
        for i in range(self.s):
            num = sum(adj[i][k] * vec[k] for k in range(self.s))
            q, r = divmod(num, self.det)
            if r != 0:
                return None
            out.append(q)
        return tuple(out)

    def coset_key(self, vec: IntVector) -> IntVector:
        """Hashable invariant of the class of vec in Z^s / M Z^s."""
        adj = self.adjugate
        return tuple(sum(adj[i][k] * vec[k] for k in range(self.s)) % self.m
                     for i in range(self.s))

    def congruent(self, a: IntVector, b: IntVector) -> bool:
        return self.solve_integer(tuple(x - y for x, y in zip(a, b))) is not None

    def canonical_representative(self, vec: IntVector) -> IntVector:
        """Reduce vec to the tile M*[0,1)^s: vec - M*floor(M^{-1}*vec)."""
        shift = self.apply(tuple(math.floor(x) for x in self.solve(vec)))
        return tuple(x - y for x, y in zip(vec, shift))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "]"


@dataclass(frozen=True)
class CosetReps:
    """Full set of coset representatives, zero vector first, rest in lex order."""

    kind: str  # "primal" (Z^s/MZ^s) or "dual" (Z^s/M^T Z^s)
    matrix: DilationMatrix
    reps: tuple[IntVector, ...]


def _snf_representatives(M: DilationMatrix) -> list[IntVector]:
    u, d, _ = smith_normal_form(M.rows)
    u_inv = integer_inverse(u)
    diag = [d[i][i] for i in range(M.s)]
    reps = []
    for digits in itertools.product(*(range(di) for di in diag)):
        reps.append(M.canonical_representative(mat_vec(u_inv, digits)))
    return reps


def primal_cosets(M: DilationMatrix) -> CosetReps:
    """Representatives of Z^s / M Z^s, canonicalized into the tile M*[0,1)^s."""
    reps = _snf_representatives(M)
    zero = tuple(0 for _ in range(M.s))
    rest = sorted(r for r in reps if r != zero)
    assert len(rest) + 1 == M.m, "coset enumeration lost a class"
    return CosetReps("primal", M, (zero, *rest))


def dual_coset_points(M: DilationMatrix) -> tuple[CosetReps, tuple[UnityPoint, ...]]:
    """Representatives of Z^s / M^T Z^s with their torus points.

    Each representative xi maps to the point with exponents M^{-T} xi taken
    modulo 1, i.e. coordinates exp(+2*pi*i*(M^{-T} xi)_k).  The zero class
    comes first, so points[0] is the point 1 = (1, ..., 1).
    """
    mt = M.transposed
    reps = primal_cosets(mt)
    points = []
    for xi in reps.reps:
        exps = tuple(x % 1 for x in mt.solve(xi))
        points.append(UnityPoint(exps))
    return CosetReps("dual", mt, reps.reps), tuple(points)


def closed_tile_congruences(M: DilationMatrix) -> tuple[tuple[IntVector, IntVector], ...]:
    """Lattice points of the closed tile M*[0,1]^s that are not canonical.

    Returns (point, canonical representative) pairs in lex order.  The closed
    tile double-counts classes on its boundary; these pairs document which
    printed points collapse onto which canonical representative.
    """
    s = M.s
    corners = [M.apply(c) for c in itertools.product((0, 1), repeat=s)]
    lo = [min(c[i] for c in corners) for i in range(s)]
    hi = [max(c[i] for c in corners) for i in range(s)]
    pairs = []
    for p in itertools.product(*(range(lo[i], hi[i] + 1) for i in range(s))):
        x = M.solve(p)
        if all(0 <= xi <= 1 for xi in x):
            canon = M.canonical_representative(p)
            if canon != p:
                pairs.append((p, canon))
    return tuple(sorted(pairs))


def is_expanding(matrix) -> ExpandingCheck:
    """Decide whether all eigenvalues of an integer matrix have modulus > 1.

    Exact for s <= 2 (determinant test in s = 1, Schur-Cohn inequalities on
    the reciprocal characteristic polynomial in s = 2).  For s >= 3 the test
    is numeric (eigenvalue moduli with tolerance 1e-9) and flagged as such.
    """
    rows = matrix.rows if isinstance(matrix, DilationMatrix) else _as_int_matrix(matrix)
    s = len(rows)
    det = determinant(rows)
    if det == 0:
        return ExpandingCheck(False, "exact", "singular matrix has eigenvalue 0")
    if s == 1:
        ok = abs(rows[0][0]) > 1
        return ExpandingCheck(ok, "exact", f"|entry| = {abs(rows[0][0])}")
    if s == 2:
        tr = rows[0][0] + rows[1][1]
        # reciprocal polynomial mu^2 - (tr/det) mu + 1/det must be Schur stable
        a0 = Fraction(1, det)
        a1 = Fraction(-tr, det)
        ok = abs(a0) < 1 and abs(a1) < 1 + a0
        return ExpandingCheck(ok, "exact", f"trace={tr}, det={det}")
    import numpy as np

    eigs = np.linalg.eigvals(np.array(rows, dtype=float))
    min_mod = min(abs(complex(l)) for l in eigs)
    return ExpandingCheck(min_mod > 1 + 1e-9, "numeric",
                          f"min eigenvalue modulus ~ {min_mod:.12g}")
