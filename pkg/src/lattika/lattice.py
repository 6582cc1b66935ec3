"""Small-dimension exact lattice toolbox.

Basis vectors are the rows of the matrix; an integer coefficient vector z
maps to the lattice vector B^T z.  Everything runs on exact Fractions so
determinant and duality identities hold bit for bit.  The SVP/CVP solvers
are box-bounded brute-force enumerations meant as test ground truth; the
result is certified only if the true optimum lies inside the search box.
"""

import itertools
import math
from fractions import Fraction

from .arith import Modulus
from .errors import DimMismatch, Singular

MAX_DIM = 8


class LatticeBasis:
    """Square full-rank basis, rows are the basis vectors, entries exact."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        rows = [tuple(Fraction(x) for x in row) for row in rows]
        n = len(rows)
        if n == 0 or n > MAX_DIM:
            raise ValueError("dimension must be in 1..%d" % MAX_DIM)
        if any(len(r) != n for r in rows):
            raise ValueError("basis matrix must be square")
        self.dim = n
        self.rows = tuple(rows)
        if _det(self.rows) == 0:
            raise Singular("basis rows are linearly dependent")

    def __eq__(self, other):
        return isinstance(other, LatticeBasis) and self.rows == other.rows

    def __repr__(self):
        return "LatticeBasis(%r)" % (self.rows,)


def _det(rows):
    """Determinant by fraction Gaussian elimination."""
    n = len(rows)
    m = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def _inverse(rows):
    """Matrix inverse by Gauss-Jordan elimination over Fractions."""
    n = len(rows)
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise Singular("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def _transpose(rows):
    return tuple(zip(*rows))


def _matvec(rows, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in rows)


def _frac_round_half_away(x):
    num, den = x.numerator, x.denominator
    if num >= 0:
        return (2 * num + den) // (2 * den)
    return -((2 * -num + den) // (2 * den))


def determinant(basis):
    """|det B|, the volume of the fundamental parallelepiped."""
    return abs(_det(basis.rows))


def is_unimodular(rows):
    """True iff the integer square matrix has determinant +-1."""
    mat = [tuple(row) for row in rows]
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise ValueError("matrix must be square")
    if any(not isinstance(x, int) for r in mat for x in r):
        raise ValueError("matrix entries must be integers")
    return abs(_det(mat)) == 1


def dual_basis(basis):
    """The dual basis D = (B^T)^{-1}, satisfying B^T D = I."""
    return LatticeBasis(_inverse(_transpose(basis.rows)))


def mod_basis(w, basis):
    """Reduce w into the half-open fundamental parallelepiped of the basis."""
    if len(w) != basis.dim:
        raise DimMismatch("vector length %d vs dimension %d" % (len(w), basis.dim))
    w = tuple(Fraction(x) for x in w)
    bt = _transpose(basis.rows)
    alpha = _matvec(_inverse(bt), w)
    shift = _matvec(bt, tuple(Fraction(math.floor(a)) for a in alpha))
    return tuple(a - b for a, b in zip(w, shift))


def lattice_vector(basis, z):
    """B^T z: the lattice vector with integer coefficients z."""
    return _matvec(_transpose(basis.rows), tuple(Fraction(c) for c in z))


def _norm_sq(v):
    return sum(x * x for x in v)


def brute_svp(basis, box):
    """Shortest nonzero B^T z over z in [-box, box]^n, with its squared length.

    Heuristic: the answer is the true lambda_1 only if a shortest vector has
    all coefficients within the box.
    """
    if basis.dim > 6:
        raise ValueError("brute_svp is capped at dimension 6")
    if not 1 <= box <= 8:
        raise ValueError("box must be in 1..8")
    best_v, best_len = None, None
    for z in itertools.product(range(-box, box + 1), repeat=basis.dim):
        if all(c == 0 for c in z):
            continue
        first_nonzero = next(c for c in z if c != 0)
        if first_nonzero < 0:
            continue  # -z gives the same length
        v = lattice_vector(basis, z)
        l2 = _norm_sq(v)
        if best_len is None or l2 < best_len:
            best_v, best_len = v, l2
    return best_v, best_len


def brute_cvp(basis, target, box):
    """Closest lattice vector to target within a box around the Babai estimate."""
    if basis.dim > 6:
        raise ValueError("brute_cvp is capped at dimension 6")
    if not 1 <= box <= 8:
        raise ValueError("box must be in 1..8")
    if len(target) != basis.dim:
        raise DimMismatch("target length %d vs dimension %d" % (len(target), basis.dim))
    t = tuple(Fraction(x) for x in target)
    bt = _transpose(basis.rows)
    alpha = _matvec(_inverse(bt), t)
    center = [_frac_round_half_away(a) for a in alpha]
    best_v, best_d = None, None
    for dz in itertools.product(range(-box, box + 1), repeat=basis.dim):
        z = tuple(c + d for c, d in zip(center, dz))
        v = _matvec(bt, tuple(Fraction(c) for c in z))
        d2 = _norm_sq(tuple(a - b for a, b in zip(v, t)))
        if best_d is None or d2 < best_d:
            best_v, best_d = v, d2
    return best_v, best_d


def babai_round(basis, target):
    """Round-off decoding: B^T round((B^T)^{-1} t)."""
    if len(target) != basis.dim:
        raise DimMismatch("target length %d vs dimension %d" % (len(target), basis.dim))
    t = tuple(Fraction(x) for x in target)
    bt = _transpose(basis.rows)
    alpha = _matvec(_inverse(bt), t)
    z = tuple(Fraction(_frac_round_half_away(a)) for a in alpha)
    return _matvec(bt, z)


def sis_hash(matrix, x, q):
    """f_A(x) = A x mod q on short input vectors, componentwise symmetric."""
    m = q if isinstance(q, Modulus) else Modulus(q)
    rows = [tuple(r) for r in matrix]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise DimMismatch("matrix rows have inconsistent lengths")
    if len(x) != len(rows[0]):
        raise DimMismatch("input length %d vs matrix width %d" % (len(x), len(rows[0])))
    return [m.reduce(sum(a * b for a, b in zip(row, x))) for row in rows]
