"""
Smith normal form over the integers and elimination over Z/p.

Matrices are numpy arrays of dtype=object so that entries stay arbitrary-precision Python ints.
"""
import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors as _sympy_invariant_factors

from doodlinv.errors import InternalInconsistency


def as_int_matrix(M, shape: tuple = None) -> np.ndarray:
    """
    Copies M into an object-dtype integer matrix. Empty inputs need an explicit shape.
    """
    if shape is not None and (M is None or np.size(M) == 0):
        return np.zeros(shape, dtype=object)
    A = np.array(M, dtype=object)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else np.zeros((0, 0), dtype=object)
    return np.vectorize(int, otypes=[object])(A) if A.size else A.copy()


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


class SNF:
    """
    Smith normal form U·M·V = D of an integer matrix.

    Elimination runs on Python lists; the results are exposed as object-dtype numpy arrays.

    Attributes
    ----------
    A: the input matrix (m×n, object dtype)
    D: diagonal matrix with d_1 | d_2 | ... and non-negative entries
    U: unimodular m×m row transform (None when transforms=False)
    V: unimodular n×n column transform (None when transforms=False)

    Methods
    -------
    invariant_factors: non-zero diagonal entries of D
    rank: number of non-zero invariant factors
    kernel_basis: saturated basis of the integer kernel (columns)
    """
    def __init__(self, M, shape: tuple = None, transforms: bool = True):
        self.A = as_int_matrix(M, shape)
        m, n = self.A.shape
        self.m, self.n = m, n
        self.transforms = transforms
        D = [list(row) for row in self.A]
        U = [[int(i == j) for j in range(m)] for i in range(m)] if transforms else None
        V = [[int(i == j) for j in range(n)] for i in range(n)] if transforms else None
        t = 0
        while t < min(m, n):
            best = None
            for i in range(t, m):
                row = D[i]
                for j in range(t, n):
                    if row[j] and (best is None or abs(row[j]) < best[0]):
                        best = (abs(row[j]), i, j)
            if best is None:
                break
            _, i, j = best
            self._swap_rows(D, U, t, i)
            self._swap_cols(D, V, t, j)
            while True:
                self._clear_pivot(D, U, V, t)
                pivot = D[t][t]
                bad = next((i for i in range(t + 1, m) if any(D[i][j] % pivot for j in range(t + 1, n))), None)
                if bad is None:
                    break
                D[t] = [a + b for a, b in zip(D[t], D[bad])]
                if U is not None:
                    U[t] = [a + b for a, b in zip(U[t], U[bad])]
            if D[t][t] < 0:
                D[t] = [-a for a in D[t]]
                if U is not None:
                    U[t] = [-a for a in U[t]]
            t += 1
        self.D = as_int_matrix(D, (m, n))
        self.U = as_int_matrix(U, (m, m)) if transforms else None
        self.V = as_int_matrix(V, (n, n)) if transforms else None

    @staticmethod
    def _swap_rows(D, U, a, b):
        if a != b:
            D[a], D[b] = D[b], D[a]
            if U is not None:
                U[a], U[b] = U[b], U[a]

    @staticmethod
    def _swap_cols(D, V, a, b):
        if a != b:
            for row in D:
                row[a], row[b] = row[b], row[a]
            if V is not None:
                for row in V:
                    row[a], row[b] = row[b], row[a]

    def _clear_pivot(self, D, U, V, t):
        m, n = len(D), len(D[0])
        while True:
            candidates = [(abs(D[i][t]), 0, i) for i in range(t, m) if D[i][t]]
            candidates += [(abs(D[t][j]), 1, j) for j in range(t + 1, n) if D[t][j]]
            _, axis, k = min(candidates)
            if axis == 0:
                self._swap_rows(D, U, t, k)
            else:
                self._swap_cols(D, V, t, k)
            pivot = D[t][t]
            changed = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // pivot
                    D[i] = [a - q*b for a, b in zip(D[i], D[t])]
                    if U is not None:
                        U[i] = [a - q*b for a, b in zip(U[i], U[t])]
                    changed = changed or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // pivot
                    for row in D:
                        row[j] -= q*row[t]
                    if V is not None:
                        for row in V:
                            row[j] -= q*row[t]
                    changed = changed or D[t][j] != 0
            if not changed:
                return

    @property
    def invariant_factors(self) -> list:
        return [int(self.D[i, i]) for i in range(min(self.m, self.n)) if self.D[i, i] != 0]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def kernel_basis(self) -> np.ndarray:
        """Columns of V past the rank; they span the kernel and the lattice they span is saturated."""
        return self.V[:, self.rank:].copy()

    def verify(self) -> bool:
        """
        Checks U·A·V = D, the diagonal shape, the divisibility chain, and unimodularity of U and V.
        """
        if self.m and self.n and not np.array_equal(self.U.dot(self.A).dot(self.V), self.D):
            return False
        for i in range(self.m):
            for j in range(self.n):
                if i != j and self.D[i, j] != 0:
                    return False
        factors = self.invariant_factors
        if any(b % a != 0 for a, b in zip(factors, factors[1:])):
            return False
        return all(abs(integer_determinant(T)) == 1 for T in (self.U, self.V))


def smith_normal_form(M, shape: tuple = None) -> tuple:
    """
    Returns (D, U, V) with U·M·V = D.
    """
    snf = SNF(M, shape)
    return snf.D, snf.U, snf.V


def integer_determinant(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = as_int_matrix(M)
    n = A.shape[0]
    if n == 0:
        return 1
    sign, previous = 1, 1
    for k in range(n - 1):
        if A[k, k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i, k] != 0), None)
            if swap is None:
                return 0
            A[[k, swap]] = A[[swap, k]]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i, j] = (A[i, j]*A[k, k] - A[i, k]*A[k, j]) // previous
        previous = A[k, k]
    return sign*int(A[n - 1, n - 1])


def reference_invariant_factors(M) -> list:
    """
    Invariant factors computed by sympy, used to cross-check SNF.
    """
    A = as_int_matrix(M)
    if A.size == 0:
        return []
    factors = _sympy_invariant_factors(Matrix(A.tolist()))
    return [abs(int(f)) for f in factors if f != 0]


def check_against_reference(M) -> list:
    factors = SNF(M).invariant_factors
    reference = reference_invariant_factors(M)
    if factors != reference:
        raise InternalInconsistency(f'Smith form factors {factors} disagree with sympy {reference}')
    return factors


def solve_integer(K: np.ndarray, v) -> np.ndarray:
    """
    Integer coordinates c with K·c = v, for v in the lattice spanned by the columns of K.
    """
    K = as_int_matrix(K)
    v = np.array(v, dtype=object).reshape(-1)
    snf = SNF(K)
    w = snf.U.dot(v)
    r = snf.rank
    if any(w[i] != 0 for i in range(r, len(w))):
        raise InternalInconsistency('vector is outside the span of the lattice basis')
    y = np.zeros(K.shape[1], dtype=object)
    for i in range(r):
        if w[i] % snf.D[i, i] != 0:
            raise InternalInconsistency('vector is in the rational span but not in the lattice')
        y[i] = w[i] // snf.D[i, i]
    return snf.V.dot(y)


def rank_mod_p(M, p: int, shape: tuple = None) -> int:
    return len(_row_reduce_mod_p(M, p, shape)[1])


def _row_reduce_mod_p(M, p: int, shape: tuple = None) -> tuple:
    A = as_int_matrix(M, shape)
    A = np.array([[int(x) % p for x in row] for row in A], dtype=np.int64).reshape(A.shape)
    m, n = A.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nz = np.nonzero(A[row:, col])[0]
        if nz.size == 0:
            continue
        i = row + nz[0]
        A[[row, i]] = A[[i, row]]
        A[row] = (A[row]*pow(int(A[row, col]), -1, p)) % p
        for r in range(m):
            if r != row and A[r, col]:
                A[r] = (A[r] - A[r, col]*A[row]) % p
        pivots.append(col)
        row += 1
    return A, pivots


def nullspace_mod_p(M, p: int, shape: tuple = None) -> np.ndarray:
    """
    Basis of the kernel over Z/p as columns of an int64 matrix.
    """
    A, pivots = _row_reduce_mod_p(M, p, shape)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for r, c in enumerate(pivots):
            basis[c, k] = (-A[r, f]) % p
    return basis


def solve_mod_p(K, v, p: int) -> np.ndarray:
    """
    Coordinates c with K·c = v over Z/p for K with independent columns.
    """
    K = np.array(K, dtype=np.int64) % p
    v = np.array(v, dtype=np.int64).reshape(-1) % p
    augmented = np.concatenate([K, v.reshape(-1, 1)], axis=1)
    A, pivots = _row_reduce_mod_p(augmented, p)
    r = K.shape[1]
    if r in pivots or len(pivots) < r:
        raise InternalInconsistency('vector is outside the span of the basis over Z/%d' % p)
    return np.array([A[i, r] for i in range(r)], dtype=np.int64)
