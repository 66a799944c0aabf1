"""Exact linear algebra over the rationals.

Vectors are lists of :class:`fractions.Fraction` (plain ints are accepted on
input).  Matrices are lists of rows.  Nothing here ever rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Vector = list
Matrix = list


def to_fractions(vec: Iterable) -> list[Fraction]:
    return [x if type(x) is Fraction else Fraction(x) for x in vec]


def zero_vector(n: int) -> list[Fraction]:
    return [Fraction(0)] * n


def is_zero(vec: Sequence) -> bool:
    return all(x == 0 for x in vec)


def add(u: Sequence, v: Sequence) -> list[Fraction]:
    return [a + b for a, b in zip(u, v)]


def scale(c, v: Sequence) -> list[Fraction]:
    return [c * a for a in v]


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def matvec(m: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [dot(row, v) for row in m]


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [to_fractions(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        prow = [x * inv for x in m[r]]
        m[r] = prow
        nz = [j for j in range(c, ncols) if prow[j] != 0]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row = m[i]
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : M x = 0}, one vector per free column, in column order."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = zero_vector(ncols)
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(v)
    return basis


class Span:
    """Incrementally maintained subspace with exact membership and coordinates.

    Rows are kept fully reduced, so reducing a vector against them is a
    single pass over the pivots.
    """

    def __init__(self, n: int, vectors: Iterable[Sequence] = ()):
        self.n = n
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []
        self.basis: list[list[Fraction]] = []
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Sequence) -> list[Fraction]:
        w = to_fractions(vec)
        for row, pc in zip(self._rows, self._pivots):
            f = w[pc]
            if f:
                for j, x in enumerate(row):
                    if x:
                        w[j] -= f * x
        return w

    def contains(self, vec: Sequence) -> bool:
        return is_zero(self.reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Add ``vec``; return True iff it enlarged the span."""
        w = self.reduce(vec)
        pc = next((j for j, x in enumerate(w) if x), None)
        if pc is None:
            return False
        inv = 1 / w[pc]
        w = [x * inv for x in w]
        for row in self._rows:
            f = row[pc]
            if f:
                for j, x in enumerate(w):
                    if x:
                        row[j] -= f * x
        self._rows.append(w)
        self._pivots.append(pc)
        self.basis.append(to_fractions(vec))
        return True

    def echelon(self) -> list[list[Fraction]]:
        order = sorted(range(len(self._rows)), key=lambda i: self._pivots[i])
        return [list(self._rows[i]) for i in order]


def solve_in_basis(basis: Sequence[Sequence], vec: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i = vec, or None if vec is outside the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if is_zero(vec) else None
    n = len(vec)
    # augmented system: columns are basis vectors, last column is vec
    rows = [[basis[j][i] for j in range(k)] + [vec[i]] for i in range(n)]
    red, pivots = rref(rows)
    if k in pivots:
        return None
    sol = zero_vector(k)
    for row, pc in zip(red, pivots):
        sol[pc] = row[k]
    return sol


def intersect(a: Sequence[Sequence], b: Sequence[Sequence], n: int) -> list[list[Fraction]]:
    """Basis of span(a) ∩ span(b) in the ambient coordinates (length n)."""
    if not a or not b:
        return []
    # x in both iff x = sum s_i a_i = sum t_j b_j
    cols = [list(v) for v in a] + [[-x for x in v] for v in b]
    system = transpose(cols)
    ker = nullspace(system, len(cols))
    out = Span(n)
    for k in ker:
        vec = zero_vector(n)
        for coef, v in zip(k[: len(a)], a):
            if coef:
                vec = [x + coef * y for x, y in zip(vec, v)]
        out.add(vec)
    return out.echelon()


def symmetric_signature(gram: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a symmetric rational matrix.

    Symmetric Gaussian elimination (congruence), with the usual 2x2 trick
    when the remaining diagonal is zero.
    """
    m = [to_fractions(r) for r in gram]
    n = len(m)
    for i in range(n):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if m[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # replace e_i by e_i + e_j: new diagonal 2*m_ij != 0
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            piv = i
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in active if k != piv]
        col = {k: m[k][piv] for k in rest if m[k][piv] != 0}
        for k, f in col.items():
            r = f / d
            for l in rest:
                if m[piv][l]:
                    m[k][l] -= r * m[piv][l]
        active = rest
    return pos, neg, n - pos - neg


def clear_denominators(vec: Sequence) -> list[int]:
    """Smallest positive integer multiple of vec with integer entries."""
    fr = to_fractions(vec)
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return [int(x * den) for x in fr]


def power_is_zero(int_matrix: Sequence[Sequence[int]], exponent: int) -> bool:
    """Exact test of M**exponent == 0 for an integer matrix (repeated squaring)."""
    m = np.array([[int(x) for x in row] for row in int_matrix], dtype=object)
    n = m.shape[0]
    result = None
    base = m
    e = exponent
    while e:
        if e & 1:
            result = base if result is None else result.dot(base)
            if not result.any():
                return True
        e >>= 1
        if e:
            base = base.dot(base)
            if not base.any():
                return True
    if result is None:
        return n == 0
    return not result.any()


# -- characteristic polynomial modulo primes (independent nilpotency oracle) --

_PRIMES_27: list[int] = []


def _primes_below_2_27(count: int) -> list[int]:
    while len(_PRIMES_27) < count:
        start = _PRIMES_27[-1] - 2 if _PRIMES_27 else (1 << 27) - 1
        c = start
        while True:
            if c % 2 and all(c % d for d in range(3, math.isqrt(c) + 1, 2)):
                _PRIMES_27.append(c)
                break
            c -= 2
    return _PRIMES_27[:count]


def charpoly_mod(int_matrix: Sequence[Sequence[int]], p: int) -> list[int]:
    """Coefficients (constant term first, monic) of det(x - M) mod p.

    Hessenberg reduction followed by the standard recurrence, vectorised
    with int64 numpy arrays; p must be below 2**27.
    """
    h = np.array([[int(x) % p for x in row] for row in int_matrix], dtype=np.int64)
    n = h.shape[0]
    for m in range(1, n - 1):
        col = h[m:, m - 1]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            h[[i, m], :] = h[[m, i], :]
            h[:, [i, m]] = h[:, [m, i]]
        inv = pow(int(h[m, m - 1]), p - 2, p)
        for i in range(m + 1, n):
            if h[i, m - 1]:
                u = int(h[i, m - 1]) * inv % p
                h[i, :] = (h[i, :] - u * h[m, :]) % p
                h[:, m] = (h[:, m] + u * h[:, i]) % p
    # p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_{i-1}
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        kk = k - 1
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = polys[k - 1, :-1]
        cur = (cur - int(h[kk, kk]) * polys[k - 1]) % p
        prod = 1
        for i in range(kk - 1, -1, -1):
            prod = prod * int(h[i + 1, i]) % p
            if prod == 0:
                break
            coef = int(h[i, kk]) * prod % p
            if coef:
                cur = (cur - coef * polys[i]) % p
        polys[k] = cur
    return [int(x) for x in polys[n]]


def charpoly_is_monomial(int_matrix: Sequence[Sequence[int]]) -> bool:
    """True iff det(x - M) == x**n exactly, decided by a multimodular argument.

    The coefficient of x**(n-k) is a signed sum of C(n, k) principal minors,
    each at most the product of its row norms (Hadamard), so every
    coefficient is bounded by 2**n * prod(max(1, |row|)).  Vanishing modulo
    primes whose product exceeds twice that bound certifies vanishing over
    the integers.
    """
    n = len(int_matrix)
    if n == 0:
        return True
    bound = 2 ** n
    for row in int_matrix:
        bound *= max(1, math.isqrt(sum(int(x) ** 2 for x in row)) + 1)
    needed = 2 * bound
    modulus = 1
    count = 0
    while modulus <= needed:
        count += 1
        p = _primes_below_2_27(count)[-1]
        coeffs = charpoly_mod(int_matrix, p)
        if any(coeffs[:-1]):
            return False
        modulus *= p
    return True


def nilpotent_by_image_chain(m: Sequence[Sequence]) -> bool:
    """Exact nilpotency test: follow im(M) ⊇ im(M^2) ⊇ ... until it is 0 or stops shrinking.

    Each image is kept in reduced echelon form, so entries stay small even
    when the powers of M themselves would not.
    """
    n = len(m)
    cols = [[Fraction(m[i][j]) for i in range(n)] for j in range(n)]
    image, _ = rref(cols) if n else ([], [])
    while image:
        nxt, _ = rref([matvec(m, v) for v in image])
        if len(nxt) == len(image):
            return False
        image = nxt
    return True
