"""Fixed-point subalgebras, their reductive decomposition and type identification.

A :class:`Subalgebra` keeps its basis in reduced echelon form, so the
coordinates of a member vector are just its entries at the pivot columns.

Decomposition needs a Cartan subalgebra of the fixed algebra.  When the
fixed part of the standard Cartan is already self-centralizing it is used
directly and everything stays rational.  Otherwise a torus is grown from
rational semisimple elements whose eigenvalues lie in Q(i) (typically
Cayley-type vectors e_a + c e_{-a}); weight spaces are then computed over
the Gaussian rationals with sympy, while every returned basis is rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from sympy import QQ, QQ_I, Poly, symbols
from sympy.polys.matrices import DomainMatrix

from .autgrp import AutoMap
from .chevalley import ChevalleyAlgebra, _complex_bracket
from .linalg import Span, nullspace, rank, rref, to_fractions


class DecompositionError(RuntimeError):
    pass


class IdentificationError(RuntimeError):
    pass


def _sparse(vec: Sequence) -> dict:
    return {i: x for i, x in enumerate(vec) if x}


@dataclass(frozen=True, eq=False)
class Subalgebra:
    ambient: ChevalleyAlgebra
    basis: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[int, ...] = field(repr=False)

    @classmethod
    def spanned(cls, alg: ChevalleyAlgebra, vectors) -> "Subalgebra":
        vecs = [to_fractions(v) for v in vectors]
        if not vecs:
            return cls(alg, (), ())
        red, piv = rref(vecs)
        return cls(alg, tuple(tuple(r) for r in red), tuple(piv))

    @classmethod
    def whole(cls, alg: ChevalleyAlgebra) -> "Subalgebra":
        n = alg.dim
        return cls(alg, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    @cached_property
    def sparse_basis(self) -> tuple[dict, ...]:
        return tuple(_sparse(b) for b in self.basis)

    def coordinates(self, vec: Sequence) -> list[Fraction]:
        """Coordinates of a member vector; raises if ``vec`` is not in the span."""
        if isinstance(vec, dict):
            dense = [Fraction(0)] * self.ambient.dim
            for i, x in vec.items():
                dense[i] = Fraction(x)
            vec = dense
        coords = [Fraction(vec[p]) for p in self.pivots]
        residue = list(to_fractions(vec))
        for c, b in zip(coords, self.basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        residue[j] -= c * x
        if any(residue):
            raise DecompositionError("vector does not lie in the subalgebra")
        return coords

    def contains(self, vec: Sequence) -> bool:
        try:
            self.coordinates(vec)
        except DecompositionError:
            return False
        return True

    def closure_failure(self) -> tuple[int, int] | None:
        sb = self.sparse_basis
        for i in range(len(sb)):
            for j in range(i + 1, len(sb)):
                br = self.ambient.bracket_sparse(sb[i], sb[j])
                if br and not self.contains(_dense(br, self.ambient.dim)):
                    return (i, j)
        return None

    def certify_closed(self) -> "Subalgebra":
        bad = self.closure_failure()
        if bad is not None:
            raise DecompositionError(f"span is not closed under the bracket (basis pair {bad})")
        return self

    def ad_matrix(self, x: dict) -> list[list[Fraction]]:
        """ad(x) restricted to this subalgebra, in its own coordinates (x must lie in it)."""
        cols = [self.coordinates(_dense(self.ambient.bracket_sparse(x, b), self.ambient.dim)) for b in self.sparse_basis]
        d = self.dim
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def image(self, a: AutoMap) -> "Subalgebra":
        return Subalgebra.spanned(self.ambient, [_dense(a.apply_sparse(b), self.ambient.dim) for b in self.sparse_basis])

    def cartan_part(self) -> "Subalgebra":
        """Intersection with the standard Cartan subalgebra span{h_i}."""
        r = self.ambient.rank
        rows = [[b[j] for b in self.basis] for j in range(r, self.ambient.dim)]
        ker = nullspace(rows, self.dim) if rows else [[Fraction(int(i == j)) for j in range(self.dim)] for i in range(self.dim)]
        vecs = []
        for k in ker:
            v = [Fraction(0)] * self.ambient.dim
            for c, b in zip(k, self.basis):
                if c:
                    for j in range(r):
                        v[j] += c * b[j]
            vecs.append(v)
        return Subalgebra.spanned(self.ambient, vecs)


def _dense(vec: dict, n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, x in vec.items():
        out[i] = Fraction(x)
    return out


# -- fixed points --------------------------------------------------------------


def _signed_permutation(a: AutoMap) -> tuple[tuple[int, ...], tuple[Fraction, ...]]:
    perm, signs = [], []
    for col in a.columns:
        ((i, c),) = [(k, v) for k, v in col.items() if v]
        perm.append(i)
        signs.append(Fraction(c))
    return tuple(perm), tuple(signs)


def _monomial_group(maps: Sequence[AutoMap], cap: int = 4096):
    n = maps[0].algebra.dim
    ident = (tuple(range(n)), tuple(Fraction(1) for _ in range(n)))
    gens = [_signed_permutation(m) for m in maps]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p, s in frontier:
            for gp, gs in gens:
                # g after (p, s): basis j -> s_j e_{p_j} -> s_j gs_{p_j} e_{gp_{p_j}}
                comp = (tuple(gp[p[j]] for j in range(n)), tuple(s[j] * gs[p[j]] for j in range(n)))
                if comp not in seen:
                    seen.add(comp)
                    nxt.append(comp)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return list(seen)


def _orbit_sums(maps: Sequence[AutoMap]) -> list[dict] | None:
    group = _monomial_group(maps)
    if group is None:
        return None
    n = maps[0].algebra.dim
    done = [False] * n
    out = []
    for j in range(n):
        if done[j]:
            continue
        vec: dict = {}
        for p, s in group:
            done[p[j]] = True
            vec[p[j]] = vec.get(p[j], 0) + s[j]
        vec = {k: v for k, v in vec.items() if v}
        if vec:
            lead = vec[min(vec)]
            out.append({k: v / lead for k, v in sorted(vec.items())})
    return out


def fixed_subalgebra(alg: ChevalleyAlgebra, maps: Sequence[AutoMap], *, certify: bool = True) -> Subalgebra:
    """Joint +1 eigenspace of ``maps``.

    Signed-permutation maps use orbit sums over the generated group; any
    other map falls back to an exact kernel computation.
    """
    maps = list(maps)
    for m in maps:
        if m.algebra is not alg:
            raise DecompositionError("automorphism acts on a different algebra")
    if not maps:
        return Subalgebra.whole(alg)
    sums = _orbit_sums(maps) if all(m.is_monomial() for m in maps) else None
    if sums is not None:
        # orbit sums have disjoint supports, so sorting by leading index gives echelon form
        sums.sort(key=min)
        basis = tuple(tuple(_dense(v, alg.dim)) for v in sums)
        sub = Subalgebra(alg, basis, tuple(min(v) for v in sums))
    else:
        rows = []
        for m in maps:
            mat = m.matrix
            for i in range(alg.dim):
                row = list(mat[i])
                row[i] -= 1
                if any(row):
                    rows.append(row)
        sub = Subalgebra.spanned(alg, nullspace(rows, alg.dim) if rows else Subalgebra.whole(alg).basis)
    return sub.certify_closed() if certify else sub


def fixed_dimension(alg: ChevalleyAlgebra, maps: Sequence[AutoMap]) -> int:
    return fixed_subalgebra(alg, maps, certify=False).dim


# -- Gaussian-rational helpers ----------------------------------------------------


def _q(x) -> object:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _gauss_parts(z) -> tuple[Fraction, Fraction]:
    return _frac(z.x), _frac(z.y)


def _qq_matrix(rows: Sequence[Sequence[Fraction]]) -> DomainMatrix:
    n = len(rows)
    m = len(rows[0]) if rows else 0
    return DomainMatrix([[_q(x) for x in r] for r in rows], (n, m), QQ)


_X = symbols("x")


def _charpoly(mat: DomainMatrix) -> Poly:
    coeffs = mat.charpoly()
    return Poly([QQ.to_sympy(c) for c in coeffs], _X)


def _gaussian_eigenvalues(mat: DomainMatrix) -> list | None:
    """Distinct eigenvalues in Q(i) if ad is semisimple and split over Q(i), else None."""
    p = _charpoly(mat)
    sqf = p.quo(p.gcd(p.diff(_X)))
    # semisimple iff the squarefree part annihilates
    acc = None
    n = mat.shape[0]
    ident = DomainMatrix.eye(n, QQ)
    for c in sqf.all_coeffs():
        term = ident * QQ.from_sympy(c)
        acc = term if acc is None else acc * mat + term
    if acc is not None and not acc.is_zero_matrix:
        return None
    # an irreducible rational factor splits over Q(i) only if its degree is at most 2
    out = []
    for f, _mult in sqf.factor_list()[1]:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in f.all_coeffs()]
        if len(coeffs) == 2:
            a, b = coeffs
            out.append(QQ_I(_q(-b / a), QQ(0)))
        elif len(coeffs) == 3:
            a, b, c = coeffs
            d = _rational_sqrt((4 * a * c - b * b) / (4 * a * a))
            if d is None:
                return None
            re = -b / (2 * a)
            out.extend([QQ_I(_q(re), _q(d)), QQ_I(_q(re), _q(-d))])
        else:
            return None
    return out


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n != x.numerator or d * d != x.denominator:
        return None
    return Fraction(n, d)


# -- decomposition ----------------------------------------------------------------


@dataclass(frozen=True)
class SimpleIdeal:
    subalgebra: Subalgebra
    type_label: tuple[str, int]
    rank: int

    @property
    def dim(self) -> int:
        return self.subalgebra.dim

    @property
    def name(self) -> str:
        return f"{self.type_label[0]}{self.type_label[1]}"


@dataclass(frozen=True)
class ReductiveDecomposition:
    center: Subalgebra
    ideals: tuple[SimpleIdeal, ...]
    torus: Subalgebra
    split_over_rationals: bool

    @property
    def dim(self) -> int:
        return self.center.dim + sum(i.dim for i in self.ideals)

    @property
    def rank(self) -> int:
        return self.torus.dim

    def type_labels(self) -> list[tuple[str, int]]:
        return [i.type_label for i in self.ideals]

    def summary(self) -> str:
        parts = [i.name for i in self.ideals]
        if self.center.dim:
            parts.append(f"T{self.center.dim}")
        return "+".join(parts) if parts else "0"


def _kernel_of_ad(sub: Subalgebra, elements: Sequence[dict]) -> list[list[Fraction]]:
    """Ambient vectors x in ``sub`` with [e, x] = 0 for every e in ``elements``."""
    rows: list[list[Fraction]] = []
    for e in elements:
        rows.extend(sub.ad_matrix(e))
    ker = nullspace(rows, sub.dim) if rows else [[Fraction(int(i == j)) for j in range(sub.dim)] for i in range(sub.dim)]
    return [_combine(sub, k) for k in ker]


def _combine(sub: Subalgebra, coeffs: Sequence[Fraction]) -> list[Fraction]:
    v = [Fraction(0)] * sub.ambient.dim
    for c, b in zip(coeffs, sub.basis):
        if c:
            for j, x in enumerate(b):
                if x:
                    v[j] += c * x
    return v


def _standard_torus_data(sub: Subalgebra, torus: Subalgebra):
    """Weights and root vectors when the torus lies in the standard Cartan.

    Returns None if the torus is not self-centralizing in ``sub``.
    """
    alg = sub.ambient
    rs = alg.root_system
    r = alg.rank
    tb = [b[:r] for b in torus.basis]
    weight_of = {}
    for root in rs.roots:
        weight_of[alg.root_idx(root)] = tuple(Fraction(rs.pairing(root, t)) for t in tb)
    blocks: dict[tuple, list[int]] = {}
    for idx, w in weight_of.items():
        blocks.setdefault(w, []).append(idx)
    zero = tuple(Fraction(0) for _ in tb)
    block_of = {i: zero for i in range(r)}
    block_of.update({idx: w for idx, w in weight_of.items()})
    pieces: dict[tuple, list[list]] = {}
    for b in sub.basis:
        touched: dict[tuple, list] = {}
        for j, x in enumerate(b):
            if x:
                touched.setdefault(block_of[j], [0] * alg.dim)[j] = x
        for w, v in touched.items():
            pieces.setdefault(w, []).append(v)
    central = Span(alg.dim, pieces.get(zero, []))
    if central.dim != torus.dim:
        return None
    weights = []
    for w in sorted(pieces):
        if w == zero:
            continue
        proj = Span(alg.dim, pieces[w])
        if proj.dim != 1:
            raise DecompositionError(f"weight space of dimension {proj.dim} for weight {w}")
        vec = proj.basis[0]
        weights.append(([(x, Fraction(0)) for x in w], (_sparse(vec), {})))
    return weights


def _grow_torus(sub: Subalgebra, torus_vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    """Extend a toral set to a Cartan subalgebra of ``sub`` using Q(i)-split elements."""
    tvecs = list(torus_vectors)
    while True:
        cent = _kernel_of_ad(sub, [_sparse(t) for t in tvecs])
        tspan = Span(sub.ambient.dim, tvecs)
        if len(cent) == tspan.dim:
            return tvecs
        candidates = [c for c in cent if not tspan.contains(c)]
        pairs = [
            [x + y for x, y in zip(candidates[i], candidates[j])]
            for i in range(len(candidates))
            for j in range(i + 1, len(candidates))
        ]
        csub = Subalgebra.spanned(sub.ambient, cent)
        for y in candidates + pairs:
            if tspan.contains(y):
                continue
            if _gaussian_eigenvalues(_qq_matrix(csub.ad_matrix(_sparse(y)))) is not None:
                tvecs.append(y)
                break
        else:
            raise DecompositionError(
                f"could not extend a torus of dimension {tspan.dim} inside a centralizer of dimension {len(cent)}"
            )


def _gaussian_torus_data(sub: Subalgebra, tvecs: list[list[Fraction]]):
    """Weights (over Q(i)) and root vectors (as real/imaginary rational pairs)."""
    alg = sub.ambient
    k = len(tvecs)
    n = sub.dim
    ads = [_qq_matrix(sub.ad_matrix(_sparse(t))) for t in tvecs]
    for attempt in range(1, 20):
        z = ads[0] * QQ(1)
        for j, a in enumerate(ads[1:], start=1):
            z = z + a * QQ(attempt ** j + j)
        eig = _gaussian_eigenvalues(z)
        if eig is None:
            raise DecompositionError("torus element is not split over Q(i)")
        zg = z.convert_to(QQ_I)
        spaces = []
        for mu in eig:
            ker = (zg - DomainMatrix.eye(n, QQ_I) * mu).nullspace().to_list()
            expected = k if mu == QQ_I.zero else 1
            if len(ker) != expected:
                break
            if mu != QQ_I.zero:
                spaces.append(ker[0])
        else:
            break
    else:
        raise DecompositionError("no generic torus element found")

    tsparse = [_sparse(t) for t in tvecs]
    weights = []
    for coords in spaces:
        re = [Fraction(0)] * alg.dim
        im = [Fraction(0)] * alg.dim
        for c, b in zip(coords, sub.basis):
            if c != QQ_I.zero:
                cr, ci = _gauss_parts(c)
                for j, x in enumerate(b):
                    if x:
                        re[j] += cr * x
                        im[j] += ci * x
        vec = (_sparse(re), _sparse(im))
        i0 = min(set(vec[0]) | set(vec[1]))
        v0 = (vec[0].get(i0, Fraction(0)), vec[1].get(i0, Fraction(0)))
        lam = []
        for t in tsparse:
            # [t, v] = lambda v, read off at a nonzero coordinate
            br_re = alg.bracket_sparse(t, vec[0])
            br_im = alg.bracket_sparse(t, vec[1])
            w = (Fraction(br_re.get(i0, 0)), Fraction(br_im.get(i0, 0)))
            lam.append(_cdiv(w, v0))
        weights.append((lam, vec))
    return weights


def _cdiv(a, b):
    d = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [list(mat[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise DecompositionError("Killing form is degenerate on the torus")
    return [row[n:] for row in red]


def _inner_matrix(weights, ginv) -> list[list[Fraction]]:
    """Gram matrix of the weights under the form dual to the Killing form on the torus."""
    n = len(ginv)
    re = [[w[0][k][0] for k in range(n)] for w in weights]
    im = [[w[0][k][1] for k in range(n)] for w in weights]
    complex_ = any(any(v) for v in im)

    def times_g(v):
        return [sum(ginv[i][j] * v[j] for j in range(n) if v[j]) for i in range(n)]

    g_re = [times_g(v) for v in re]
    g_im = [times_g(v) for v in im] if complex_ else None

    def dot(a, b):
        return sum(x * y for x, y in zip(a, b) if x and y)

    out = []
    for i in range(len(weights)):
        row = []
        for j in range(len(weights)):
            val = dot(re[i], g_re[j])
            if complex_:
                val -= dot(im[i], g_im[j])
                if dot(re[i], g_im[j]) + dot(im[i], g_re[j]):
                    raise DecompositionError("non-real inner product between roots")
            row.append(Fraction(val))
        out.append(row)
    return out


def type_from_census(rank_: int, lengths: Sequence[Fraction]) -> tuple[str, int]:
    """Simple type from its rank and the squared lengths of all its roots."""
    n = len(lengths)
    distinct = sorted(set(lengths))
    census = {"rank": rank_, "roots": n, "lengths": [str(x) for x in distinct]}
    if len(distinct) == 1:
        if n == rank_ * (rank_ + 1):
            return ("A", rank_)
        if rank_ >= 4 and n == 2 * rank_ * (rank_ - 1):
            return ("D", rank_)
        if (rank_, n) in {(6, 72), (7, 126), (8, 240)}:
            return ("E", rank_)
    elif len(distinct) == 2:
        short, long_ = distinct
        n_long = sum(1 for x in lengths if x == long_)
        ratio = long_ / short
        if ratio == 3 and rank_ == 2 and n == 12:
            return ("G", 2)
        if ratio == 2:
            if rank_ == 4 and n == 48:
                return ("F", 4)
            if n == 2 * rank_ * rank_:
                if n_long == 2 * rank_ * (rank_ - 1):
                    return ("B", rank_)
                if n_long == 2 * rank_:
                    return ("C", rank_)
    raise IdentificationError(f"root census matches no simple type: {census}")


def reductive_decompose(sub: Subalgebra) -> ReductiveDecomposition:
    alg = sub.ambient
    torus = sub.cartan_part()
    weights = _standard_torus_data(sub, torus)
    split = weights is not None
    if weights is None:
        tvecs = _grow_torus(sub, [list(b) for b in torus.basis])
        torus = Subalgebra.spanned(alg, tvecs)
        tvecs = [list(b) for b in torus.basis]
        weights = _gaussian_torus_data(sub, tvecs)
    tsparse = [_sparse(b) for b in torus.basis]
    gram = [[Fraction(alg.killing_sparse(a, b)) for b in tsparse] for a in tsparse]
    ginv = _invert(gram)

    # components: roots joined when not orthogonal
    n = len(weights)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    inner = _inner_matrix(weights, ginv)
    for i in range(n):
        for j in range(i + 1, n):
            if inner[i][j]:
                parent[find(i)] = find(j)
    comps: dict[int, list[int]] = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(i)

    key_of = {tuple(w[0]): i for i, w in enumerate(weights)}
    ideals = []
    for members in comps.values():
        rk = rank([[inner[i][j] for j in members] for i in members])
        label = type_from_census(rk, [inner[i][i] for i in members])
        vecs = []
        for i in members:
            re, im = weights[i][1]
            vecs.extend([re, im])
            neg = key_of.get(tuple((-a, -b) for a, b in weights[i][0]))
            if neg is None:
                raise DecompositionError("weights are not closed under negation")
            h_re, h_im = _complex_bracket(alg, weights[i][1], weights[neg][1])
            vecs.extend([h_re, h_im])
        span = Span(alg.dim, [_dense(v, alg.dim) for v in vecs if v])
        if span.dim != len(members) + rk:
            raise DecompositionError(
                f"ideal of type {label} is not defined over the rationals (span {span.dim}, expected {len(members) + rk})"
            )
        ideals.append(SimpleIdeal(Subalgebra.spanned(alg, span.basis), label, rk))

    center = _center(sub, torus)
    ideals.sort(key=lambda i: (-i.dim, i.type_label))
    dec = ReductiveDecomposition(center, tuple(ideals), torus, split)
    if dec.dim != sub.dim:
        raise DecompositionError(
            f"decomposition dimensions do not add up: center {center.dim} + ideals "
            f"{[i.dim for i in ideals]} != {sub.dim}"
        )
    return dec


def _center(sub: Subalgebra, torus: Subalgebra) -> Subalgebra:
    """Elements of the torus commuting with all of ``sub`` (the center lies in every Cartan)."""
    alg = sub.ambient
    if not torus.dim:
        return Subalgebra(alg, (), ())
    rows: list[list[Fraction]] = []
    for b in sub.sparse_basis:
        cols = [_dense(alg.bracket_sparse(t, b), alg.dim) for t in torus.sparse_basis]
        rows.extend([cols[k][i] for k in range(torus.dim)] for i in range(alg.dim) if any(c[i] for c in cols))
    ker = nullspace(rows, torus.dim) if rows else [[Fraction(int(i == j)) for j in range(torus.dim)] for i in range(torus.dim)]
    return Subalgebra.spanned(alg, [_combine(torus, k) for k in ker])


def identify_complex_type(ideal: Subalgebra) -> tuple[str, int]:
    dec = reductive_decompose(ideal)
    if dec.center.dim or len(dec.ideals) != 1:
        raise IdentificationError(f"subalgebra is not simple: {dec.summary()}")
    return dec.ideals[0].type_label


def killing_orthogonal(a: Subalgebra, b: Subalgebra) -> bool:
    alg = a.ambient
    return all(alg.killing_sparse(x, y) == 0 for x in a.sparse_basis for y in b.sparse_basis)


def brackets_vanish(a: Subalgebra, b: Subalgebra) -> bool:
    alg = a.ambient
    return all(not alg.bracket_sparse(x, y) for x in a.sparse_basis for y in b.sparse_basis)
