"""Complex simple Lie algebras on a Chevalley basis, with exact structure constants.

Basis order: ``h_1..h_r`` (simple coroots), then ``e_alpha`` for the positive
roots in height order, then ``e_{-alpha}`` in the same order.  Signs of the
structure constants follow the extraspecial-pair recipe: N = +(p+1) on every
extraspecial pair, everything else forced by the standard identities.  The
resulting convention satisfies N_{-a,-b} = -N_{a,b}, so e_a -> -e_{-a} is an
automorphism and the real span of e_a - e_{-a}, i(e_a + e_{-a}), i h_j is a
compact real form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .linalg import symmetric_signature
from .rootsys import Root, RootSystem, build_root_system, negate

Sparse = dict  # basis index -> coefficient


class JacobiViolation(RuntimeError):
    pass


def _add_into(acc: dict, vec: dict, coef=1) -> None:
    for k, v in vec.items():
        x = acc.get(k, 0) + coef * v
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


def _structure_constants(rs: RootSystem) -> dict[tuple[Root, Root], int]:
    pos = rs.positive_roots
    order = {r: i for i, r in enumerate(pos)}
    posset = set(pos)
    special: dict[tuple[Root, Root], int] = {}

    def length(r):
        return rs.inner(r, r)

    def n_pos(a, b):
        if order[a] < order[b]:
            return special[(a, b)]
        return -special[(b, a)]

    def n_any(a, b):
        s = tuple(x + y for x, y in zip(a, b))
        if not rs.is_root(s):
            return 0
        a_pos, b_pos = a in posset, b in posset
        if a_pos and b_pos:
            return n_pos(a, b)
        if not a_pos and not b_pos:
            return -n_pos(negate(a), negate(b))
        c = negate(s)
        c_pos = c in posset
        # N_ab/(c,c) = N_bc/(a,a) = N_ca/(b,b) for a+b+c = 0
        if a_pos:
            if c_pos:
                val = length(c) / length(b) * n_any(c, a)
            else:
                val = length(c) / length(a) * n_any(b, c)
        else:
            if c_pos:
                val = length(c) / length(a) * n_any(b, c)
            else:
                val = length(c) / length(b) * n_any(c, a)
        if val.denominator != 1:
            raise JacobiViolation(f"non-integral structure constant N{a, b} = {val}")
        return int(val)

    for xi in pos:
        pairs = [
            (r, tuple(x - y for x, y in zip(xi, r)))
            for r in pos
            if tuple(x - y for x, y in zip(xi, r)) in posset
        ]
        pairs = [(r, s) for r, s in pairs if order[r] < order[s]]
        if not pairs:
            continue
        r1, s1 = pairs[0]
        p1, _ = rs.string_bounds(r1, s1)
        special[(r1, s1)] = p1 + 1
        xi_len = length(xi)
        for r, s in pairs[1:]:
            total = Fraction(0)
            d = tuple(x - y for x, y in zip(s, r1))
            if rs.is_root(d):
                total += Fraction(n_any(s, negate(r1)) * n_any(r, negate(s1))) / length(d)
            d = tuple(x - y for x, y in zip(r, r1))
            if rs.is_root(d):
                total += Fraction(n_any(negate(r1), r) * n_any(s, negate(s1))) / length(d)
            val = xi_len / (p1 + 1) * total
            if val.denominator != 1:
                raise JacobiViolation(f"non-integral N for special pair {r, s}: {val}")
            special[(r, s)] = int(val)

    table = {}
    for a in rs.roots:
        for b in rs.roots:
            if rs.is_root(tuple(x + y for x, y in zip(a, b))):
                table[(a, b)] = n_any(a, b)
    return table


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: "ChevalleyAlgebra"
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise ValueError(f"expected {self.algebra.dim} coordinates, got {len(self.coords)}")

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __rmul__(self, c):
        c = Fraction(c)
        return AlgebraElement(self.algebra, tuple(c * a for a in self.coords))

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and other.algebra is self.algebra
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def sparse(self) -> dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.coords) if c}

    def __repr__(self):
        terms = [f"{c}*{self.algebra.basis_labels[i]}" for i, c in self.sparse().items()]
        return " + ".join(terms) if terms else "0"


class ChevalleyAlgebra:
    """The complex simple Lie algebra of a root system, on a Chevalley basis."""

    def __init__(self, rs: RootSystem, *, verify: bool = False):
        self.root_system = rs
        self.rank = rs.rank
        self.dim = rs.dimension
        self.N = _structure_constants(rs)
        self._build_table()
        if verify:
            bad = self.jacobi_violations(stop_at_first=True)
            if bad:
                raise JacobiViolation(f"Jacobi identity fails on basis triple {bad[0]}")

    # -- basis bookkeeping --------------------------------------------------

    def root_idx(self, root: Sequence[int]) -> int:
        return self.rank + self.root_system.root_index[tuple(root)]

    def h_idx(self, i: int) -> int:
        return i

    def root_of(self, idx: int) -> Root | None:
        if idx < self.rank:
            return None
        return self.root_system.roots[idx - self.rank]

    @cached_property
    def basis_labels(self) -> list[str]:
        labels = [f"h{i + 1}" for i in range(self.rank)]
        for r in self.root_system.roots:
            sign = "-" if any(c < 0 for c in r) else ""
            labels.append(f"e{sign}[{''.join(str(abs(c)) for c in r)}]")
        return labels

    @property
    def cartan_indices(self) -> range:
        return range(self.rank)

    def coroot_vector(self, root: Root) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.root_system.coroot(root)) if c}

    def _build_table(self) -> None:
        rs = self.root_system
        n = self.dim
        table: list[list[dict]] = [[{} for _ in range(n)] for _ in range(n)]
        for i in range(self.rank):
            for r in rs.roots:
                k = self.root_idx(r)
                c = rs.simple_pairing(r, i)
                if c:
                    table[i][k] = {k: c}
                    table[k][i] = {k: -c}
        for a in rs.roots:
            ia = self.root_idx(a)
            for b in rs.roots:
                ib = self.root_idx(b)
                s = tuple(x + y for x, y in zip(a, b))
                if not any(s):
                    table[ia][ib] = self.coroot_vector(a)
                elif (a, b) in self.N:
                    table[ia][ib] = {self.root_idx(s): self.N[(a, b)]}
        self.table = table

    # -- elements -----------------------------------------------------------

    def element(self, coords: Iterable) -> AlgebraElement:
        return AlgebraElement(self, tuple(Fraction(c) for c in coords))

    def from_sparse(self, vec: dict) -> AlgebraElement:
        coords = [Fraction(0)] * self.dim
        for k, v in vec.items():
            coords[k] = Fraction(v)
        return AlgebraElement(self, tuple(coords))

    def basis_element(self, idx: int) -> AlgebraElement:
        return self.from_sparse({idx: 1})

    def e(self, root: Sequence[int]) -> AlgebraElement:
        return self.basis_element(self.root_idx(root))

    def h(self, coroot_vec: Sequence) -> AlgebraElement:
        """Cartan element sum_i H_i h_i."""
        return self.from_sparse({i: c for i, c in enumerate(coroot_vec) if c})

    def zero(self) -> AlgebraElement:
        return self.from_sparse({})

    # -- bracket ------------------------------------------------------------

    def bracket_sparse(self, u: dict, v: dict) -> dict:
        out: dict = {}
        t = self.table
        for i, a in u.items():
            row = t[i]
            for j, b in v.items():
                entry = row[j]
                if entry:
                    _add_into(out, entry, a * b)
        return out

    def bracket(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("bracket of elements from a different algebra")
        return self.from_sparse(self.bracket_sparse(a.sparse(), b.sparse()))

    def ad_matrix(self, x) -> list[list[Fraction]]:
        """Matrix of ad(x) acting on coordinate columns."""
        u = x.sparse() if isinstance(x, AlgebraElement) else {i: c for i, c in enumerate(x) if c}
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            col = self.bracket_sparse(u, {j: 1})
            for k, v in col.items():
                m[k][j] = Fraction(v)
        return m

    # -- Killing form -------------------------------------------------------

    @cached_property
    def killing_matrix(self) -> list[list[int]]:
        n = self.dim
        t = self.table
        km = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                total = 0
                ti = t[i]
                for k in range(n):
                    for l, c in t[j][k].items():
                        d = ti[l].get(k)
                        if d:
                            total += c * d
                km[i][j] = km[j][i] = total
        return km

    def killing_sparse(self, u: dict, v: dict):
        km = self.killing_matrix
        total = 0
        for i, a in u.items():
            row = km[i]
            for j, b in v.items():
                if row[j]:
                    total += a * b * row[j]
        return Fraction(total)

    def killing_form(self, a: AlgebraElement, b: AlgebraElement) -> Fraction:
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("Killing form of elements from a different algebra")
        return self.killing_sparse(a.sparse(), b.sparse())

    # -- certificates -------------------------------------------------------

    def jacobi_violations(self, stop_at_first: bool = False) -> list[tuple[int, int, int]]:
        """All basis triples i<j<k where the Jacobi identity fails.

        Triples with a repeated index satisfy Jacobi by antisymmetry alone,
        and the identity is alternating, so i<j<k covers every ordered triple.
        """
        bad = []
        n = self.dim
        t = self.table
        for i, j in itertools.combinations(range(n), 2):
            ij = t[i][j]
            for k in range(j + 1, n):
                jk = t[j][k]
                ki = t[k][i]
                if not (ij or jk or ki):
                    continue
                acc: dict = {}
                for m, c in ij.items():
                    _add_into(acc, t[m][k], c)
                for m, c in jk.items():
                    _add_into(acc, t[m][i], c)
                for m, c in ki.items():
                    _add_into(acc, t[m][j], c)
                if acc:
                    bad.append((i, j, k))
                    if stop_at_first:
                        return bad
        return bad

    def killing_invariance_violations(self) -> list[tuple[int, int, int]]:
        """Basis triples with kappa([x,y],z) != kappa(x,[y,z])."""
        km = self.killing_matrix
        t = self.table
        n = self.dim
        bad = []
        for i in range(n):
            for j in range(n):
                ij = t[i][j]
                for k in range(n):
                    lhs = sum(c * km[m][k] for m, c in ij.items())
                    rhs = sum(c * km[i][m] for m, c in t[j][k].items())
                    if lhs != rhs:
                        bad.append((i, j, k))
        return bad

    def structure_constant_lines(self) -> list[str]:
        """Deterministic text dump: one line per nonzero N_{alpha,beta}."""
        lines = []
        for a in self.root_system.roots:
            for b in self.root_system.roots:
                val = self.N.get((a, b))
                if val:
                    fa = ",".join(map(str, a))
                    fb = ",".join(map(str, b))
                    lines.append(f"N[({fa}),({fb})] = {val:+d}")
        return lines


def build_chevalley(rs: RootSystem | str | tuple, *, verify: bool = True) -> ChevalleyAlgebra:
    """Chevalley algebra of a root system; by default the Jacobi suite is run."""
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    return ChevalleyAlgebra(rs, verify=verify)


def bracket(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.algebra is not b.algebra:
        raise ValueError("bracket of elements from different algebras")
    return a.algebra.bracket(a, b)


def killing_form(a: AlgebraElement, b: AlgebraElement) -> Fraction:
    if a.algebra is not b.algebra:
        raise ValueError("Killing form of elements from different algebras")
    return a.algebra.killing_form(a, b)


# -- compact real form ------------------------------------------------------


@dataclass
class CompactFormBasis:
    """Formal basis u_a = e_a - e_-a, v_a = i(e_a + e_-a), t_j = i h_j.

    ``real`` and ``imag`` hold the Chevalley coordinates of each generator
    (as sparse dicts); ``structure`` maps (a, b) to the rational coordinates
    of [g_a, g_b] on the same generators.
    """

    algebra: ChevalleyAlgebra
    names: list[str]
    real: list[dict]
    imag: list[dict]
    structure: dict[tuple[int, int], dict[int, Fraction]]
    killing_gram: list[list[Fraction]]

    @property
    def dim(self) -> int:
        return len(self.names)

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        return dict(self.structure.get((i, j), {}))

    def signature(self) -> tuple[int, int]:
        pos, neg, _ = symmetric_signature(self.killing_gram)
        return pos, neg


def _complex_bracket(alg: ChevalleyAlgebra, a: tuple[dict, dict], b: tuple[dict, dict]):
    (r1, i1), (r2, i2) = a, b
    re = alg.bracket_sparse(r1, r2)
    _add_into(re, alg.bracket_sparse(i1, i2), -1)
    im = alg.bracket_sparse(r1, i2)
    _add_into(im, alg.bracket_sparse(i1, r2))
    return re, im


def compact_form(alg: ChevalleyAlgebra) -> CompactFormBasis:
    rs = alg.root_system
    names, real, imag = [], [], []
    slot_u, slot_v = {}, {}
    for r in rs.positive_roots:
        p, m = alg.root_idx(r), alg.root_idx(negate(r))
        slot_u[r] = len(names)
        names.append(f"u[{''.join(map(str, r))}]")
        real.append({p: 1, m: -1})
        imag.append({})
    for r in rs.positive_roots:
        p, m = alg.root_idx(r), alg.root_idx(negate(r))
        slot_v[r] = len(names)
        names.append(f"v[{''.join(map(str, r))}]")
        real.append({})
        imag.append({p: 1, m: 1})
    t0 = len(names)
    for j in range(alg.rank):
        names.append(f"t{j + 1}")
        real.append({})
        imag.append({j: 1})

    def decompose(re: dict, im: dict) -> dict[int, Fraction]:
        out = {}
        for r in rs.positive_roots:
            p, m = alg.root_idx(r), alg.root_idx(negate(r))
            a, b = re.get(p, 0), re.get(m, 0)
            if a != -b:
                raise ArithmeticError(f"real part not in the compact span at root {r}")
            if a:
                out[slot_u[r]] = Fraction(a)
            a, b = im.get(p, 0), im.get(m, 0)
            if a != b:
                raise ArithmeticError(f"imaginary part not in the compact span at root {r}")
            if a:
                out[slot_v[r]] = Fraction(a)
        for j in range(alg.rank):
            if re.get(j, 0):
                raise ArithmeticError("real Cartan component in the compact span")
            if im.get(j, 0):
                out[t0 + j] = Fraction(im[j])
        return out

    n = len(names)
    structure = {}
    for i in range(n):
        for j in range(i + 1, n):
            re, im = _complex_bracket(alg, (real[i], imag[i]), (real[j], imag[j]))
            coords = decompose(re, im)
            if coords:
                structure[(i, j)] = coords
                structure[(j, i)] = {k: -v for k, v in coords.items()}

    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            re = alg.killing_sparse(real[i], real[j]) - alg.killing_sparse(imag[i], imag[j])
            im = alg.killing_sparse(real[i], imag[j]) + alg.killing_sparse(imag[i], real[j])
            if im:
                raise ArithmeticError("Killing form is not real on the compact span")
            gram[i][j] = gram[j][i] = re
    return CompactFormBasis(alg, names, real, imag, structure, gram)
