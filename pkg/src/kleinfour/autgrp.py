"""Finite-order automorphisms as exact matrices on the Chevalley basis.

An :class:`AutoMap` stores its matrix column by column: column ``j`` is the
image of basis vector ``j`` as a sparse dict.  Every map handed out by the
constructors here has passed the full bracket-preservation certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .chevalley import AlgebraElement, ChevalleyAlgebra, _add_into
from .linalg import rank, solve_in_basis, to_fractions
from .rootsys import DiagramInvolution, Root, negate


class AutomorphismError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AutoMap:
    algebra: ChevalleyAlgebra
    columns: tuple[dict, ...] = field(repr=False)
    inner: bool
    descriptor: tuple = ()
    certified: bool = field(default=False, compare=False)

    # -- basic linear algebra -----------------------------------------------

    def apply_sparse(self, vec: dict) -> dict:
        out: dict = {}
        for j, c in vec.items():
            _add_into(out, self.columns[j], c)
        return out

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        if x.algebra is not self.algebra:
            raise AutomorphismError("element belongs to a different algebra")
        return self.algebra.from_sparse(self.apply_sparse(x.sparse()))

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return self.apply(x)

    @property
    def matrix(self) -> list[list[Fraction]]:
        n = self.algebra.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                m[i][j] = Fraction(v)
        return m

    def same_matrix(self, other: "AutoMap") -> bool:
        return self.algebra is other.algebra and all(
            _clean(a) == _clean(b) for a, b in zip(self.columns, other.columns)
        )

    def __eq__(self, other):
        return isinstance(other, AutoMap) and self.same_matrix(other)

    def __hash__(self):
        return hash(tuple(tuple(sorted(_clean(c).items())) for c in self.columns))

    def is_identity(self) -> bool:
        return all(_clean(col) == {j: 1} for j, col in enumerate(self.columns))

    def squares_to_identity(self) -> bool:
        return compose(self, self, certify=False).is_identity()

    @property
    def name(self) -> str:
        return describe(self.descriptor)

    # -- structure ----------------------------------------------------------

    def is_monomial(self) -> bool:
        seen = set()
        for col in self.columns:
            c = _clean(col)
            if len(c) != 1:
                return False
            (i,) = c
            if i in seen:
                return False
            seen.add(i)
        return True

    def stabilizes_cartan(self) -> bool:
        r = self.algebra.rank
        return all(all(i < r for i in _clean(self.columns[j])) for j in range(r))

    def cartan_block(self) -> list[list[Fraction]]:
        """Matrix of the restriction to span{h_i} (requires Cartan stability)."""
        if not self.stabilizes_cartan():
            raise AutomorphismError(f"{self.name} does not stabilize the standard Cartan subalgebra")
        r = self.algebra.rank
        return [[Fraction(self.columns[j].get(i, 0)) for j in range(r)] for i in range(r)]

    def root_action(self) -> dict[Root, tuple[Root, Fraction]]:
        """root -> (image root, scalar) with map(e_a) = scalar * e_{image}."""
        if not self.stabilizes_cartan():
            raise AutomorphismError(f"{self.name} does not stabilize the standard Cartan subalgebra")
        alg = self.algebra
        out = {}
        for r in alg.root_system.roots:
            col = _clean(self.columns[alg.root_idx(r)])
            if len(col) != 1:
                raise AutomorphismError(f"{self.name} does not map e{r} to a root vector")
            ((i, c),) = col.items()
            img = alg.root_of(i)
            if img is None:
                raise AutomorphismError(f"{self.name} maps e{r} into the Cartan subalgebra")
            out[r] = (img, Fraction(c))
        return out

    def act_on_root(self, root: Sequence[int]) -> Root:
        """Image of a root under the induced action on the root lattice."""
        acts = self.root_action()
        return acts[tuple(root)][0]

    def certify(self) -> "AutoMap":
        """Full bracket-preservation and invertibility check; returns a certified copy."""
        problem = bracket_preservation_failure(self)
        if problem is not None:
            i, j = problem
            alg = self.algebra
            raise AutomorphismError(
                f"{self.name} does not preserve the bracket on ({alg.basis_labels[i]}, {alg.basis_labels[j]})"
            )
        if not self.is_monomial() and rank(self.matrix) != self.algebra.dim:
            raise AutomorphismError(f"{self.name} is not invertible")
        return AutoMap(self.algebra, self.columns, self.inner, self.descriptor, certified=True)


def _clean(col: dict) -> dict:
    return {k: v for k, v in col.items() if v}


def describe(descriptor: tuple) -> str:
    if not descriptor:
        return "auto"
    kind = descriptor[0]
    if kind == "torus":
        return "torus[" + "".join(map(str, descriptor[1])) + "]"
    if kind == "diagram":
        return "diagram" + str(tuple(i + 1 for i in descriptor[1]))
    if kind == "chevalley":
        return "chevalley"
    if kind == "compose":
        return "(" + " * ".join(describe(d) for d in descriptor[1:]) + ")"
    if kind == "named":
        return descriptor[1]
    return str(descriptor)


def renamed(a: AutoMap, name: str) -> AutoMap:
    return AutoMap(a.algebra, a.columns, a.inner, ("named", name, a.descriptor), a.certified)


def bracket_preservation_failure(a: AutoMap) -> tuple[int, int] | None:
    alg = a.algebra
    t = alg.table
    cols = a.columns
    n = alg.dim
    for i in range(n):
        ci = cols[i]
        for j in range(i + 1, n):
            lhs = a.apply_sparse(t[i][j]) if t[i][j] else {}
            rhs = alg.bracket_sparse(ci, cols[j])
            if _clean(lhs) != _clean(rhs):
                return (i, j)
    return None


# -- constructors -------------------------------------------------------------


def identity_map(alg: ChevalleyAlgebra) -> AutoMap:
    cols = tuple({j: 1} for j in range(alg.dim))
    return AutoMap(alg, cols, True, ("torus", (0,) * alg.rank), certified=True)


def torus_involution(alg: ChevalleyAlgebra, parities: Sequence[int]) -> AutoMap:
    """exp(i*pi*ad H) for the H whose simple-root pairings have the given parities.

    Acts on e_a by (-1)^(sum_i parities[i] * a_i) and trivially on the Cartan.
    """
    rs = alg.root_system
    eps = tuple(int(x) % 2 for x in parities)
    if len(eps) != rs.rank:
        raise AutomorphismError(f"expected {rs.rank} parities, got {len(eps)}")
    cols = [{j: 1} for j in range(alg.rank)]
    for r in rs.roots:
        s = sum(e * c for e, c in zip(eps, r)) % 2
        cols.append({alg.root_idx(r): -1 if s else 1})
    return AutoMap(alg, tuple(cols), True, ("torus", eps)).certify()


def coweight_to_coroot(alg: ChevalleyAlgebra, coweight: Sequence) -> list[Fraction]:
    """Coroot coordinates of the element with alpha_j(H) = coweight[j]."""
    rs = alg.root_system
    # alpha_j(H) = sum_i H_i cartan[i][j]
    cols = [[Fraction(rs.cartan[i][j]) for j in range(rs.rank)] for i in range(rs.rank)]
    sol = solve_in_basis(cols, to_fractions(coweight))
    assert sol is not None
    return sol


def inner_involution(alg: ChevalleyAlgebra, H: Sequence) -> AutoMap:
    """exp(i*pi*ad H) for H = sum_i H_i h_i given in simple-coroot coordinates."""
    rs = alg.root_system
    H = to_fractions(H)
    pairings = [rs.pairing(s, H) for s in rs.simple_roots]
    for j, v in enumerate(pairings):
        if Fraction(v).denominator != 1:
            raise AutomorphismError(
                f"alpha_{j + 1}(H) = {v} is not an integer; exp(i pi ad H) is not rational on the basis"
            )
    return torus_involution(alg, [int(v) % 2 for v in pairings])


def extend_from_generators(
    alg: ChevalleyAlgebra,
    cartan_images: Sequence[dict],
    pos_images: Sequence[dict],
    neg_images: Sequence[dict],
    inner: bool,
    descriptor: tuple,
) -> AutoMap:
    """Extend images of h_i, e_{alpha_i}, e_{-alpha_i} multiplicatively, then certify.

    e_xi is rebuilt as [e_{alpha_i}, e_{xi - alpha_i}] / N along the first
    simple root that splits xi, and likewise for -xi.
    """
    rs = alg.root_system
    cols: list[dict | None] = [None] * alg.dim
    for i in range(alg.rank):
        cols[i] = dict(cartan_images[i])
        cols[alg.root_idx(rs.simple_roots[i])] = dict(pos_images[i])
        cols[alg.root_idx(negate(rs.simple_roots[i]))] = dict(neg_images[i])
    for xi in rs.positive_roots:
        if sum(xi) == 1:
            continue
        for i, s in enumerate(rs.simple_roots):
            rest = tuple(a - b for a, b in zip(xi, s))
            if rs.is_root(rest) and all(c >= 0 for c in rest):
                break
        else:  # pragma: no cover - every non-simple positive root splits
            raise AutomorphismError(f"cannot split root {xi}")
        for sign in (1, -1):
            a = tuple(sign * c for c in s)
            b = tuple(sign * c for c in rest)
            n_ab = alg.N[(a, b)]
            img = alg.bracket_sparse(cols[alg.root_idx(a)], cols[alg.root_idx(b)])
            cols[alg.root_idx(tuple(sign * c for c in xi))] = {
                k: Fraction(v, n_ab) if Fraction(v, n_ab).denominator != 1 else int(Fraction(v, n_ab))
                for k, v in img.items()
            }
    return AutoMap(alg, tuple(cols), inner, descriptor).certify()


def diagram_automorphism(alg: ChevalleyAlgebra, perm: DiagramInvolution) -> AutoMap:
    """h_i -> h_perm(i), e_{+-alpha_i} -> e_{+-alpha_perm(i)}, extended and certified."""
    rs = alg.root_system
    p = perm.permutation
    for i in range(rs.rank):
        for j in range(rs.rank):
            if rs.cartan[p[i]][p[j]] != rs.cartan[i][j]:
                raise AutomorphismError(f"permutation {perm.one_based()} does not preserve the Cartan matrix")
    simple = rs.simple_roots
    return extend_from_generators(
        alg,
        [{p[i]: 1} for i in range(rs.rank)],
        [{alg.root_idx(simple[p[i]]): 1} for i in range(rs.rank)],
        [{alg.root_idx(negate(simple[p[i]])): 1} for i in range(rs.rank)],
        inner=perm.is_identity,
        descriptor=("diagram", tuple(p)),
    )


def _minus_w0_permutation(alg: ChevalleyAlgebra) -> tuple[int, ...]:
    rs = alg.root_system
    if rs.letter == "A" and rs.rank >= 2:
        return tuple(reversed(range(rs.rank)))
    if rs.letter == "D" and rs.rank % 2 == 1:
        perm = list(range(rs.rank))
        perm[-2], perm[-1] = perm[-1], perm[-2]
        return tuple(perm)
    if rs.letter == "E" and rs.rank == 6:
        return (5, 1, 4, 3, 2, 0)
    return tuple(range(rs.rank))


def chevalley_involution(alg: ChevalleyAlgebra) -> AutoMap:
    """e_a -> -e_{-a}, h -> -h.  Inner exactly when -1 lies in the Weyl group."""
    cols = [{j: -1} for j in range(alg.rank)]
    for r in alg.root_system.roots:
        cols.append({alg.root_idx(negate(r)): -1})
    perm = _minus_w0_permutation(alg)
    inner = all(i == j for i, j in enumerate(perm))
    return AutoMap(alg, tuple(cols), inner, ("chevalley",)).certify()


def longest_element_involution(alg: ChevalleyAlgebra) -> AutoMap:
    """An inner involution stabilising the Cartan and acting on it as w0.

    Built as the Chevalley involution composed with the diagram symmetry
    induced by -w0.
    """
    perm = DiagramInvolution(_minus_w0_permutation(alg))
    c = chevalley_involution(alg)
    if perm.is_identity:
        return c
    return compose(diagram_automorphism(alg, perm), c)


# -- group operations -----------------------------------------------------------


def _merge_descriptors(a: AutoMap, b: AutoMap) -> tuple:
    if a.descriptor and b.descriptor and a.descriptor[0] == "torus" and b.descriptor[0] == "torus":
        return ("torus", tuple((x + y) % 2 for x, y in zip(a.descriptor[1], b.descriptor[1])))
    parts = []
    for d in (a.descriptor, b.descriptor):
        if d and d[0] == "compose":
            parts.extend(d[1:])
        else:
            parts.append(d)
    return ("compose", *parts)


def compose(a: AutoMap, b: AutoMap, *, certify: bool = True) -> AutoMap:
    """The map x -> a(b(x))."""
    if a.algebra is not b.algebra:
        raise AutomorphismError("cannot compose automorphisms of different algebras")
    cols = tuple(a.apply_sparse(col) for col in b.columns)
    out = AutoMap(a.algebra, cols, a.inner == b.inner, _merge_descriptors(a, b))
    if certify and a.certified and b.certified:
        # a composite of certified automorphisms is one; re-check anyway
        return out.certify()
    return out


def commute(a: AutoMap, b: AutoMap) -> bool:
    if a.algebra is not b.algebra:
        raise AutomorphismError("automorphisms of different algebras")
    return compose(a, b, certify=False).same_matrix(compose(b, a, certify=False))


@dataclass(frozen=True, eq=False)
class KleinFour:
    gen_a: AutoMap
    gen_b: AutoMap
    product: AutoMap

    @property
    def elements(self) -> tuple[AutoMap, AutoMap, AutoMap, AutoMap]:
        return (identity_map(self.gen_a.algebra), self.gen_a, self.gen_b, self.product)

    @property
    def nonidentity(self) -> tuple[AutoMap, AutoMap, AutoMap]:
        return (self.gen_a, self.gen_b, self.product)


def klein_four(a: AutoMap, b: AutoMap) -> KleinFour:
    if a.algebra is not b.algebra:
        raise AutomorphismError("generators act on different algebras")
    if a.is_identity():
        raise AutomorphismError("Klein four axiom violated: first generator is the identity")
    if b.is_identity():
        raise AutomorphismError("Klein four axiom violated: second generator is the identity")
    if not a.squares_to_identity():
        raise AutomorphismError("Klein four axiom violated: a^2 != id")
    if not b.squares_to_identity():
        raise AutomorphismError("Klein four axiom violated: b^2 != id")
    if a.same_matrix(b):
        raise AutomorphismError("Klein four axiom violated: a == b")
    if not commute(a, b):
        raise AutomorphismError("Klein four axiom violated: ab != ba")
    ab = compose(a, b)
    if ab.is_identity():  # pragma: no cover - implied by a != b for involutions
        raise AutomorphismError("Klein four axiom violated: ab == id")
    return KleinFour(a, b, ab)


def torus_parity_classes(rank: int) -> list[tuple[int, ...]]:
    """All {0,1}-vectors in fundamental-coweight coordinates, canonically ordered."""
    vecs = list(itertools.product((0, 1), repeat=rank))
    return sorted(vecs, key=lambda v: (sum(v), tuple(-x for x in v)))


def involution_search(
    alg: ChevalleyAlgebra,
    *,
    must_commute_with: Iterable[AutoMap] = (),
    fixed_dim: int | None = None,
    joint_fixed_dims: Iterable[tuple[Sequence[AutoMap], int]] = (),
    twist: AutoMap | None = None,
    accept: Callable[[AutoMap], bool] | None = None,
) -> list[AutoMap]:
    """Involutions twist * exp(i pi ad H), H over {0,1}-combinations of fundamental coweights.

    With ``twist=None`` these are the inner torus involutions.  A twist that
    stabilises the Cartan (for instance :func:`longest_element_involution`)
    gives a second family acting nontrivially on the root lattice; a
    candidate is kept only if it squares to the identity.  Results follow
    the canonical order of the parity vector and exclude the identity.
    """
    from .fixpoint import fixed_dimension

    commute_with = list(must_commute_with)
    joint = [(list(maps), dim) for maps, dim in joint_fixed_dims]
    out = []
    for eps in torus_parity_classes(alg.rank):
        cand = torus_involution(alg, eps)
        if twist is not None:
            cand = compose(twist, cand)
            if not cand.squares_to_identity():
                continue
        if cand.is_identity():
            continue
        if not all(commute(cand, m) for m in commute_with):
            continue
        if fixed_dim is not None and fixed_dimension(alg, [cand]) != fixed_dim:
            continue
        if any(fixed_dimension(alg, [cand, *maps]) != dim for maps, dim in joint):
            continue
        if accept is not None and not accept(cand):
            continue
        out.append(cand)
    return out
