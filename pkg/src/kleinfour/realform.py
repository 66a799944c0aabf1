"""Real forms g = u^theta + i u^{-theta} and their invariants.

Labels come from a finite catalog of simple real forms keyed by the complex
type and the type of a maximal compact subalgebra.  Anything outside the
catalog is reported as ``unidentified`` together with its raw invariants.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .autgrp import AutoMap, commute
from .chevalley import ChevalleyAlgebra
from .fixpoint import (
    Subalgebra,
    fixed_subalgebra,
    reductive_decompose,
)
from .linalg import nullspace
from .rootsys import Root, negate

TypeLabel = tuple[str, int]


class RealFormError(ValueError):
    pass


# -- canonical compact types --------------------------------------------------------


def canonical_types(labels: Iterable[TypeLabel], center: int = 0) -> tuple[tuple[TypeLabel, ...], int]:
    """Normalize low-rank coincidences (B1=C1=A1, C2=B2, D3=A3, D2=2A1, D1=T1)."""
    out = []
    for letter, rank in labels:
        letter = letter.upper()
        if rank <= 0:
            continue
        if letter in "BC" and rank == 1:
            out.append(("A", 1))
        elif letter == "C" and rank == 2:
            out.append(("B", 2))
        elif letter == "D" and rank == 3:
            out.append(("A", 3))
        elif letter == "D" and rank == 2:
            out.extend([("A", 1), ("A", 1)])
        elif letter == "D" and rank == 1:
            center += 1
        else:
            out.append((letter, rank))
    return tuple(sorted(out, key=lambda t: (-_dim_of(t), t))), center


def _so(m: int) -> list[TypeLabel]:
    if m < 2:
        return []
    return [("B", (m - 1) // 2)] if m % 2 else [("D", m // 2)]


def _dim_of(t: TypeLabel) -> int:
    letter, n = t
    if letter == "A":
        return n * (n + 2)
    if letter in "BC":
        return n * (2 * n + 1)
    if letter == "D":
        return n * (2 * n - 1)
    return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}[t]


def compact_name(t: TypeLabel) -> str:
    letter, n = t
    if letter == "A":
        return f"su({n + 1})"
    if letter == "B":
        return f"so({2 * n + 1})"
    if letter == "C":
        return f"sp({n})"
    if letter == "D":
        return f"so({2 * n})"
    return f"{letter.lower()}{n}({-_dim_of(t)})"


def compact_label(types: Sequence[TypeLabel], center: int) -> str:
    types, center = canonical_types(types, center)
    counts = Counter(types)
    parts = []
    for t in sorted(counts, key=lambda t: (-_dim_of(t), t)):
        k = counts[t]
        parts.append(compact_name(t) if k == 1 else f"{k}{compact_name(t)}")
    if center:
        parts.append("so(2)" if center == 1 else f"{center}so(2)")
    return "+".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def catalog(max_rank: int = 8) -> dict[tuple[TypeLabel, tuple[tuple[TypeLabel, ...], int]], str]:
    """Map (canonical complex type, canonical maximal compact) -> name.

    Names registered first win, which fixes the preferred name among
    isomorphic low-rank forms (for example sl(2,R) over su(1,1)).
    """
    table: dict = {}

    def add(t: TypeLabel, k_types: list[TypeLabel], k_center: int, name: str):
        (ct,), _ = canonical_types([t])
        key = (ct, canonical_types(k_types, k_center))
        table.setdefault(key, name)

    for n in range(1, max_rank + 1):
        N = n + 1
        if N == 2:
            add(("A", 1), [("A", 1)], 0, "su(2)")
            add(("A", 1), [], 1, "sl(2,R)")
        for q in range(0, N // 2 + 1):
            p = N - q
            k = ([("A", p - 1)] if p >= 2 else []) + ([("A", q - 1)] if q >= 2 else [])
            add(("A", n), k, 1 if q else 0, f"su({N})" if q == 0 else f"su({p},{q})")
        if N >= 3:
            so_k = _so(N)
            add(("A", n), so_k, 1 if N == 2 else 0, f"sl({N},R)")
        if N >= 4 and N % 2 == 0:
            add(("A", n), [("C", N // 2)], 0, f"su*({N})")

    def so_pq(letter: str, n: int, m: int):
        for q in range(0, m // 2 + 1):
            p = m - q
            add((letter, n), _so(p) + _so(q), 0, f"so({m})" if q == 0 else f"so({p},{q})")

    for n in range(2, max_rank + 1):
        so_pq("B", n, 2 * n + 1)
    for n in range(2, max_rank + 1):
        for q in range(0, n // 2 + 1):
            p = n - q
            add(("C", n), [("C", p)] + ([("C", q)] if q else []), 0, f"sp({n})" if q == 0 else f"sp({p},{q})")
        add(("C", n), [("A", n - 1)], 1, f"sp({2 * n},R)")
    for n in range(4, max_rank + 1):
        so_pq("D", n, 2 * n)
        add(("D", n), [("A", n - 1)], 1, f"so*({2 * n})")

    exceptional = [
        (("E", 6), [("E", 6)], 0, "e6(-78)"),
        (("E", 6), [("F", 4)], 0, "e6(-26)"),
        (("E", 6), [("D", 5)], 1, "e6(-14)"),
        (("E", 6), [("A", 5), ("A", 1)], 0, "e6(2)"),
        (("E", 6), [("C", 4)], 0, "e6(6)"),
        (("E", 7), [("E", 7)], 0, "e7(-133)"),
        (("E", 7), [("E", 6)], 1, "e7(-25)"),
        (("E", 7), [("D", 6), ("A", 1)], 0, "e7(-5)"),
        (("E", 7), [("A", 7)], 0, "e7(7)"),
        (("E", 8), [("E", 8)], 0, "e8(-248)"),
        (("E", 8), [("E", 7), ("A", 1)], 0, "e8(-24)"),
        (("E", 8), [("D", 8)], 0, "e8(8)"),
        (("F", 4), [("F", 4)], 0, "f4(-52)"),
        (("F", 4), [("B", 4)], 0, "f4(-20)"),
        (("F", 4), [("C", 3), ("A", 1)], 0, "f4(4)"),
        (("G", 2), [("G", 2)], 0, "g2(-14)"),
        (("G", 2), [("A", 1), ("A", 1)], 0, "g2(2)"),
    ]
    for t, k, c, name in exceptional:
        add(t, k, c, name)
    return table


def label_real_form(complex_type: TypeLabel, signature: int, maximal_compact: Sequence[TypeLabel], center: int = 0) -> str:
    """Name of the simple real form with these invariants, or an ``unidentified`` tag."""
    (ct,), _ = canonical_types([complex_type])
    key_k = canonical_types(maximal_compact, center)
    dim_k = sum(_dim_of(t) for t in key_k[0]) + key_k[1]
    name = catalog().get((ct, key_k))
    if name is None or _dim_of(ct) - 2 * dim_k != signature:
        return f"unidentified({ct[0]}{ct[1]}, sig={signature}, k={compact_label(*key_k)})"
    return name


# -- descriptors --------------------------------------------------------------------


@dataclass(frozen=True)
class IdealForm:
    complex_type: TypeLabel
    dim: int
    dim_k: int
    compact_types: tuple[TypeLabel, ...]
    compact_center: int
    label: str

    @property
    def signature(self) -> int:
        return self.dim - 2 * self.dim_k


@dataclass(frozen=True)
class RealFormDescriptor:
    complex_type: tuple[TypeLabel, ...]
    center_dim: int
    dim: int
    dim_k: int
    maximal_compact: tuple[TypeLabel, ...]
    compact_center: int
    hermitian: bool
    label: str
    ideals: tuple[IdealForm, ...] = ()
    center_compact: int = 0

    @property
    def signature(self) -> int:
        return (self.dim - self.dim_k) - self.dim_k

    @property
    def dim_p(self) -> int:
        return self.dim - self.dim_k

    @property
    def compact_label(self) -> str:
        return compact_label(self.maximal_compact, self.compact_center)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "complex_type": [f"{l}{r}" for l, r in self.complex_type],
            "center_dim": self.center_dim,
            "dim": self.dim,
            "dim_k": self.dim_k,
            "dim_p": self.dim_p,
            "signature": self.signature,
            "maximal_compact": [f"{l}{r}" for l, r in self.maximal_compact],
            "compact_center": self.compact_center,
            "compact_label": self.compact_label,
            "hermitian": self.hermitian,
        }


def _within(sub: Subalgebra, maps: Sequence[AutoMap]) -> int:
    """Dimension of the joint +1 eigenspace of ``maps`` inside ``sub``."""
    rows = []
    n = sub.ambient.dim
    for m in maps:
        images = [m.apply_sparse(b) for b in sub.sparse_basis]
        for i in range(n):
            row = [Fraction(img.get(i, 0)) - b[i] for img, b in zip(images, sub.basis)]
            if any(row):
                rows.append(row)
    return len(nullspace(rows, sub.dim)) if rows else sub.dim


def _same_span(a: Subalgebra, b: Subalgebra) -> bool:
    return a.dim == b.dim and all(a.contains(v) for v in b.basis)


def _describe(alg: ChevalleyAlgebra, theta: AutoMap, gamma: Sequence[AutoMap]) -> RealFormDescriptor:
    g_sub = fixed_subalgebra(alg, list(gamma))
    k_sub = fixed_subalgebra(alg, list(gamma) + [theta])
    g_dec = reductive_decompose(g_sub)
    k_dec = reductive_decompose(k_sub)

    ideals = []
    k_ideals_left = list(k_dec.ideals)
    k_center_used = 0
    for ideal in g_dec.ideals:
        if not _same_span(ideal.subalgebra.image(theta), ideal.subalgebra):
            raise RealFormError(f"the Cartan involution moves the {ideal.name} ideal; complex-type summands are not catalogued")
        dim_k = _within(ideal.subalgebra, [theta])
        mine = [ki for ki in k_ideals_left if all(ideal.subalgebra.contains(v) for v in ki.subalgebra.basis)]
        for ki in mine:
            k_ideals_left.remove(ki)
        c = dim_k - sum(ki.dim for ki in mine)
        k_center_used += c
        k_types = [ki.type_label for ki in mine]
        label = label_real_form(ideal.type_label, ideal.dim - 2 * dim_k, k_types, c)
        canon = canonical_types(k_types, c)
        ideals.append(IdealForm(ideal.type_label, ideal.dim, dim_k, canon[0], canon[1], label))

    center_k = _within(g_dec.center, [theta]) if g_dec.center.dim else 0
    if k_ideals_left or k_center_used + center_k != k_dec.center.dim:
        raise RealFormError("maximal compact subalgebra does not split along the ideals")

    ideals.sort(key=lambda f: (-f.dim, f.label))
    parts = [f.label for f in ideals]
    parts += ["so(2)"] * center_k + ["R"] * (g_dec.center.dim - center_k)
    label = "+".join(parts) if parts else "0"
    max_compact, comp_center = canonical_types(k_dec.type_labels(), k_dec.center.dim)
    hermitian = len(ideals) == 1 and not g_dec.center.dim and comp_center == 1
    return RealFormDescriptor(
        complex_type=tuple(g_dec.type_labels()),
        center_dim=g_dec.center.dim,
        dim=g_sub.dim,
        dim_k=k_sub.dim,
        maximal_compact=max_compact,
        compact_center=comp_center,
        hermitian=hermitian,
        label=label,
        ideals=tuple(ideals),
        center_compact=center_k,
    )


def _check_involution(a: AutoMap, what: str) -> None:
    if not a.squares_to_identity():
        raise RealFormError(f"{what} ({a.name}) is not an involution")


def real_form(alg: ChevalleyAlgebra, theta: AutoMap) -> RealFormDescriptor:
    """The real form u^theta + i u^{-theta} of the whole algebra."""
    _check_involution(theta, "theta")
    return _describe(alg, theta, [])


def real_fixed_form(alg: ChevalleyAlgebra, theta: AutoMap, gamma: Sequence[AutoMap]) -> RealFormDescriptor:
    """Descriptor of g^Gamma inside the real form defined by theta."""
    _check_involution(theta, "theta")
    gamma = list(gamma)
    for i, a in enumerate(gamma):
        _check_involution(a, "group element")
        if not commute(a, theta):
            raise RealFormError(f"{a.name} does not commute with theta")
        for b in gamma[i + 1:]:
            if not commute(a, b):
                raise RealFormError(f"{a.name} and {b.name} do not commute")
    return _describe(alg, theta, gamma)


def is_hermitian(desc: RealFormDescriptor) -> bool:
    return desc.hermitian


# -- noncompact roots -----------------------------------------------------------------


@dataclass(frozen=True)
class NoncompactRootData:
    cartan_involution: AutoMap
    compact_roots: tuple[Root, ...]
    noncompact_roots: tuple[Root, ...]
    p_plus: tuple[Root, ...]
    p_minus: tuple[Root, ...]
    beta: Root
    hermitian: bool
    center: tuple[Fraction, ...] | None

    def flipped(self) -> "NoncompactRootData":
        """The same data under the opposite convention beta -> -beta."""
        return NoncompactRootData(
            self.cartan_involution,
            self.compact_roots,
            self.noncompact_roots,
            self.p_minus,
            self.p_plus,
            negate(self.beta),
            self.hermitian,
            None if self.center is None else tuple(-x for x in self.center),
        )


def _k_highest(rs, candidates: Sequence[Root], compact_positive: set[Root]) -> list[Root]:
    return [
        lam for lam in candidates
        if not any(rs.is_root(tuple(a + b for a, b in zip(lam, c))) for c in compact_positive)
    ]


def noncompact_root_split(alg: ChevalleyAlgebra, theta: AutoMap) -> NoncompactRootData:
    """Compact/noncompact roots, the p+/p- split and the maximal noncompact root.

    beta is the highest weight, for the compact positive roots, of the
    k-module p_C (non-Hermitian case) or of p_plus (Hermitian case).  The
    central element z of k is signed so that the lexicographically largest
    noncompact positive root of maximal height has z > 0.
    """
    rs = alg.root_system
    _check_involution(theta, "theta")
    if not theta.stabilizes_cartan() or theta.cartan_block() != [[Fraction(int(i == j)) for j in range(rs.rank)] for i in range(rs.rank)]:
        raise RealFormError("noncompact_root_split needs an inner involution acting trivially on the Cartan")
    acts = theta.root_action()
    compact = tuple(r for r in rs.roots if acts[r][1] == 1)
    noncompact = tuple(r for r in rs.roots if acts[r][1] == -1)
    if not noncompact:
        raise RealFormError("theta is the identity on the roots: the real form is compact")
    compact_pos = {r for r in compact if rs.is_positive(r)}

    k_dec = reductive_decompose(fixed_subalgebra(alg, [theta]))
    hermitian = k_dec.center.dim == 1
    if hermitian:
        z = [k_dec.center.basis[0][i] for i in range(rs.rank)]
        pos_nc = [r for r in noncompact if rs.is_positive(r)]
        top = max(rs.height(r) for r in pos_nc)
        anchor = max(r for r in pos_nc if rs.height(r) == top)
        if rs.pairing(anchor, z) < 0:
            z = [-x for x in z]
        if any(rs.pairing(r, z) == 0 for r in noncompact):
            raise RealFormError("central element vanishes on a noncompact root")
        plus = tuple(r for r in noncompact if rs.pairing(r, z) > 0)
        minus = tuple(r for r in noncompact if rs.pairing(r, z) < 0)
        tops = _k_highest(rs, plus, compact_pos)
        center = tuple(Fraction(x) for x in z)
    else:
        plus = minus = ()
        tops = _k_highest(rs, noncompact, compact_pos)
        center = None
    if len(tops) != 1:
        raise RealFormError(f"expected a unique maximal noncompact root, found {tops}")
    return NoncompactRootData(theta, compact, noncompact, plus, minus, tops[0], hermitian, center)
