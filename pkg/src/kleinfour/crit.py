"""Decision rules for discrete decomposability of Klein four symmetric pairs.

Nothing here constructs modules.  The rules act on the maximal noncompact
root and on explicit elements of the complexified algebra:

* prop9_check:  sigma(beta) != -beta
* thm10_check:  sigma(beta) = -tau(beta), not in {beta, -beta}
* cor12_decide: the three single-involution tests combined
* lemma2_witness: an explicit element of g^Gamma that is not nilpotent
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .autgrp import AutoMap, chevalley_involution, commute, compose
from .chevalley import AlgebraElement, ChevalleyAlgebra
from .fixpoint import Subalgebra
from .linalg import clear_denominators, nilpotent_by_image_chain, nullspace, power_is_zero
from .realform import NoncompactRootData
from .rootsys import Root, negate


class CriterionError(ValueError):
    pass


class Verdict(str, enum.Enum):
    ADMITS_CANDIDATE = "ADMITS_CANDIDATE"
    OBSTRUCTED = "OBSTRUCTED"


@dataclass(frozen=True)
class ComplexElement:
    """re + i*im in the complexified algebra, both parts rational."""

    re: AlgebraElement
    im: AlgebraElement

    @property
    def algebra(self) -> ChevalleyAlgebra:
        return self.re.algebra

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __add__(self, other: "ComplexElement") -> "ComplexElement":
        return ComplexElement(self.re + other.re, self.im + other.im)

    def scale(self, c: Fraction) -> "ComplexElement":
        return ComplexElement(c * self.re, c * self.im)

    def times_i(self) -> "ComplexElement":
        return ComplexElement(-self.im, self.re)

    def apply(self, a: AutoMap) -> "ComplexElement":
        return ComplexElement(a(self.re), a(self.im))

    def to_dict(self) -> dict:
        return {"re": _sparse_json(self.re), "im": _sparse_json(self.im)}


def _sparse_json(x: AlgebraElement) -> list:
    labels = x.algebra.basis_labels
    return [[labels[i], Fraction(c).numerator, Fraction(c).denominator] for i, c in sorted(x.sparse().items())]


@dataclass(frozen=True)
class ProjectionWitness:
    x: ComplexElement
    y: ComplexElement
    projection: ComplexElement
    nilpotent: bool
    rescaled: bool
    fixed_by_group: bool


@dataclass(frozen=True)
class CriterionVerdict:
    subject: str
    result: Verdict
    rule: str
    sigma_beta: Root | None = None
    witness: ProjectionWitness | None = None
    details: dict = field(default_factory=dict)


# -- helpers --------------------------------------------------------------------------


def _require_cartan_stable(a: AutoMap, what: str) -> None:
    if not a.stabilizes_cartan():
        raise CriterionError(f"{what} ({a.name}) does not stabilize the standard Cartan subalgebra")


def _neg_eigenspace_dim(maps_plus: list[AutoMap], maps_minus: list[AutoMap], indices: list[int]) -> int:
    """dim of {v supported on indices : m v = v (maps_plus), m v = -v (maps_minus)}."""
    pos = {j: k for k, j in enumerate(indices)}
    rows = []
    for sign, maps in ((1, maps_plus), (-1, maps_minus)):
        for m in maps:
            images = [m.columns[j] for j in indices]
            for i in indices:
                row = [Fraction(img.get(i, 0)) - sign * (1 if i == j else 0) for img, j in zip(images, indices)]
                if any(row):
                    rows.append(row)
            # images must stay inside the block
            for img in images:
                if any(i not in pos for i, c in img.items() if c):
                    raise CriterionError("block is not stable under the automorphism")
    return len(nullspace(rows, len(indices))) if rows else len(indices)


def cartan_adapted(theta: AutoMap, sigma: AutoMap) -> bool:
    """Is t^{-sigma} a maximal abelian subspace of k^{-sigma}?

    t is the standard Cartan (inside k for an inner theta).  Equivalent to:
    the centralizer of t^{-sigma} in the complexified k^{-sigma} is t^{-sigma}.
    """
    alg = theta.algebra
    rs = alg.root_system
    _require_cartan_stable(sigma, "sigma")
    block = sigma.cartan_block()
    r = rs.rank
    rows = [[block[i][j] + (1 if i == j else 0) for j in range(r)] for i in range(r)]
    t_minus = nullspace(rows, r)
    dim_t_minus = len(t_minus)
    vanishing = [
        alg.root_idx(a) for a in rs.roots
        if all(rs.pairing(a, h) == 0 for h in t_minus)
    ]
    indices = list(range(r)) + vanishing
    return _neg_eigenspace_dim([theta], [sigma], indices) == dim_t_minus


def _check_pair(data: NoncompactRootData, sigma: AutoMap) -> None:
    _require_cartan_stable(sigma, "sigma")
    if not commute(sigma, data.cartan_involution):
        raise CriterionError(f"{sigma.name} does not commute with the Cartan involution")


# -- rules ----------------------------------------------------------------------------


def prop9_check(data: NoncompactRootData, sigma: AutoMap) -> bool:
    """sigma(beta) != -beta, evaluated on a Cartan adapted to sigma."""
    _check_pair(data, sigma)
    if not cartan_adapted(data.cartan_involution, sigma):
        raise CriterionError(
            f"t^(-sigma) is not maximal abelian in k^(-sigma) for {sigma.name}; "
            "the criterion must be read on a sigma-adapted Cartan subalgebra"
        )
    return sigma.act_on_root(data.beta) != negate(data.beta)


def thm10_check(data: NoncompactRootData, sigma: AutoMap, tau: AutoMap) -> bool:
    """sigma(beta) = -tau(beta) and sigma(beta) not in {beta, -beta}."""
    _check_pair(data, sigma)
    _check_pair(data, tau)
    if not commute(sigma, tau):
        raise CriterionError(f"{sigma.name} and {tau.name} do not commute")
    sb = sigma.act_on_root(data.beta)
    tb = tau.act_on_root(data.beta)
    return sb == negate(tb) and sb not in (data.beta, negate(data.beta))


def cor12_decide(p9_sigma: bool, p9_tau: bool, p9_sigmatau: bool, subject: str = "") -> CriterionVerdict:
    if p9_sigma and p9_tau and not p9_sigmatau:
        return CriterionVerdict(
            subject,
            Verdict.OBSTRUCTED,
            "sigma(beta) != -beta, tau(beta) != -beta, sigma*tau(beta) = -beta; "
            "hence sigma(beta) = -tau(beta) != +-beta, so no nontrivial unitarizable simple "
            "(g,K)-module is discretely decomposable for g^Gamma",
        )
    return CriterionVerdict(subject, Verdict.ADMITS_CANDIDATE, "the three-condition test does not apply")


def holomorphic_type_check(theta: AutoMap, sigma: AutoMap, k_center: Subalgebra) -> bool:
    """True iff sigma fixes the center of k pointwise."""
    if k_center.dim == 0:
        raise CriterionError("the real form is not of Hermitian type (k has no center)")
    if not commute(theta, sigma):
        raise CriterionError(f"{sigma.name} does not commute with the Cartan involution")
    for b in k_center.sparse_basis:
        img = sigma.apply_sparse(b)
        if {i: c for i, c in img.items() if c} != b:
            return False
    return True


# -- nilpotency -------------------------------------------------------------------------


def _integer_ad(alg: ChevalleyAlgebra, x: AlgebraElement) -> list[list[int]]:
    m = alg.ad_matrix(x)
    flat = clear_denominators([c for row in m for c in row])
    n = alg.dim
    return [flat[i * n:(i + 1) * n] for i in range(n)]


def _realified_ad(alg: ChevalleyAlgebra, z: ComplexElement) -> list[list[Fraction]]:
    a = alg.ad_matrix(z.re)
    b = alg.ad_matrix(z.im)
    n = alg.dim
    top = [list(a[i]) + [-x for x in b[i]] for i in range(n)]
    bottom = [list(b[i]) + list(a[i]) for i in range(n)]
    return top + bottom


def is_nilpotent(alg: ChevalleyAlgebra, x: Union[AlgebraElement, ComplexElement], *, method: str = "chain") -> bool:
    """Exact test of ad(x)^dim == 0.

    ``method="chain"`` follows the descending images of ad(x) in echelon
    form; ``method="power"`` computes the integer matrix power outright.
    """
    if isinstance(x, ComplexElement):
        if x.im.is_zero():
            x = x.re
        elif x.re.is_zero():
            x = x.im
        else:
            m = _realified_ad(alg, x)
            if method == "power":
                flat = clear_denominators([c for row in m for c in row])
                n = len(m)
                return power_is_zero([flat[i * n:(i + 1) * n] for i in range(n)], alg.dim)
            return nilpotent_by_image_chain(m)
    if x.is_zero():
        return True
    if method == "power":
        return power_is_zero(_integer_ad(alg, x), alg.dim)
    if method != "chain":
        raise ValueError(f"unknown method {method!r}")
    return nilpotent_by_image_chain(alg.ad_matrix(x))


# -- explicit witness ------------------------------------------------------------------


def real_structure(alg: ChevalleyAlgebra, theta: AutoMap, z: ComplexElement) -> ComplexElement:
    """Complex conjugation of g_C with respect to g = u^theta + i u^{-theta}.

    The compact conjugation is e_a -> -e_{-a}, h -> -h extended
    conjugate-linearly; composing with theta gives the conjugation fixing g.
    """
    c = compose(theta, chevalley_involution(alg), certify=False)
    return ComplexElement(c(z.re), -c(z.im))


def lemma2_witness(
    alg: ChevalleyAlgebra,
    theta: AutoMap,
    sigma: AutoMap,
    tau: AutoMap,
    data: NoncompactRootData,
    *,
    method: str = "chain",
) -> ProjectionWitness:
    if not thm10_check(data, sigma, tau):
        raise CriterionError("sigma(beta) = -tau(beta) != +-beta does not hold; no witness is promised")
    st = compose(sigma, tau)
    e_beta = alg.e(data.beta)
    zero = alg.zero()
    rescaled = False
    y = None
    for x in (ComplexElement(e_beta, zero), ComplexElement(zero, e_beta)):
        cand = x + real_structure(alg, theta, x.apply(st))
        if not cand.is_zero():
            y = cand
            break
        rescaled = True
    if y is None:  # pragma: no cover - the two directions span the line
        raise CriterionError("both directions of the beta line give y = 0")
    total = y + y.apply(sigma) + y.apply(tau) + y.apply(st)
    proj = total.scale(Fraction(1, 4))
    if proj.is_zero():
        raise RuntimeError("projection of y vanished; this contradicts sigma(beta) != +-beta")
    fixed = all(proj.apply(m) == proj for m in (sigma, tau, st))
    nilp = is_nilpotent(alg, proj, method=method)
    return ProjectionWitness(x, y, proj, nilp, rescaled, fixed)
