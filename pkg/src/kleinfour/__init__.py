"""Exact Lie-theoretic computations for Klein four symmetric pairs."""

from .autgrp import (
    AutoMap,
    AutomorphismError,
    KleinFour,
    commute,
    compose,
    diagram_automorphism,
    inner_involution,
    involution_search,
    klein_four,
)
from .chevalley import AlgebraElement, ChevalleyAlgebra, bracket, build_chevalley, compact_form, killing_form
from .crit import (
    CriterionVerdict,
    ProjectionWitness,
    Verdict,
    cor12_decide,
    holomorphic_type_check,
    is_nilpotent,
    lemma2_witness,
    prop9_check,
    thm10_check,
)
from .fixpoint import ReductiveDecomposition, Subalgebra, fixed_subalgebra, identify_complex_type, reductive_decompose
from .realform import (
    NoncompactRootData,
    RealFormDescriptor,
    is_hermitian,
    label_real_form,
    noncompact_root_split,
    real_fixed_form,
    real_form,
)
from .rootsys import DiagramInvolution, RootSystem, build_root_system, diagram_involution, highest_root

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "AutoMap", "AutomorphismError", "ChevalleyAlgebra", "CriterionVerdict",
    "DiagramInvolution", "KleinFour", "NoncompactRootData", "ProjectionWitness", "RealFormDescriptor",
    "ReductiveDecomposition", "RootSystem", "Subalgebra", "Verdict", "bracket", "build_chevalley",
    "build_root_system", "commute", "compact_form", "compose", "cor12_decide", "diagram_automorphism",
    "diagram_involution", "fixed_subalgebra", "highest_root", "holomorphic_type_check",
    "identify_complex_type", "inner_involution", "involution_search", "is_hermitian", "is_nilpotent",
    "killing_form", "klein_four", "label_real_form", "lemma2_witness", "noncompact_root_split",
    "prop9_check", "real_fixed_form", "real_form", "reductive_decompose", "thm10_check",
]
