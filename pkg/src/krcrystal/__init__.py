"""Kirillov-Reshetikhin crystals of type D_n^(1): tableaux, rigged configurations and the bijection between them."""

from .affine import (
    KRElement,
    SpinRow,
    affine_graph,
    coenergy_single,
    e0,
    f0,
    gamma_rc,
    gamma_rc_inv,
    iota,
    iota_inv,
    kr_crystal,
    rc_crystal_single,
    sigma,
    sigma_rc,
)
from .base import CartanD, Weight, classical_decomposition, complement, conjugate, partition
from .bijection import DeltaTrace, delta, fill, fill_highest, phi, phi_with_traces, predict_column
from .harness import Caps, VerificationReport, run_corpus, run_suite
from .pm_diagrams import PMDiagram, enumerate_diagrams, frakS, gamma, gamma_inv
from .rigged import (
    RiggedConfiguration,
    TensorSpec,
    cocharge,
    highest_weight_rcs,
    is_valid,
    kleber_rc,
    rc_crystal,
    rc_e,
    rc_f,
    vacancy,
)
from .tableaux import (
    CrystalGraph,
    KNTableau,
    KRTableau,
    TensorElement,
    apply_e,
    apply_f,
    classical_crystal,
    highest_tableau,
    to_highest,
    weight,
)

__all__ = [
    "Caps",
    "CartanD",
    "CrystalGraph",
    "DeltaTrace",
    "KNTableau",
    "KRElement",
    "KRTableau",
    "PMDiagram",
    "RiggedConfiguration",
    "SpinRow",
    "TensorElement",
    "TensorSpec",
    "VerificationReport",
    "Weight",
    "affine_graph",
    "apply_e",
    "apply_f",
    "classical_crystal",
    "classical_decomposition",
    "cocharge",
    "coenergy_single",
    "complement",
    "conjugate",
    "delta",
    "e0",
    "enumerate_diagrams",
    "f0",
    "fill",
    "fill_highest",
    "frakS",
    "gamma",
    "gamma_inv",
    "gamma_rc",
    "gamma_rc_inv",
    "highest_tableau",
    "highest_weight_rcs",
    "iota",
    "iota_inv",
    "is_valid",
    "kleber_rc",
    "kr_crystal",
    "partition",
    "phi",
    "phi_with_traces",
    "predict_column",
    "rc_crystal",
    "rc_crystal_single",
    "rc_e",
    "rc_f",
    "run_corpus",
    "run_suite",
    "sigma",
    "sigma_rc",
    "to_highest",
    "vacancy",
    "weight",
]
