"""GA Hamiltonian functions for the four physical models and their
rotor-equation eigensolvers.

Natural units throughout (hbar = v_F = m* = 1).  The quantization axis is e3
in every model; eigenspinors are rotors (or pseudoscalar-carried rotors in
the Cl(3,1) odd sector) taking e3 to a model-specific target direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    CL30,
    CL31,
    Multivector,
    pseudoscalar,
    spatial_inversion,
    dagger,
)
from .rotors import rotor_exp, rotor_from_vectors
from .spinors import Spinor

__all__ = [
    "MODELS",
    "ModelParams",
    "EigenSolution",
    "DEGENERACY_TOL",
    "h_monolayer",
    "solve_monolayer",
    "pseudospin_average",
    "spin_average",
    "h_qw",
    "solve_qw",
    "h_two_atoms",
    "solve_two_atoms",
    "h_bilayer",
    "bilayer_spectrum",
    "bilayer_mexican_hat_k",
    "bilayer_quantization_residual",
    "solve_bilayer",
    "expectation_energy",
]

MODELS = ("monolayer", "qw", "atoms", "bilayer")

#: |k| (or coupling) below this counts as a degenerate point of the rotor map
DEGENERACY_TOL = 1e-10

_E1_30 = Multivector.basis_vector(CL30, 1)
_E2_30 = Multivector.basis_vector(CL30, 2)
_E3_30 = Multivector.basis_vector(CL30, 3)
_E12_30 = _E1_30 * _E2_30

_E2_31 = Multivector.basis_vector(CL31, 2)
_E3_31 = Multivector.basis_vector(CL31, 3)
_E4_31 = Multivector.basis_vector(CL31, 4)
_E23_31 = _E2_31 * _E3_31
_E34_31 = _E3_31 * _E4_31
_I31 = pseudoscalar(CL31)
_IE3_31 = _I31 * _E3_31


@dataclass(frozen=True)
class ModelParams:
    """Parameter bundle for one model at one evaluation point."""

    model: str
    kx: float = 0.0
    ky: float = 0.0
    alphaR: float = 0.0
    omega: float = 0.0
    Gamma: float = 0.0
    gamma1: float = 0.0
    U: float = 0.0
    eta: int = 1

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.eta not in (1, -1):
            raise ValueError("eta must be +1 or -1")

    @property
    def k(self) -> float:
        return math.hypot(self.kx, self.ky)

    def to_json_dict(self) -> dict:
        d = {"model": self.model}
        fields = {
            "monolayer": ("kx", "ky"),
            "qw": ("kx", "ky", "alphaR"),
            "atoms": ("omega", "Gamma"),
            "bilayer": ("kx", "ky", "U", "gamma1", "eta"),
        }[self.model]
        for name in fields:
            d[name] = getattr(self, name)
        return d


@dataclass
class EigenSolution:
    """One eigenpair with its rotor diagnostics."""

    energy: float
    spinor: Spinor | None
    target_vector: np.ndarray | None
    band_label: str
    residual: float
    degenerate: bool = False

    def to_json_dict(self) -> dict:
        d = {
            "energy": float(self.energy) + 0.0,
            "band": self.band_label,
            "residual": float(self.residual),
            "degenerate": bool(self.degenerate),
        }
        d["spinor"] = None if self.spinor is None else self.spinor.to_json_dict()
        if self.target_vector is not None:
            d["target"] = [float(x) + 0.0 for x in self.target_vector]
        return d


def _k_vector(kx: float, ky: float) -> Multivector:
    return kx * _E1_30 + ky * _E2_30


def _residual(h_of_psi: Multivector, energy: float, psi: Multivector) -> float:
    return float(np.max(np.abs((h_of_psi - energy * psi).coeffs)))


# ---------------------------------------------------------------------
# monolayer graphene
# ---------------------------------------------------------------------


def h_monolayer(psi: Spinor, kx: float, ky: float) -> Spinor:
    """Massless-band Hamiltonian: H(psi) = k psi e3 in Cl(3,0)."""
    if psi.algebra != "cl30":
        raise ValueError("monolayer model lives in Cl(3,0)")
    return Spinor(_k_vector(kx, ky) * psi.mv * _E3_30)


def solve_monolayer(kx: float, ky: float) -> list[EigenSolution]:
    """Both bands E = -|k|, +|k| with rotor eigenspinors (1 +- khat e3)/sqrt2."""
    k = math.hypot(kx, ky)
    if k <= DEGENERACY_TOL:
        raise ValueError("degenerate Dirac point: rotor undefined at k = 0")
    khat = _k_vector(kx / k, ky / k)
    out = []
    for sign, label in ((-1.0, "valence"), (1.0, "conduction")):
        energy = sign * k
        target = sign * khat
        psi = rotor_from_vectors(_E3_30, target).value
        res = _residual(h_monolayer(Spinor(psi), kx, ky).mv, energy, psi)
        out.append(EigenSolution(energy, Spinor(psi), target.vector_coords(),
                                 label, res))
    return out


def pseudospin_average(psi: Spinor) -> np.ndarray:
    """Pseudospin direction psi e3 ~psi of a normalized Cl(3,0) spinor."""
    if psi.algebra != "cl30":
        raise ValueError("pseudospin average is defined for cl30 spinors")
    norm = (psi.mv * ~psi.mv).scalar_part()
    if abs(norm - 1.0) > 1e-10:
        raise ValueError("spinor must satisfy psi ~psi = 1")
    return (psi.mv * _E3_30 * ~psi.mv).grade(1).vector_coords()


#: spin average of the quantum-well model; same construction as pseudospin
spin_average = pseudospin_average


# ---------------------------------------------------------------------
# electron in a quantum well with Rashba coupling
# ---------------------------------------------------------------------


def h_qw(psi: Spinor, kx: float, ky: float, alphaR: float) -> Spinor:
    """H(psi) = (k^2/2) psi + alphaR e12 k psi e3 in Cl(3,0)."""
    if psi.algebra != "cl30":
        raise ValueError("quantum-well model lives in Cl(3,0)")
    k2 = kx * kx + ky * ky
    kin = (k2 / 2.0) * psi.mv
    so = alphaR * (_E12_30 * _k_vector(kx, ky) * psi.mv * _E3_30)
    return Spinor(kin + so)


def solve_qw(kx: float, ky: float, alphaR: float) -> list[EigenSolution]:
    """Spin-split bands E = k^2/2 -+ k alphaR with in-plane rotor targets."""
    k = math.hypot(kx, ky)
    if k <= DEGENERACY_TOL:
        raise ValueError("degenerate point: rotor undetermined at k = 0")
    if abs(alphaR) <= 1e-12:
        k2 = k * k / 2.0
        return [
            EigenSolution(k2, None, None, "valence", 0.0, degenerate=True),
            EigenSolution(k2, None, None, "conduction", 0.0, degenerate=True),
        ]
    out = []
    k_dot_e12 = (_k_vector(kx, ky) | _E12_30)  # = kx e2 - ky e1
    for sign, label in ((-1.0, "valence"), (1.0, "conduction")):
        energy = k * k / 2.0 + sign * k * alphaR
        coeff = (k * k / 2.0 - energy) / (alphaR * k * k)
        target = coeff * k_dot_e12
        psi = rotor_from_vectors(_E3_30, target).value
        res = _residual(h_qw(Spinor(psi), kx, ky, alphaR).mv, energy, psi)
        out.append(EigenSolution(energy, Spinor(psi), target.vector_coords(),
                                 label, res))
    out.sort(key=lambda s: s.energy)
    return out


# ---------------------------------------------------------------------
# two coupled two-level atoms
# ---------------------------------------------------------------------


def h_two_atoms(psi: Spinor, omega: float, Gamma: float) -> Spinor:
    """Coupled-pair Hamiltonian in Cl(3,1).

    Implemented in the decoupled-consistent form
        H(psi) = (omega/2) e3 (psi - psibar) e3 - Gamma e2 psi e3,
    equivalently -(omega/2) e34 psi e34 + (omega/2) e3 psi e3 - Gamma e2 psi e3,
    whose even/odd sectors carry -+Gamma and -+sqrt(omega^2 + Gamma^2).
    """
    if psi.algebra != "cl31":
        raise ValueError("two-atom model lives in Cl(3,1)")
    # identity used by the splitting: e34 psi e34 == e3 psibar e3
    assert (
        _E34_31 * psi.mv * _E34_31 - _E3_31 * spatial_inversion(psi.mv) * _E3_31
    ).norm() <= 1e-12 * max(1.0, psi.mv.norm())
    odd_part = (psi.mv - spatial_inversion(psi.mv)) / 2.0
    return Spinor(
        omega * (_E3_31 * odd_part * _E3_31) - Gamma * (_E2_31 * psi.mv * _E3_31)
    )


def solve_two_atoms(omega: float, Gamma: float) -> list[EigenSolution]:
    """Four levels: even sector -+Gamma, odd sector -+sqrt(omega^2+Gamma^2).

    Odd eigenspinors are returned as psi = I C with rotor carrier C; the
    stored target vector is C e3 ~C.  The carrier normalization psi ~psi = -1
    makes the odd carrier target -sign(E) * (omega e3 - Gamma e2)/|..|.
    """
    root = math.hypot(omega, Gamma)
    if root <= DEGENERACY_TOL:
        raise ValueError("fully degenerate: omega = Gamma = 0")
    out = []
    # even sector
    if abs(Gamma) <= DEGENERACY_TOL:
        out.append(EigenSolution(0.0, None, None, "even-1", 0.0, degenerate=True))
        out.append(EigenSolution(0.0, None, None, "even-2", 0.0, degenerate=True))
    else:
        for i, energy in enumerate((-Gamma, Gamma), start=1):
            target = -(energy / Gamma) * _E2_31
            phi = math.atan2(target.vector_coords()[1], 0.0)
            psi = rotor_exp(_E23_31, phi).value
            res = _residual(h_two_atoms(Spinor(psi), omega, Gamma).mv, energy, psi)
            out.append(EigenSolution(energy, Spinor(psi), target.vector_coords(),
                                     f"even-{i}", res))
    # odd sector
    for i, energy in enumerate((-root, root), start=1):
        # carrier target in the e2,e3 plane: -(E/root) * (omega e3 - Gamma e2)/root
        alpha = -(energy / root) * (omega / root)   # e3 component
        beta = (energy / root) * (Gamma / root)     # e2 component
        carrier = rotor_exp(_E23_31, math.atan2(beta, alpha)).value
        psi = _I31 * carrier
        res = _residual(h_two_atoms(Spinor(psi), omega, Gamma).mv, energy, psi)
        target = (carrier * _E3_31 * ~carrier).vector_coords()
        out.append(EigenSolution(energy, Spinor(psi), target, f"odd-{i}", res))
    out.sort(key=lambda s: s.energy)
    return out


# ---------------------------------------------------------------------
# bilayer graphene
# ---------------------------------------------------------------------


def h_bilayer(psi: Spinor, params: ModelParams) -> Spinor:
    """H(psi) = eta k psi I e3 - (gamma1/2) e2 (psi - psibar) e3
    + eta U e3 psi e3 in Cl(3,1)."""
    if psi.algebra != "cl31":
        raise ValueError("bilayer model lives in Cl(3,1)")
    k = Multivector.vector(CL31, [params.kx, params.ky, 0.0, 0.0])
    eta = float(params.eta)
    kin = eta * (k * psi.mv * _IE3_31)
    coupling = -(params.gamma1 / 2.0) * (
        _E2_31 * (psi.mv - spatial_inversion(psi.mv)) * _E3_31
    )
    bias = eta * params.U * (_E3_31 * psi.mv * _E3_31)
    return Spinor(kin + coupling + bias)


def bilayer_spectrum(k: float, U: float, gamma1: float) -> list[float]:
    """The four band energies at wave-vector magnitude k, sorted ascending."""
    base = k * k + U * U + gamma1 * gamma1 / 2.0
    inner = 0.5 * math.sqrt(
        gamma1 ** 4 + 4.0 * k * k * (4.0 * U * U + gamma1 * gamma1)
    )
    energies = []
    for s_in in (1.0, -1.0):
        radicand = base + s_in * inner
        if radicand < -1e-12:
            raise ArithmeticError("negative radicand in bilayer spectrum")
        e = math.sqrt(max(radicand, 0.0))
        energies.extend([-e, e])
    return sorted(energies)


def bilayer_mexican_hat_k(U: float, gamma1: float) -> float:
    """Wave vector of the conduction-band minimum for a biased bilayer.

    Closed form from d(E^2)/d(k^2) = 0 of the lower conduction band:
    k*^2 = 2 U^2 (2 U^2 + gamma1^2) / (4 U^2 + gamma1^2).
    """
    denom = 4.0 * U * U + gamma1 * gamma1
    if denom <= 0.0:
        raise ValueError("minimum undefined for U = gamma1 = 0")
    return math.sqrt(2.0 * U * U * (2.0 * U * U + gamma1 * gamma1) / denom)


def bilayer_quantization_residual(
    energy: float, k: float, U: float, gamma1: float
) -> float:
    """ahat^2 - 1 at the candidate energy; zero exactly at spectrum roots."""
    denom = energy * energy * (4.0 * U * U + gamma1 * gamma1)
    if denom <= 1e-14:
        raise ValueError(
            "quantization condition indeterminate (E ~ 0 or U = gamma1 = 0)"
        )
    num = (energy * energy - k * k + U * U) ** 2 + U * U * gamma1 * gamma1
    return num / denom - 1.0


def solve_bilayer(params: ModelParams) -> list[EigenSolution]:
    """Spectrum from the closed form; eigenspinors from the null space of the
    8x8 real coefficient operator, then validated against the rotor picture
    (psi+ e3 ~psi+ must be a unit vector and satisfy the quantization
    condition)."""
    if params.model != "bilayer":
        raise ValueError("expected bilayer parameters")
    from .oracle import ga_operator_matrix  # deferred: oracle imports models

    energies = bilayer_spectrum(params.k, params.U, params.gamma1)
    hop = ga_operator_matrix(lambda s: h_bilayer(s, params), "cl31")
    out = []
    for i, energy in enumerate(energies, start=1):
        label = f"band-{i}"
        # 2-dim null space of (H - E); pick the combination with the largest
        # even part so the rotor diagnostics are well conditioned
        _, svals, vt = np.linalg.svd(hop - energy * np.eye(8))
        basis = vt[-2:]
        even_block = basis[:, :4].T  # maps combo coeffs -> a coefficients
        _, _, wt = np.linalg.svd(even_block)
        combo = wt[0]
        vec = combo @ basis
        even_norm = float(np.linalg.norm(vec[:4]))
        degenerate = (
            abs(energy) <= DEGENERACY_TOL
            or even_norm <= 1e-8
            or svals[-3] <= 1e-8  # null space larger than the complex pair
        )
        if even_norm > 1e-12:
            vec = vec / even_norm
        psi = Spinor.from_coeff_vector("cl31", vec)
        res = _residual(h_bilayer(psi, params).mv, energy, psi.mv)
        target = None
        if not degenerate:
            even = (psi.mv + spatial_inversion(psi.mv)) / 2.0
            ahat = (even * _E3_31 * ~even).grade(1)
            target = ahat.vector_coords()
        out.append(EigenSolution(energy, psi, target, label, res, degenerate))
    return out


# ---------------------------------------------------------------------
# expectation value
# ---------------------------------------------------------------------


def _apply_model(psi: Spinor, params: ModelParams) -> Spinor:
    if params.model == "monolayer":
        return h_monolayer(psi, params.kx, params.ky)
    if params.model == "qw":
        return h_qw(psi, params.kx, params.ky, params.alphaR)
    if params.model == "atoms":
        return h_two_atoms(psi, params.omega, params.Gamma)
    return h_bilayer(psi, params)


def expectation_energy(psi: Spinor, params: ModelParams) -> float:
    """Rayleigh value <psi~ H(psi)> / <psi~ psi> (dagger in Cl(3,1));
    equals the eigenenergy on eigenspinors."""
    h_psi = _apply_model(psi, params)
    if psi.algebra == "cl30":
        bra = ~psi.mv
    else:
        bra = dagger(psi.mv)
    norm = (bra * psi.mv).scalar_part()
    if abs(norm) < 1e-14:
        raise ValueError("cannot normalize a null spinor")
    return (bra * h_psi.mv).scalar_part() / norm
