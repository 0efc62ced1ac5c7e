"""Matrix-representation oracle: independent eigenvalues for every model.

The dense eigensolvers here are hand-rolled (cyclic Jacobi on real symmetric
matrices, hermitian input via the real symmetric embedding) so the oracle
shares no code path with the rotor method it checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import models
from .spinors import (
    Spinor,
    column_to_spinor_cl30,
    column_to_spinor_cl31,
    spinor_to_column_cl30,
    spinor_to_column_cl31,
    pauli_matrix,
    pauli_action_cl30,
    ga_action_cl31,
    cl31_matrix_rep,
)

__all__ = [
    "matrix_monolayer",
    "matrix_qw",
    "matrix_two_atoms",
    "ga_operator_matrix",
    "jacobi_eigh",
    "eig_dense",
    "CrossCheckReport",
    "cross_check",
]

#: energy-matching tolerance: absolute for |E| <= 1, relative above
MATCH_TOL = 1e-10


def matrix_monolayer(kx: float, ky: float) -> np.ndarray:
    """2x2 massless Hamiltonian [[0, kx - i ky], [kx + i ky, 0]]."""
    return np.array([[0.0, kx - 1j * ky], [kx + 1j * ky, 0.0]])


def matrix_qw(kx: float, ky: float, alphaR: float) -> np.ndarray:
    """(k^2/2) 1 + alphaR (ky sigma_x - kx sigma_y)."""
    k2 = kx * kx + ky * ky
    return (k2 / 2.0) * np.eye(2) + alphaR * (
        ky * pauli_matrix(1) - kx * pauli_matrix(2)
    )


def matrix_two_atoms(omega: float, Gamma: float) -> np.ndarray:
    """(omega/2)(sigma_z x 1 + 1 x sigma_z) + Gamma sigma_x x sigma_x."""
    sz, sx = pauli_matrix(3), pauli_matrix(1)
    one = np.eye(2)
    return (omega / 2.0) * (np.kron(sz, one) + np.kron(one, sz)) + Gamma * np.kron(
        sx, sx
    )


def ga_operator_matrix(h, algebra: str) -> np.ndarray:
    """Real matrix of a real-linear GA Hamiltonian on spinor coefficients.

    Column j holds the coefficients of h applied to the j-th basis spinor;
    an output leaving the spinor subspace raises (model implementation bug).
    """
    n = {"cl30": 4, "cl31": 8}[algebra]
    cols = []
    for j in range(n):
        v = np.zeros(n)
        v[j] = 1.0
        out = h(Spinor.from_coeff_vector(algebra, v))
        cols.append(out.coeff_vector())
    return np.column_stack(cols)


def jacobi_eigh(a, vectors: bool = False, tol: float = 1e-14, max_sweeps: int = 100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi.

    Returns sorted eigenvalues (and, optionally, the matching eigenvector
    columns)."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or n > 16:
        raise ValueError("expected a small square matrix")
    if np.max(np.abs(a - a.T)) > 1e-12 * max(1.0, np.max(np.abs(a))):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2.0
    v = np.eye(n)
    scale = max(1.0, float(np.max(np.abs(a))))
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(a[offdiag] ** 2))
        if off <= tol * scale * n:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol * scale / n:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi iteration failed to converge")
    vals = np.diag(a).copy()
    order = np.argsort(vals)
    if vectors:
        return vals[order], v[:, order]
    return vals[order]


def eig_dense(m) -> np.ndarray:
    """Sorted real eigenvalues of a real symmetric or complex hermitian
    matrix (each hermitian eigenvalue reported once)."""
    m = np.asarray(m)
    if np.iscomplexobj(m):
        if np.max(np.abs(m - m.conj().T)) > 1e-12 * max(1.0, np.max(np.abs(m))):
            raise ValueError("complex input must be hermitian")
        re, im = m.real, m.imag
        embed = np.block([[re, -im], [im, re]])
        doubled = jacobi_eigh(embed)
        # the embedding doubles every eigenvalue; collapse adjacent pairs
        return (doubled[0::2] + doubled[1::2]) / 2.0
    return jacobi_eigh(m)


# ---------------------------------------------------------------------
# cross checks
# ---------------------------------------------------------------------


@dataclass
class CrossCheckReport:
    params: models.ModelParams
    rotor_energies: list[float]
    oracle_energies: list[float]
    max_delta: float
    residuals: list[float]
    action_equivalence: bool
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "model": self.params.model,
            "params": self.params.to_json_dict(),
            "rotor_energies": [float(e) for e in self.rotor_energies],
            "oracle_energies": [float(e) for e in self.oracle_energies],
            "max_delta": float(self.max_delta),
            "residuals": [float(r) for r in self.residuals],
            "action_equivalence": bool(self.action_equivalence),
            "pass": bool(self.passed),
        }


def _energy_delta(rotor: list[float], oracle: list[float]) -> float:
    if len(rotor) != len(oracle):
        raise ValueError("eigenvalue count mismatch")
    deltas = [
        abs(r - o) / max(1.0, abs(o)) for r, o in zip(sorted(rotor), sorted(oracle))
    ]
    return max(deltas)


def _collapse_pairs(vals: np.ndarray, tol: float = 1e-8) -> list[float]:
    """Halve a spectrum that comes in multiplicity-2 pairs."""
    if len(vals) % 2:
        raise ValueError("odd spectrum cannot pair")
    out = []
    scale = max(1.0, float(np.max(np.abs(vals))))
    for i in range(0, len(vals), 2):
        if abs(vals[i + 1] - vals[i]) > tol * scale:
            raise ValueError("spectrum does not come in multiplicity-2 pairs")
        out.append(float((vals[i] + vals[i + 1]) / 2.0))
    return out


# fixed spinors used for the per-report action-equivalence spot check
_SPOT_RNG = np.random.RandomState(20140)
_SPOT_COLS_2 = _SPOT_RNG.standard_normal((2, 2)) + 1j * _SPOT_RNG.standard_normal((2, 2))
_SPOT_COLS_4 = _SPOT_RNG.standard_normal((2, 4)) + 1j * _SPOT_RNG.standard_normal((2, 4))


def _action_equivalence_ok(algebra: str, tol: float = 1e-12) -> bool:
    try:
        if algebra == "cl30":
            for col in _SPOT_COLS_2:
                psi = column_to_spinor_cl30(col)
                for i in (1, 2, 3):
                    lhs = spinor_to_column_cl30(pauli_action_cl30(i, psi))
                    if np.max(np.abs(lhs - pauli_matrix(i) @ col)) > tol:
                        return False
        else:
            for col in _SPOT_COLS_4:
                psi = column_to_spinor_cl31(col)
                for i in (1, 2, 3, 4):
                    lhs = spinor_to_column_cl31(ga_action_cl31("vector", psi, i))
                    rhs = cl31_matrix_rep(1 << (i - 1)) @ col
                    if np.max(np.abs(lhs - rhs)) > tol:
                        return False
                lhs = spinor_to_column_cl31(ga_action_cl31("imaginary", psi))
                if np.max(np.abs(lhs - 1j * col)) > tol:
                    return False
    except ValueError:
        return False
    return True


def cross_check(params: models.ModelParams, tol: float = MATCH_TOL) -> CrossCheckReport:
    """Compare rotor-method energies against the matrix oracle for one
    parameter point."""
    if params.model == "monolayer":
        sols = models.solve_monolayer(params.kx, params.ky)
        oracle = list(eig_dense(matrix_monolayer(params.kx, params.ky)))
        algebra = "cl30"
    elif params.model == "qw":
        sols = models.solve_qw(params.kx, params.ky, params.alphaR)
        oracle = list(eig_dense(matrix_qw(params.kx, params.ky, params.alphaR)))
        algebra = "cl30"
    elif params.model == "atoms":
        sols = models.solve_two_atoms(params.omega, params.Gamma)
        oracle = list(eig_dense(matrix_two_atoms(params.omega, params.Gamma)))
        algebra = "cl31"
    else:
        sols = models.solve_bilayer(params)
        hop = ga_operator_matrix(lambda s: models.h_bilayer(s, params), "cl31")
        oracle = _collapse_pairs(jacobi_eigh(hop))
        algebra = "cl31"
    rotor = [s.energy for s in sols]
    residuals = [s.residual for s in sols]
    max_delta = _energy_delta(rotor, oracle)
    action_ok = _action_equivalence_ok(algebra)
    passed = max_delta <= tol and action_ok
    return CrossCheckReport(
        params=params,
        rotor_energies=sorted(rotor),
        oracle_energies=sorted(oracle),
        max_delta=max_delta,
        residuals=residuals,
        action_equivalence=action_ok,
        passed=passed,
    )
