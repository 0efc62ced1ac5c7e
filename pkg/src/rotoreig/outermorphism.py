"""Linear vector maps extended to blades: outermorphisms, determinants and
the scalar secular cubic for Cl(3,0)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    TOL,
    CL30,
    Multivector,
    Signature,
    blade_indices,
    pseudoscalar,
    versor_inverse,
)

__all__ = [
    "VectorMap",
    "apply_vector",
    "apply_outermorphism",
    "determinant",
    "secular_cubic",
    "real_cubic_roots",
    "eigenblade_residual",
]


@dataclass(frozen=True)
class VectorMap:
    """Linear vector-valued map stored as the images of the basis vectors."""

    sig: Signature
    images: tuple[Multivector, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.sig.n:
            raise ValueError(f"expected {self.sig.n} basis images")
        for i, img in enumerate(self.images):
            if img.sig != self.sig:
                raise ValueError("image signature mismatch")
            if img.grades_present(0.0) - {1}:
                raise ValueError(f"image of e{i + 1} is not a pure vector")

    @classmethod
    def from_matrix(cls, sig: Signature, mat) -> "VectorMap":
        """Column j of mat holds the coordinates of the image of e_{j+1}."""
        mat = np.asarray(mat, dtype=float)
        images = tuple(Multivector.vector(sig, mat[:, j]) for j in range(sig.n))
        return cls(sig, images)

    def matrix(self) -> np.ndarray:
        return np.column_stack([img.vector_coords() for img in self.images])

    def compose(self, other: "VectorMap") -> "VectorMap":
        """self after other, as a vector map."""
        return VectorMap(self.sig, tuple(apply_vector(self, g) for g in other.images))


def apply_vector(f: VectorMap, x: Multivector) -> Multivector:
    """Evaluate the map on a grade-1 element."""
    if x.grades_present(0.0) - {1}:
        raise ValueError("apply_vector requires a pure vector")
    out = Multivector.zero(f.sig)
    for i, c in enumerate(x.vector_coords()):
        if c != 0.0:
            out = out + c * f.images[i]
    return out


def apply_outermorphism(f: VectorMap, a: Multivector) -> Multivector:
    """Extend the map to blades: each basis blade maps to the wedge of the
    images of its factors; scalars pass through unchanged."""
    out = np.zeros(f.sig.dim)
    result = Multivector(f.sig, out)
    for mask in range(f.sig.dim):
        c = a.coeffs[mask]
        if c == 0.0:
            continue
        if mask == 0:
            result = result + Multivector.scalar(f.sig, c)
            continue
        term = None
        for i in blade_indices(mask):
            img = f.images[i - 1]
            term = img if term is None else term ^ img
        result = result + c * term
    return result


def determinant(f: VectorMap) -> float:
    """det(F) from the image of the pseudoscalar: F(I) = det(F) I."""
    i = pseudoscalar(f.sig)
    return (apply_outermorphism(f, i) * versor_inverse(i)).scalar_part()


def secular_cubic(f: VectorMap) -> tuple[float, float, float]:
    """Coefficients (a2, a1, a0) of the eigenvalue cubic
    L^3 + a2 L^2 + a1 L + a0 = 0 for a vector map in Cl(3,0)."""
    if f.sig != CL30:
        raise ValueError("secular cubic is defined for Cl(3,0) maps only")
    i3 = pseudoscalar(f.sig)
    e = [Multivector.basis_vector(f.sig, k) for k in (1, 2, 3)]
    f1, f2, f3 = f.images
    a0 = ((f1 ^ f2 ^ f3) | i3).scalar_part()
    a1 = -(((f1 ^ f2 ^ e[2]) + (f1 ^ e[1] ^ f3) + (e[0] ^ f2 ^ f3)) | i3).scalar_part()
    a2 = (((f1 ^ e[1] ^ e[2]) + (e[0] ^ f2 ^ e[2]) + (e[0] ^ e[1] ^ f3)) | i3).scalar_part()
    return (a2, a1, a0)


def real_cubic_roots(a2: float, a1: float, a0: float, tol: float = 1e-9) -> list[float]:
    """Real roots of x^3 + a2 x^2 + a1 x + a0, via the trigonometric method.

    Complex-conjugate root pairs are omitted; a map with such a spectrum has
    no real eigenvalue in those directions.
    """
    # depressed cubic t^3 + p t + q with x = t - a2/3
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2 ** 3 / 27.0 - a2 * a1 / 3.0 + a0
    shift = -a2 / 3.0
    disc = -(4.0 * p ** 3 + 27.0 * q * q)
    scale = max(abs(p) ** 1.5, abs(q), 1.0)
    if abs(disc) <= tol * scale * scale:
        # multiple roots
        if abs(p) <= tol * scale:
            return [shift] * 3
        double = -3.0 * q / (2.0 * p)
        single = 3.0 * q / p
        return sorted([single + shift, double + shift, double + shift])
    if disc > 0.0:
        m = 2.0 * np.sqrt(-p / 3.0)
        phi = np.arccos(np.clip(3.0 * q / (p * m), -1.0, 1.0)) / 3.0
        roots = [m * np.cos(phi - 2.0 * np.pi * k / 3.0) + shift for k in range(3)]
        return sorted(float(r) for r in roots)
    # one real root (Cardano)
    u = np.cbrt(-q / 2.0 + np.sqrt(q * q / 4.0 + p ** 3 / 27.0))
    v = 0.0 if u == 0.0 else -p / (3.0 * u)
    return [float(u + v + shift)]


def eigenblade_residual(f: VectorMap, a: Multivector, lam: float) -> float:
    """Coefficient norm of F(A) - lambda A; zero iff (A, lambda) is an
    eigenblade pair of the outermorphism."""
    return (apply_outermorphism(f, a) - lam * a).norm()
