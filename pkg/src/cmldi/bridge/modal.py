"""Natural frequencies and mode shapes of a constrained frame model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from cmldi.bridge.assembly import assemble, free_dofs
from cmldi.bridge.model import FrameModel
from cmldi.bridge.signatures import ModalSignature
from cmldi.errors import InvalidInput, NumericalFailure


@dataclass(frozen=True)
class ModalBasis:
    """Mass-normalized eigenpairs of K phi = omega^2 M phi on the free dofs."""

    omega: np.ndarray  # (m,) rad/s, ascending
    phi: np.ndarray  # (n_free, m), phi.T @ M @ phi = I
    free: np.ndarray  # global dof indices of the rows of phi
    n_dof: int

    @property
    def frequencies_hz(self) -> np.ndarray:
        return self.omega / (2.0 * np.pi)

    def rows_for_dofs(self, dofs) -> np.ndarray:
        """Mode-shape rows for the given global dofs (zeros where fixed)."""
        lookup = -np.ones(self.n_dof, dtype=int)
        lookup[self.free] = np.arange(self.free.size)
        out = np.zeros((len(dofs), self.phi.shape[1]))
        for r, d in enumerate(dofs):
            if lookup[d] >= 0:
                out[r] = self.phi[lookup[d]]
        return out


def eig_basis(model: FrameModel, n_modes: int | None = None) -> ModalBasis:
    """Solve the generalized symmetric eigenproblem on the constrained model.

    ``n_modes=None`` returns the complete basis, which the modal transient
    solver needs for exact equivalence with direct integration.
    """
    K, M = assemble(model)
    free = free_dofs(model)
    Kff = K[np.ix_(free, free)]
    Mff = M[np.ix_(free, free)]
    n_free = free.size
    if n_modes is not None:
        if n_modes < 1:
            raise InvalidInput("n_modes must be positive")
        if n_modes > n_free:
            raise NumericalFailure(
                f"requested {n_modes} modes but only {n_free} free dofs exist"
            )
    try:
        if n_modes is not None and n_modes < n_free:
            w, v = sla.eigh(Kff, Mff, subset_by_index=[0, n_modes - 1])
        else:
            w, v = sla.eigh(Kff, Mff)
    except np.linalg.LinAlgError as exc:  # non positive definite mass
        raise NumericalFailure(f"generalized eigensolve failed: {exc}") from exc
    if w[0] <= 0.0:
        raise NumericalFailure(
            "non-positive eigenvalue: model has a rigid-body or mechanism mode"
        )
    return ModalBasis(omega=np.sqrt(w), phi=v, free=free, n_dof=model.n_dof)


def modal_analysis(model: FrameModel, n_modes: int = 14) -> ModalSignature:
    basis = eig_basis(model, n_modes=n_modes)
    return ModalSignature(frequencies=basis.frequencies_hz[:n_modes])
