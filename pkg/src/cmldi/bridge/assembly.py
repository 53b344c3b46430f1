"""Global stiffness and mass assembly for the space frame.

Beam elements are 12-dof Euler-Bernoulli members with consistent mass
(translational and torsional inertia, no bending rotary inertia).  Bar
elements contribute axial stiffness and consistent translational mass.
Element matrices are symmetrized after rotation so the assembled K and M
are exactly symmetric.
"""

from __future__ import annotations

import numpy as np

from cmldi.bridge.model import DOF_PER_NODE, BeamElement, FrameModel
from cmldi.errors import InvalidInput


def _rotation(dx: np.ndarray) -> np.ndarray:
    """Local axes for a member with direction vector dx."""
    ex = dx / np.linalg.norm(dx)
    up = np.array([0.0, 0.0, 1.0])
    if abs(float(ex @ up)) > 0.99:
        up = np.array([1.0, 0.0, 0.0])
    ey = np.cross(up, ex)
    ey /= np.linalg.norm(ey)
    ez = np.cross(ex, ey)
    return np.vstack([ex, ey, ez])


def beam_stiffness_local(e: BeamElement, length: float) -> np.ndarray:
    E = e.material.youngs_modulus
    G = e.material.shear_modulus
    A, Iy, Iz, J = e.section.area, e.section.iy, e.section.iz, e.section.j
    L = length
    k = np.zeros((12, 12))
    ax = E * A / L
    tor = G * J / L
    # bending in the local x-y plane (uses Iz)
    az, bz, cz, dz = 12 * E * Iz / L**3, 6 * E * Iz / L**2, 4 * E * Iz / L, 2 * E * Iz / L
    # bending in the local x-z plane (uses Iy)
    ay, by, cy, dy = 12 * E * Iy / L**3, 6 * E * Iy / L**2, 4 * E * Iy / L, 2 * E * Iy / L

    k[0, 0] = k[6, 6] = ax
    k[0, 6] = k[6, 0] = -ax
    k[3, 3] = k[9, 9] = tor
    k[3, 9] = k[9, 3] = -tor

    for (u, r, uu, rr, a, b, c, d, s) in (
        (1, 5, 7, 11, az, bz, cz, dz, 1.0),
        (2, 4, 8, 10, ay, by, cy, dy, -1.0),
    ):
        k[u, u] = k[uu, uu] = a
        k[u, uu] = k[uu, u] = -a
        k[r, r] = k[rr, rr] = c
        k[r, rr] = k[rr, r] = d
        k[u, r] = k[r, u] = s * b
        k[u, rr] = k[rr, u] = s * b
        k[uu, r] = k[r, uu] = -s * b
        k[uu, rr] = k[rr, uu] = -s * b
    return k


def beam_mass_local(e: BeamElement, length: float) -> np.ndarray:
    rho, A = e.material.density, e.section.area
    L = length
    m_line = rho * A + e.extra_mass_per_length
    m = m_line * L
    rx2 = (e.section.iy + e.section.iz) / A  # polar radius of gyration^2
    M = np.zeros((12, 12))

    M[0, 0] = M[6, 6] = m / 3.0
    M[0, 6] = M[6, 0] = m / 6.0
    M[3, 3] = M[9, 9] = m * rx2 / 3.0
    M[3, 9] = M[9, 3] = m * rx2 / 6.0

    for (u, r, uu, rr, s) in ((1, 5, 7, 11, 1.0), (2, 4, 8, 10, -1.0)):
        M[u, u] = M[uu, uu] = 13.0 * m / 35.0
        M[u, uu] = M[uu, u] = 9.0 * m / 70.0
        M[r, r] = M[rr, rr] = m * L**2 / 105.0
        M[r, rr] = M[rr, r] = -m * L**2 / 140.0
        M[u, r] = M[r, u] = s * 11.0 * m * L / 210.0
        M[uu, rr] = M[rr, uu] = -s * 11.0 * m * L / 210.0
        M[u, rr] = M[rr, u] = -s * 13.0 * m * L / 420.0
        M[uu, r] = M[r, uu] = s * 13.0 * m * L / 420.0
    return M


def _beam_global(e: BeamElement, model: FrameModel) -> tuple[np.ndarray, np.ndarray]:
    dx = model.nodes[e.node_j] - model.nodes[e.node_i]
    L = float(np.linalg.norm(dx))
    R = _rotation(dx)
    T = np.zeros((12, 12))
    for b in range(4):
        T[3 * b : 3 * b + 3, 3 * b : 3 * b + 3] = R
    k = T.T @ beam_stiffness_local(e, L) @ T
    m = T.T @ beam_mass_local(e, L) @ T
    return 0.5 * (k + k.T), 0.5 * (m + m.T)


def _bar_global(e: BeamElement, model: FrameModel) -> tuple[np.ndarray, np.ndarray]:
    dx = model.nodes[e.node_j] - model.nodes[e.node_i]
    L = float(np.linalg.norm(dx))
    n = dx / L
    EA_L = e.material.youngs_modulus * e.section.area / L
    nn = EA_L * np.outer(n, n)
    k = np.zeros((12, 12))
    k[0:3, 0:3] = nn
    k[6:9, 6:9] = nn
    k[0:3, 6:9] = -nn
    k[6:9, 0:3] = -nn
    m_tot = (e.material.density * e.section.area + e.extra_mass_per_length) * L
    eye = np.eye(3)
    m = np.zeros((12, 12))
    m[0:3, 0:3] = m[6:9, 6:9] = m_tot / 3.0 * eye
    m[0:3, 6:9] = m[6:9, 0:3] = m_tot / 6.0 * eye
    return 0.5 * (k + k.T), 0.5 * (m + m.T)


def assemble(model: FrameModel) -> tuple[np.ndarray, np.ndarray]:
    """Return the global (K, M) of the full, unconstrained model."""
    n = model.n_dof
    K = np.zeros((n, n))
    M = np.zeros((n, n))
    for e in model.elements:
        if e.kind == "beam":
            k, m = _beam_global(e, model)
        else:
            k, m = _bar_global(e, model)
        dofs = np.r_[
            DOF_PER_NODE * e.node_i + np.arange(6),
            DOF_PER_NODE * e.node_j + np.arange(6),
        ]
        ix = np.ix_(dofs, dofs)
        K[ix] += k
        M[ix] += m
    return K, M


def free_dofs(model: FrameModel) -> np.ndarray:
    fixed = set(model.fixed_dofs().tolist())
    free = np.array([d for d in range(model.n_dof) if d not in fixed], dtype=int)
    if free.size == 0:
        raise InvalidInput("all degrees of freedom are fixed")
    return free


def rayleigh_damping(K: np.ndarray, M: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    return alpha * M + beta * K
