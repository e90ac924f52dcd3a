"""Pairwise resonant dipole-dipole coupling kernels.

Two atoms sharing a resonant transition exchange photons, which modifies
their spontaneous emission: the real kernel F gives the cooperative decay
rate and G the cooperative frequency shift of the pair. Both depend only
on the dimensionless separation xi = |k_p| r and on the projection
u = d_hat . r_hat of the dipole orientation on the separation axis.
Everything here is pure and vectorizes over xi and u.

All outputs are expressed in the rate unit of the supplied reference decay
rate Gamma (the total population decay rate of the probe transition, twice
the coherence decay rate).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NearFieldError

__all__ = [
    "F_LIMIT_XI",
    "G_CUTOFF_DEFAULT",
    "KernelInput",
    "PairCoupling",
    "kernel_F",
    "kernel_G",
    "pair_coupling",
    "pair_coupling_farfield",
    "coupling_from_separations",
]

# Below this separation the decay kernel is replaced by its exact xi -> 0
# limit; the direct expression is a difference of ~1/xi^3 terms and loses
# accuracy long before the limit stops being an excellent approximation.
F_LIMIT_XI = 1e-4

# The shift kernel diverges as 1/xi^3 at contact, which is outside the
# validity of the two-level point-dipole treatment; refuse below this.
G_CUTOFF_DEFAULT = 1e-3


@dataclass(frozen=True)
class KernelInput:
    """Validated arguments for the scalar kernels.

    xi is the dimensionless separation |k_p| r (>= 0), u the projection
    cosine of the dipole orientation on the pair axis (|u| <= 1) and gamma
    the reference decay rate (> 0).
    """

    xi: float
    u: float
    gamma: float

    def __post_init__(self) -> None:
        if self.xi < 0:
            raise ValueError(f"xi must be >= 0, got {self.xi}")
        if abs(self.u) > 1 + 1e-12:
            raise ValueError(f"|u| must be <= 1, got {self.u}")
        if self.gamma <= 0:
            raise ValueError(f"gamma must be > 0, got {self.gamma}")


@dataclass(frozen=True)
class PairCoupling:
    """Complex pair coupling with its geometric ingredients.

    value is the coupling rate K, separation the vector r_alpha - r_beta,
    and phase the propagation factor exp(-i k_p . (r_alpha - r_beta))
    (unit modulus).
    """

    value: complex
    separation: np.ndarray
    phase: complex


def _validate(xi, u, gamma: float) -> tuple[np.ndarray, np.ndarray]:
    xi = np.asarray(xi, dtype=float)
    u = np.asarray(u, dtype=float)
    if np.any(xi < 0):
        raise ValueError("xi must be >= 0")
    if np.any(np.abs(u) > 1 + 1e-12):
        raise ValueError("|u| must be <= 1")
    if gamma <= 0:
        raise ValueError("gamma must be > 0")
    return xi, np.clip(u, -1.0, 1.0)


def kernel_F(xi, u, gamma: float):
    """Cooperative decay rate of a pair of resonant dipoles.

    F(xi, u) = (3 Gamma / 2) { (1 - u^2) sin(xi)/xi
                               + (1 - 3 u^2) (cos(xi)/xi^2 - sin(xi)/xi^3) }

    At contact F -> Gamma for any orientation, which is the superradiant
    doubling of the pair decay; far apart it falls off as 1/xi and the
    atoms radiate independently.

    Parameters
    ----------
    xi : float or array
        Dimensionless separation |k_p| r, >= 0.
    u : float or array
        Dipole projection cosine on the pair axis, in [-1, 1].
    gamma : float
        Reference decay rate Gamma (> 0).

    Returns
    -------
    float or ndarray
        Decay kernel in the same units as ``gamma``.
    """
    xi, u = _validate(xi, u, gamma)
    scalar = xi.ndim == 0 and u.ndim == 0
    xi, u = np.atleast_1d(xi), np.atleast_1d(u)
    xi_b = np.broadcast_to(xi, np.broadcast_shapes(xi.shape, u.shape)).copy()
    u_b = np.broadcast_to(u, xi_b.shape)

    small = xi_b < F_LIMIT_XI
    xi_safe = np.where(small, 1.0, xi_b)
    s, c = np.sin(xi_safe), np.cos(xi_safe)
    val = 1.5 * gamma * (
        (1.0 - u_b**2) * s / xi_safe
        + (1.0 - 3.0 * u_b**2) * (c / xi_safe**2 - s / xi_safe**3)
    )
    val = np.where(small, gamma, val)
    return float(val[0]) if scalar else val.reshape(np.broadcast_shapes(xi.shape, u.shape))


def kernel_G(xi, u, gamma: float, cutoff: float = G_CUTOFF_DEFAULT):
    """Cooperative frequency shift of a pair of resonant dipoles.

    G(xi, u) = (3 Gamma / 4) { -(1 - u^2) cos(xi)/xi
                               + (1 - 3 u^2) (sin(xi)/xi^2 + cos(xi)/xi^3) }

    Diverges as 1/xi^3 at contact (near-field divergence of the point
    dipole model), so separations below ``cutoff`` are refused.

    Raises
    ------
    NearFieldError
        If any xi is below ``cutoff``.
    """
    xi, u = _validate(xi, u, gamma)
    if np.any(xi < cutoff):
        raise NearFieldError(
            f"near-field divergence: xi below cutoff {cutoff:g} "
            f"(min xi = {float(np.min(xi)):.3e})"
        )
    s, c = np.sin(xi), np.cos(xi)
    val = 0.75 * gamma * (
        -(1.0 - u**2) * c / xi
        + (1.0 - 3.0 * u**2) * (s / xi**2 + c / xi**3)
    )
    return float(val) if val.ndim == 0 else val


def pair_coupling(
    r_alpha,
    r_beta,
    k_p,
    dipole,
    gamma: float,
    cutoff: float = G_CUTOFF_DEFAULT,
) -> PairCoupling:
    """Propagation-phase-dressed coupling K between two atoms.

    K = (F + 2 i G) / 2 * exp(-i k_p . (r_alpha - r_beta))

    evaluated at xi = |k_p| |r_alpha - r_beta| and u = d_hat . r_hat.
    Swapping the atoms conjugates only the phase factor; F and G are even
    in the separation.

    Parameters
    ----------
    r_alpha, r_beta : (3,) array_like
        Atom positions (length units consistent with ``k_p``).
    k_p : (3,) array_like
        Probe wave vector.
    dipole : (3,) array_like
        Unit dipole orientation.
    gamma : float
        Reference decay rate Gamma.
    """
    r_alpha = np.asarray(r_alpha, dtype=float)
    r_beta = np.asarray(r_beta, dtype=float)
    k_vec = np.asarray(k_p, dtype=float)
    d_hat = np.asarray(dipole, dtype=float)
    if abs(np.linalg.norm(d_hat) - 1.0) > 1e-6:
        raise ValueError("dipole must be a unit vector")

    sep = r_alpha - r_beta
    r = float(np.linalg.norm(sep))
    if r == 0.0:
        raise ValueError("coincident positions: r_alpha == r_beta")
    k_mag = float(np.linalg.norm(k_vec))
    xi = k_mag * r
    u = float(d_hat @ sep) / r
    F = kernel_F(xi, u, gamma)
    G = kernel_G(xi, u, gamma, cutoff=cutoff)
    phase = np.exp(-1j * float(k_vec @ sep))
    return PairCoupling(value=0.5 * (F + 2j * G) * phase, separation=sep, phase=phase)


def pair_coupling_farfield(xi, phase_arg, gamma: float):
    """Leading 1/xi term of the dressed coupling, in the normalization
    of the bare kernel combination F + 2 i G (twice the pair coupling K).

    Returns (3 Gamma / 2) (-i e^{i xi}) / xi * e^{-i phase_arg}.
    """
    xi = np.asarray(xi, dtype=float)
    if np.any(xi <= 0):
        raise ValueError("xi must be > 0")
    if gamma <= 0:
        raise ValueError("gamma must be > 0")
    val = 1.5 * gamma * (-1j * np.exp(1j * xi)) / xi * np.exp(-1j * np.asarray(phase_arg))
    return complex(val) if val.ndim == 0 else val


def coupling_from_separations(
    separations: np.ndarray,
    k_mag: float,
    dipole: np.ndarray,
    gamma: float,
    k_hat: np.ndarray | None = None,
) -> np.ndarray:
    """Vectorized K over an array of separation vectors.

    ``separations`` has shape (n, 3) holding r_alpha - r_beta per pair.
    The propagation direction defaults to +z. Callers are responsible for
    excluding zero separations; values below the shift-kernel cutoff raise.
    """
    sep = np.asarray(separations, dtype=float)
    d_hat = np.asarray(dipole, dtype=float)
    k_hat = np.array([0.0, 0.0, 1.0]) if k_hat is None else np.asarray(k_hat, dtype=float)
    r = np.linalg.norm(sep, axis=-1)
    xi = k_mag * r
    u = (sep @ d_hat) / r
    F = kernel_F(xi, u, gamma)
    G = kernel_G(xi, u, gamma)
    phase = np.exp(-1j * k_mag * (sep @ k_hat))
    return 0.5 * (F + 2j * G) * phase
