"""
Periodicity of Grover walks.

A graph is periodic when ``U**tau == I`` for some ``tau >= 1``. This module
decides it two ways: spectrally (every evolution eigenvalue a root of unity,
period = lcm of their orders) and by brute-force matrix powers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .numtheory import factorize
from .spectra import SpectrumReport, spectral_map
from .walk import DEFAULT_TOL, WalkOperators

__all__ = [
    "PeriodicityReport",
    "ClassificationLabel",
    "is_periodic_integral_regular",
    "angle_order",
    "order_of_angle",
    "period_spectral",
    "period_bruteforce",
    "uc_periodicity_predicted",
    "classify_integral_regular_periodic",
    "Q_MAX",
    "TAU_MAX",
]

Q_MAX = 360
TAU_MAX = 144
_INT_TOL = 1e-6


@dataclass(frozen=True)
class PeriodicityReport:
    """Outcome of a periodicity decision.

    ``evidence`` lists ``(angle, order)`` for each distinct evolution eigenvalue
    (spectral method only). ``period`` is ``None`` when not periodic within the
    method's resolution.
    """

    periodic: bool
    period: int | None
    method: str
    evidence: tuple[tuple[float, int | None], ...] = field(default=())


class ClassificationLabel(str, enum.Enum):
    C6 = "C6"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_TRIPARTITE = "complete_tripartite"
    SPECTRUM_K_HALF_ZERO = "spectrum_k_half_zero"
    SPECTRUM_PM_K_HALF_ZERO = "spectrum_pm_k_half_zero"
    NOT_PERIODIC = "not_periodic"


def _integral_values(spectrum: SpectrumReport) -> list[int]:
    out = []
    for v in spectrum.values:
        r = round(v)
        if abs(v - r) > _INT_TOL:
            raise ValueError(f"eigenvalue {v} is not an integer; the graph is not integral")
        out.append(int(r))
    return out


def _allowed(k: int) -> set[int]:
    allowed = {k, -k, 0}
    if k % 2 == 0:
        allowed |= {k // 2, -k // 2}
    return allowed


def is_periodic_integral_regular(spectrum: SpectrumReport, k: int) -> bool:
    """For a connected ``k``-regular integral graph: periodic iff every eigenvalue is in ``{+-k, +-k/2, 0}``.

    Raises ``ValueError`` on a non-integral spectrum, where the test does not apply.
    """
    return set(_integral_values(spectrum)) <= _allowed(k)


def order_of_angle(theta: float, q_max: int = Q_MAX, tol: float = DEFAULT_TOL) -> int | None:
    """Smallest ``q <= q_max`` with ``|exp(i q theta) - 1| < tol``, else ``None``."""
    for q in range(1, q_max + 1):
        if abs(np.exp(1j * q * theta) - 1.0) < tol:
            return q
    return None


def angle_order(mu: float, q_max: int = Q_MAX, tol: float = DEFAULT_TOL) -> int | None:
    """Multiplicative order of ``exp(i arccos mu)``, or ``None`` if above ``q_max``."""
    if abs(mu) > 1.0 + tol:
        raise ValueError(f"|mu| = {abs(mu)} exceeds 1")
    return order_of_angle(float(np.arccos(np.clip(mu, -1.0, 1.0))), q_max, tol)


def period_spectral(
    disc_spectrum: SpectrumReport,
    m: int,
    n: int,
    bipartite: bool,
    q_max: int = Q_MAX,
    tol: float = DEFAULT_TOL,
) -> PeriodicityReport:
    """
    Period from the discriminant spectrum.

    The evolution spectrum is obtained with :func:`spectral_map`; the graph is
    periodic iff every eigenphase has finite order ``<= q_max``, and then the
    period is the lcm of those orders. A negative answer only means "not
    periodic at resolution ``q_max``".
    """
    u_spec = spectral_map(list(disc_spectrum.multiset()), m, n, bipartite)
    evidence = tuple((theta, order_of_angle(theta, q_max, tol)) for theta, _ in u_spec.eigenvalues)
    orders = [q for _, q in evidence]
    if any(q is None for q in orders):
        return PeriodicityReport(False, None, "spectral", evidence)
    return PeriodicityReport(True, lcm(*orders), "spectral", evidence)


def period_bruteforce(ops: WalkOperators, tau_max: int = TAU_MAX, tol: float = DEFAULT_TOL) -> PeriodicityReport:
    """Smallest ``tau <= tau_max`` with ``max|U**tau - I| < tol``, found by repeated multiplication."""
    if tau_max < 1:
        raise ValueError("tau_max must be at least 1")
    u = ops.evolution
    eye = np.eye(u.shape[0])
    power = u.copy()
    for tau in range(1, tau_max + 1):
        if np.max(np.abs(power - eye)) < tol:
            return PeriodicityReport(True, tau, "bruteforce")
        power = power @ u
    return PeriodicityReport(False, None, "bruteforce")


def uc_periodicity_predicted(n: int) -> bool:
    """UC(n) is periodic iff ``n = 2**a * 3**b`` with ``a + b >= 1``."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return set(factorize(n)) <= {2, 3}


def classify_integral_regular_periodic(
    spectrum: SpectrumReport, k: int, n: int, bipartite: bool
) -> ClassificationLabel:
    """
    Category of a connected ``k``-regular integral graph in the periodic classification.

    Returns ``NOT_PERIODIC`` for integral spectra outside ``{+-k, +-k/2, 0}``.
    Raises ``ValueError`` on non-integral spectra, and on spectra that cannot
    belong to a connected ``k``-regular graph with the stated ``n`` and
    bipartiteness.
    """
    vals = set(_integral_values(spectrum))
    if k < 1 or k not in vals:
        raise ValueError(f"degree {k} must be the largest eigenvalue")
    if bipartite != (-k in vals):
        raise ValueError("bipartiteness disagrees with whether -k is an eigenvalue")
    if not vals <= _allowed(k):
        return ClassificationLabel.NOT_PERIODIC

    h = k // 2
    if k % 2 == 1:
        if vals == {k, -k, 0} or (k == 1 and vals == {1, -1}):
            if n != 2 * k:
                raise ValueError(f"spectrum {sorted(vals)} forces n = {2 * k}, got {n}")
            return ClassificationLabel.COMPLETE_BIPARTITE
    elif k == 2:
        if vals == {2, -1} and n == 3:
            return ClassificationLabel.COMPLETE_TRIPARTITE  # C3 = K_{1,1,1}
        if vals == {2, 0, -2} and n == 4:
            return ClassificationLabel.COMPLETE_BIPARTITE  # C4 = K_{2,2}
        if vals == {2, 1, -1, -2} and n == 6:
            return ClassificationLabel.C6
    elif not bipartite:
        if vals == {k, -h, 0}:
            if 2 * n != 3 * k:
                raise ValueError(f"spectrum {sorted(vals)} forces n = {3 * h}, got {n}")
            return ClassificationLabel.COMPLETE_TRIPARTITE
        if vals == {k, h, -h, 0}:
            return ClassificationLabel.SPECTRUM_K_HALF_ZERO
    else:
        if vals == {k, -k, 0}:
            if n != 2 * k:
                raise ValueError(f"spectrum {sorted(vals)} forces n = {2 * k}, got {n}")
            return ClassificationLabel.COMPLETE_BIPARTITE
        if vals == {k, h, -h, -k, 0}:
            return ClassificationLabel.SPECTRUM_PM_K_HALF_ZERO
    raise ValueError(f"no connected {k}-regular graph on {n} vertices has spectrum {sorted(vals)}")
