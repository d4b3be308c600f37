"""
Perfect state transfer (PST) between vertex-type states.

PST from ``u`` to ``v`` at time ``tau`` means ``U**tau d^T e_u = gamma d^T e_v``
with ``|gamma| = 1``. The vertex block ``d U**tau d^T`` equals ``T_tau(P)``
(Chebyshev polynomial of the discriminant), which gives both the brute-force
detector and, for circulants, an exact criterion in terms of the
discriminant eigenvalues in index order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistencyError
from .graphs import CirculantSpec, cayley, unitary_cayley_spec
from .periodicity import period_bruteforce, period_spectral, uc_periodicity_predicted
from .spectra import circulant_spectrum, eigenprojectors, eigenvalue_support, uc_spectrum
from .walk import WalkOperators, build_operators

__all__ = [
    "PSTCertificate",
    "CriterionResult",
    "UCPSTResult",
    "chebyshev",
    "chebyshev_trig",
    "chebyshev_of_matrix",
    "transfer_block",
    "pst_criterion_circulant",
    "pst_necessary_filter",
    "pst_bruteforce",
    "pst_no_go_equal_eigs",
    "uc_pst_classification",
    "TOL_AMPLITUDE",
    "TAU_MAX_PST",
]

TOL_AMPLITUDE = 1e-7
TAU_MAX_PST = 100
_MARGIN_WARN = 1e-3
_ROUNDING = 1e-10


def chebyshev(tau: int, x):
    """
    Chebyshev polynomial of the first kind ``T_tau(x)`` by the three-term recurrence.

    ``x`` may be a scalar or an array; the result has the same shape.
    """
    if tau < 0:
        raise ValueError("degree must be non-negative")
    x = np.asarray(x, dtype=np.float64)
    t_prev, t = np.ones_like(x), x.copy()
    if tau == 0:
        return t_prev if t_prev.ndim else float(t_prev)
    for _ in range(tau - 1):
        t_prev, t = t, 2.0 * x * t - t_prev
    return t if t.ndim else float(t)


def chebyshev_trig(tau: int, x):
    """``cos(tau * arccos x)`` for ``|x| <= 1``; the trigonometric form of ``T_tau``."""
    return np.cos(tau * np.arccos(np.clip(x, -1.0, 1.0)))


def chebyshev_of_matrix(tau: int, p: np.ndarray) -> np.ndarray:
    """``T_tau(P)`` as ``sum_r T_tau(mu_r) E_r`` over the eigenprojectors of ``P``."""
    projs = eigenprojectors(p)
    return sum(chebyshev(tau, e.eigenvalue) * e.projector for e in projs)


def transfer_block(ops: WalkOperators, tau: int, tol: float = 1e-8) -> np.ndarray:
    """
    Vertex block ``d U**tau d^T``, verified against ``T_tau(P)``.

    Raises
    ------
    ConsistencyError
        If the two disagree by ``tol`` or more in max norm.
    """
    if tau < 0:
        raise ValueError("tau must be non-negative")
    y = ops.boundary.T.copy()
    for _ in range(tau):
        y = ops.evolution @ y
    block = ops.boundary @ y
    err = float(np.max(np.abs(block - chebyshev_of_matrix(tau, ops.discriminant))))
    if err >= tol:
        raise ConsistencyError(f"d U^{tau} d^T differs from T_{tau}(P) by {err:.3e}")
    return block


@dataclass(frozen=True)
class PSTCertificate:
    source: int
    target: int
    time: int
    phase: complex
    method: str

    def key(self) -> tuple[int, int, int]:
        return (self.time, self.source, self.target)


@dataclass(frozen=True)
class CriterionResult:
    """Verdict of the circulant PST criterion with per-condition diagnostics.

    ``values`` are ``T_tau(mu_j)`` in index order and ``sign_bits`` the nearest
    ``k_j`` with ``T_tau(mu_j) ~ (-1)**k_j``. ``margin`` is the smallest
    nonzero distance of any ``|T_tau(mu_j)|`` from 1, ignoring deviations at
    rounding level (1.0 when every value is exactly unimodular);
    ``near_degenerate`` flags margins under 1e-3, where a value sits close to
    the accept/reject boundary.
    """

    holds: bool
    antipodal: bool
    all_unimodular: bool
    alternating: bool
    values: tuple[float, ...]
    sign_bits: tuple[int, ...]
    margin: float
    near_degenerate: bool


def pst_criterion_circulant(
    spec: CirculantSpec, u: int, v: int, tau: int, tol: float = TOL_AMPLITUDE, mu: np.ndarray | None = None
) -> CriterionResult:
    """
    Decide PST from ``u`` to ``v`` at time ``tau`` on a connected circulant.

    With ``mu_j = lambda_j / |C|`` in index order ``j = 0..n-1``, PST holds iff
    (i) ``n`` is even and ``u - v = n/2 (mod n)``, (ii) every ``T_tau(mu_j)``
    is ``+-1``, and (iii) consecutive values alternate in sign.
    """
    n = spec.n
    if u == v:
        raise ValueError("source and target must differ")
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError("vertex out of range")
    if not spec.generates():
        raise ValueError("circulant is disconnected")
    if mu is None:
        mu = np.asarray(circulant_spectrum(spec).indexed) / spec.degree
    t = chebyshev(tau, mu)
    antipodal = n % 2 == 0 and (u - v) % n == n // 2
    mod = np.abs(t)
    all_unimodular = bool(np.all(np.abs(mod - 1.0) <= tol))
    bits = tuple(int(x < 0) for x in t)
    alternating = all(bits[j] != bits[j + 1] for j in range(n - 1))
    dev = np.abs(mod - 1.0)
    dev = dev[dev > _ROUNDING]
    margin = float(dev.min()) if dev.size else 1.0
    return CriterionResult(
        holds=bool(antipodal and all_unimodular and alternating),
        antipodal=antipodal,
        all_unimodular=all_unimodular,
        alternating=alternating,
        values=tuple(float(x) for x in t),
        sign_bits=bits,
        margin=margin,
        near_degenerate=margin < _MARGIN_WARN,
    )


def pst_necessary_filter(support, tau: int, tol: float = TOL_AMPLITUDE) -> bool:
    """True iff ``|T_tau(mu)| >= 1 - tol`` for every ``mu`` in the eigenvalue support."""
    mus = np.fromiter((float(x) for x in support), dtype=np.float64)
    return bool(np.all(np.abs(chebyshev(tau, mus)) >= 1.0 - tol))


def pst_bruteforce(
    ops: WalkOperators,
    tau_max: int = TAU_MAX_PST,
    tol: float = TOL_AMPLITUDE,
    prune: bool = True,
) -> list[PSTCertificate]:
    """
    All PST events between distinct vertices for ``1 <= tau <= tau_max``.

    The amplitude ``<U**tau d^T e_u, d^T e_v>`` is read off the vertex block
    ``d U**tau d^T``; each hit is confirmed at the arc level by checking
    ``||U**tau d^T e_u - gamma d^T e_v|| < tol``. With ``prune`` set, times that
    fail the Chebyshev necessary condition on the source's eigenvalue
    support are skipped for that source. Ordered pairs are reported both ways.
    """
    if tau_max < 1:
        raise ValueError("tau_max must be at least 1")
    n = ops.graph.n
    projs = eigenprojectors(ops.discriminant)
    supports = [eigenvalue_support(projs, x) for x in range(n)]
    states = ops.boundary.T  # column u is d^T e_u
    y = states.copy()
    certs: list[PSTCertificate] = []
    for tau in range(1, tau_max + 1):
        y = ops.evolution @ y
        block = ops.boundary @ y  # block[v, u] = <U^tau d^T e_u, d^T e_v>
        if np.max(np.abs(block - block.T)) > tol:
            raise ConsistencyError(f"vertex block at tau={tau} is not symmetric")
        for u in range(n):
            if prune and not pst_necessary_filter(supports[u], tau, tol):
                continue
            for v in range(n):
                amp = block[v, u]
                if v == u or abs(amp) < 1.0 - tol:
                    continue
                gamma = complex(amp / abs(amp))
                resid = np.linalg.norm(y[:, u] - gamma * states[:, v])
                if resid >= tol:
                    raise ConsistencyError(
                        f"amplitude {amp} at ({u}->{v}, tau={tau}) but arc residual {resid:.3e}"
                    )
                certs.append(PSTCertificate(u, v, tau, gamma, "bruteforce"))
    return certs


def pst_no_go_equal_eigs(spec: CirculantSpec, tol: float = 1e-9) -> bool:
    """True if some consecutive adjacency eigenvalues ``lambda_j, lambda_{j+1}`` coincide, ruling PST out."""
    lam = circulant_spectrum(spec).indexed
    return any(abs(lam[j] - lam[j + 1]) <= tol for j in range(spec.n - 1))


@dataclass(frozen=True)
class UCPSTResult:
    n: int
    verdict: bool
    periodic: bool
    period: int | None
    no_go: bool
    criterion_times: tuple[int, ...]
    certificates: tuple[PSTCertificate, ...] = field(default=())


def _uc_pst_one(n: int, bruteforce_all: bool, tau_max: int) -> UCPSTResult:
    spec = unitary_cayley_spec(n)
    g = cayley(spec)
    phi = spec.degree
    mu_idx = np.asarray(uc_spectrum(n).indexed) / phi
    disc = uc_spectrum(n).scaled(1.0 / phi, "discriminant")
    rep = period_spectral(disc, g.m, g.n, g.is_bipartite)
    if rep.periodic != uc_periodicity_predicted(n):
        raise ConsistencyError(f"UC({n}): spectral periodicity disagrees with prediction")
    no_go = pst_no_go_equal_eigs(spec)

    horizon = rep.period if rep.periodic else tau_max
    crit_times: list[int] = []
    if n % 2 == 0:
        for tau in range(1, horizon + 1):
            if pst_criterion_circulant(spec, 0, n // 2, tau, mu=mu_idx).holds:
                crit_times.append(tau)

    certs: tuple[PSTCertificate, ...] = ()
    if rep.periodic or bruteforce_all:
        ops = build_operators(g)
        if rep.periodic:
            bf = period_bruteforce(ops, tau_max=rep.period)
            if bf.period != rep.period:
                raise ConsistencyError(f"UC({n}): brute-force period {bf.period} != {rep.period}")
        found = pst_bruteforce(ops, tau_max=horizon)
        expected = {(t, u, (u + n // 2) % n) for t in crit_times for u in range(n)}
        if {c.key() for c in found} != expected:
            raise ConsistencyError(f"UC({n}): criterion and brute force disagree")
        certs = tuple(
            PSTCertificate(c.source, c.target, c.time, c.phase, "both")
            for c in sorted(found, key=PSTCertificate.key)
        )
    if not rep.periodic and crit_times:
        raise ConsistencyError(f"UC({n}) is not periodic but the criterion reports PST")
    if no_go and crit_times:
        raise ConsistencyError(f"UC({n}) has equal consecutive eigenvalues but the criterion reports PST")
    return UCPSTResult(n, bool(crit_times), rep.periodic, rep.period, no_go, tuple(crit_times), certs)


def uc_pst_classification(
    n_max: int, bruteforce_all: bool = False, tau_max: int = TAU_MAX_PST
) -> list[UCPSTResult]:
    """
    PST verdict for every UC(n), ``2 <= n <= n_max``.

    Non-periodic graphs are excluded by the periodicity gate; for periodic
    ones the circulant criterion is evaluated for ``tau`` up to the period and
    compared with brute force. ``bruteforce_all`` also brute-forces the
    non-periodic graphs (up to ``tau_max``) to confirm they have no PST.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    return [_uc_pst_one(n, bruteforce_all, tau_max) for n in range(2, n_max + 1)]
