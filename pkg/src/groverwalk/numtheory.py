"""
Exact arithmetic functions behind unitary Cayley spectra.

Ramanujan sums are available through two independent routes:
:func:`ramanujan_closed` (Möbius/totient closed form, exact integers) and
:func:`ramanujan_direct` (floating-point unit-character sum, rounded). The
second exists to check the first.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .errors import ConsistencyError

__all__ = [
    "factorize",
    "euler_phi",
    "mobius",
    "units",
    "ramanujan_closed",
    "ramanujan_direct",
]


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` by trial division, as ``{prime: exponent}``."""
    _check_positive(n)
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    """Euler's totient: the number of residues in ``1..n`` coprime to ``n``."""
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    """Möbius function; 0 when ``n`` has a squared prime factor."""
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def units(n: int) -> list[int]:
    """Residues ``a`` in ``[0, n)`` with ``gcd(a, n) == 1``.

    For ``n == 1`` this is ``[0]`` (the trivial group has one unit).
    """
    _check_positive(n)
    if n == 1:
        return [0]
    return [a for a in range(1, n) if gcd(a, n) == 1]


def ramanujan_closed(j: int, n: int) -> int:
    """
    Ramanujan sum R(j, n) via the closed form ``mu(c) * phi(n) / phi(c)``.

    Here ``c = n / gcd(n, j)``. Negative ``j`` is reduced mod ``n``.

    Parameters
    ----------
    j : int
        Character index (any integer).
    n : int
        Positive modulus.

    Returns
    -------
    int
        The exact value of the sum.
    """
    _check_positive(n)
    c = n // gcd(n, j % n)  # gcd(n, 0) == n, so c == 1 for j = 0
    num, den = euler_phi(n), euler_phi(c)
    if num % den:
        raise ConsistencyError(f"phi({c}) does not divide phi({n})")
    return mobius(c) * (num // den)


def ramanujan_direct(j: int, n: int, tol: float = 1e-6) -> int:
    """
    Ramanujan sum R(j, n) as the literal sum of ``exp(2 pi i j r / n)`` over units ``r``.

    The sum is accumulated in double precision and rounded to the nearest
    integer. Raises :class:`ConsistencyError` if the imaginary part or the
    rounding residual exceeds ``tol``.
    """
    _check_positive(n)
    r = np.asarray(units(n), dtype=np.int64)
    # reduce the phase exactly in integers before going to floating point
    phase = 2.0 * np.pi * ((j % n) * r % n) / n
    re = float(np.cos(phase).sum())
    im = float(np.sin(phase).sum())
    value = round(re)
    if abs(im) > tol or abs(re - value) > tol:
        raise ConsistencyError(
            f"R({j},{n}) numerically {re}+{im}j is not within {tol} of an integer"
        )
    return int(value)
