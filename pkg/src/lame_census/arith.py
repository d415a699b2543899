"""Exact elementary number theory on positive integers.

Everything here factors by trial division, which is plenty for the
``N <= 10**6`` range the census works in.  Arguments are restricted to
signed 64-bit range: anything larger is refused with
:class:`ArithmeticOverflowError` rather than silently accepted.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from functools import lru_cache

from .errors import ArithmeticOverflowError, ContractViolation

INT64_MAX = 2**63 - 1


def check_natural(N: int, name: str = "N") -> int:
    """Validate a positive integer argument and return it."""
    if isinstance(N, bool) or not isinstance(N, int):
        raise TypeError(f"{name} must be an int, got {type(N).__name__}")
    if N < 1:
        raise ValueError(f"{name} must be >= 1, got {N}")
    if N > INT64_MAX:
        raise ArithmeticOverflowError(f"{name}={N} exceeds the 64-bit range")
    return N


def check_int64(value: int, what: str) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise ArithmeticOverflowError(f"{what} = {value} exceeds the 64-bit range")
    return value


@lru_cache(maxsize=4096)
def factorize(N: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``N`` as ``((p, e), ...)`` with ascending primes."""
    check_natural(N)
    factors = []
    m = N
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


def euler_phi(N: int) -> int:
    """Number of residues ``0 <= k < N`` with ``gcd(k, N) == 1``."""
    result = 1
    for p, e in factorize(N):
        result *= (p - 1) * p ** (e - 1)
    return result


def psi2(N: int) -> int:
    """Jordan's totient J_2: pairs ``(k1, k2)`` mod ``N`` with ``gcd(k1, k2, N) == 1``.

    Equals ``N**2 * prod(1 - 1/p**2)`` over the primes dividing ``N``.  This
    is the two-dimensional analogue of :func:`euler_phi` that appears in the
    closed form for the Lame count.
    """
    result = 1
    for p, e in factorize(N):
        result *= (p * p - 1) * p ** (2 * (e - 1))
    return check_int64(result, f"psi2({N})")


def divisors(N: int) -> list[int]:
    """Positive divisors of ``N`` in ascending order."""
    divs = [1]
    for p, e in factorize(N):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def moebius(N: int) -> int:
    factors = factorize(N)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisor_sum_invert(g: Mapping[int, int] | Callable[[int], int], N: int) -> int:
    """Moebius inversion: ``sum(moebius(N // d) * g(d) for d | N)``.

    If ``g(d) = sum(f(e) for e | d)`` then the result is ``f(N)``.  ``g`` may
    be a mapping keyed by divisor or a callable.
    """
    check_natural(N)
    lookup = g.__getitem__ if isinstance(g, Mapping) else g
    total = 0
    for d in divisors(N):
        mu = moebius(N // d)
        if mu == 0:
            continue
        try:
            value = lookup(d)
        except KeyError:
            raise ContractViolation(f"no value supplied for divisor {d} of {N}") from None
        total += mu * value
    return check_int64(total, f"inverted divisor sum at N={N}")
