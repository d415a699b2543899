"""Closed-form dessin and Lame counts.

``dessin_count(n, N)`` is the number of dessins d'enfants compatible with the
five ramification tables, and ``lame_count(n, N)`` the number of integral
Lame equations of index ``n`` (modulo scalar equivalence) whose projective
monodromy is dihedral of order ``2N``.  The two are tied by
``sum(lame_count(n, d) for d | N) == dessin_count(n, N)``.

Both formulas carry a ``2/3`` correction term, so they are evaluated over
the common denominator 12 and the division is checked to be exact.

Any integer index is accepted; ``n`` and ``-n - 1`` always give the same
values.  Only ``n >= 1`` has a combinatorial meaning.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .arith import check_int64, check_natural, divisor_sum_invert, euler_phi, psi2
from .errors import InvariantError


def _check_index(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    return check_int64(n, "n")


def epsilon_thm(n: int, N: int) -> int:
    """1 if ``3 | N`` and ``n = 1 (mod 3)``, else 0 (the dessin-count correction)."""
    _check_index(n)
    check_natural(N)
    return int(N % 3 == 0 and n % 3 == 1)


def epsilon_cor(n: int, N: int) -> int:
    """1 if ``N == 3`` exactly and ``n = 1 (mod 3)``, else 0 (the Lame-count correction).

    Not interchangeable with :func:`epsilon_thm`: this one fires at ``N == 3``
    only, the other at every multiple of 3.
    """
    _check_index(n)
    check_natural(N)
    return int(N == 3 and n % 3 == 1)


def _exact_twelfth(numerator: int, what: str) -> int:
    check_int64(numerator, what)
    q, r = divmod(numerator, 12)
    if r:
        raise InvariantError(f"{what}: {numerator} is not divisible by 12")
    if q < 0:
        raise InvariantError(f"{what}: negative count {q}")
    return q


def dessin_count(n: int, N: int) -> int:
    """``n(n+1)(N-1)(N-2)/12 + (2/3) * epsilon_thm(n, N)``."""
    _check_index(n)
    check_natural(N)
    twelve_d = n * (n + 1) * (N - 1) * (N - 2) + 8 * epsilon_thm(n, N)
    return _exact_twelfth(twelve_d, f"12*D({n},{N})")


def lame_count(n: int, N: int) -> int:
    """``n(n+1)/12 * (psi2(N) - 3 phi(N)) + (2/3) * epsilon_cor(n, N)``, and 0 at ``N == 1``."""
    _check_index(n)
    check_natural(N)
    if N == 1:
        return 0
    twelve_l = n * (n + 1) * (psi2(N) - 3 * euler_phi(N)) + 8 * epsilon_cor(n, N)
    return _exact_twelfth(twelve_l, f"12*L({n},{N})")


def lame_count_via_inversion(n: int, N: int) -> int:
    """Lame count recovered from dessin counts by Moebius inversion over the divisors of ``N``."""
    _check_index(n)
    value = divisor_sum_invert(lambda d: dessin_count(n, d), N)
    if value < 0:
        raise InvariantError(f"inversion produced negative count {value} at n={n}, N={N}")
    return value


@dataclass(frozen=True)
class CensusEntry:
    n: int
    N: int
    dessins: int
    lame: int

    def as_dict(self) -> dict:
        return asdict(self)


def census_table(n_lo: int, n_hi: int, N_lo: int, N_hi: int) -> list[CensusEntry]:
    """One :class:`CensusEntry` per ``(n, N)`` in the rectangle, sorted by ``(n, N)``.

    An empty range gives an empty list.
    """
    _check_index(n_lo)
    _check_index(n_hi)
    check_natural(N_lo, "N_lo")
    check_natural(N_hi, "N_hi")
    return [
        CensusEntry(n, N, dessin_count(n, N), lame_count(n, N))
        for n in range(n_lo, n_hi + 1)
        for N in range(N_lo, N_hi + 1)
    ]
