"""Normalized recurrence and Euler-factorized route to the counting series.

Pulling the Euler factor 1/(1-q^j) out of each transfer matrix leaves the
normalized matrices [[1, q^j], [q^j, 1-q^j]]; folding (1, 0) through them
gives a pair whose update per step n is

    f0 <- f0 + q^n * f1
    f1 <- q^n * f0 + (1 - q^n) * f1

and the counting series is 1/(q)_inf times the final f0 + f1. The f1
iterates pick up negative coefficients along the way, which is why the
series type is signed.
"""

from __future__ import annotations

from collections.abc import Iterator

from .qseries import TruncatedSeries, euler_inverse, one, zero
from .transfer import StatePair


def iter_normalized_pairs(order: int) -> Iterator[StatePair]:
    """Yield the normalized pair after steps n = 0, 1, .., order.

    Step n only touches coefficients from q^n up, so the low-order part of
    f0 + f1 freezes as the iteration proceeds.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    f0, f1 = one(order), zero(order)
    yield StatePair(f0, f1)
    for n in range(1, order + 1):
        shifted_f1 = f1.shift(n)
        f0, f1 = f0 + shifted_f1, f0.shift(n) + f1 - shifted_f1
        yield StatePair(f0, f1)


def normalized_recurrence(order: int) -> StatePair:
    """The normalized pair after the full scan n = 1..order."""
    for pair in iter_normalized_pairs(order):
        pass
    return pair


def euler_factorized_gf(order: int) -> TruncatedSeries:
    """Counting series via the Euler factorization, recurrence route."""
    pair = normalized_recurrence(order)
    return euler_inverse(order) * pair.total()
