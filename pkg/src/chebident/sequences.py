"""Rescaled Chebyshev-style sequences as exact polynomials.

``seq_u`` and ``seq_v`` both satisfy ``x_n = p*x_{n-1} - x_{n-2}`` with
seeds ``(0, 1)`` and ``(2, p)``; ``seq_w`` is the combination
``a*U_n + b*V_n`` with formal constants ``a`` and ``b``, and ``omega`` is
the discriminant ``a^2 + 4b^2 - b^2 p^2`` that ties consecutive W values
together.

Values are memoized per process for indices up to ``CACHE_MAX_INDEX``
(reassign the module attribute to change the cap).  Cached values are
immutable and written only once fully constructed, so concurrent readers
never observe partial results.
"""

from __future__ import annotations

from .multipoly import MultiPoly

P = MultiPoly.var("p")
A = MultiPoly.var("a")
B = MultiPoly.var("b")

CACHE_MAX_INDEX = 256

_OMEGA = A * A + 4 * (B * B) - (B * B) * (P * P)

_u_cache: dict[int, MultiPoly] = {0: MultiPoly.zero(), 1: MultiPoly.const(1)}
_v_cache: dict[int, MultiPoly] = {0: MultiPoly.const(2), 1: P}
_w_cache: dict[int, MultiPoly] = {}


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"sequence index must be a nonnegative integer, got {n!r}")


def _extend(cache: dict[int, MultiPoly], n: int) -> MultiPoly:
    # The cache always holds the contiguous range 0..max(cache).
    top = max(cache)
    prev, curr = cache[top - 1], cache[top]
    for i in range(top + 1, n + 1):
        prev, curr = curr, P * curr - prev
        if i <= CACHE_MAX_INDEX:
            cache[i] = curr
    return curr


def seq_u(n: int) -> MultiPoly:
    """Second-kind-style sequence: seeds 0, 1; degree ``n - 1`` in p for n >= 1."""
    _check_index(n)
    value = _u_cache.get(n)
    return value if value is not None else _extend(_u_cache, n)


def seq_v(n: int) -> MultiPoly:
    """First-kind-style sequence: seeds 2, p; degree ``n`` in p."""
    _check_index(n)
    value = _v_cache.get(n)
    return value if value is not None else _extend(_v_cache, n)


def seq_w(n: int) -> MultiPoly:
    """Combined sequence ``a*U_n + b*V_n``; satisfies the same recurrence."""
    _check_index(n)
    value = _w_cache.get(n)
    if value is None:
        value = A * seq_u(n) + B * seq_v(n)
        if n <= CACHE_MAX_INDEX:
            _w_cache[n] = value
    return value


def omega() -> MultiPoly:
    """Discriminant ``a^2 + 4b^2 - b^2 p^2``."""
    return _OMEGA
