"""Coefficient family of the even-power expansion linking W_n and W_{n+m}.

``theta_general(k, r, m)`` is the polynomial in p multiplying
``omega**(k-r) * W_n**r * W_{n+m}**r`` when ``W_n**(2k) + W_{n+m}**(2k)``
is expanded; ``theta_m1`` and ``theta_m2`` are its closed forms at
``m = 1`` and ``m = 2``, and ``theta_gp`` is an alternative single-sum
closed form for the ``m = 2`` case built from halved indices and a
double-step falling product.

All four follow the reciprocal-factorial convention: a factorial of a
negative integer in a denominator kills the whole term.  Individual terms
have rational scalars; only the full sum is integer-valued, so sums are
accumulated in exact rationals and converted once, with an integrality
check that can only fire on an implementation bug.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

from .multipoly import Monomial, MultiPoly
from .sequences import seq_u, seq_v

SOURCES = ("general", "m1", "m2", "gp")

# Test-only hook: a nonzero bias is added to every general coefficient so
# the verification engine's failure path can be exercised.
_fault_bias = 0

_P = MultiPoly.var("p")
_P2M2 = _P * _P - 2


def _set_fault_bias(bias: int) -> None:
    global _fault_bias
    _fault_bias = bias


def _recip_factorial(n: int) -> Fraction:
    # 1/n!, extended by 1/(negative)! == 0.
    return Fraction(0) if n < 0 else Fraction(1, factorial(n))


def _validate(k: int, r: int, m: int | None = None) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(r, int) or not 0 <= r <= k:
        raise ValueError(f"r must lie in [0, {k}], got {r!r}")
    if m is not None and (not isinstance(m, int) or m < 0):
        raise ValueError(f"m must be a nonnegative integer, got {m!r}")


def _assemble(weighted: Iterable[tuple[Fraction, MultiPoly]]) -> MultiPoly:
    acc: dict[Monomial, Fraction] = {}
    for scalar, poly in weighted:
        if not scalar:
            continue
        for mono, coeff in poly.monomial_items():
            s = acc.get(mono, Fraction(0)) + scalar * coeff
            if s:
                acc[mono] = s
            else:
                del acc[mono]
    for mono, coeff in acc.items():
        if coeff.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient {coeff} at {mono}")
    return MultiPoly.from_monomials({mono: int(coeff) for mono, coeff in acc.items()})


@lru_cache(maxsize=None)
def _theta_general(k: int, r: int, m: int) -> MultiPoly:
    v = seq_v(m)
    u_even_power = seq_u(m) ** (2 * k - 2 * r)
    weighted = []
    for j in range(k // 2 + 1):
        recip = _recip_factorial(r - 2 * j)
        if not recip:
            continue
        scalar = Fraction((-1) ** j * k * factorial(k - j - 1), factorial(j) * factorial(k - r)) * recip
        weighted.append((scalar, (v ** (r - 2 * j)) * u_even_power))
    return _assemble(weighted)


def theta_general(k: int, r: int, m: int) -> MultiPoly:
    """Coefficient for arbitrary step ``m``, as a polynomial in p."""
    _validate(k, r, m)
    value = _theta_general(k, r, m)
    if _fault_bias:
        value = value + _fault_bias
    return value


@lru_cache(maxsize=None)
def _theta_m1(k: int, r: int) -> MultiPoly:
    weighted = []
    for j in range(r // 2 + 1):
        scalar = Fraction(
            (-1) ** j * k * factorial(k - 1 - j),
            factorial(k - r) * factorial(j) * factorial(r - 2 * j),
        )
        weighted.append((scalar, _P ** (r - 2 * j)))
    return _assemble(weighted)


def theta_m1(k: int, r: int) -> MultiPoly:
    """Closed form at step 1: a signed sum of powers of p."""
    _validate(k, r)
    return _theta_m1(k, r)


@lru_cache(maxsize=None)
def _theta_m2(k: int, r: int) -> MultiPoly:
    p_even_power = _P ** (2 * k - 2 * r)
    weighted = []
    for j in range(k // 2 + 1):
        recip = _recip_factorial(r - 2 * j)
        if not recip:
            continue
        scalar = Fraction((-1) ** j * k * factorial(k - j - 1), factorial(j) * factorial(k - r)) * recip
        weighted.append((scalar, (_P2M2 ** (r - 2 * j)) * p_even_power))
    return _assemble(weighted)


def theta_m2(k: int, r: int) -> MultiPoly:
    """Closed form at step 2, in powers of ``p^2 - 2`` and ``p``."""
    _validate(k, r)
    return _theta_m2(k, r)


@lru_cache(maxsize=None)
def _theta_gp(k: int, r: int) -> MultiPoly:
    weighted = []
    for lam in range(k + 1):
        recip = _recip_factorial(r - lam)
        if not recip:
            continue
        half = lam // 2
        ceil_half = lam - half
        if k - half - 1 < 0:
            # Unreachable for lam <= r <= k; a negative factorial argument in
            # the numerator would be a genuine domain failure, not a zero term.
            raise ArithmeticError(f"negative factorial argument at k={k}, r={r}, lam={lam}")
        falling = 1
        for i in range(half):
            falling *= 2 * k - 2 * ceil_half - 1 - 2 * i
        scalar = (
            Fraction(
                (-1) ** lam * k * factorial(k - half - 1) * 2**ceil_half * falling,
                factorial(k - r) * factorial(lam),
            )
            * recip
        )
        weighted.append((scalar, _P ** (2 * k - 2 * lam)))
    return _assemble(weighted)


def theta_gp(k: int, r: int) -> MultiPoly:
    """Alternative single-sum closed form for step 2; must equal :func:`theta_m2`."""
    _validate(k, r)
    return _theta_gp(k, r)


def theta_by_source(source: str, k: int, r: int, m: int | None = None) -> MultiPoly:
    """Dispatch on the formula family; ``m`` is only meaningful for ``general``."""
    if source == "general":
        if m is None:
            raise ValueError("source 'general' requires m")
        return theta_general(k, r, m)
    if source == "m1":
        return theta_m1(k, r)
    if source == "m2":
        return theta_m2(k, r)
    if source == "gp":
        return theta_gp(k, r)
    raise ValueError(f"unknown source {source!r}; expected one of {SOURCES}")
