"""Exact rational Pochhammer machinery and terminating series at unit argument.

Everything here works in ``fractions.Fraction``; results are always in
lowest terms with positive denominator.  Factorials are computed as rising
factorials of 1 so the module has a single product code path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[Fraction, int]


class PoleError(ValueError):
    """A Pochhammer denominator vanished where the value still needs it."""


def pochhammer(a: Rational, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``; empty product for n = 0."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    a = Fraction(a)
    result = Fraction(1)
    for i in range(n):
        result *= a + i
    return result


def _rising_factorial_of_one(n: int) -> Fraction:
    return pochhammer(1, n)


def hyp2f1_terminating(n: int, a: Rational, c: Rational) -> Fraction:
    """Terminating Gauss sum at unit argument: ``sum_j (-n)_j (a)_j / ((c)_j j!)``.

    Once the ``(-n)`` factor hits zero the series has terminated and later
    denominators are never touched; a zero ``c`` factor before that point is
    a genuine pole and raises :class:`PoleError`.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    a = Fraction(a)
    c = Fraction(c)
    total = Fraction(0)
    numerator = Fraction(1)
    denominator = Fraction(1)
    for j in range(n + 1):
        if j > 0:
            top_factor = Fraction(-n + j - 1)
            if not top_factor:
                break  # series terminated; the pole check below must not run
            numerator *= top_factor * (a + j - 1)
            c_factor = c + j - 1
            if not c_factor:
                raise PoleError(f"(c)_{j} vanishes for c={c}, n={n}")
            denominator *= c_factor * j
        total += numerator / denominator
    return total


def chu_vandermonde_rhs(n: int, a: Rational, c: Rational) -> Fraction:
    """Closed form ``(c-a)_n / (c)_n`` for the terminating Gauss sum."""
    a = Fraction(a)
    c = Fraction(c)
    bottom = pochhammer(c, n)
    if not bottom:
        raise PoleError(f"(c)_{n} vanishes for c={c}")
    return pochhammer(c - a, n) / bottom


def lemma_lhs(k: int, j: int) -> Fraction:
    """Alternating sum ``sum_i (-1)^i (k-i-1)! 2^(j-2i) / ((j-2i)! i!)``."""
    _check_lemma_domain(k, j)
    total = Fraction(0)
    for i in range(j // 2 + 1):
        term = (
            _rising_factorial_of_one(k - i - 1)
            * 2 ** (j - 2 * i)
            / (_rising_factorial_of_one(j - 2 * i) * _rising_factorial_of_one(i))
        )
        total += -term if i % 2 else term
    return total


def lemma_rhs(k: int, j: int) -> Fraction:
    """Product form: halved-index factorial times a double-step falling product."""
    _check_lemma_domain(k, j)
    half = j // 2
    ceil_half = j - half
    falling = 1
    for i in range(half):
        falling *= 2 * k - 2 * ceil_half - 1 - 2 * i
    return (
        _rising_factorial_of_one(k - half - 1)
        / _rising_factorial_of_one(j)
        * 2**ceil_half
        * falling
    )


def _check_lemma_domain(k: int, j: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(j, int) or j < 0:
        raise ValueError(f"j must be a nonnegative integer, got {j!r}")
    if j // 2 > k - 1:
        raise ValueError(f"floor(j/2) must be <= k-1, got j={j}, k={k}")


def pochhammer_split_even(a: Rational, n: int) -> Fraction:
    """Even half-splitting ``(a/2)_n ((a+1)/2)_n 4^n``; equals ``(a)_{2n}``."""
    a = Fraction(a)
    return pochhammer(a / 2, n) * pochhammer((a + 1) / 2, n) * 2 ** (2 * n)


def pochhammer_split_odd(a: Rational, n: int) -> Fraction:
    """Odd half-splitting ``(a/2)_{n+1} ((a+1)/2)_n 2^(2n+1)``; equals ``(a)_{2n+1}``."""
    a = Fraction(a)
    return pochhammer(a / 2, n + 1) * pochhammer((a + 1) / 2, n) * 2 ** (2 * n + 1)


def pochhammer_reflect(a: Rational, N: int, n: int) -> Fraction:
    """Tail removal ``(-1)^n (a)_N / (-a-N+1)_n``; equals ``(a)_{N-n}``."""
    if not isinstance(N, int) or N < 0:
        raise ValueError(f"N must be a nonnegative integer, got {N!r}")
    if not isinstance(n, int) or not 0 <= n <= N:
        raise ValueError(f"n must lie in [0, {N}], got {n!r}")
    a = Fraction(a)
    bottom = pochhammer(-a - N + 1, n)
    if not bottom:
        raise PoleError(f"(-a-N+1)_{n} vanishes for a={a}, N={N}")
    return (-1) ** n * pochhammer(a, N) / bottom
