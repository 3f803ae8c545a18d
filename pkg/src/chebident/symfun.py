"""Power sums in the elementary-symmetric basis, two independent ways.

``power_sum_waring`` builds the expansion directly from partitions with
their signed weights; ``power_sum_newton`` reaches the same polynomial by
the classical recurrence and serves as the independent oracle.  The
two-letter specialization collapses the expansion onto an alphabet of two
formal letters, where it must reduce to ``u**k + v**k``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .multipoly import MultiPoly
from .partitions import enumerate_partitions, waring_coefficient

_E_VAR_RE = re.compile(r"e([1-9][0-9]*)\Z")


@dataclass(frozen=True)
class SymExpansion:
    """A degree-``degree`` power sum written in the variables ``e1..e<degree>``.

    Every term is weight-homogeneous: giving ``e_i`` weight ``i``, each
    monomial's total weight equals ``degree``.
    """

    degree: int
    expr: MultiPoly

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        for mono, _ in self.expr.monomial_items():
            weight = 0
            for name, exp in mono:
                match = _E_VAR_RE.match(name)
                if not match:
                    raise ValueError(f"unexpected variable {name!r} in expansion")
                index = int(match.group(1))
                if index > self.degree:
                    raise ValueError(f"variable {name!r} exceeds degree {self.degree}")
                weight += index * exp
            if weight != self.degree:
                raise ValueError(f"term {mono} has weight {weight}, expected {self.degree}")


def power_sum_waring(k: int) -> SymExpansion:
    """Expansion of the degree-``k`` power sum as a signed sum over partitions."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    monomials = {}
    for lam in enumerate_partitions(k):
        mono = tuple((f"e{size}", mult) for size, mult in lam.parts)
        monomials[mono] = waring_coefficient(k, lam)
    return SymExpansion(k, MultiPoly.from_monomials(monomials))


def power_sum_newton(k: int, num_vars: int) -> SymExpansion:
    """Same expansion via the classical recurrence, truncated to ``num_vars`` letters.

    Uses ``p_k = e1*p_{k-1} - e2*p_{k-2} + ... + (-1)**(k-1) * k * e_k`` with
    ``e_i = 0`` for ``i > num_vars`` and seed ``p_0 = num_vars``.  For
    ``num_vars >= k`` the result is alphabet-independent and must equal
    :func:`power_sum_waring`.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(num_vars, int) or num_vars < 1:
        raise ValueError(f"num_vars must be a positive integer, got {num_vars!r}")
    elementary = [MultiPoly.zero()] + [
        MultiPoly.var(f"e{i}") if i <= num_vars else MultiPoly.zero() for i in range(1, k + 1)
    ]
    power_sums = [MultiPoly.const(num_vars)]
    for t in range(1, k + 1):
        acc = MultiPoly.zero()
        for i in range(1, t):
            term = elementary[i] * power_sums[t - i]
            acc = acc + term if i % 2 == 1 else acc - term
        tail = t * elementary[t]
        acc = acc + tail if t % 2 == 1 else acc - tail
        power_sums.append(acc)
    return SymExpansion(k, power_sums[k])


def specialize_two_letters(expansion: SymExpansion, u: MultiPoly | int, v: MultiPoly | int) -> MultiPoly:
    """Collapse onto a two-letter alphabet: ``e1 -> u+v``, ``e2 -> u*v``, ``e_i -> 0``.

    When ``expansion`` is a power sum this equals ``u**k + v**k``.
    """
    if isinstance(u, int):
        u = MultiPoly.const(u)
    if isinstance(v, int):
        v = MultiPoly.const(v)
    bindings: dict[str, MultiPoly | int] = {"e1": u + v, "e2": u * v}
    for i in range(3, expansion.degree + 1):
        bindings[f"e{i}"] = 0
    return expansion.expr.substitute(bindings)
