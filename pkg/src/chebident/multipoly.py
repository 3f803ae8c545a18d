"""Exact sparse multivariate polynomial arithmetic over Python integers.

A polynomial is a map from monomials to nonzero integer coefficients.  A
monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable
name; zero exponents are never stored and the empty tuple is the constant
monomial.  Zero coefficients are never stored either, so the term map is
canonical at all times: two :class:`MultiPoly` values are mathematically
equal exactly when their term maps are equal, and equality needs no
simplification pass.

Coefficients are plain Python ints and may grow without bound.  The text
form produced by :meth:`MultiPoly.serialize` orders terms by graded
lexicographic order on exponent vectors (variables collated by name); it is
stable across runs and platforms, and :meth:`MultiPoly.parse` inverts it.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, Union

# Canonical monomial: ((name, exponent), ...) sorted by name, exponents >= 1.
Monomial = tuple[tuple[str, int], ...]

_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TERM_RE = re.compile(r"([+-])(\d+)((?:\*[A-Za-z_][A-Za-z0-9_]*(?:\^\d+)?)*)\Z")


def _normalize_monomial(exponents: Iterable[tuple[str, int]]) -> Monomial:
    acc: dict[str, int] = {}
    for name, exp in exponents:
        if not isinstance(name, str) or not _VAR_RE.match(name):
            raise ValueError(f"invalid variable name: {name!r}")
        if not isinstance(exp, int) or exp < 0:
            raise ValueError(f"invalid exponent for {name!r}: {exp!r}")
        if exp:
            acc[name] = acc.get(name, 0) + exp
    return tuple(sorted(acc.items()))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for name, exp in m2:
        acc[name] = acc.get(name, 0) + exp
    return tuple(sorted(acc.items()))


class MultiPoly:
    """Immutable sparse polynomial in named variables with int coefficients.

    Construct with an iterable of ``(coefficient, exponents)`` pairs, where
    ``exponents`` maps variable names to powers::

        MultiPoly([(1, {"p": 2}), (-2, {})])   # p^2 - 2

    or use :meth:`var`, :meth:`const` and ordinary ``+ - *  **`` arithmetic.
    Instances must never be mutated after construction; every operation
    returns a new value, so values are safe to share between threads.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[tuple[int, Union[Mapping[str, int], Iterable[tuple[str, int]]]]] = ()):
        acc: dict[Monomial, int] = {}
        for coeff, exponents in terms:
            if not isinstance(coeff, int):
                raise ValueError(f"coefficient must be int, got {coeff!r}")
            items = exponents.items() if isinstance(exponents, Mapping) else exponents
            mono = _normalize_monomial(items)
            acc[mono] = acc.get(mono, 0) + coeff
        self._terms = {mono: c for mono, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> "MultiPoly":
        # Trusted fast path: terms must already be canonical.
        self = object.__new__(cls)
        self._terms = terms
        self._hash = None
        return self

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._raw({})

    @classmethod
    def const(cls, value: int) -> "MultiPoly":
        if not isinstance(value, int):
            raise ValueError(f"constant must be int, got {value!r}")
        return cls._raw({(): value} if value else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        if not isinstance(name, str) or not _VAR_RE.match(name):
            raise ValueError(f"invalid variable name: {name!r}")
        return cls._raw({((name, 1),): 1})

    @classmethod
    def from_monomials(cls, monomials: Mapping[Monomial, int]) -> "MultiPoly":
        """Build from a ``{monomial: coefficient}`` map, normalizing as needed."""
        return cls((coeff, mono) for mono, coeff in monomials.items())

    def monomial_items(self) -> Iterator[tuple[Monomial, int]]:
        """Iterate ``(monomial, coefficient)`` pairs in canonical internal form."""
        return iter(self._terms.items())

    def variables(self) -> frozenset[str]:
        return frozenset(name for mono in self._terms for name, _ in mono)

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in one variable; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(exp for _, exp in mono) for mono in self._terms)
        return max((dict(mono).get(var, 0) for mono in self._terms), default=0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def _coerce(value) -> "MultiPoly | None":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, int):
            return MultiPoly.const(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            s = out.get(mono, 0) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return MultiPoly._raw({})
        # Iterate the smaller operand in the outer loop.
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, int] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                mono = _mono_mul(m1, m2)
                s = out.get(mono, 0) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise ValueError(f"exponent must be int, got {exponent!r}")
        if exponent < 0:
            raise ValueError("negative exponents are not supported")
        # Square-and-multiply; 0**0 == 1 by the empty-product convention.
        result = MultiPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def substitute(self, bindings: Mapping[str, "MultiPoly | int"]) -> "MultiPoly":
        """Substitute polynomials (or ints) for variables; unbound variables persist."""
        bound: dict[str, MultiPoly] = {}
        for name, value in bindings.items():
            poly = self._coerce(value)
            if poly is None:
                raise ValueError(f"binding for {name!r} must be MultiPoly or int")
            bound[name] = poly
        out: dict[Monomial, int] = {}
        pow_cache: dict[tuple[str, int], MultiPoly] = {}
        for mono, coeff in self._terms.items():
            static = tuple((n, e) for n, e in mono if n not in bound)
            piece = MultiPoly._raw({static: coeff})
            for name, exp in mono:
                if name in bound:
                    key = (name, exp)
                    power = pow_cache.get(key)
                    if power is None:
                        power = bound[name] ** exp
                        pow_cache[key] = power
                    piece = piece * power
            for m2, c2 in piece._terms.items():
                s = out.get(m2, 0) + c2
                if s:
                    out[m2] = s
                else:
                    del out[m2]
        return MultiPoly._raw(out)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def serialize(self) -> str:
        """Canonical text form: graded-lex term order, explicit signs.

        Examples: ``"+1*p^2 -2"``, ``"0"``, ``"-1*b^2*p^2 +1*a^2 +4*b^2"``.
        """
        if not self._terms:
            return "0"
        names = sorted(self.variables())
        index = {name: i for i, name in enumerate(names)}

        def order_key(mono: Monomial):
            vec = [0] * len(names)
            for name, exp in mono:
                vec[index[name]] = exp
            return (sum(vec), tuple(vec))

        parts = []
        for mono in sorted(self._terms, key=order_key, reverse=True):
            coeff = self._terms[mono]
            body = ("+" if coeff > 0 else "-") + str(abs(coeff))
            for name, exp in mono:
                body += f"*{name}" if exp == 1 else f"*{name}^{exp}"
            parts.append(body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        """Inverse of :meth:`serialize`."""
        stripped = text.strip()
        if stripped == "0":
            return cls.zero()
        if not stripped:
            raise ValueError("empty polynomial text")
        pairs = []
        for token in stripped.split():
            match = _TERM_RE.match(token)
            if not match:
                raise ValueError(f"malformed term: {token!r}")
            sign, magnitude, factors = match.groups()
            coeff = int(magnitude) if sign == "+" else -int(magnitude)
            exps: list[tuple[str, int]] = []
            for factor in factors.split("*")[1:]:
                name, _, exp = factor.partition("^")
                exps.append((name, int(exp) if exp else 1))
            pairs.append((coeff, exps))
        return cls(pairs)

    def __str__(self) -> str:
        return self.serialize()

    def __repr__(self) -> str:
        return f"MultiPoly({self.serialize()!r})"
