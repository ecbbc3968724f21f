"""Exact arithmetic in the dyadic abelian group A, a direct sum of copies of Z[1/2].

The atom ``a[n,k]`` embeds as ``(-2)**(-k)`` in component ``n``.  This kills the
relator ``a s(a)^2`` (since ``1 + 2 * (-1/2) = 0``) and makes atoms of different
families independent.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from typing import Mapping, NamedTuple

from .words import Atom, Letter, ShiftAutomorphism, Word


def _twos(n: int) -> int:
    return (n & -n).bit_length() - 1


@functools.total_ordering
class DyadicRational:
    """``numerator * 2**exponent`` with an odd numerator (or the pair (0, 0))."""

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if numerator == 0:
            exponent = 0
        else:
            t = _twos(numerator)
            numerator >>= t
            exponent += t
        self.numerator = numerator
        self.exponent = exponent

    @classmethod
    def from_fraction(cls, q) -> "DyadicRational":
        q = Fraction(q)
        d = q.denominator
        if d & (d - 1):
            raise ValueError(f"{q} is not dyadic")
        return cls(q.numerator, -_twos(d))

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.numerator << self.exponent)
        return Fraction(self.numerator, 1 << -self.exponent)

    def __bool__(self):
        return self.numerator != 0

    def sign(self) -> int:
        return (self.numerator > 0) - (self.numerator < 0)

    def __add__(self, other):
        other = _coerce(other)
        m = min(self.exponent, other.exponent)
        return DyadicRational((self.numerator << (self.exponent - m))
                              + (other.numerator << (other.exponent - m)), m)

    __radd__ = __add__

    def __neg__(self):
        return DyadicRational(-self.numerator, self.exponent)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return DyadicRational(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DyadicRational.from_fraction(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __lt__(self, other):
        return (self - _coerce(other)).numerator < 0

    def __hash__(self):
        return hash((self.numerator, self.exponent))

    def __str__(self):
        return f"{self.numerator}*2^{self.exponent}"

    def __repr__(self):
        return f"DyadicRational({self.numerator}, {self.exponent})"


def _coerce(v) -> DyadicRational:
    if isinstance(v, DyadicRational):
        return v
    if isinstance(v, int):
        return DyadicRational(v)
    return DyadicRational.from_fraction(v)


def atom_value(position: int) -> DyadicRational:
    """(-2)**(-position)."""
    return DyadicRational(-1 if position % 2 else 1, -position)


class DyadicVector:
    """Finitely supported map family -> dyadic rational; zero entries are never stored."""

    __slots__ = ("components",)

    def __init__(self, components: Mapping[int, object] = ()):
        items = dict(components)
        self.components = tuple(sorted((n, _coerce(q)) for n, q in items.items() if q))

    def __getitem__(self, family) -> DyadicRational:
        for n, q in self.components:
            if n == family:
                return q
        return DyadicRational()

    def __bool__(self):
        return bool(self.components)

    def __add__(self, other):
        out = dict(self.components)
        for n, q in other.components:
            out[n] = out.get(n, DyadicRational()) + q
        return DyadicVector(out)

    def __neg__(self):
        return DyadicVector({n: -q for n, q in self.components})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, m) -> "DyadicVector":
        m = _coerce(m)
        return DyadicVector({n: q * m for n, q in self.components})

    def __eq__(self, other):
        return isinstance(other, DyadicVector) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def serialize(self) -> str:
        return "\n".join(f"{n}: {q}" for n, q in self.components)

    @classmethod
    def parse(cls, text: str) -> "DyadicVector":
        out = {}
        for line in text.strip().splitlines():
            fam, val = line.split(":")
            u, e = val.strip().split("*2^")
            out[int(fam)] = DyadicRational(int(u), int(e))
        return cls(out)

    def __repr__(self):
        return "DyadicVector({" + ", ".join(f"{n}: {q}" for n, q in self.components) + "})"


ZERO = DyadicVector()


def to_dyadic(w) -> DyadicVector:
    acc = {}
    for l in w:
        n, k = l.index
        v = atom_value(k)
        acc[n] = acc.get(n, DyadicRational()) + (v if l.exponent > 0 else -v)
    return DyadicVector(acc)


class AbelianNormalWord(NamedTuple):
    """``a_0^{z_0} ... a_m^{z_m}`` with odd exponents and ascending families."""

    terms: tuple  # ((Atom, z), ...)

    def to_word(self) -> Word:
        out = []
        for at, z in self.terms:
            out += [Letter("a", tuple(at), 1 if z > 0 else -1)] * abs(z)
        return Word(out)

    def __str__(self):
        return str(self.to_word())


def nf_of(v: DyadicVector) -> AbelianNormalWord:
    terms = []
    for n, q in v.components:
        e = q.exponent
        terms.append((Atom(n, -e), q.numerator * (-1) ** (e % 2)))
    return AbelianNormalWord(tuple(terms))


def abelian_nf(w) -> Word:
    return nf_of(to_dyadic(w)).to_word()


def shift_action(tau: ShiftAutomorphism, v: DyadicVector) -> DyadicVector:
    """Shifting family n by d multiplies its component by (-1/2)**d."""
    out = {}
    for n, q in v.components:
        d = tau.offsets.get(n, 0)
        out[n] = q * DyadicRational(-1 if d % 2 else 1, -d)
    return DyadicVector(out)
