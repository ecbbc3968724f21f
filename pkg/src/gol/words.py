"""Atoms, letters and words: the syntax every group in the package is written in.

A letter is ``symbol[index]`` raised to ``+1`` or ``-1``.  Letters named ``x``, ``y``
and ``a`` carry a two-part index ``(family, position)`` naming an atom; ``x`` is
channel 0, ``y`` is channel 1 and ``a`` is the abelian atom letter.  Catalog
generators (``a``, ``b``, ``t``, ``t[3]``, ``u[-2]``) use the same type with a
shorter index.

Words are immutable tuples of letters.  Nothing here reduces a word unless asked to.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, NamedTuple, Optional

from .errors import ParseError, WindowError

ATOM_SYMBOLS = ("x", "y", "a")


class Atom(NamedTuple):
    family: int
    position: int

    def succ(self) -> "Atom":
        return Atom(self.family, self.position + 1)

    def pred(self) -> "Atom":
        return Atom(self.family, self.position - 1)


class Letter(NamedTuple):
    symbol: str
    index: tuple = ()
    exponent: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.symbol, self.index, -self.exponent)

    def positive(self) -> "Letter":
        return self if self.exponent > 0 else self.inverse()

    @property
    def atom(self) -> Optional[Atom]:
        if self.symbol in ATOM_SYMBOLS and len(self.index) == 2:
            return Atom(*self.index)
        return None

    @property
    def channel(self) -> int:
        return 1 if self.symbol == "y" else 0

    def __str__(self):
        return format_word(Word((self,)))


def x(family, position, exponent=1):
    return Letter("x", (family, position), exponent)


def y(family, position, exponent=1):
    return Letter("y", (family, position), exponent)


def a(family, position, exponent=1):
    return Letter("a", (family, position), exponent)


def gen(name, *index, exponent=1):
    return Letter(name, tuple(index), exponent)


class Word(tuple):
    """Immutable sequence of letters; the empty word is the identity ``e``."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, letters)

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __radd__(self, other):
        return Word(tuple(other) + tuple(self))

    def __mul__(self, n):
        return Word(tuple.__mul__(self, n))

    def __getitem__(self, i):
        r = tuple.__getitem__(self, i)
        return Word(r) if isinstance(i, slice) else r

    def inverse(self) -> "Word":
        return Word(l.inverse() for l in reversed(self))

    def power(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() * (-k)
        return self * k

    def atoms(self):
        return {l.atom for l in self if l.atom is not None}

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


EMPTY = Word()


def word(*letters) -> Word:
    return Word(letters)


def word_inverse(w: Word) -> Word:
    return Word(w).inverse()


def free_reduce(w) -> Word:
    out = []
    for l in w:
        if out and out[-1] == (l[0], l[1], -l[2]):
            out.pop()
        else:
            out.append(l)
    return Word(out)


def is_freely_reduced(w) -> bool:
    return all(w[i] != w[i + 1].inverse() for i in range(len(w) - 1))


# ---------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class Window:
    """Finite slice of the atom set: families ``0..families``, positions ``-positions..positions``."""

    families: int = 3
    positions: int = 8

    def __contains__(self, atom) -> bool:
        return 0 <= atom[0] <= self.families and -self.positions <= atom[1] <= self.positions

    def atoms(self):
        return [Atom(n, k) for n in range(self.families + 1)
                for k in range(-self.positions, self.positions + 1)]

    def check(self, w: Word) -> Word:
        for l in w:
            at = l.atom
            if at is not None and at not in self:
                raise WindowError(f"atom {tuple(at)} of letter {l} lies outside window {self}")
        return w


# ---------------------------------------------------------------------------
# grammar

_TOKEN = re.compile(
    r"(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"(?:\[(?P<i>-?\d+)(?:,(?P<j>-?\d+))?\])?"
    r"(?:(?P<inv>')|\^(?P<pow>-?\d+))?$"
)


def parse_word(text: str, window: Optional[Window] = None, alphabet=None) -> Word:
    """Read a word in the whitespace-separated token grammar.

    ``x[3]`` is shorthand for ``x[0,3]`` (and likewise for ``y`` and ``a``).  The
    result is the literal word: powers are expanded and nothing is cancelled.  A
    bare ``e`` denotes the identity.
    ``alphabet`` optionally restricts which positive letters are legal.
    """
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = _TOKEN.match(m.group())
        if tok is None:
            raise ParseError(f"bad token {m.group()!r}", m.start())
        name = tok["name"]
        if m.group() == "e":
            continue
        index = tuple(int(v) for v in (tok["i"], tok["j"]) if v is not None)
        if name in ATOM_SYMBOLS and len(index) == 1:
            index = (0, index[0])
        power = -1 if tok["inv"] else int(tok["pow"]) if tok["pow"] is not None else 1
        l = Letter(name, index, 1 if power > 0 else -1)
        if window is not None and l.atom is not None and l.atom not in window:
            raise WindowError(f"atom {index} at offset {m.start()} lies outside window {window}")
        if alphabet is not None and l.positive() not in alphabet:
            raise ParseError(f"letter {m.group()!r} is not a generator of this group", m.start())
        letters.extend([l] * abs(power))
    return Word(letters)


def _format_letter(l: Letter, run: int) -> str:
    s = l.symbol
    if l.index:
        s += "[" + ",".join(str(i) for i in l.index) + "]"
    if run == 1:
        return s + ("'" if l.exponent < 0 else "")
    return f"{s}^{run * l.exponent}"


def format_word(w) -> str:
    """Canonical serialization: runs of a repeated letter collapse to ``^k``."""
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(_format_letter(w[i], j - i))
        i = j
    return " ".join(parts)


# ---------------------------------------------------------------------------
# shifts and substitutions


class ShiftAutomorphism:
    """Translation of each atom family by a fixed offset (finitely many nonzero)."""

    __slots__ = ("offsets",)

    def __init__(self, offsets: Optional[Mapping[int, int]] = None):
        self.offsets = {n: d for n, d in sorted((offsets or {}).items()) if d}

    @classmethod
    def single(cls, family: int, by: int = 1) -> "ShiftAutomorphism":
        return cls({family: by})

    def atom(self, at: Atom) -> Atom:
        return Atom(at[0], at[1] + self.offsets.get(at[0], 0))

    def letter(self, l: Letter) -> Letter:
        if l.atom is None:
            return l
        return Letter(l.symbol, (l.index[0], l.index[1] + self.offsets.get(l.index[0], 0)), l.exponent)

    def __call__(self, w) -> Word:
        if not self.offsets:
            return Word(w)
        return Word(self.letter(l) for l in w)

    def compose(self, other: "ShiftAutomorphism") -> "ShiftAutomorphism":
        out = dict(self.offsets)
        for n, d in other.offsets.items():
            out[n] = out.get(n, 0) + d
        return ShiftAutomorphism(out)

    def inverse(self) -> "ShiftAutomorphism":
        return ShiftAutomorphism({n: -d for n, d in self.offsets.items()})

    def __eq__(self, other):
        return isinstance(other, ShiftAutomorphism) and self.offsets == other.offsets

    def __hash__(self):
        return hash(tuple(self.offsets.items()))

    def __repr__(self):
        return f"ShiftAutomorphism({self.offsets})"


def apply_shift(tau: ShiftAutomorphism, w) -> Word:
    return tau(w)


@dataclass(frozen=True)
class LetterMap:
    """Homomorphism of free groups given on positive letters.

    Images come from ``images`` first, then ``rule`` (which may return ``None``
    to fall through), then ``default``: ``"identity"``, ``"delete"`` or ``"error"``.
    Inverse letters map to the inverse image, so inverses are respected by construction.
    """

    images: Mapping[Letter, Word] = field(default_factory=dict)
    rule: Optional[Callable[[Letter], Optional[Word]]] = None
    default: str = "identity"

    def image(self, l: Letter) -> Word:
        p = l.positive()
        img = self.images.get(p)
        if img is None and self.rule is not None:
            img = self.rule(p)
        if img is None:
            if self.default == "identity":
                img = Word((p,))
            elif self.default == "delete":
                img = EMPTY
            else:
                raise KeyError(f"letter {p} has no image")
        img = Word(img)
        return img if l.exponent > 0 else img.inverse()

    @classmethod
    def keep_only(cls, pred: Callable[[Letter], bool]) -> "LetterMap":
        """Delete every letter failing ``pred``; keep the rest."""
        return cls(rule=lambda l: Word((l,)) if pred(l) else EMPTY)


def substitute(m: LetterMap, w) -> Word:
    out = []
    for l in w:
        out.extend(m.image(l))
    return free_reduce(out)
