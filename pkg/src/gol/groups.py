"""Marked groups: a generator set plus a normal-form oracle, and the catalog of named groups.

Group specs::

    free:R      free group on a, b, c, ...
    freeab:R    free abelian group on a, b, c, ...
    klein       <x, y | x y x' y>
    G[F,K]      locally free group G over families 0..F, positions -K..K
    H[K]        one family of G, presentation y_n = x_{n+1}' y_{n+1}' x_{n+1}
    A[F,K]      the dyadic abelian group, relators a s(a)^2 and commutators
    tower[Z]    two-level HNN tower with fresh-basis sigma, stable letters t[-Z..Z], t
"""
from __future__ import annotations

import random
import re
import string
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .errors import DomainError, ParseError, WindowError
from .rewriting import RewriteSystem, Rule, normalize, random_word, rewriting_system_G
from .words import (EMPTY, Letter, LetterMap, Window, Word, format_word, free_reduce, gen,
                    parse_word, substitute, x, y)


@dataclass(frozen=True, eq=False)
class MarkedGroup:
    name: str
    generators: tuple
    nf: Callable[[Word], Word]
    letter_order: Optional[Callable[[Letter], tuple]] = None
    window: Optional[Window] = None
    system: Optional[RewriteSystem] = None
    kind: str = ""
    data: Any = None

    def __repr__(self):
        return f"MarkedGroup({self.name!r})"

    @property
    def letters(self):
        """Generators and their inverses."""
        return [l for g in self.generators for l in (g, g.inverse())]

    def parse(self, text: str) -> Word:
        return parse_word(text, window=self.window, alphabet=self._alphabet)

    @property
    def _alphabet(self):
        # G and A windows accept any in-window atom letter of their symbols
        if self.kind in ("G", "H", "A"):
            return None
        return set(self.generators)

    def element(self, w) -> "GroupElement":
        if isinstance(w, str):
            w = self.parse(w)
        return GroupElement(self, self.nf(Word(w)))

    def identity(self) -> "GroupElement":
        return GroupElement(self, EMPTY)

    def equal(self, u, v) -> bool:
        return self.nf(Word(u)) == self.nf(Word(v))

    def is_identity(self, w) -> bool:
        return not self.nf(Word(w))

    def random_word(self, rng: random.Random, max_len: int, letters=None, min_len=0) -> Word:
        return random_word(rng, list(letters or self.generators), max_len, min_len)


@dataclass(frozen=True)
class GroupElement:
    owner: MarkedGroup = field(compare=False)
    word: Word

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.owner is other.owner
                and self.word == other.word)

    def __hash__(self):
        return hash(self.word)

    def __mul__(self, other):
        return nf_product(self, other)

    def inverse(self):
        return nf_inverse(self)

    def is_identity(self):
        return not self.word

    def __str__(self):
        return format_word(self.word)

    def __repr__(self):
        return f"<{self.owner.name}: {format_word(self.word) or 'e'}>"


def nf_product(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.owner is not h.owner:
        raise ValueError(f"cannot multiply elements of {g.owner.name} and {h.owner.name}")
    return GroupElement(g.owner, g.owner.nf(g.word + h.word))


def nf_inverse(g: GroupElement) -> GroupElement:
    return GroupElement(g.owner, g.owner.nf(g.word.inverse()))


# ---------------------------------------------------------------------------
# letter orders


def g_letter_key(l: Letter):
    """(a,0)' < (a,0) < (a,1)' < (a,1), blocks by family then position."""
    return (l.index[0], l.index[1], l.channel, l.exponent)


def abelian_letter_key(l: Letter):
    return (l.index[0], l.index[1], l.exponent)


def _basis_key(generators):
    rank = {g: i for i, g in enumerate(generators)}
    return lambda l: (rank[l.positive()], l.exponent)


# ---------------------------------------------------------------------------
# catalog


def free_basis(rank: int):
    if rank <= 26:
        return tuple(gen(c) for c in string.ascii_lowercase[:rank])
    return tuple(gen("g", i) for i in range(rank))


def free_group(rank: int) -> MarkedGroup:
    gens = free_basis(rank)
    return MarkedGroup(f"free:{rank}", gens, free_reduce, _basis_key(gens), kind="free")


def free_abelian_group(rank: int) -> MarkedGroup:
    gens = free_basis(rank)
    pos = {g: i for i, g in enumerate(gens)}

    def nf(w):
        exps = [0] * rank
        for l in w:
            exps[pos[l.positive()]] += l.exponent
        return Word(l for g, e in zip(gens, exps) for l in Word((g,)).power(e))

    return MarkedGroup(f"freeab:{rank}", gens, nf, _basis_key(gens), kind="freeab")


def klein_system() -> RewriteSystem:
    """x-left / y-right system for <x, y | x y x' y>; termini are x^m y^n."""
    X, Y = gen("x"), gen("y")
    Xi, Yi = X.inverse(), Y.inverse()
    rules = [
        Rule((X, Xi), EMPTY, "cancel"), Rule((Xi, X), EMPTY, "cancel"),
        Rule((Y, Yi), EMPTY, "cancel"), Rule((Yi, Y), EMPTY, "cancel"),
        Rule((Y, X), (X, Yi), "yx"), Rule((Yi, X), (X, Y), "y'x"),
        Rule((Y, Xi), (Xi, Yi), "yx'"), Rule((Yi, Xi), (Xi, Y), "y'x'"),
    ]
    return RewriteSystem(rules, name="klein")


def klein_group() -> MarkedGroup:
    sys = klein_system()
    gens = (gen("x"), gen("y"))
    return MarkedGroup("klein", gens, lambda w: normalize(sys, w), _basis_key(gens),
                       system=sys, kind="klein")


def g_generators(window: Window):
    return tuple(l for at in window.atoms() for l in (x(*at), y(*at)))


def group_G(families=3, positions=8) -> MarkedGroup:
    window = Window(families, positions)
    sys = rewriting_system_G(window)

    def nf(w):
        return normalize(sys, window.check(w))

    return MarkedGroup(f"G[{families},{positions}]", g_generators(window), nf, g_letter_key,
                       window=window, system=sys, kind="G")


def group_H(positions=8) -> MarkedGroup:
    """One family of G, with normal form by eliminating y_n (n < K) through rho_K."""
    window = Window(0, positions)

    def nf(w):
        return rho_N(positions, window.check(w))

    return MarkedGroup(f"H[{positions}]", g_generators(window), nf, g_letter_key,
                       window=window, kind="H")


def group_A(families=3, positions=8) -> MarkedGroup:
    """The window only constrains parsed input: A is closed, and a sum such as
    a[0,-K]^2 lands on position -K-1, so normal forms may leave the window."""
    from .dyadic import abelian_nf

    window = Window(families, positions)
    gens = tuple(Letter("a", tuple(at)) for at in window.atoms())
    return MarkedGroup(f"A[{families},{positions}]", gens, abelian_nf, abelian_letter_key,
                       window=window, kind="A")


def group_tower(Z=4) -> MarkedGroup:
    from .hnn import make_tower

    return make_tower(Z).group


_SPEC = re.compile(
    r"^(?:free:(?P<free>\d+)|freeab:(?P<freeab>\d+)|(?P<klein>klein)"
    r"|G\[(?P<GF>\d+),(?P<GK>\d+)\]|H\[(?P<HK>\d+)\]|A\[(?P<AF>\d+),(?P<AK>\d+)\]"
    r"|tower\[(?P<Z>\d+)\])$"
)


def make_group(spec: str) -> MarkedGroup:
    m = _SPEC.match(spec.replace(" ", ""))
    if m is None:
        raise ParseError(f"malformed group spec {spec!r}", 0)
    d = {k: v for k, v in m.groupdict().items() if v is not None}
    if "free" in d:
        if int(d["free"]) < 1:
            raise DomainError("free group rank must be at least 1")
        return free_group(int(d["free"]))
    if "freeab" in d:
        if int(d["freeab"]) < 1:
            raise DomainError("free abelian rank must be at least 1")
        return free_abelian_group(int(d["freeab"]))
    if "klein" in d:
        return klein_group()
    if "GF" in d:
        if int(d["GK"]) < 1:
            raise WindowError("G window needs at least two positions per family")
        return group_G(int(d["GF"]), int(d["GK"]))
    if "HK" in d:
        if int(d["HK"]) < 1:
            raise WindowError("H window needs at least two positions")
        return group_H(int(d["HK"]))
    if "AF" in d:
        return group_A(int(d["AF"]), int(d["AK"]))
    if int(d["Z"]) < 1:
        raise WindowError("tower window needs Z >= 1")
    return group_tower(int(d["Z"]))


# ---------------------------------------------------------------------------
# G-specific maps


def relator_G(family: int, position: int) -> Word:
    """(s(a),0)(a,1)(s(a),0)'(s(a),1) for a = (family, position)."""
    xs = x(family, position + 1)
    return Word((xs, y(family, position), xs.inverse(), y(family, position + 1)))


def relators_G(window: Window):
    return [relator_G(*at) for at in window.atoms() if at.succ() in window]


def relator_H(n: int, family: int = 0) -> Word:
    """y_n' x_{n+1}' y_{n+1}' x_{n+1}, i.e. the defining relation of H read as a relator."""
    xs = x(family, n + 1)
    return Word((y(family, n, -1), xs.inverse(), y(family, n + 1, -1), xs))


def retract_rn(n: int, g: GroupElement) -> GroupElement:
    """Delete letters of families above ``n`` and renormalize."""
    G = g.owner
    if G.window is None or n > G.window.families or n < 0:
        raise WindowError(f"retraction index {n} exceeds the window of {G.name}")
    keep = LetterMap.keep_only(lambda l: l.atom is None or l.atom.family <= n)
    return GroupElement(G, G.nf(substitute(keep, g.word)))


def rho_image(N: int, l: Letter) -> Word:
    """Image of a positive x/y letter under rho_N."""
    n, pos = l.index
    if pos > N:
        raise DomainError(f"letter {l} has index above N={N}")
    if l.symbol == "x" or pos == N:
        return Word((l,))
    k = N - pos
    xs = [x(n, m) for m in range(N - k + 1, N + 1)]
    core = y(n, N, (-1) ** k)
    return Word([v.inverse() for v in xs] + [core] + list(reversed(xs)))


def rho_N(N: int, w) -> Word:
    """Rewrite an H-word over basis {x_m}_{m<=N} u {y_N}, then freely reduce.

    ``y_{N-k}`` becomes ``x_{N-k+1}' ... x_N' y_N^{(-1)^k} x_N ... x_{N-k+1}``.
    """
    return substitute(LetterMap(rule=lambda l: rho_image(N, l)), w)
