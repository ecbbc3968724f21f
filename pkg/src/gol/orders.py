"""Total orders and bi-orders: shortlex on normal forms, the Magnus order on free
groups, the dyadic lexicographic order on A, and Cayley balls."""
from __future__ import annotations

import enum
from collections import defaultdict

from .dyadic import DyadicVector
from .errors import DomainError, WindowError
from .groups import GroupElement, MarkedGroup
from .words import Word, free_reduce


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _cmp(a, b) -> Cmp:
    return Cmp((a > b) - (a < b))


def _word_of(g, G=None):
    if isinstance(g, GroupElement):
        return g.word
    return G.nf(Word(g)) if G is not None else Word(g)


def shortlex_key(G: MarkedGroup, w):
    if G.letter_order is None:
        raise DomainError(f"{G.name} has no letter order")
    return (len(w), [G.letter_order(l) for l in w])


def shortlex_compare(G: MarkedGroup, u, v) -> Cmp:
    """Compare normal forms by length, then at the first differing letter."""
    u, v = _word_of(u, G), _word_of(v, G)
    return _cmp(shortlex_key(G, u), shortlex_key(G, v))


# ---------------------------------------------------------------------------
# Magnus order


def magnus_series(w, basis, degree: int) -> dict:
    """Image of ``w`` under x -> 1 + X, truncated above ``degree``.

    Monomials are tuples of basis indices; zero coefficients are dropped.
    """
    rank = {b: i for i, b in enumerate(basis)}
    series = {(): 1}
    for l in w:
        i = rank[l.positive()]
        new = defaultdict(int)
        for mono, c in series.items():
            new[mono] += c
            room = degree - len(mono)
            if l.exponent > 0:
                if room >= 1:
                    new[mono + (i,)] += c
            else:
                sign = c
                for j in range(1, room + 1):
                    sign = -sign
                    new[mono + (i,) * j] += sign
        series = {m: c for m, c in new.items() if c}
    return series


def magnus_sign(w, basis) -> int:
    """+1, 0 or -1: sign of the leading coefficient of the Magnus expansion of ``w``.

    The leading term lives in the lowest nonzero degree; within that degree the
    lexicographically least monomial (basis order) wins.  The truncation degree is
    deepened until that term appears, never beyond Len(w).
    """
    w = free_reduce(w)
    if not w:
        return 0
    d = 1
    while True:
        series = magnus_series(w, basis, d)
        live = [m for m in series if m]
        if live:
            lead = min(live, key=lambda m: (len(m), m))
            return 1 if series[lead] > 0 else -1
        if d >= len(w):
            raise AssertionError(f"nontrivial word {w} has vanishing Magnus expansion")
        d = min(2 * d, len(w))


def magnus_compare(F: MarkedGroup, u, v) -> Cmp:
    """u < v iff u v' is negative in the Magnus bi-order on F's ordered basis."""
    return Cmp(magnus_sign(Word(u) + Word(v).inverse(), F.generators))


# ---------------------------------------------------------------------------
# dyadic lexicographic order


def dyadic_lex_compare(p: DyadicVector, q: DyadicVector) -> Cmp:
    """Smallest family where the vectors differ decides, by dyadic value."""
    diff = p - q
    if not diff:
        return Cmp.EQ
    return Cmp(diff.components[0][1].sign())


# ---------------------------------------------------------------------------
# balls

BALL_CAP = 4


def ball(G: MarkedGroup, radius: int, generators=None, cap: int = BALL_CAP) -> list:
    """Distinct normal forms of products of at most ``radius`` generators (and inverses).

    Returned in breadth-first order starting from the identity.
    """
    if radius > cap:
        raise DomainError(f"ball radius {radius} exceeds cap {cap}")
    gens = list(generators) if generators is not None else list(G.generators)
    letters = [l for g in gens for l in (g, g.inverse())]
    seen = {Word()}
    order = [Word()]
    frontier = [Word()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for l in letters:
                v = G.nf(w + (l,))
                if v not in seen:
                    if G.kind != "A" and G.window is not None and any(at not in G.window for at in v.atoms()):
                        raise WindowError(f"normal form {v} leaves the window of {G.name}")
                    seen.add(v)
                    order.append(v)
                    nxt.append(v)
        frontier = nxt
    return [GroupElement(G, w) for w in order]
