"""Independent decision procedures used to cross-check the main normal forms.

None of these share code paths with the oracle they check: G is checked through
rho_N into a free group, A through integer push-to-top arithmetic, signings by
exhaustive enumeration, subgroup ranks by the Schreier index formula.
"""
from __future__ import annotations

import itertools

from .groups import MarkedGroup, rho_N
from .words import Word, free_reduce


def words_up_to(letters, length: int):
    """Every word (not necessarily reduced) of length <= ``length``."""
    for n in range(length + 1):
        for t in itertools.product(letters, repeat=n):
            yield Word(t)


def partition(words, key) -> set:
    """Blocks of ``words`` under equality of ``key``, as a set of frozensets."""
    blocks = {}
    for w in words:
        blocks.setdefault(key(w), set()).add(w)
    return {frozenset(b) for b in blocks.values()}


# -- G, one family -------------------------------------------------------


def g_family_oracle(positions: int):
    """Word-problem oracle for one family of G in the window [-K, K].

    Eliminating y_k = x_{k+1}' y_{k+1}' x_{k+1} for k < K leaves a free group on
    x_{-K..K} and y_K; rho_K is that elimination, so free reduction decides equality.
    """
    return lambda w: rho_N(positions, w)


# -- A, one family -------------------------------------------------------


def a_family_value(w, top: int) -> int:
    """Push every atom to position ``top`` with a_k = (-2) a_{k+1}; the integer multiple."""
    total = 0
    for l in w:
        k = l.index[1]
        total += l.exponent * (-2) ** (top - k)
    return total


# -- signings -------------------------------------------------------------


def brute_force_signable(G: MarkedGroup, S, mode="left") -> bool:
    """Try all 2^(|S|/2) sign choices against the cone axioms directly."""
    S = list(S)
    index = set(S)
    reps = []
    for g in S:
        if g.inverse() not in reps:
            reps.append(g)
    products = [(g, h, g * h) for g in S for h in S]
    products = [(g, h, p) for g, h, p in products if p in index or p.is_identity()]
    conj = []
    if mode == "bi":
        ks = list(S) + [G.element(Word((l,))) for l in G.generators]
        ks += [k.inverse() for k in ks]
        for g in S:
            for k in ks:
                c = k * g * k.inverse()
                if c in index:
                    conj.append((g, c))
    for bits in itertools.product((True, False), repeat=len(reps)):
        P = set()
        for g, b in zip(reps, bits):
            P.add(g if b else g.inverse())
        if any(g in P and h in P and (p.is_identity() or p not in P) for g, h, p in products):
            continue
        if any(g in P and c not in P for g, c in conj):
            continue
        return True
    return False


# -- free groups ----------------------------------------------------------


def schreier_rank(index: int, rank: int) -> int:
    """Rank of an index-``index`` subgroup of a free group of rank ``rank``."""
    return index * (rank - 1) + 1


def covering_index(graph, rank_letters) -> int | None:
    """Number of vertices if the core graph is a full covering, else None."""
    out, inc = graph.outgoing()
    for v in graph.vertices:
        for l in rank_letters:
            if l not in out[v] or l not in inc[v]:
                return None
    return len(graph.vertices)


def free_equal(u, v) -> bool:
    return free_reduce(Word(u) + Word(v).inverse()) == Word()
