"""Randomized law checks shared by the CLI and the test suite."""
from __future__ import annotations

import random

from .errors import BoundaryPinchError
from .rewriting import normalize, random_word

STRATEGIES = [("leftmost", None), ("rightmost", None)] + [("random", s) for s in range(5)]


def check_group_laws(G, samples: int, rng: random.Random, max_len: int = 6,
                     letters=None) -> list:
    """Associativity, two-sided inverse and identity on random triples; returns failures.

    Triples whose reduction would cross a window boundary (towers only) are redrawn.
    """
    failures = []
    letters = list(letters or G.generators)
    done = tries = 0
    while done < samples:
        tries += 1
        if tries > 20 * samples:
            raise RuntimeError("too many triples hit the window boundary")
        try:
            failures += _law_failures(G, rng, letters, max_len)
        except BoundaryPinchError:
            continue
        done += 1
    return failures


def _law_failures(G, rng, letters, max_len):
    failures = []
    u, v, w = (G.element(random_word(rng, letters, max_len)) for _ in range(3))
    if (u * v) * w != u * (v * w):
        failures.append(f"associativity: {u!r} {v!r} {w!r}")
    if not (u * u.inverse()).is_identity() or not (u.inverse() * u).is_identity():
        failures.append(f"inverse: {u!r}")
    e = G.identity()
    if u * e != u or e * u != u:
        failures.append(f"identity: {u!r}")
    return failures


def strategy_disagreements(sys, words) -> list:
    """Words whose terminus depends on the rewriting strategy."""
    bad = []
    for w in words:
        results = {normalize(sys, w, strat, seed) for strat, seed in STRATEGIES}
        if len(results) != 1:
            bad.append(w)
    return bad
