"""String rewriting over words: normalization, critical pairs, termination checks.

``rewriting_system_G`` instantiates the eight-rule system whose termini are the
normal forms of the locally free group G.  Rules (i)-(iv) cancel, rules (v)-(viii)
move channel-0 letters to the right past channel-1 letters.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .errors import BudgetExceeded
from .words import EMPTY, Letter, Window, Word, x, y

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word
    tag: str = ""

    def __post_init__(self):
        if not self.lhs:
            raise ValueError("rule lhs must be nonempty")
        object.__setattr__(self, "lhs", Word(self.lhs))
        object.__setattr__(self, "rhs", Word(self.rhs))

    def __str__(self):
        return f"({self.tag}) {self.lhs or 'e'} -> {self.rhs or 'e'}"


class RewriteSystem:
    """A finite set of concrete rules, indexed by left-hand side."""

    def __init__(self, rules: Sequence[Rule], window: Optional[Window] = None, name: str = ""):
        self.rules = tuple(rules)
        self.window = window
        self.name = name
        self._by_lhs = defaultdict(list)
        for r in self.rules:
            self._by_lhs[tuple(r.lhs)].append(r)
        self._lengths = sorted({len(r.lhs) for r in self.rules})
        self._maxlen = max(self._lengths, default=1)

    def __len__(self):
        return len(self.rules)

    def __repr__(self):
        return f"RewriteSystem({self.name!r}, {len(self.rules)} rules)"

    @property
    def alphabet(self):
        """Positive letters mentioned by any rule."""
        return sorted({l.positive() for r in self.rules for l in r.lhs + r.rhs})

    def rules_for(self, lhs) -> list:
        return self._by_lhs.get(tuple(lhs), [])

    def redexes(self, w):
        """All ``(position, rule)`` pairs where ``rule.lhs`` occurs in ``w``."""
        out = []
        n = len(w)
        for i in range(n):
            for L in self._lengths:
                if i + L > n:
                    break
                for r in self._by_lhs.get(tuple(w[i:i + L]), ()):
                    out.append((i, r))
        return out

    def is_terminus(self, w) -> bool:
        n = len(w)
        return not any(tuple(w[i:i + L]) in self._by_lhs
                       for i in range(n) for L in self._lengths if i + L <= n)

    def normalize(self, w, strategy="leftmost", seed=None, budget=DEFAULT_BUDGET) -> Word:
        return normalize(self, w, strategy, seed, budget)


def apply_at(w, pos: int, rule: Rule) -> Word:
    return Word(tuple(w[:pos]) + tuple(rule.rhs) + tuple(w[pos + len(rule.lhs):]))


def normalize(sys: RewriteSystem, w, strategy="leftmost", seed=None, budget=DEFAULT_BUDGET) -> Word:
    """Rewrite ``w`` until no rule applies.

    ``strategy`` picks the redex: ``"leftmost"``, ``"rightmost"`` or ``"random"``
    (seeded by ``seed``).  Raises ``BudgetExceeded`` after ``budget`` steps.
    """
    if strategy == "leftmost":
        return _normalize_leftmost(sys, w, budget)
    rng = random.Random(seed)
    cur = Word(w)
    for _ in range(budget + 1):
        red = sys.redexes(cur)
        if not red:
            return cur
        if strategy == "rightmost":
            pos = red[-1][0]
            pos, rule = next(p for p in red if p[0] == pos)
        elif strategy == "random":
            pos, rule = rng.choice(red)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        cur = apply_at(cur, pos, rule)
    raise BudgetExceeded(f"no terminus after {budget} rewrite steps")


def _normalize_leftmost(sys, w, budget):
    buf = list(w)
    lengths, by_lhs, back = sys._lengths, sys._by_lhs, sys._maxlen - 1
    i = steps = 0
    while i < len(buf):
        rules = None
        for L in lengths:
            if i + L > len(buf):
                break
            rules = by_lhs.get(tuple(buf[i:i + L]))
            if rules:
                break
        if not rules:
            i += 1
            continue
        buf[i:i + L] = rules[0].rhs
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"no terminus after {budget} rewrite steps")
        # positions left of i - back were redex-free and are untouched
        i = max(0, i - back)
    return Word(buf)


# ---------------------------------------------------------------------------
# termination measure


@dataclass(frozen=True)
class TerminationMeasure:
    evaluator: Callable[[Word], int]
    name: str = ""

    def __call__(self, w) -> int:
        return self.evaluator(w)


def crossing_count(w) -> int:
    """Number of pairs (channel-0 letter, channel-1 letter to its right)."""
    total = ones = 0
    for l in reversed(w):
        if l[0] == "y":
            ones += 1
        elif l[0] == "x":
            total += ones
    return total


def measure(w, sys: Optional[RewriteSystem] = None) -> int:
    """Len(w) + j(w), the decreasing quantity for the G system."""
    return len(w) + crossing_count(w)


LEN_PLUS_J = TerminationMeasure(measure, "Len+j")
LENGTH = TerminationMeasure(len, "Len")


# ---------------------------------------------------------------------------
# critical pairs and confluence


@dataclass(frozen=True)
class CriticalPair:
    peak: Word
    left: Word
    right: Word
    rules: tuple
    overlap: int

    def format(self) -> str:
        return f"peak={self.peak} left={self.left} right={self.right} rules={self.rules[0]},{self.rules[1]}"


def critical_pairs(sys: RewriteSystem) -> list:
    """Every overlap of two rule left-hand sides, each emitted once.

    Proper overlaps (a suffix of one lhs is a prefix of another) and inclusions
    (one lhs is a factor of another; identical lhs's count once per unordered
    pair of distinct rules).  ``overlap`` is where the second redex starts in ``peak``.
    """
    rules = sys.rules
    order = {id(r): i for i, r in enumerate(rules)}
    by_prefix = defaultdict(list)
    for r in rules:
        for k in range(1, len(r.lhs) + 1):
            by_prefix[tuple(r.lhs[:k])].append(r)
    out = []
    for r1 in rules:
        L1 = len(r1.lhs)
        for k in range(1, L1):
            suffix = tuple(r1.lhs[L1 - k:])
            for r2 in by_prefix.get(suffix, ()):
                if len(r2.lhs) <= k:
                    continue
                tail = r2.lhs[k:]
                out.append(CriticalPair(r1.lhs + tail, r1.rhs + tail,
                                        r1.lhs[:L1 - k] + r2.rhs, (r1.tag, r2.tag), L1 - k))
        for start in range(L1):
            for stop in range(start + 1, L1 + 1):
                for r2 in sys.rules_for(r1.lhs[start:stop]):
                    if r2 is r1:
                        continue
                    if stop - start == L1 and order[id(r2)] < order[id(r1)]:
                        continue
                    right = r1.lhs[:start] + r2.rhs + r1.lhs[stop:]
                    out.append(CriticalPair(r1.lhs, r1.rhs, right, (r1.tag, r2.tag), start))
    return out


@dataclass
class ConfluenceReport:
    pairs_checked: int
    failures: list = field(default_factory=list)
    pairs: list = field(default_factory=list)

    @property
    def joinable(self) -> bool:
        return not self.failures

    def format(self) -> str:
        lines = [f"status: {'PASS' if self.joinable else 'FAIL'}",
                 f"pairs-checked: {self.pairs_checked}",
                 f"failures: {len(self.failures)}"]
        lines += [cp.format() for cp in self.failures]
        return "\n".join(lines)


def check_local_confluence(sys: RewriteSystem, budget=DEFAULT_BUDGET) -> ConfluenceReport:
    pairs = critical_pairs(sys)
    failures = [cp for cp in pairs
                if normalize(sys, cp.left, budget=budget) != normalize(sys, cp.right, budget=budget)]
    return ConfluenceReport(len(pairs), failures, pairs)


@dataclass
class TerminationReport:
    samples: int
    steps: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def format(self) -> str:
        lines = [f"status: {'PASS' if self.ok else 'FAIL'}",
                 f"samples: {self.samples}",
                 f"steps: {self.steps}",
                 f"violations: {len(self.violations)}"]
        lines += self.violations
        return "\n".join(lines)


def random_word(rng: random.Random, letters, max_len: int, min_len: int = 0) -> Word:
    n = rng.randint(min_len, max_len)
    return Word(Letter(l.symbol, l.index, rng.choice((1, -1))) for l in rng.choices(letters, k=n))


def check_termination(sys: RewriteSystem, m: TerminationMeasure = LEN_PLUS_J, samples=10_000,
                      max_len=30, seed=0, alphabet=None, budget=10_000,
                      all_successors=True) -> TerminationReport:
    """Walk random rewrite paths from random words and check every step lowers ``m``.

    With ``all_successors`` every one-step rewrite of each visited word is checked,
    not only the step taken.  A sample stops at its first violation.  Without an
    explicit ``alphabet`` each word draws from a block of three consecutive atoms of
    one family (when the system has a window), so rules actually fire.
    """
    rng = random.Random(seed)
    blocks = None
    if alphabet is not None:
        letters = list(alphabet)
    elif sys.window is not None:
        atoms = list(sys.window.atoms())
        blocks = [[l for at in atoms[i:i + 3] for l in (x(*at), y(*at))]
                  for i in range(len(atoms)) if atoms[min(i + 2, len(atoms) - 1)][0] == atoms[i][0]]
    else:
        letters = sys.alphabet
    steps = 0
    violations = []
    for _ in range(samples):
        if blocks is not None:
            letters = rng.choice(blocks)
        cur = random_word(rng, letters, max_len)
        for _ in range(budget):
            red = sys.redexes(cur)
            if not red:
                break
            before = m(cur)
            bad = None
            for pos, rule in (red if all_successors else [rng.choice(red)]):
                nxt = apply_at(cur, pos, rule)
                if m(nxt) >= before:
                    bad = (pos, rule, nxt)
                    break
            if bad is not None:
                pos, rule, nxt = bad
                violations.append(f"word={cur or 'e'} rule={rule.tag} at={pos} "
                                  f"measure={before}->{m(nxt)}")
                break
            pos, rule = rng.choice(red)
            cur = apply_at(cur, pos, rule)
            steps += 1
        else:
            violations.append(f"word={cur or 'e'} no terminus within {budget} steps")
    return TerminationReport(samples, steps, violations)


# ---------------------------------------------------------------------------
# the system for G


def rewriting_system_G(window: Window = Window()) -> RewriteSystem:
    """Instantiate rules (i)-(viii) over every atom of ``window``.

    Atoms whose successor falls outside the window get only the cancellation rules.
    """
    rules = []
    for at in window.atoms():
        n, k = at
        x0, y1 = x(n, k), y(n, k)
        rules += [
            Rule((x0, x0.inverse()), EMPTY, "i"),
            Rule((x0.inverse(), x0), EMPTY, "ii"),
            Rule((y1, y1.inverse()), EMPTY, "iii"),
            Rule((y1.inverse(), y1), EMPTY, "iv"),
        ]
        if at.succ() not in window:
            continue
        xs, ys = x(n, k + 1), y(n, k + 1)
        rules += [
            Rule((xs, y1), (ys.inverse(), xs), "v"),
            Rule((xs, y1.inverse()), (ys, xs), "vi"),
            Rule((xs.inverse(), ys), (y1.inverse(), xs.inverse()), "vii"),
            Rule((xs.inverse(), ys.inverse()), (y1, xs.inverse()), "viii"),
        ]
    return RewriteSystem(rules, window, name=f"G[{window.families},{window.positions}]")
