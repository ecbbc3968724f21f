"""Two-level HNN tower over a free base, Britton reduction, and the lambda certificate.

Level one adjoins stable letters ``t[z]`` (``-Z <= z <= Z``) with
``t[z] sigma(z) t[z]' = sigma(z+1)``; level two adjoins ``t`` with
``t t[z] t' = t[z+1]``.  Relations are only imposed for ``z`` in ``[-Z, Z-1]``, so a
reduction that would need ``t[Z]`` to conjugate ``sigma(Z)`` (or ``t`` to shift
``t[Z]``) raises ``BoundaryPinchError`` instead of silently disagreeing with the
infinite group.

Normal forms are canonical: Britton-reduce, then push subgroup parts leftwards so
that every segment after a stable letter is the shortlex-least member of its coset.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import BoundaryPinchError, DomainError, GolError
from .groups import MarkedGroup, free_basis
from .words import Letter, Word, format_word, free_reduce, gen

TOP = Letter("t", ())


def t_letter(z: int, exponent: int = 1) -> Letter:
    return Letter("t", (z,), exponent)


def _is_top(l):
    return l.symbol == "t" and l.index == ()


def _is_level1(l):
    return l.symbol == "t" and len(l.index) == 1


def cyclic_membership(w, u) -> Optional[int]:
    """``k`` with ``w = u^k`` in the free group, or None.  Scans ``|k| <= Len(w)``."""
    w, u = free_reduce(w), free_reduce(u)
    if not u:
        raise ValueError("cyclic subgroup generator must be nontrivial")
    if not w:
        return 0
    for k in range(1, len(w) + 1):
        for s in (k, -k):
            if free_reduce(u.power(s)) == w:
                return s
    return None


def _coset_rep(c: Word, g: Word):
    """(k, r) with g = c^k r and r the shortlex-least element of <c> g.

    Minimizers satisfy |k| <= 2 Len(g), since Len(c^j g) >= |j| - Len(g).
    """
    best = None
    bound = 2 * len(g) + 2
    for k in range(-bound, bound + 1):
        r = free_reduce(c.power(-k) + g)
        key = (len(r), tuple(r))
        if best is None or key < best[0]:
            best = (key, k, r)
    return best[1], best[2]


@dataclass
class BrittonWord:
    """Alternating ``g_0 s_1 g_1 ... s_m g_m`` with no pinch ``s g s'``."""

    segments: list
    stable: list

    @property
    def word(self) -> Word:
        out = list(self.segments[0])
        for s, g in zip(self.stable, self.segments[1:]):
            out.append(s)
            out.extend(g)
        return Word(out)

    @property
    def is_empty(self) -> bool:
        return not self.stable and not self.segments[0]

    def __str__(self):
        return format_word(self.word) or "e"


@dataclass(eq=False)
class TowerGroup:
    Z: int
    base_gens: tuple
    mode: str  # "fresh" or "two"
    g: Optional[Word] = None
    h: Optional[Word] = None
    group: MarkedGroup = field(init=False, repr=False)

    def __post_init__(self):
        gens = (tuple(self.base_gens) + tuple(t_letter(z) for z in range(-self.Z, self.Z + 1))
                + (TOP,))
        order = {l: i for i, l in enumerate(gens)}
        self.group = MarkedGroup(
            f"tower[{self.Z}]" if self.mode == "fresh" else f"tower2[{self.Z}]",
            gens, self.nf, lambda l: (order[l.positive()], l.exponent), kind="tower",
            data=self)

    # -- the edge map -----------------------------------------------------

    def sigma(self, z: int) -> Optional[Word]:
        """sigma(z) as a base word, or None when it is not in the base (past the window)."""
        if self.mode == "two":
            return self.g if z >= 0 else self.h
        if -self.Z <= z <= self.Z:
            return Word((gen("u", z),))
        return None

    def _is_base(self, l):
        return l.symbol != "t"

    # -- level one: base + t[z] ------------------------------------------

    def _pinch1(self, z, direction, seg):
        """Exponent k if ``t[z]^direction seg t[z]^-direction`` pinches, else None."""
        if not seg:
            return 0
        c = self.sigma(z) if direction > 0 else self.sigma(z + 1)
        if c is None:
            return None
        k = cyclic_membership(seg, c)
        if k is None:
            return None
        if z >= self.Z:
            raise BoundaryPinchError(
                f"t[{z}] conjugating {format_word(seg)} needs a relation past Z={self.Z}")
        return k

    def reduce1(self, w) -> BrittonWord:
        segs, stable = [[]], []
        for l in w:
            if self._is_base(l):
                top = segs[-1]
                if top and top[-1] == l.inverse():
                    top.pop()
                else:
                    top.append(l)
                continue
            if not _is_level1(l):
                raise DomainError(f"letter {l} is not in the level-one group")
            z = l.index[0]
            if stable and stable[-1] == l.inverse():
                direction = stable[-1].exponent
                k = self._pinch1(z, direction, Word(segs[-1]))
                if k is not None:
                    segs.pop()
                    stable.pop()
                    if k:
                        image = self.sigma(z + 1) if direction > 0 else self.sigma(z)
                        segs[-1] = list(free_reduce(Word(segs[-1]) + image.power(k)))
                    continue
            stable.append(l)
            segs.append([])
        return BrittonWord([Word(s) for s in segs], stable)

    def nf1(self, w) -> Word:
        """Canonical normal form in the level-one group."""
        b = self.reduce1(w)
        segs = list(b.segments)
        for i in range(len(b.stable), 0, -1):
            s = b.stable[i - 1]
            z = s.index[0]
            if z >= self.Z or not segs[i]:
                continue
            c = self.sigma(z) if s.exponent > 0 else self.sigma(z + 1)
            image = self.sigma(z + 1) if s.exponent > 0 else self.sigma(z)
            k, r = _coset_rep(c, segs[i])
            segs[i] = r
            if k:
                segs[i - 1] = free_reduce(segs[i - 1] + image.power(k))
        return BrittonWord(segs, b.stable).word

    # -- level two: adjoin t ---------------------------------------------

    @staticmethod
    def _retract(w) -> Word:
        return free_reduce(Word(l for l in w if _is_level1(l)))

    def _shift(self, w, d) -> Word:
        return Word(t_letter(l.index[0] + d, l.exponent) for l in w)

    def _pinch2(self, direction, seg):
        """Shifted image if ``t^direction seg t^-direction`` pinches, else None."""
        if not seg:
            return Word()
        r = self._retract(seg)
        if self.nf1(r) != seg:
            return None
        idx = [l.index[0] for l in r]
        edge = self.Z if direction > 0 else -self.Z
        if edge in idx:
            raise BoundaryPinchError(
                f"t conjugating {format_word(seg)} would shift t[{edge}] out of the window")
        return self._shift(r, direction)

    def reduce(self, w) -> BrittonWord:
        segs, stable = [[]], []
        for l in w:
            if not _is_top(l):
                segs[-1].append(l)
                continue
            if stable and stable[-1] == l.inverse():
                direction = stable[-1].exponent
                image = self._pinch2(direction, self.nf1(segs[-1]))
                if image is not None:
                    segs.pop()
                    stable.pop()
                    segs[-1] = list(segs[-1]) + list(image)
                    continue
            segs[-1] = list(self.nf1(segs[-1]))
            stable.append(l)
            segs.append([])
        segs[-1] = list(self.nf1(segs[-1]))
        return BrittonWord([Word(s) for s in segs], stable)

    def nf(self, w) -> Word:
        b = self.reduce(w)
        segs = list(b.segments)
        lo, hi = -self.Z, self.Z
        for i in range(len(b.stable), 0, -1):
            s = b.stable[i - 1]
            # t maps F(t[lo..hi-1]) onto F(t[lo+1..hi]); t' the other way
            d = s.exponent
            ok = range(lo, hi) if d > 0 else range(lo + 1, hi + 1)
            r = self._retract(segs[i])
            p = 0
            while p < len(r) and r[p].index[0] in ok:
                p += 1
            prefix = Word(r[:p])
            if prefix:
                segs[i] = self.nf1(prefix.inverse() + segs[i])
                segs[i - 1] = self.nf1(segs[i - 1] + self._shift(prefix, d))
        return BrittonWord(segs, b.stable).word


def make_tower(Z: int = 4, mode: str = "fresh", g=None, h=None, base_rank: int = 2) -> TowerGroup:
    """Fresh basis: base is free on u[-Z..Z], sigma(z) = u[z].

    Two-element: base is free of rank ``base_rank``, sigma(z) = g for z >= 0 and h otherwise.
    """
    if Z < 1:
        raise DomainError("tower needs Z >= 1")
    if mode == "fresh":
        return TowerGroup(Z, tuple(gen("u", z) for z in range(-Z, Z + 1)), "fresh")
    if mode != "two":
        raise ValueError(f"unknown tower mode {mode!r}")
    g, h = free_reduce(Word(g)), free_reduce(Word(h))
    if not g or not h:
        raise DomainError("edge elements g and h must be nontrivial")
    return TowerGroup(Z, free_basis(base_rank), "two", g, h)


def conjugacy_witness(T: TowerGroup) -> Word:
    """``c`` with ``c h c' = g``: the stable letter t[-1] carries sigma(-1) = h to sigma(0) = g."""
    if T.mode != "two":
        raise DomainError("conjugacy witness needs a two-element tower")
    c = Word((t_letter(-1),))
    if T.nf(c + T.h + c.inverse() + T.g.inverse()):
        raise GolError("t[-1] fails to conjugate h to g")
    return c


def tower_relations(T: TowerGroup) -> list:
    """Every defining relator of the truncated tower."""
    out = []
    for z in range(-T.Z, T.Z):
        tz = Word((t_letter(z),))
        out.append(tz + T.sigma(z) + tz.inverse() + T.sigma(z + 1).inverse())
        out.append(Word((TOP,)) + tz + Word((TOP.inverse(),)) + Word((t_letter(z + 1, -1),)))
    return out


def kill_base(T: TowerGroup, w) -> Word:
    """Retraction onto the free group on the stable letters: delete base letters."""
    return free_reduce(Word(l for l in w if l.symbol == "t"))


# ---------------------------------------------------------------------------
# lambda certificate


@dataclass(eq=False)
class LambdaNode:
    label: str
    op: str  # "seed", "product" or "inverse"
    children: tuple
    cost: int
    value: Word
    claim: Word


class LambdaCertificate:
    """Product DAG from seeds {1, t, t', t[0], t[0]', g_0} to g_n = sigma(n).

    Seeds cost M; a product costs one more than its dearest factor; an inverse costs
    one more than its argument.  ``g_n`` lands at cost ``M + 2n + 1``.
    """

    def __init__(self, T: TowerGroup, n: int, M: int):
        if T.mode != "fresh":
            raise DomainError("lambda certificate needs the fresh-basis tower")
        if not 1 <= n < T.Z:
            raise DomainError(f"n={n} needs 1 <= n < Z={T.Z}")
        self.T, self.n, self.M = T, n, M
        self.nodes = []
        self._memo = {}
        t, t_inv = Word((TOP,)), Word((TOP.inverse(),))
        self._one = self._seed("1", Word())
        self._t = self._seed("t", t)
        self._t_inv = self._seed("t'", t_inv)
        self._t0 = self._seed("t[0]", Word((t_letter(0),)))
        self._t0_inv = self._seed("t[0]'", Word((t_letter(0, -1),)))
        self._g0 = self._seed("g_0", T.sigma(0))
        self.root = self.g(n)

    def _add(self, label, op, children, cost, value, claim):
        node = LambdaNode(label, op, tuple(children), cost, Word(value), Word(claim))
        self.nodes.append(node)
        return node

    def _seed(self, label, w):
        return self._add(label, "seed", (), self.M, w, w)

    def _product(self, label, a, b, claim):
        return self._add(label, "product", (a, b), max(a.cost, b.cost) + 1,
                         a.value + b.value, claim)

    def _inverse(self, label, a):
        return self._add(label, "inverse", (a,), a.cost + 1, a.value.inverse(), a.claim.inverse())

    def _memoized(self, key, build):
        if key not in self._memo:
            self._memo[key] = build()
        return self._memo[key]

    def power(self, m: int, sign: int = 1):
        """t^m or t^-m, built as a left-leaning chain."""
        if m == 0:
            return self._one
        unit = self._t if sign > 0 else self._t_inv
        if m == 1:
            return unit
        tag = "t" if sign > 0 else "t'"
        return self._memoized(("pow", m, sign), lambda: self._product(
            f"{tag}^{m}", self.power(m - 1, sign), unit, unit.value.power(m)))

    def stable(self, m: int):
        """t[m] = (t^m t[0]) t^-m."""
        if m == 0:
            return self._t0

        def build():
            left = self._product(f"t^{m} t[0]", self.power(m), self._t0,
                                 Word((TOP,)).power(m) + Word((t_letter(0),)))
            return self._product(f"t[{m}]", left, self.power(m, -1), Word((t_letter(m),)))

        return self._memoized(("stable", m), build)

    def g(self, m: int):
        """g_m = t[m-1] (g_{m-1} t[m-1]')."""
        if m == 0:
            return self._g0

        def build():
            s = self.stable(m - 1)
            s_inv = self._memoized(("inv", m - 1), lambda: self._inverse(f"t[{m - 1}]'", s))
            inner = self._product(f"g_{m - 1} t[{m - 1}]'", self.g(m - 1), s_inv,
                                  self.T.sigma(m - 1) + Word((t_letter(m - 1, -1),)))
            return self._product(f"g_{m}", s, inner, self.T.sigma(m))

        return self._memoized(("g", m), build)

    @property
    def cost(self) -> int:
        return self.root.cost

    def verify(self) -> bool:
        """Recheck every cost and every claimed equality in the tower."""
        for node in self.nodes:
            if node.op == "seed":
                want = self.M
                value = node.claim
            elif node.op == "product":
                want = max(c.cost for c in node.children) + 1
                value = node.children[0].claim + node.children[1].claim
            else:
                want = node.children[0].cost + 1
                value = node.children[0].claim.inverse()
            if node.cost != want or not self.T.group.equal(value, node.claim):
                return False
        return self.T.group.equal(self.root.value, self.T.sigma(self.n))

    def dump(self) -> str:
        lines, seen = [], set()

        def walk(node, depth):
            mark = " (shared)" if id(node) in seen and node.op != "seed" else ""
            lines.append(f"{'  ' * depth}{node.label} [{node.op}] cost={node.cost}{mark}")
            if id(node) in seen:
                return
            seen.add(id(node))
            for c in node.children:
                walk(c, depth + 1)

        walk(self.root, 0)
        return "\n".join(lines)


def lambda_certificate(T: TowerGroup, n: int, M: int) -> LambdaCertificate:
    return LambdaCertificate(T, n, M)


def crossover(M: int) -> int:
    """Smallest n with n^2 > M + 2n + 1."""
    n = 1
    while n * n <= M + 2 * n + 1:
        n += 1
    return n
