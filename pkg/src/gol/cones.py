"""Finite signings of group elements and certified obstructions.

A signing of a symmetric finite set S (no identity) picks one of each pair g, g'
as positive.  It is consistent (left mode) when positives are closed under products
landing in S; bi mode also closes them under conjugation by the generators and by
S.  The search is a small DPLL over one boolean per pair.  When no signing exists
the refutation is emitted as a numbered derivation that ``verify_certificate``
replays with nothing but the normal-form oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError, GolError, WindowError
from .groups import GroupElement, MarkedGroup
from .words import Atom, ShiftAutomorphism, Word, a, format_word, x, y

SIGNING_CAP = 64


def _fmt(g: GroupElement) -> str:
    return format_word(g.word) or "e"


def _sort_key(G: MarkedGroup):
    if G.letter_order is not None:
        return lambda g: (len(g.word), [G.letter_order(l) for l in g.word])
    return lambda g: (len(g.word), str(g))


def symmetric_closure(G: MarkedGroup, S) -> list:
    out = set()
    for g in S:
        g = g if isinstance(g, GroupElement) else G.element(g)
        if g.is_identity():
            raise ValueError("the identity cannot be signed")
        out.add(g)
        out.add(g.inverse())
    return sorted(out, key=_sort_key(G))


# ---------------------------------------------------------------------------
# clauses: "at least one of these elements is positive"


@dataclass(frozen=True)
class Clause:
    kind: str  # "product" or "conjugation"
    premises: tuple  # elements assumed positive
    conclusion: GroupElement
    by: Optional[GroupElement] = None  # conjugator

    @property
    def elements(self):
        """Elements of which at least one must be positive."""
        return tuple(p.inverse() for p in self.premises) + (self.conclusion,)

    def holds(self) -> bool:
        """Recompute the identity behind the clause with the normal form."""
        if self.kind == "product":
            g, h = self.premises
            return g * h == self.conclusion
        (g,) = self.premises
        k = self.by
        return k * g * k.inverse() == self.conclusion

    def describe(self) -> str:
        if self.kind == "product":
            g, h = self.premises
            return f"{_fmt(g)} * {_fmt(h)} = {_fmt(self.conclusion)}"
        (g,) = self.premises
        return f"{_fmt(self.by)} ({_fmt(g)}) {_fmt(self.by)}' = {_fmt(self.conclusion)}"


def build_clauses(G: MarkedGroup, S, mode="left", conjugators=None) -> list:
    index = set(S)
    out, seen = [], set()
    for g in S:
        for h in S:
            p = g * h
            if p in index:
                c = Clause("product", (g, h), p)
                key = frozenset(c.elements)
                if key not in seen:
                    seen.add(key)
                    out.append(c)
    if mode == "bi":
        ks = list(S)
        for l in G.generators:
            for k in (G.element(Word((l,))), G.element(Word((l.inverse(),)))):
                if k not in index:
                    ks.append(k)
        if conjugators is not None:
            ks += [k if isinstance(k, GroupElement) else G.element(k) for k in conjugators]
        for g in S:
            for k in ks:
                c = k * g * k.inverse()
                if c in index and c != g:
                    cl = Clause("conjugation", (g,), c, k)
                    key = frozenset(cl.elements)
                    if key not in seen:
                        seen.add(key)
                        out.append(cl)
    elif mode != "left":
        raise ValueError(f"unknown signing mode {mode!r}")
    return out


# ---------------------------------------------------------------------------
# results


@dataclass
class Signing:
    domain: list
    positive: frozenset
    mode: str = "left"

    def sign(self, g) -> int:
        return 1 if g in self.positive else -1

    def violations(self, clauses) -> list:
        return [c for c in clauses if not any(e in self.positive for e in c.elements)]

    def format(self) -> str:
        return "\n".join(f"{'+' if g in self.positive else '-'} {_fmt(g)}" for g in self.domain)


@dataclass
class Step:
    number: int
    element: GroupElement  # asserted positive
    rule: str  # "case", "product", "conjugation", "contradiction"
    clause: Optional[Clause] = None
    refs: tuple = ()
    note: str = ""


@dataclass
class Branch:
    assumption: Optional[GroupElement]
    steps: list = field(default_factory=list)
    children: list = field(default_factory=list)


@dataclass
class ObstructionCertificate:
    group: MarkedGroup
    domain: list
    mode: str
    root: Branch
    involved: list = field(default_factory=list)

    def all_steps(self):
        out = []

        def walk(b):
            out.extend(b.steps)
            for c in b.children:
                walk(c)

        walk(self.root)
        return out

    def format(self) -> str:
        reps = {}
        for g in self.domain:
            if g.inverse() not in reps:
                reps[g] = g
        lines = ["OBSTRUCTION", "elements: " + ", ".join(_fmt(g) for g in self.involved)]
        for s in self.all_steps():
            refs = " ".join(str(r) for r in s.refs)
            if s.rule == "contradiction":
                lines.append(f"{s.number}: contradiction: {_fmt(s.element)} and "
                             f"{_fmt(s.element.inverse())} both positive ({refs})")
                continue
            if s.element in reps:
                said = f"{_fmt(s.element)} must be +"
            else:
                said = f"{_fmt(s.element.inverse())} must be -"
            if s.rule == "case":
                lines.append(f"{s.number}: {said} because case {s.note}")
            else:
                lines.append(f"{s.number}: {said} because {s.rule} {s.clause.describe()}"
                             + (f" {refs}" if refs else ""))
        return "\n".join(lines)


def verify_certificate(cert: ObstructionCertificate) -> bool:
    """Replay a refutation using only normal forms; every branch must close."""
    domain = set(cert.domain)

    def check(branch, known):
        known = dict(known)  # element -> step number
        steps = branch.steps
        start = 0
        if branch.assumption is not None:
            first = steps[0]
            if first.rule != "case" or first.element != branch.assumption:
                return False
            known[first.element] = first.number
            start = 1
        for s in steps[start:]:
            if s.rule == "contradiction":
                if set(s.refs) != {known.get(s.element), known.get(s.element.inverse())}:
                    return False
                if None in s.refs:
                    return False
                return not branch.children
            c = s.clause
            if c is None or c.kind != s.rule or s.element not in c.elements:
                return False
            if not c.holds() or not set(c.elements) <= domain:
                return False
            if cert.mode == "left" and c.kind == "conjugation":
                return False
            others = [e for e in c.elements if e != s.element]
            for e in others:
                if known.get(e.inverse()) not in s.refs:
                    return False
            known[s.element] = s.number
        if len(branch.children) != 2:
            return False
        a, b = branch.children
        if a.assumption is None or b.assumption != a.assumption.inverse():
            return False
        return check(a, known) and check(b, known)

    return check(cert.root, {})


# ---------------------------------------------------------------------------
# search


class _Solver:
    def __init__(self, S, clauses):
        self.S = S
        self.reps = []
        self.var = {}
        for g in S:
            if g.inverse() in self.var:
                self.var[g] = -self.var[g.inverse()]
            else:
                self.reps.append(g)
                self.var[g] = len(self.reps)
        self.elem = {v: g for g, v in self.var.items()}
        self.clauses = [(tuple(sorted({self.var[e] for e in c.elements})), c) for c in clauses]
        self.clauses = [(lits, c) for lits, c in self.clauses if not any(-l in lits for l in lits)]
        self.watch = {}
        for ci, (lits, _) in enumerate(self.clauses):
            for l in lits:
                self.watch.setdefault(-l, []).append(ci)

    def _propagate(self, assign, queue, trail):
        """Unit propagation. Returns the violated clause index or None."""
        while queue:
            lit = queue.pop(0)
            for ci in self.watch.get(lit, ()):
                lits, _ = self.clauses[ci]
                free, sat = [], False
                for l in lits:
                    v = assign.get(abs(l))
                    if v is None:
                        free.append(l)
                    elif v == (l > 0):
                        sat = True
                        break
                if sat:
                    continue
                if not free:
                    return ci
                if len(free) == 1:
                    u = free[0]
                    assign[abs(u)] = u > 0
                    trail.append((u, ci))
                    queue.append(u)
        return None

    def _initial_units(self, assign, trail):
        queue = []
        for ci, (lits, _) in enumerate(self.clauses):
            if len(lits) == 1:
                u = lits[0]
                if assign.get(abs(u)) == (u < 0):
                    return ci, queue
                if abs(u) not in assign:
                    assign[abs(u)] = u > 0
                    trail.append((u, ci))
                    queue.append(u)
        return None, queue

    def solve(self):
        """(True, positive set) or (False, refutation tree)."""
        return self._dpll({}, None, True)

    def _dpll(self, assign, decision, root):
        assign = dict(assign)
        trail = []
        queue = []
        if decision is not None:
            assign[abs(decision)] = decision > 0
            queue = [decision]
        conflict = None
        if root:
            conflict, queue = self._initial_units(assign, trail)
        if conflict is None:
            conflict = self._propagate(assign, queue, trail)
        if conflict is not None:
            return False, (decision, trail, conflict, None)
        free = [v for v in range(1, len(self.reps) + 1) if v not in assign]
        if not free:
            return True, frozenset(self.elem[v if val else -v] for v, val in assign.items())
        v = free[0]
        kids = []
        for lit in (v, -v):
            ok, res = self._dpll(assign, lit, False)
            if ok:
                return True, res
            kids.append(res)
        return False, (decision, trail, None, kids)

    def certificate(self, G, S, mode, tree) -> ObstructionCertificate:
        counter = [0]
        involved = set()

        def number():
            counter[0] += 1
            return counter[0]

        def build(node, known, case_note):
            decision, trail, conflict, kids = node
            known = dict(known)
            br = Branch(self.elem[decision] if decision is not None else None)
            if decision is not None:
                n = number()
                g = self.elem[decision]
                br.steps.append(Step(n, g, "case", note=case_note))
                known[decision] = n
                involved.add(g)
            for lit, ci in trail:
                n = self._derive(br, known, lit, ci, number, involved)
                known[lit] = n
            if conflict is not None:
                lits, c = self.clauses[conflict]
                # derive the clause's conclusion-side literal, clashing with its negation
                target = self.var[c.conclusion]
                n = self._derive(br, known, target, conflict, number, involved)
                br.steps.append(Step(number(), self.elem[target], "contradiction",
                                     refs=tuple(sorted((n, known[-target])))))
                return br
            v = abs(kids[0][0])
            label = _fmt(self.elem[v])
            br.children = [build(kids[0], known, f"1/2 on {label}"),
                           build(kids[1], known, f"2/2 on {label}")]
            return br

        root = build(tree, {}, "")
        inv = sorted({g if self.var[g] > 0 else g.inverse() for g in involved}, key=_sort_key(G))
        return ObstructionCertificate(G, list(S), mode, root, inv)

    def _derive(self, br, known, lit, ci, number, involved):
        lits, c = self.clauses[ci]
        refs = tuple(sorted(known[-l] for l in lits if l != lit))
        n = number()
        br.steps.append(Step(n, self.elem[lit], c.kind, c, refs))
        for e in c.elements:
            involved.add(e)
        return n


@dataclass
class SearchResult:
    signing: Optional[Signing] = None
    certificate: Optional[ObstructionCertificate] = None

    @property
    def found(self) -> bool:
        return self.signing is not None

    def format(self) -> str:
        return self.signing.format() if self.found else self.certificate.format()


def _solve(G, S, mode, conjugators):
    clauses = build_clauses(G, S, mode, conjugators)
    solver = _Solver(S, clauses)
    ok, res = solver.solve()
    return ok, res, solver, clauses


def search_signing(G: MarkedGroup, S, mode="left", conjugators=None, cap=SIGNING_CAP,
                   shrink=True) -> SearchResult:
    """Find a consistent signing of the symmetric closure of ``S`` or certify none exists.

    With ``shrink`` the obstruction is first pared down greedily: each +/- pair is
    dropped when the rest stays unsignable.
    """
    S = symmetric_closure(G, S)
    if len(S) > cap:
        raise DomainError(f"signing domain has {len(S)} elements, cap is {cap}")
    ok, res, solver, clauses = _solve(G, S, mode, conjugators)
    if ok:
        return SearchResult(signing=Signing(S, res, mode))
    if shrink:
        for g in list(S):
            if g not in S or g.inverse() not in S or solver.var[g] < 0:
                continue
            trial = [h for h in S if h != g and h != g.inverse()]
            if not trial:
                continue
            t_ok, t_res, t_solver, _ = _solve(G, trial, mode, conjugators)
            if not t_ok:
                S, res, solver = trial, t_res, t_solver
    return SearchResult(certificate=solver.certificate(G, S, mode, res))


# ---------------------------------------------------------------------------
# the shift-invariance contradiction


@dataclass
class TraceStep:
    text: str
    lhs: Word = None
    rhs: Word = None
    verified: bool = False


@dataclass
class ContradictionTrace:
    group: MarkedGroup
    premises: list
    steps: list
    conclusion: str

    def replay(self) -> bool:
        """Recheck every identity in the trace with the normal form."""
        for s in self.steps:
            if s.lhs is not None and not self.group.equal(s.lhs, s.rhs):
                raise GolError(f"identity fails: {s.text}")
        return True

    def format(self) -> str:
        lines = [f"group: {self.group.name}"]
        lines += [f"premise: {p}" for p in self.premises]
        for i, s in enumerate(self.steps, 1):
            lines.append(f"{i}: {s.text}" + ("  [verified]" if s.verified else ""))
        lines.append(f"conclusion: {self.conclusion}")
        return "\n".join(lines)


def replay_tau_obstruction(G: MarkedGroup, family: int = 0, premise: int = 1) -> ContradictionTrace:
    """No positive cone of G or A is invariant under the shift of one family.

    Assume ``a = (family, 0)`` has sign ``premise`` and that the shift tau keeps
    signs.  Three checked steps force the sign of s(a) both ways.
    """
    at, nxt = Atom(family, 0), Atom(family, 1)
    if G.window is None or at not in G.window or nxt not in G.window:
        raise WindowError(f"atoms {tuple(at)} and {tuple(nxt)} must lie in the window of {G.name}")
    tau = ShiftAutomorphism.single(family, 1)
    sgn = "+" if premise > 0 else "-"
    neg = "-" if premise > 0 else "+"
    shift = f"signs are invariant under tau = shift of family {family} by 1"
    if G.kind == "G":
        premises = [f"{Word((y(*at),))} has sign {sgn}", shift]
        ya, ys, xs = Word((y(*at),)), Word((y(*nxt),)), Word((x(*nxt),))
        conj = xs + ya + xs.inverse()
        steps = [
            TraceStep(f"{conj} = {ys.inverse()}, so {ys.inverse()} has sign {sgn} "
                      f"(conjugation keeps signs)", conj, ys.inverse()),
            TraceStep(f"hence {ys} has sign {neg}"),
            TraceStep(f"tau({ya}) = {tau(ya)}, so {ys} has sign {sgn}", tau(ya), ys),
        ]
    elif G.kind == "A":
        from .dyadic import to_dyadic

        aa, an = Word((a(*at),)), Word((a(*nxt),))
        premises = [f"{aa} has sign {sgn}", shift]
        sq = an.power(2)
        if to_dyadic(aa) != to_dyadic(an).scale(-2):
            raise GolError("dyadic embedding does not satisfy a = -2 s(a)")
        steps = [
            TraceStep(f"{sq} = {aa.inverse()} (a = -2 s(a)), so {sq} has sign {neg}",
                      sq, aa.inverse()),
            TraceStep(f"a square has the sign of its root, so {an} has sign {neg}"),
            TraceStep(f"tau({aa}) = {tau(aa)}, so {an} has sign {sgn}", tau(aa), an),
        ]
    else:
        raise DomainError(f"no shift obstruction for {G.name}")
    trace = ContradictionTrace(G, premises, steps, "CONTRADICTION")
    for s in steps:
        if s.lhs is not None:
            s.verified = G.equal(s.lhs, s.rhs)
    if not all(s.verified for s in steps if s.lhs is not None):
        raise GolError("an identity in the shift obstruction failed to verify")
    return trace
