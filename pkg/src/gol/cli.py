"""``gol``: command-line access to normal forms, checks, orders, signings and towers.

Exit codes: 0 computed pass, 1 computed negative (FAIL or obstruction),
2 parse error, 3 domain error.
"""
from __future__ import annotations

import argparse
import random
import sys

from .errors import DomainError, ParseError
from .groups import make_group, relator_H, rho_N
from .words import Word, format_word, y

OK, NEGATIVE, PARSE, DOMAIN = 0, 1, 2, 3


def _out(lines):
    print("\n".join(lines) if isinstance(lines, list) else lines)


def _fmt(w):
    return format_word(w)


def cmd_nf(args):
    G = make_group(args.group)
    _out(f"nf: {_fmt(G.nf(G.parse(args.word)))}")
    return OK


def _check_confluence(args):
    from .rewriting import check_local_confluence

    G = make_group(args.group or f"G[{args.families},{args.positions}]")
    if G.system is None:
        raise DomainError(f"{G.name} has no rewriting system")
    report = check_local_confluence(G.system)
    _out(report.format())
    return OK if report.joinable else NEGATIVE


def _check_termination(args):
    from .rewriting import check_termination

    G = make_group(args.group or f"G[{args.families},{args.positions}]")
    if G.system is None:
        raise DomainError(f"{G.name} has no rewriting system")
    report = check_termination(G.system, samples=args.samples, max_len=args.max_len,
                               seed=args.seed)
    _out(report.format())
    return OK if report.ok else NEGATIVE


def _check_axioms(args):
    from .properties import check_group_laws

    G = make_group(args.group or "G[3,4]")
    samples = args.samples if args.samples is not None else 1000
    failures = check_group_laws(G, samples, random.Random(args.seed))
    _out([f"group: {G.name}", f"status: {'FAIL' if failures else 'PASS'}",
          f"triples: {samples}", f"failures: {len(failures)}"] + failures[:20])
    return NEGATIVE if failures else OK


def _check_rho(args):
    N = args.positions
    bad = []
    for n in range(-N, N):
        img = rho_N(N, relator_H(n))
        if img:
            bad.append(f"relator at {n} maps to {_fmt(img)}")
    images = [rho_N(N, Word((y(0, N - k),))) for k in range(0, min(5, 2 * N) + 1)]
    if any(not w for w in images) or len(set(images)) != len(images):
        bad.append("images of y[0,N-k] are not pairwise distinct and nontrivial")
    lines = [f"N: {N}", f"status: {'FAIL' if bad else 'PASS'}", f"relators-checked: {2 * N}"]
    lines += [f"rho(y[0,{N - k}]) = {_fmt(w)}" for k, w in enumerate(images)]
    _out(lines + bad)
    return NEGATIVE if bad else OK


def _check_tau(args):
    from .cones import replay_tau_obstruction

    G = make_group(args.group or "G[1,6]")
    trace = replay_tau_obstruction(G, args.family, -1 if args.premise == "-" else 1)
    trace.replay()
    _out(trace.format())
    return OK


CHECKS = {
    "confluence": _check_confluence,
    "termination": _check_termination,
    "axioms": _check_axioms,
    "rho": _check_rho,
    "tau-trace": _check_tau,
}


def cmd_check(args):
    if args.kind == "termination" and args.samples is None:
        args.samples = 10_000
    return CHECKS[args.kind](args)


def cmd_order(args):
    from .orders import dyadic_lex_compare, magnus_compare, shortlex_compare

    G = make_group(args.group)
    u, v = G.parse(args.u), G.parse(args.v)
    if args.order == "shortlex":
        c = shortlex_compare(G, u, v)
    elif args.order == "magnus":
        if G.kind != "free":
            raise DomainError("the Magnus order needs a free group")
        c = magnus_compare(G, u, v)
    else:
        from .dyadic import to_dyadic

        if G.kind != "A":
            raise DomainError("the dyadic lexicographic order needs an A group")
        c = dyadic_lex_compare(to_dyadic(u), to_dyadic(v))
    _out(f"cmp: {c.name}")
    return OK


def default_signing_generators(G):
    """Small generating sets keep radius-2 balls under the signing cap."""
    if G.kind in ("G", "H"):
        return [G.parse(w)[0] for w in ("x[0,1]", "y[0,0]", "y[0,1]")]
    if G.kind == "A":
        return [G.parse(w)[0] for w in ("a[0,0]", "a[0,1]")]
    return list(G.generators)


def cmd_sign_search(args):
    from .cones import search_signing
    from .orders import ball

    G = make_group(args.group)
    if args.gens:
        gens = []
        for w in args.gens.split(","):
            word = G.parse(w)
            if len(word) != 1 or word[0].exponent != 1:
                raise ParseError(f"generator {w!r} must be a single positive letter", 0)
            gens.append(word[0])
    else:
        gens = default_signing_generators(G)
    S = [g for g in ball(G, args.radius, gens) if not g.is_identity()]
    result = search_signing(G, S, args.mode)
    _out(result.format())
    return OK if result.found else NEGATIVE


def _tower(args):
    from .hnn import make_tower

    if args.g is not None or args.h is not None:
        from .groups import free_group

        F = free_group(2)
        return make_tower(args.Z, "two", F.parse(args.g or "a"), F.parse(args.h or "b"))
    return make_tower(args.Z)


def cmd_hnn(args):
    from .hnn import conjugacy_witness, crossover, lambda_certificate

    T = _tower(args)
    if args.action == "reduce":
        if args.word is None:
            raise ParseError("hnn reduce needs a word", 0)
        w = T.group.parse(args.word)
        _out([f"britton: {T.reduce(w)}", f"nf: {_fmt(T.nf(w))}"])
        return OK
    if args.action == "witness":
        if T.mode != "two":
            raise DomainError("hnn witness needs --g and --h")
        c = conjugacy_witness(T)
        _out([f"g: {_fmt(T.g)}", f"h: {_fmt(T.h)}", f"witness: {_fmt(c)}", "verified: true"])
        return OK
    cert = lambda_certificate(T, args.n, args.M)
    ok = cert.verify()
    lines = [f"n: {args.n}", f"M: {args.M}", f"cost: {cert.cost}",
             f"bound: {args.M + 2 * args.n + 1}", f"n^2: {args.n ** 2}",
             f"crossover: {'true' if args.n ** 2 > cert.cost else 'false'}",
             f"first-crossover: {crossover(args.M)}",
             f"verified: {'true' if ok else 'false'}", "certificate:", cert.dump()]
    _out(lines)
    return OK if ok else NEGATIVE


def cmd_rank(args):
    from .oracles import covering_index, schreier_rank
    from .stallings import stallings_rank

    F = make_group(args.group)
    words = [F.parse(w) for w in args.words]
    rank, graph = stallings_rank(F, words)
    lines = [f"rank: {rank}", f"vertices: {len(graph.vertices)}", f"edges: {len(graph.edges)}"]
    idx = covering_index(graph, F.generators)
    if idx is not None:
        lines.append(f"index: {idx}")
        lines.append(f"schreier-rank: {schreier_rank(idx, len(F.generators))}")
    else:
        lines.append("index: infinite")
    _out(lines)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gol", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nf", help="normal form of a word")
    s.add_argument("--group", required=True)
    s.add_argument("word")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("check", help="confluence, termination, group laws, rho, tau trace")
    s.add_argument("kind", choices=sorted(CHECKS))
    s.add_argument("--group")
    s.add_argument("--families", type=int, default=3)
    s.add_argument("--positions", type=int, default=4)
    s.add_argument("--samples", type=int)
    s.add_argument("--max-len", type=int, default=30)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--family", type=int, default=0)
    s.add_argument("--premise", choices=["+", "-"], default="+")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("order", help="compare two elements")
    s.add_argument("order", choices=["shortlex", "magnus", "dyadiclex"])
    s.add_argument("--group", required=True)
    s.add_argument("u")
    s.add_argument("v")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("sign-search", help="sign a ball or certify that no signing exists")
    s.add_argument("--group", required=True)
    s.add_argument("--radius", type=int, default=2)
    s.add_argument("--mode", choices=["left", "bi"], default="bi")
    s.add_argument("--gens", help="comma-separated generator letters for the ball")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_sign_search)

    s = sub.add_parser("hnn", help="HNN tower: reduce, witness, lambda")
    s.add_argument("action", choices=["reduce", "witness", "lambda"])
    s.add_argument("word", nargs="?")
    s.add_argument("--Z", type=int, default=4)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--M", type=int, default=6)
    s.add_argument("--g")
    s.add_argument("--h")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_hnn)

    s = sub.add_parser("rank", help="Stallings rank of a subgroup of a free group")
    s.add_argument("--group", default="free:2")
    s.add_argument("words", nargs="+")
    s.set_defaults(func=cmd_rank)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # an optional positional that follows flags (hnn reduce --Z 3 WORD) lands in extra
    if extra and getattr(args, "word", "") is None and len(extra) == 1:
        args.word = extra[0]
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return PARSE
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return DOMAIN


if __name__ == "__main__":
    sys.exit(main())
