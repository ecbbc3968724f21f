"""Orders and signings: shortlex, Magnus, dyadic-lex, finite positive cones.

Run: python3 demos/04_orders.py
"""
from gol.cones import replay_tau_obstruction, search_signing, verify_certificate
from gol.dyadic import DyadicVector, to_dyadic
from gol.groups import make_group
from gol.orders import ball, dyadic_lex_compare, magnus_compare, shortlex_compare

# %% shortlex on normal forms of G
G = make_group("G[1,6]")
for u, v in [("", "x[0,0]"), ("x[0,0]'", "x[0,0]"), ("x[0,0]", "y[0,0]")]:
    print(f"{u or 'e':8s} vs {v:8s}: {shortlex_compare(G, G.element(u), G.element(v)).name}")

# %% the Magnus order on free:2 (a < b); the commutator is positive
F = make_group("free:2")
print("e vs [a,b]:", magnus_compare(F, F.parse(""), F.parse("a b a' b'")).name)

# %% the dyadic order: signs alternate along a family
zero = DyadicVector()
print([dyadic_lex_compare(to_dyadic(make_group("A[0,3]").parse(f"a[0,{k}]")), zero).name
       for k in range(-2, 3)])

# %% Klein bottle: left-orderable, but conjugation x y x' = y' blocks any bi-order
K = make_group("klein")
print(search_signing(K, ball(K, 2)[1:], "left").format())
res = search_signing(K, ball(K, 2)[1:], "bi")
print(res.format())
print("certificate replays:", verify_certificate(res.certificate))

# %% a radius-2 ball of G signs fine in bi mode
gens = [G.parse(w)[0] for w in ("x[0,1]", "y[0,0]", "y[0,1]")]
print("G ball signed:", search_signing(G, ball(G, 2, gens)[1:], "bi").found)

# %% but a cone invariant under the family shift is contradictory
print(replay_tau_obstruction(G, 0).format())
print(replay_tau_obstruction(make_group("A[1,6]"), 0).format())
