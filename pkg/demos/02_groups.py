"""The group catalog: free groups, the Klein bottle group, G, H and the rho maps.

Run: python3 demos/02_groups.py
"""
from gol.groups import make_group, relator_H, retract_rn, rho_N
from gol.stallings import stallings_rank
from gol.words import Word, y

# %% every group is a generator list plus a normal form
for spec in ["free:2", "freeab:2", "klein", "G[1,3]", "H[3]", "A[1,3]", "tower[2]"]:
    G = make_group(spec)
    print(f"{G.name:10s} {len(G.generators):3d} generators")

# %% Klein bottle group: roots are not unique, (xy)^2 = x^2 but xy != x
K = make_group("klein")
xy = K.element("x y")
print("(xy)^2 =", xy * xy, "  x^2 =", K.element("x^2"), "  xy == x:", xy == K.element("x"))

# %% rho_N rewrites one family of G over the free basis {x_m} and y_N
N = 4
for k in range(4):
    print(f"rho_{N}(y[0,{N - k}]) = {rho_N(N, Word([y(0, N - k)]))}")
print("relators vanish:", all(not rho_N(N, relator_H(n)) for n in range(-N, N)))

# %% the retraction r_n deletes families above n
G = make_group("G[2,3]")
g = G.element("x[0,1] y[2,0] x[1,0]")
print("r_0:", retract_rn(0, g), "  r_1:", retract_rn(1, g))

# %% Stallings folding: <a^2, ab, b^2> is the index-2 subgroup of even words
F = make_group("free:2")
rank, graph = stallings_rank(F, [F.parse(w) for w in ("a^2", "a b", "b^2")])
print("rank", rank, "with", len(graph.vertices), "vertices and", len(graph.edges), "edges")
