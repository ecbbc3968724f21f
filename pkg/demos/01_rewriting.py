"""Normal forms in the locally free group G by string rewriting.

Run: python3 demos/01_rewriting.py
"""
from gol.groups import make_group
from gol.rewriting import LEN_PLUS_J, check_local_confluence, check_termination, normalize

# %% a window with two families and positions -6..6
G = make_group("G[1,6]")
print(G.name, "has", len(G.generators), "generators and", len(G.system), "rules")

# %% the conjugation identity: x[0,1] y[0,0] x[0,1]' collapses to one letter
w = G.parse("x[0,1] y[0,0] x[0,1]'")
print(w, "->", normalize(G.system, w))

# every rewrite lowers Len + (number of x-before-y pairs)
print("measure", LEN_PLUS_J(w), "->", LEN_PLUS_J(normalize(G.system, w)))

# %% the two peaks worked by hand: both sides end in the same terminus
for text in ["x[0,1]' x[0,1] y[0,0]", "x[0,1] y[0,0]' y[0,0]"]:
    peak = G.parse(text)
    ends = {normalize(G.system, peak, s, seed) for s, seed in
            [("leftmost", None), ("rightmost", None), ("random", 3)]}
    print(f"{text:28s} -> {', '.join(str(e) for e in ends)}")

# %% local confluence over a bigger window: every critical pair joins
report = check_local_confluence(make_group("G[3,4]").system)
print(report.format())

# %% sampled termination: walks random rewrite paths and checks each step
print(check_termination(G.system, samples=2000, seed=0).format())
