"""The two-level HNN tower, Britton reduction and lambda cost certificates.

Run: python3 demos/05_hnn_tower.py
"""
from gol.errors import BoundaryPinchError
from gol.hnn import conjugacy_witness, crossover, lambda_certificate, make_tower
from gol.words import parse_word as P

T = make_tower(4)

# %% defining relations reduce away
for text in ["t[0] u[0] t[0]'", "t t[0] t'", "t t[0] t' u[1] t[1] u[2]"]:
    print(f"{text:28s} -> {T.reduce(P(text))}   nf: {T.nf(P(text))}")

# %% the truncated window refuses to guess past its edge
try:
    T.nf(P("t[4] u[4] t[4]'"))
except BoundaryPinchError as e:
    print("boundary:", e)

# %% two-element edge map: t[-1] conjugates h to g
T2 = make_tower(3, "two", P("a b"), P("b a"))
print("witness:", conjugacy_witness(T2))

# %% lambda certificates: g_n costs M + 2n + 1, which loses to n^2 eventually
T12 = make_tower(12)
M = 6
for n in range(1, 7):
    cert = lambda_certificate(T12, n, M)
    print(f"n={n} cost={cert.cost} n^2={n * n} verified={cert.verify()}")
print("first n with n^2 > M+2n+1:", crossover(M))
print(lambda_certificate(T12, 2, M).dump())
