"""The abelian group A as a direct sum of dyadic rationals.

Run: python3 demos/03_dyadic.py
"""
from gol.dyadic import abelian_nf, nf_of, shift_action, to_dyadic
from gol.groups import make_group
from gol.words import ShiftAutomorphism

A = make_group("A[1,4]")

# %% atoms embed as (-2)^(-k); the relator a s(a)^2 is zero
for text in ["a[0,0]", "a[0,1]", "a[0,-1]", "a[0,0] a[0,1]^2"]:
    print(f"{text:18s} -> {to_dyadic(A.parse(text)).serialize() or '0'}")

# %% normal forms use odd exponents, one atom per family
w = A.parse("a[0,0]^6 a[1,2] a[0,3]")
print(w, "->", abelian_nf(w))
print(nf_of(to_dyadic(w)).terms)

# %% the shift tau multiplies a family by -1/2, so no order on A is shift-invariant
tau = ShiftAutomorphism.single(0, 1)
v = to_dyadic(A.parse("a[0,0]"))
print("tau(a[0,0]) =", shift_action(tau, v).serialize())
