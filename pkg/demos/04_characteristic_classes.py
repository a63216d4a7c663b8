# %% [markdown]
# Characteristic classes of FABs
#
# Chern classes of a product of FABs follow from Newton classes, which
# combine by a binomial convolution.  Everything below is exact and symbolic.

# %%
from fractions import Fraction

from fabkit.classes import (
    VirtualBundleClass,
    bezout_pair,
    fab_chern_product,
    fab_from_su_bundle,
    fab_inverse,
    newton_from_chern,
    psi_bezout,
    symbolic_class_vector,
    symbolic_fab_vector,
)

generic = newton_from_chern(symbolic_class_vector("A", 4, "chern", dim0=3))
print("Newton classes from Chern classes:")
print(generic)

# %% Product of two generic FABs
prod = fab_chern_product(symbolic_fab_vector("A", 6), symbolic_fab_vector("B", 6))
for degree in range(2, 7):
    print(f"c{degree}(A*B) = {prod[degree]}")

# %% Inverse of a generic FAB, then multiply back
inv = fab_inverse(symbolic_fab_vector("A", 5))
print("inverse:")
print(inv)
print("A * A^-1 trivial:", all(v == 0 for v in fab_chern_product(symbolic_fab_vector("A", 5), inv).values))

# %% Splitting a compatible pair with kl + mn = 1
eta = VirtualBundleClass.from_newton(1, [0, Fraction(2, 3), -1, 4])
xk, xm = bezout_pair(eta, 4, 9)
print("recovered eta:", psi_bezout(xk, xm) == eta)
print("FAB classes of 4*eta and 9*eta agree:", fab_from_su_bundle(xk) == fab_from_su_bundle(xm))
