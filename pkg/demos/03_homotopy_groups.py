# %% [markdown]
# Stable homotopy of matrix Grassmannians
#
# Closed forms are compared against an independent calculation: kernel and
# cokernel of (a, b) -> l*a + k*b computed with Smith normal forms.

# %%
from fabkit.homotopy import (
    exact_sequence_oracle,
    frame_space_induced_order,
    induced_map,
    pi_frame_space,
    pi_grassmannian,
    stable_range,
)

for k, l in [(2, 3), (4, 6), (5, 5)]:
    top = stable_range(k, l)
    groups = ", ".join(f"pi_{r}={pi_grassmannian(r, k, l)}" for r in range(1, top + 1))
    print(f"Gr_{{{k},{l}}} (stable through {top}): {groups}")

# %% Cross-check against the oracle
mismatches = 0
for k in range(2, 9):
    for l in range(2, 9):
        for r in range(1, min(k, l) + 1):
            even, odd = exact_sequence_oracle(k, l, r)
            if (even, odd) != (pi_grassmannian(2 * r, k, l), pi_grassmannian(2 * r - 1, k, l)):
                mismatches += 1
print("oracle mismatches on 2 <= k, l <= 8:", mismatches)

# %% Induced maps M_{kl} -> M_{mn}
for args in [(4, 2, 3, 4, 9), (3, 2, 2, 4, 4), (2, 2, 2, 4, 4), (4, 2, 2, 4, 6)]:
    rep = induced_map(*args)
    print(f"r={args[0]} (k,l)=({args[1]},{args[2]}) -> (m,n)=({args[3]},{args[4]}):",
          rep.kind + (", isomorphism" if rep.is_isomorphism else ""))

# %% Frame spaces: odd groups Z/k, and the image order of Z/k -> Z/m
print("pi_5(Fr_{3,4}) =", pi_frame_space(5, 3, 4))
for k, l, m, n in [(2, 3, 4, 9), (3, 2, 9, 4), (2, 5, 6, 5)]:
    print(f"order of mn/kl in Z/{m} for (k,l,m,n)=({k},{l},{m},{n}):", frame_space_induced_order(k, l, m, n))
