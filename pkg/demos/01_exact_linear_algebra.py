# %% [markdown]
# Exact linear algebra over Q(i)
#
# Every matrix in fabkit holds Gaussian rationals exactly, so equality tests
# are structural and there is no tolerance anywhere.

# %%
from fractions import Fraction

from fabkit.exact import GaussianRational, Matrix, invert, kronecker, nullspace, rank, smith_normal_form

i = GaussianRational(0, 1)


def show(m):
    return [[str(x) for x in row] for row in m.tolist()]


a = Matrix.from_rows([[1, i], [0, 1]])
b = Matrix.from_rows([[1, -i], [0, 1]])
print("a @ b =", show(a @ b))
print("text form of a:", a.to_json())

# %% Kronecker products obey the mixed-product rule
c = Matrix.from_rows([[2, 1], [Fraction(1, 3), 0]])
d = Matrix.from_rows([[0, 1], [1, i]])
lhs = kronecker(a, c) @ kronecker(b, d)
rhs = kronecker(a @ b, c @ d)
print("mixed product holds:", lhs == rhs)

# %% Nullspaces come back in a canonical basis
m = Matrix.from_rows([[1, 1, 2], [2, 2, 4], [0, 1, i]])
basis = nullspace(m)
print("rank", rank(m), "nullity", len(basis))
for v in basis:
    print("  kernel vector", [str(x) for x in v.entries], "check:", (m @ v).is_zero())

print("inverse of diag(2, i):", show(invert(Matrix.diag(2, i))))

# %% Smith normal form of an integer matrix
snf = smith_normal_form([[2, 4], [6, 8]])
print("invariant factors of [[2,4],[6,8]]:", snf.invariant_factors)
print("U A V == D:", snf.U @ Matrix.from_rows([[2, 4], [6, 8]]) @ snf.V == snf.D)

# The 1x2 matrix [l, k] has a single invariant factor gcd(k, l).
for k, l in [(2, 3), (4, 6), (9, 12)]:
    print(f"  SNF of [{l} {k}] ->", smith_normal_form([[l, k]]).invariant_factors)
