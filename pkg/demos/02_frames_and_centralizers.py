# %% [markdown]
# Frames, conjugators and centralizers inside M_6
#
# A k-frame lists the images of the k x k matrix units.  Any frame in M_{kl}
# is a conjugate of the standard one, and the conjugating matrix can be
# written down directly.

# %%
from fabkit.algebra import (
    ProjectivePoint,
    centralizer,
    commutant_basis,
    embedding_from_frame,
    fab_product,
    frame_conjugate,
    make_fab_fiber,
    noether_skolem_conjugator,
    same_image,
    segre,
    standard_frame,
    trivial_fiber,
    verify_frame,
)
from fabkit.errors import NotFloatingError
from fabkit.exact import Matrix

std = standard_frame(2, 3)
print("standard 2-frame in M_6 valid:", verify_frame(std).valid)

# %% Disguise the frame with an integer change of basis, then recover a conjugator
g0 = Matrix.from_rows(
    [
        [1, 1, 0, 0, 0, 0],
        [0, 1, 2, 0, 0, 0],
        [0, 0, 1, 0, 0, 1],
        [1, 0, 0, 1, 0, 0],
        [0, 0, 0, -1, 1, 0],
        [0, 3, 0, 0, 0, 1],
    ]
)
frame = frame_conjugate(std, g0)
print("disguised frame valid:", verify_frame(frame).valid)
g = noether_skolem_conjugator(frame)
print("g reproduces the frame:", frame_conjugate(std, g) == frame)
print("g equals g0:", g == g0, "(it only has to agree up to the commutant)")

# %% The centralizer is a complementary copy of M_3
e = embedding_from_frame(frame)
comp = centralizer(e)
print("centralizer order:", comp.k)
print("matches nullspace commutant:", len(commutant_basis(e)) == 9)
print("double centralizer gives the original image:", same_image(centralizer(comp), e))

# %% Coprime sizes give a FAB fiber; equal sizes do not
fiber = make_fab_fiber(e)
print("fiber (k, l) =", (fiber.k, fiber.l))
try:
    make_fab_fiber(embedding_from_frame(standard_frame(2, 2)))
except NotFloatingError as exc:
    print("M_2 in M_4:", exc)

prod = fab_product(fiber, trivial_fiber(5, 1))
print("product fiber (k, l) =", (prod.k, prod.l))

# %% Segre map of projective points
p, q = ProjectivePoint([1, 0]), ProjectivePoint([0, 1])
print("segre([1:0], [0:1]) =", segre(p, q))
print("scaling p changes nothing:", segre(ProjectivePoint([3, 0]), q) == segre(p, q))
