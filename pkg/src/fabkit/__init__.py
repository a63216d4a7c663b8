"""Exact computations around floating algebra bundles.

Submodules: :mod:`fabkit.exact` (Gaussian-rational matrices, nullspaces,
Smith normal form), :mod:`fabkit.algebra` (frames, centralizers, FAB
fibers), :mod:`fabkit.homotopy` (stable homotopy groups and their oracle)
and :mod:`fabkit.classes` (Newton/Chern class calculus).
"""
from .errors import (
    ClassVectorError,
    CompatibilityError,
    DimensionError,
    FabError,
    InvalidFrameError,
    NotFloatingError,
    NotSUClassError,
    SingularMatrixError,
    UnstableRangeError,
    ZeroVectorError,
)
from .exact import GaussianRational, Matrix, kronecker, nullspace, rank, smith_normal_form
from .algebra import (
    AlgebraEmbedding,
    FabFiber,
    Frame,
    ProjectivePoint,
    centralizer,
    embedding_from_frame,
    fab_product,
    frame_conjugate,
    make_fab_fiber,
    noether_skolem_conjugator,
    segre,
    standard_frame,
    verify_frame,
)
from .homotopy import AbelianGroup, exact_sequence_oracle, induced_map, pi_frame_space, pi_grassmannian
from .classes import (
    ClassVector,
    VirtualBundleClass,
    chern_from_newton,
    fab_chern_product,
    fab_from_su_bundle,
    fab_inverse,
    fab_newton_product,
    newton_from_chern,
    psi_bezout,
    tensor_newton,
)
from .polynomial import GradedPolynomial, GradedVariable

__version__ = "0.1.0"
