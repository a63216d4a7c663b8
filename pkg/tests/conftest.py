import random
from fractions import Fraction

import pytest

from fabkit.classes import ClassVector, VirtualBundleClass
from fabkit.exact import GaussianRational, Matrix, determinant


def random_unimodular(rng: random.Random, n: int, steps: int | None = None) -> Matrix:
    """Product of random elementary integer operations; determinant +-1."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        q = rng.choice([-2, -1, 1, 2])
        rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    return Matrix.from_rows([rows[p] for p in perm])


def random_gaussian_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        entries = [GaussianRational(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(n * n)]
        g = Matrix(n, n, entries)
        if determinant(g):
            return g


def random_fraction(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_fab_newton(rng: random.Random, n: int = 10) -> ClassVector:
    return ClassVector("newton", 1, (0,) + tuple(random_fraction(rng) for _ in range(n - 1)))


def random_dim1_class(rng: random.Random, n: int = 10) -> VirtualBundleClass:
    return VirtualBundleClass.from_newton(1, [random_fraction(rng) for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
