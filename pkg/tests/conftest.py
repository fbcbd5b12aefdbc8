import pytest

from chipfiring import build_digraph, from_reduced_laplacian

# Reference graphs used across the suite.
#
# g1: one vertex, two parallel arcs to the sink.          reduced laplacian [[2]]
# g2: the 4-vertex worked example, given by its laplacian.
# g3: the 2-vertex graph where subset firing is blind to  [[2,-2],[-5,6]]
#     non-superstability.

G2_LAPLACIAN = ((5, -3, 0, -1), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, 0, 2))
G3_LAPLACIAN = ((2, -2), (-5, 6))


@pytest.fixture(scope="session")
def g1():
    return build_digraph(1, 2, [(1, 2, 2)])


@pytest.fixture(scope="session")
def g2():
    return from_reduced_laplacian(G2_LAPLACIAN)


@pytest.fixture(scope="session")
def g3():
    return build_digraph(2, 3, [(1, 2, 2), (2, 1, 5), (2, 3, 1)])
