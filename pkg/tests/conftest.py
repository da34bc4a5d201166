import numpy as np
import pytest

from qsymlie import casimir, closure


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture(scope="session")
def qutrit_blocks():
    return casimir.isotypic_blocks(3, 3)


@pytest.fixture(scope="session")
def qutrit_center(qutrit_blocks):
    return casimir.center_basis_from_blocks(qutrit_blocks)


@pytest.fixture(scope="session")
def qutrit_closure_h():
    """Closure of the three-qutrit preset with the two-body interaction."""
    return closure.lie_closure(closure.preset("qutrits:n=3:H"))


def random_complex(rng, dim):
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


def random_hermitian(rng, dim):
    a = random_complex(rng, dim)
    return (a + a.conj().T) / 2


def random_skew(rng, dim):
    return 1j * random_hermitian(rng, dim)
