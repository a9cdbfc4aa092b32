import numpy as np
import pytest

from bgframes import BiGFrameSystem, GFrameSystem
from bgframes.fileio import FrameFile, save_frame_file


@pytest.fixture
def instance_a() -> BiGFrameSystem:
    """Golden pair on C^2 with operator diag(2, 1).

    First family: a 1x2 functional plus a 2x2 swap block; second family:
    a doubled functional plus a one-sided shift. Every derived quantity
    (bounds, duals, coefficients) is known in closed form.
    """
    lam = GFrameSystem(
        2,
        (
            np.array([[1.0, 0.0]]),
            np.array([[0.0, 1.0], [1.0, 0.0]]),
        ),
    )
    gam = GFrameSystem(
        2,
        (
            np.array([[2.0, 0.0]]),
            np.array([[0.0, 1.0], [0.0, 0.0]]),
        ),
    )
    return BiGFrameSystem(lam, gam)


def write_pair_file(path, pair: BiGFrameSystem, vectors=None) -> None:
    """Store a pair as systems L, G plus optional named vector lists."""
    basis_vector = np.zeros(pair.dim, dtype=np.complex128)
    basis_vector[0] = 1.0
    save_frame_file(
        path,
        FrameFile(
            dim=pair.dim,
            systems={"L": pair.lam, "G": pair.gam},
            vectors=vectors if vectors is not None else {"e1": [basis_vector]},
        ),
    )


def random_complex_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    return rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
