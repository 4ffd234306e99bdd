"""Line bundle cohomology on simplicial projective toric varieties."""

from pathlib import Path

from ._toriccohom import (
    Engine,
    Model,
    NonFiniteCohomology,
    ResourceLimitError,
    alexander_dual,
    cohomology_via_fan,
    hochster_check,
    reduced_homology,
    sr_from_max_cones,
)

DATA_DIR = Path(__file__).parent / "data"


def bundled(name):
    """Load one of the bundled models, e.g. bundled("P2")."""
    return Model.load(str(DATA_DIR / f"{name}.json"))


def cohomology(model, alpha):
    return Engine(model, threads=1).cohomology(alpha)


__all__ = [
    "DATA_DIR",
    "Engine",
    "Model",
    "NonFiniteCohomology",
    "ResourceLimitError",
    "alexander_dual",
    "bundled",
    "cohomology",
    "cohomology_via_fan",
    "hochster_check",
    "reduced_homology",
    "sr_from_max_cones",
]
