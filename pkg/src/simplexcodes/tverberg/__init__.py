from .cloud import PointCloud, kl_point_cloud
from .lp import nullspace, phase_one
from .witness import (
    EXHAUSTIVE_LABEL_LIMIT,
    NoWitnessFound,
    TverbergWitness,
    find_witness,
    lp_feasible,
    orbits,
    parse_point_key,
    point_key,
    radon_witness_k2,
)

__all__ = [
    "EXHAUSTIVE_LABEL_LIMIT",
    "NoWitnessFound",
    "PointCloud",
    "TverbergWitness",
    "find_witness",
    "kl_point_cloud",
    "lp_feasible",
    "nullspace",
    "orbits",
    "parse_point_key",
    "phase_one",
    "point_key",
    "radon_witness_k2",
]
