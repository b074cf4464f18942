from .code import SPACES, SimplexCode, exact_code
from .construct import (
    assemble_from_witness,
    construction_gmde,
    distance_survives,
    gmde_certified_t,
    gmde_signed_squares,
    map_space,
)
from .fixtures import (
    FixtureInfo,
    StructuralFixture,
    StructuralFixtureError,
    amplitude_table,
    fixture_info,
    fixture_names,
    l1_fixture,
    load_fixture,
    n3_l1_code,
    pi_code_from_strings,
    raw_fixture,
    s44_l1_code,
    structural_fixture,
)
from .kl import CONDITIONS, ConditionResult, KLReport, c3_termwise, check_kl

__all__ = [
    "CONDITIONS",
    "ConditionResult",
    "FixtureInfo",
    "KLReport",
    "SPACES",
    "SimplexCode",
    "StructuralFixture",
    "StructuralFixtureError",
    "amplitude_table",
    "assemble_from_witness",
    "c3_termwise",
    "check_kl",
    "construction_gmde",
    "distance_survives",
    "exact_code",
    "fixture_info",
    "fixture_names",
    "gmde_certified_t",
    "gmde_signed_squares",
    "l1_fixture",
    "load_fixture",
    "map_space",
    "n3_l1_code",
    "pi_code_from_strings",
    "raw_fixture",
    "s44_l1_code",
    "structural_fixture",
]
