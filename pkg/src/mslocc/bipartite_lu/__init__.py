"""Bipartite two-state LU transformations: exact enumeration and constructions."""

from .construct import (
    BlockMixConstruction,
    construct_qubit_solution,
    homogeneous_solution,
    nonhomogeneous_solution,
)
from .cycles import gap_cycles
from .enumerate import enumerate_solutions
from .families import ExponentFamily, GapCycle, LuSolution, msub, msum
from .polynomials import (
    all_esps,
    esp,
    esps_from_power_sums,
    lu_equivalent,
    power_sum,
    tuple_pair_trivial,
)
from .tableaux import TableauPair, hook_content_count, linear_extensions

__all__ = [
    "BlockMixConstruction",
    "ExponentFamily",
    "GapCycle",
    "LuSolution",
    "TableauPair",
    "all_esps",
    "construct_qubit_solution",
    "enumerate_solutions",
    "esp",
    "esps_from_power_sums",
    "gap_cycles",
    "homogeneous_solution",
    "hook_content_count",
    "linear_extensions",
    "lu_equivalent",
    "msub",
    "msum",
    "nonhomogeneous_solution",
    "power_sum",
    "tuple_pair_trivial",
]
