"""Multipartite catalysis and k-copy comparability on merged GHZ-like tuples.

Catalysis is defined tuple-theoretically: src -> dst with catalyst cat is
feasible iff tensor(dst, cat) majorizes tensor(src, cat). Within the
GHZ_d^n SLOCC class (any n >= 3) this is exactly LOCC feasibility of the
merged transformation, so no state simulation is ever needed here.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

import numpy as np

from . import caps
from .errors import InvalidArgumentError, ResourceLimitError
from .schmidt import SchmidtTuple, majorizes, tensor, tensor_power


def catalyzes(src: SchmidtTuple, dst: SchmidtTuple, cat: SchmidtTuple) -> bool:
    """True iff the catalyst makes the merged majorization condition hold."""
    if len(src) != len(dst):
        raise InvalidArgumentError("source and destination lengths differ")
    return majorizes(tensor(dst, cat), tensor(src, cat))


def k_copy_comparable(src: SchmidtTuple, dst: SchmidtTuple, k: int) -> bool:
    """True iff the k-fold tensor power of dst majorizes that of src."""
    if k < 1:
        raise InvalidArgumentError("k must be >= 1")
    if len(src) ** k > caps.max_tuple_len():
        raise ResourceLimitError(
            f"{len(src)}^{k} tuple entries exceed the cap of {caps.max_tuple_len()}"
        )
    return majorizes(tensor_power(dst, k), tensor_power(src, k))


def _grid_tuples(dim: int, resolution: int):
    """Descending positive integer tuples of length dim summing to resolution."""
    # combinations_with_replacement yields non-decreasing tuples; reverse them.
    for combo in combinations_with_replacement(range(1, resolution), dim - 1):
        parts = list(combo)
        head = resolution - sum(parts)
        if head < parts[-1] if parts else head < 1:
            continue
        if head < (parts[-1] if parts else 1):
            continue
        yield tuple([head] + parts[::-1])


def find_catalyst(
    src: SchmidtTuple, dst: SchmidtTuple, cat_dim: int, grid: int
) -> SchmidtTuple | None:
    """First grid catalyst (entries multiples of 1/grid) enabling src -> dst.

    Plain enumeration over descending positive tuples, exact arithmetic via
    integer outer products. Returns None when the grid holds no catalyst.
    """
    if majorizes(dst, src):
        raise InvalidArgumentError("destination already majorizes source; no catalyst needed")
    if cat_dim < 2 or grid < cat_dim:
        raise InvalidArgumentError("need cat_dim >= 2 and grid >= cat_dim")
    # Integer form: scale src/dst to a common denominator.
    den = 1
    for c in list(src.coeffs) + list(dst.coeffs):
        den = den * c.denominator // np.gcd(den, c.denominator)
    src_i = np.array([int(c * den) for c in src.coeffs], dtype=np.int64)
    dst_i = np.array([int(c * den) for c in dst.coeffs], dtype=np.int64)
    for cand in _grid_tuples(cat_dim, grid):
        cvec = np.array(cand, dtype=np.int64)
        merged_src = np.sort(np.outer(src_i, cvec).ravel())[::-1]
        merged_dst = np.sort(np.outer(dst_i, cvec).ravel())[::-1]
        diff = np.cumsum(merged_dst - merged_src)
        if diff.min() >= 0:
            return SchmidtTuple(Fraction(int(x), grid) for x in cand)
    return None
