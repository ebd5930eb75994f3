"""Exponent families, solution records and classification helpers.

A solution of the two-state LU problem is recorded in exponent (log)
space: coefficient i of a tuple is a^(e_i) for a in (0, 1), so exponents
start at 0 and weakly increase, and products become sums. Classification
goes by precedence identity > swap > sub_swap > direct_sum > nontrivial,
where sub_swap means the auxiliary tuples factor as lam = mu_bar (+) c and
lam_bar = mu (+) c for a common multiset c (sumset notation), and
direct_sum means some realizing tableau pair has a disconnected coupling
graph between lam and lam_bar indices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import InvalidArgumentError
from .rational_linalg import integerize
from .tableaux import TableauPair

CLASSIFICATIONS = ("identity", "swap", "sub_swap", "direct_sum", "nontrivial")


def msum(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Sumset with multiplicity, sorted ascending (tensor product in log space)."""
    return tuple(sorted(x + y for x in a for y in b))


def msub(total: Sequence[Fraction], factor: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Quotient c with total = factor (+) c, or None when no division exists."""
    if len(factor) == 0 or len(total) % len(factor) != 0:
        return None
    f = sorted(factor)
    work = Counter(total)
    quotient = []
    for _ in range(len(total) // len(f)):
        m = min(work)
        c = m - f[0]
        for x in f:
            key = x + c
            if work[key] <= 0:
                return None
            work[key] -= 1
            if work[key] == 0:
                del work[key]
        quotient.append(c)
    return tuple(sorted(quotient))


@dataclass(frozen=True)
class ExponentFamily:
    """One-parameter family (a^e1, ..., a^ed) per tuple, a in (0, 1).

    Exponents are exact rationals, weakly increasing, first entry 0; the
    additive invariant is that {mu_i + lam_j} and {mu_bar_k + lam_bar_l}
    agree as multisets.
    """

    mu_exps: tuple[Fraction, ...]
    lam_exps: tuple[Fraction, ...]
    mu_bar_exps: tuple[Fraction, ...]
    lam_bar_exps: tuple[Fraction, ...]

    def __init__(self, mu_exps, lam_exps, mu_bar_exps, lam_bar_exps):
        tuples = []
        for name, raw in (
            ("mu", mu_exps),
            ("lam", lam_exps),
            ("mu_bar", mu_bar_exps),
            ("lam_bar", lam_bar_exps),
        ):
            t = tuple(Fraction(x) for x in raw)
            if not t or t[0] != 0:
                raise InvalidArgumentError(f"{name} exponents must start at 0")
            if any(t[i] > t[i + 1] for i in range(len(t) - 1)):
                raise InvalidArgumentError(f"{name} exponents must weakly increase")
            tuples.append(t)
        object.__setattr__(self, "mu_exps", tuples[0])
        object.__setattr__(self, "lam_exps", tuples[1])
        object.__setattr__(self, "mu_bar_exps", tuples[2])
        object.__setattr__(self, "lam_bar_exps", tuples[3])

    @property
    def d_mu(self) -> int:
        return len(self.mu_exps)

    @property
    def d_lam(self) -> int:
        return len(self.lam_exps)

    def is_valid(self) -> bool:
        return msum(self.mu_exps, self.lam_exps) == msum(self.mu_bar_exps, self.lam_bar_exps)

    def realize(self, a: Fraction):
        """Unnormalized coefficient tuples at a rational base (exact when the
        exponents are integers)."""
        a = Fraction(a)
        if not 0 < a < 1:
            raise InvalidArgumentError("base must lie in (0, 1)")

        def powtuple(exps):
            vals = []
            for e in exps:
                if e.denominator != 1:
                    raise InvalidArgumentError(
                        "realize needs integer exponents; use scaled() to clear denominators"
                    )
                vals.append(a ** int(e))
            return tuple(vals)

        return (
            powtuple(self.mu_exps),
            powtuple(self.lam_exps),
            powtuple(self.mu_bar_exps),
            powtuple(self.lam_bar_exps),
        )

    def scaled(self, factor: Fraction) -> "ExponentFamily":
        factor = Fraction(factor)
        if factor <= 0:
            raise InvalidArgumentError("scale factor must be positive")
        return ExponentFamily(
            [e * factor for e in self.mu_exps],
            [e * factor for e in self.lam_exps],
            [e * factor for e in self.mu_bar_exps],
            [e * factor for e in self.lam_bar_exps],
        )

    def canonical_integer(self) -> "ExponentFamily":
        """Smallest positive scaling with integer exponents of collective gcd 1."""
        flat = list(self.mu_exps) + list(self.lam_exps) + list(self.mu_bar_exps) + list(
            self.lam_bar_exps
        )
        ints = integerize(flat)
        if all(x == 0 for x in ints):
            return self
        split = []
        idx = 0
        for size in (self.d_mu, self.d_lam, self.d_mu, self.d_lam):
            split.append([Fraction(x) for x in ints[idx : idx + size]])
            idx += size
        return ExponentFamily(*split)

    def mu_normalized(self) -> "ExponentFamily":
        """Scale so the first nonzero mu exponent is 1 (paper display form)."""
        nonzero = next((e for e in self.mu_exps if e != 0), None)
        if nonzero is None:
            return self
        return self.scaled(Fraction(1) / nonzero)

    def reversed_direction(self) -> "ExponentFamily":
        return ExponentFamily(
            self.mu_bar_exps, self.lam_bar_exps, self.mu_exps, self.lam_exps
        )

    def key(self):
        return (self.mu_exps, self.lam_exps, self.mu_bar_exps, self.lam_bar_exps)

    def direction_canonical_key(self):
        """Key identifying a family with its direction-reversed twin."""
        return min(self.key(), self.reversed_direction().key())

    def a_bar_ratio(self) -> Fraction | None:
        """For d_mu = 2 families: q with a_bar = a^q, None when undefined."""
        if self.d_mu != 2 or self.mu_exps[1] == 0:
            return None
        return self.mu_bar_exps[1] / self.mu_exps[1]

    def to_json(self) -> dict:
        def enc(exps):
            return [f"{e.numerator}/{e.denominator}" for e in exps]

        return {
            "mu": enc(self.mu_exps),
            "lam": enc(self.lam_exps),
            "mu_bar": enc(self.mu_bar_exps),
            "lam_bar": enc(self.lam_bar_exps),
        }


def classify_family(family: ExponentFamily, any_disconnected_pair: bool) -> str:
    mu, lam = family.mu_exps, family.lam_exps
    mub, lamb = family.mu_bar_exps, family.lam_bar_exps
    if mu == mub and lam == lamb:
        return "identity"
    if family.d_mu == family.d_lam and mu == lamb and lam == mub:
        return "swap"
    c = msub(lam, mub)
    if c is not None and msum(mu, c) == tuple(sorted(lamb)):
        return "sub_swap"
    if any_disconnected_pair:
        return "direct_sum"
    return "nontrivial"


def coupling_graph_connected(t_in_cells, t_out_cells, d_mu: int, d_lam: int) -> bool:
    """Connectivity of the bipartite graph on lam vs lam_bar indices.

    An edge joins lam_j and lam_bar_l whenever some rank places input cell
    (i, j) against output cell (k, l).
    """
    parent = list(range(2 * d_lam))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for (_, j), (_, l) in zip(t_in_cells, t_out_cells):
        union(j, d_lam + l)
    root = find(0)
    return all(find(x) == root for x in range(2 * d_lam))


@dataclass(frozen=True)
class GapCycle:
    """Closed chain of ratio relations among auxiliary Schmidt coefficients."""

    nodes: tuple[int, ...]
    edges: tuple[str, ...]

    def __post_init__(self):
        if len(self.nodes) != len(self.edges):
            raise InvalidArgumentError("cycle needs one edge per node")
        if any(e not in ("g_plus_plus", "g_plus", "g_minus") for e in self.edges):
            raise InvalidArgumentError("unknown edge label")


@dataclass(frozen=True)
class LuSolution:
    """A deduplicated solution space of the two-state LU problem."""

    family: ExponentFamily | None
    basis: tuple[tuple[tuple[Fraction, ...], ...], ...]
    nullspace_dim: int
    classification: str
    tableau_pairs: tuple[TableauPair, ...]
    a_bar_ratio: Fraction | None
    validity_interval: tuple[Fraction, Fraction] = (Fraction(0), Fraction(1))

    def to_json(self) -> dict:
        def enc_vec(parts):
            return [[f"{e.numerator}/{e.denominator}" for e in part] for part in parts]

        return {
            "classification": self.classification,
            "nullspace_dim": self.nullspace_dim,
            "family": self.family.to_json() if self.family else None,
            "basis": [enc_vec(v) for v in self.basis] if self.nullspace_dim > 1 else [],
            "a_bar_ratio": (
                f"{self.a_bar_ratio.numerator}/{self.a_bar_ratio.denominator}"
                if self.a_bar_ratio is not None
                else None
            ),
            "validity_interval": [str(self.validity_interval[0]), str(self.validity_interval[1])],
            "num_tableau_pairs": len(self.tableau_pairs),
            "tableau_pairs": [tp.to_json() for tp in self.tableau_pairs],
        }
