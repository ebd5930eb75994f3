"""Generalized-GHZ symmetries, LOCC decisions and protocol synthesis.

States of the form (1 x ... x 1 x g)|GHZ_d^n> with diagonal invertible g
("GHZ-like") transform under LOCC exactly when the destination diagonal
majorizes the source diagonal. The synthesized protocol routes a single
measurement through the last party using a Rado certificate; corrections
are pure permutation unitaries on the remaining parties.

The restricted analysis over the order-8 subgroup of two-copy symmetries
throttles the reachable set down to delta <= sqrt(alpha1 * alpha2); at
saturation a two-round protocol implements the transformation
deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError, NoProtocolError
from .protocol import LoccProtocol, Round
from .qstate import LocalOperator, PureState, make_ghz
from .schmidt import SchmidtTuple, _barycentric_solve, majorizes, rado_decompose


def permutation_matrix(sigma: Sequence[int]) -> np.ndarray:
    """X_sigma = sum_k |sigma(k)><k|."""
    d = len(sigma)
    m = np.zeros((d, d))
    for k in range(d):
        m[sigma[k], k] = 1.0
    return m


@dataclass(frozen=True)
class GhzSymmetry:
    """Lemma-2-form symmetry of |GHZ_d^n>: [D(g1) x ... x D(gn)] X_sigma^n.

    gammas holds the first n-1 diagonal vectors; the last party's diagonal
    is derived entrywise as the inverse of the product of the others.
    """

    n: int
    d: int
    sigma: tuple[int, ...]
    gammas: tuple[tuple[complex, ...], ...]

    def __init__(self, n: int, d: int, sigma: Sequence[int], gammas: Sequence[Sequence]):
        if n < 3 or d < 2:
            raise InvalidArgumentError("GHZ symmetries need n >= 3 and d >= 2")
        sigma = tuple(int(s) for s in sigma)
        if sorted(sigma) != list(range(d)):
            raise InvalidArgumentError(f"{sigma} is not a permutation of 0..{d - 1}")
        rows = tuple(tuple(g) for g in gammas)
        if len(rows) != n - 1 or any(len(r) != d for r in rows):
            raise InvalidArgumentError(f"gammas must be (n-1) x d = {n - 1} x {d}")
        if any(g == 0 for r in rows for g in r):
            raise InvalidArgumentError("gamma entries must be nonzero")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "gammas", rows)

    def derived_gamma(self) -> tuple[complex, ...]:
        out = []
        for j in range(self.d):
            prod = 1
            for i in range(self.n - 1):
                prod = prod * self.gammas[i][j]
            out.append(1 / prod)
        return tuple(out)


def symmetry_as_operator(s: GhzSymmetry) -> LocalOperator:
    """Realize the symmetry; applying it to make_ghz(n, d) returns it exactly."""
    x = permutation_matrix(s.sigma)
    factors = []
    for i in range(s.n - 1):
        factors.append(np.diag([complex(g) for g in s.gammas[i]]) @ x)
    factors.append(np.diag([complex(g) for g in s.derived_gamma()]) @ x)
    return LocalOperator(factors)


def random_ghz_symmetry(n: int, d: int, rng: np.random.Generator) -> GhzSymmetry:
    """Random nonzero-rational gammas and a random sigma."""
    sigma = tuple(int(i) for i in rng.permutation(d))
    gammas = []
    for _ in range(n - 1):
        row = []
        for _ in range(d):
            num = int(rng.integers(1, 8)) * (1 if rng.integers(2) else -1)
            den = int(rng.integers(1, 8))
            row.append(Fraction(num, den))
        gammas.append(row)
    return GhzSymmetry(n, d, sigma, gammas)


@dataclass(frozen=True)
class GhzLikeState:
    """(1 x ... x 1 x g)|GHZ_d^n> recorded by the squared moduli of diag(g)."""

    n: int
    d: int
    diag: SchmidtTuple

    def __init__(self, n: int, d: int, diag: SchmidtTuple):
        if len(diag) != d:
            raise InvalidArgumentError(f"diagonal has {len(diag)} entries, expected {d}")
        if n < 2 or d < 2:
            raise InvalidArgumentError("need n >= 2 and d >= 2")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "diag", diag)

    @property
    def fully_entangled(self) -> bool:
        return self.diag.fully_entangled

    def to_state(self, normalize: bool = True) -> PureState:
        g = np.diag([math.sqrt(float(c)) for c in self.diag.coeffs])
        state = _apply_last_party(g, self.n, self.d)
        return state.normalized() if normalize else state


def _apply_last_party(matrix: np.ndarray, n: int, d: int) -> PureState:
    from .qstate import apply_local

    return apply_local(LocalOperator.on_party(n - 1, matrix, (d,) * n), make_ghz(n, d))


def decide_ghz_transform(src: GhzLikeState, dst: GhzLikeState) -> bool:
    """LOCC feasibility src -> dst: true iff dst.diag majorizes src.diag."""
    if (src.n, src.d) != (dst.n, dst.d):
        raise InvalidArgumentError("states live in different systems")
    if src.diag.total != dst.diag.total:
        raise InvalidArgumentError(
            "trace normalizations differ exactly; pre-normalize the diagonals"
        )
    return majorizes(dst.diag, src.diag)


def synthesize_ghz_protocol(src: GhzLikeState, dst: GhzLikeState) -> LoccProtocol:
    """Single-round protocol realizing a feasible GHZ-like transformation.

    Party n measures with operators sqrt(p_k) h X_k g^{-1} taken from the
    Rado certificate of dst.diag against src.diag; on outcome k the other
    parties apply the permutation X_k. Completeness holds exactly at the
    certificate level.
    """
    if not decide_ghz_transform(src, dst):
        raise NoProtocolError("destination diagonal does not majorize the source")
    if not src.fully_entangled:
        raise InvalidArgumentError("source must be fully entangled (g invertible)")
    cert = rado_decompose(target=src.diag, source=dst.diag)
    d, n = src.d, src.n
    g_inv = np.diag([1 / math.sqrt(float(c)) for c in src.diag.coeffs])
    h = np.diag([math.sqrt(float(c)) for c in dst.diag.coeffs])
    ops = []
    corrections = {}
    for out, (p, perm) in enumerate(cert.terms):
        x = permutation_matrix(perm)
        ops.append(math.sqrt(float(p)) * h @ x @ g_inv)
        facs = [x.copy() for _ in range(n - 1)] + [np.eye(d)]
        corrections[out] = LocalOperator(facs)
    target = dst.to_state()
    return LoccProtocol([Round(n - 1, ops, corrections)], target=target)


# The order-8 subgroup of two-copy GHZ symmetries, as permutations of the
# merged 4-dimensional local basis (index = 2*q1 + q2): generated by
# X x 1, 1 x X and SWAP of the two local qubits.
TRIVIAL_SUBGROUP_PERMS: tuple[tuple[int, ...], ...] = (
    (0, 1, 2, 3),  # identity
    (2, 3, 0, 1),  # X x 1
    (1, 0, 3, 2),  # 1 x X
    (3, 2, 1, 0),  # X x X
    (0, 2, 1, 3),  # SWAP
    (1, 3, 0, 2),  # SWAP (X x 1)
    (2, 0, 3, 1),  # SWAP (1 x X)
    (3, 1, 2, 0),  # SWAP (X x X)
)


def subgroup_feasible(
    src_diag: Sequence[Fraction], dst_diag: Sequence[Fraction], perms: Sequence[Sequence[int]]
) -> bool:
    """Exact feasibility of sum_k p_k X_k^dag H X_k = G over a permutation set.

    src_diag and dst_diag are raw (tensor-ordered, unsorted) diagonals; the
    question is whether src is a convex combination of the permuted dst
    diagonals. Decided by exhaustive exact barycentric solves over vertex
    subsets of size <= d (Caratheodory in the fixed-trace hyperplane).
    """
    src = tuple(Fraction(x) for x in src_diag)
    dst = tuple(Fraction(x) for x in dst_diag)
    d = len(src)
    if len(dst) != d:
        raise InvalidArgumentError("dimension mismatch")
    if sum(src) != sum(dst):
        return False
    points = sorted({tuple(dst[p[i]] for i in range(d)) for p in perms})
    for size in range(1, d + 1):
        for subset in combinations(points, size):
            weights = _barycentric_solve(subset, src)
            if weights is not None and all(w >= 0 for w in weights):
                return True
    return False


def two_copy_condition(delta: Fraction, alpha1: Fraction, alpha2: Fraction) -> bool:
    """Exact closed form for the merged two-copy majorization condition:
    delta <= sqrt((alpha1 + 1/2)(alpha2 + 1/2)) - 1/2."""
    delta, alpha1, alpha2 = Fraction(delta), Fraction(alpha1), Fraction(alpha2)
    return (delta + Fraction(1, 2)) ** 2 <= (alpha1 + Fraction(1, 2)) * (alpha2 + Fraction(1, 2))


def two_copy_diag(x: Fraction, y: Fraction | None = None) -> tuple[Fraction, ...]:
    """Tensor-ordered diagonal of (1/2 + x sz) x (1/2 + y sz)."""
    y = x if y is None else y
    up1, dn1 = Fraction(1, 2) + x, Fraction(1, 2) - x
    up2, dn2 = Fraction(1, 2) + y, Fraction(1, 2) - y
    return (up1 * up2, up1 * dn2, dn1 * up2, dn1 * dn2)


@dataclass(frozen=True)
class RootRational:
    """sqrt of a non-negative rational, kept exact when it is a square."""

    radicand: Fraction

    def __post_init__(self):
        if self.radicand < 0:
            raise InvalidArgumentError("negative radicand")

    @property
    def exact(self) -> Fraction | None:
        num, den = self.radicand.numerator, self.radicand.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd)
        return None

    @property
    def is_square(self) -> bool:
        return self.exact is not None

    def __float__(self) -> float:
        return math.sqrt(float(self.radicand))


def trivial_subgroup_bound(alpha1: Fraction, alpha2: Fraction) -> RootRational:
    """Largest delta reachable with the order-8 subgroup: sqrt(alpha1 * alpha2)."""
    alpha1, alpha2 = Fraction(alpha1), Fraction(alpha2)
    if not (0 <= alpha1 < Fraction(1, 2)) or not (0 <= alpha2 < Fraction(1, 2)):
        raise InvalidArgumentError("alphas must lie in [0, 1/2)")
    return RootRational(alpha1 * alpha2)


def _qubit_pair_perm_matrix(perm: Sequence[int]) -> np.ndarray:
    return permutation_matrix(perm)


SWAP4 = _qubit_pair_perm_matrix((0, 2, 1, 3))
XX4 = _qubit_pair_perm_matrix((3, 2, 1, 0))


def two_round_input_state(alpha1: Fraction, alpha2: Fraction) -> PureState:
    """1 x 1 x (g x g) |GHZ_4^3> with G = 1/2 + sqrt(alpha1 alpha2) sz, normalized."""
    delta = float(RootRational(Fraction(alpha1) * Fraction(alpha2)))
    g = np.diag([math.sqrt(0.5 + delta), math.sqrt(0.5 - delta)])
    return _apply_last_party(np.kron(g, g), 3, 4).normalized()


def two_round_target_state(alpha1: Fraction, alpha2: Fraction) -> PureState:
    h1 = np.diag([math.sqrt(0.5 + float(alpha1)), math.sqrt(0.5 - float(alpha1))])
    h2 = np.diag([math.sqrt(0.5 + float(alpha2)), math.sqrt(0.5 - float(alpha2))])
    return _apply_last_party(np.kron(h1, h2), 3, 4).normalized()


def two_round_protocol(
    alpha1: Fraction, alpha2: Fraction, delta_saturating: bool = True
) -> LoccProtocol:
    """Two-round protocol for the saturating case delta = sqrt(alpha1 alpha2).

    Round one measures with sqrt(1/2) h' (g x g)^{-1} and its SWAP variant,
    where h' is the positive square root of
    (1/2 + lam) H1 x H2 + (1/2 - lam) X H1 X x X H2 X
    and lam = sqrt(alpha1 alpha2)/(alpha1 + alpha2). Round two finishes with
    h1 x h2 against h'. When alpha1 = alpha2 the second round degenerates to
    a single unitary branch.
    """
    alpha1, alpha2 = Fraction(alpha1), Fraction(alpha2)
    if not delta_saturating:
        raise InvalidArgumentError(
            "only the saturating case delta = sqrt(alpha1 alpha2) is specified"
        )
    if not (0 < alpha1 < Fraction(1, 2) and 0 < alpha2 < Fraction(1, 2)):
        raise InvalidArgumentError("alphas must lie in (0, 1/2)")
    delta_sq = alpha1 * alpha2
    root = RootRational(delta_sq)
    delta = float(root)
    lam_exact = (root.exact / (alpha1 + alpha2)) if root.is_square else None
    lam = float(lam_exact) if lam_exact is not None else delta / float(alpha1 + alpha2)

    h1_diag = [Fraction(1, 2) + alpha1, Fraction(1, 2) - alpha1]
    h2_diag = [Fraction(1, 2) + alpha2, Fraction(1, 2) - alpha2]
    hh = [float(a * b) for a in h1_diag for b in h2_diag]
    hh_flipped = [float(a * b) for a in reversed(h1_diag) for b in reversed(h2_diag)]
    hp_diag = [(0.5 + lam) * x + (0.5 - lam) * y for x, y in zip(hh, hh_flipped)]
    hp = np.diag([math.sqrt(x) for x in hp_diag])
    hp_inv = np.diag([1 / math.sqrt(x) for x in hp_diag])

    g = np.diag([math.sqrt(0.5 + delta), math.sqrt(0.5 - delta)])
    gg_inv = np.linalg.inv(np.kron(g, g))
    h12 = np.diag([math.sqrt(x) for x in hh])

    round1 = Round(
        2,
        [math.sqrt(0.5) * hp @ gg_inv, math.sqrt(0.5) * hp @ SWAP4 @ gg_inv],
        corrections={1: LocalOperator([SWAP4, SWAP4, np.eye(4)])},
    )
    ops2 = [math.sqrt(0.5 + lam) * h12 @ hp_inv]
    corrections2: dict[int, LocalOperator | None] = {}
    if not math.isclose(lam, 0.5, abs_tol=1e-15):
        ops2.append(math.sqrt(0.5 - lam) * h12 @ XX4 @ hp_inv)
        corrections2[1] = LocalOperator([XX4, XX4, np.eye(4)])
    round2 = Round(2, ops2, corrections=corrections2)
    return LoccProtocol([round1, round2], target=two_round_target_state(alpha1, alpha2))
