"""Maximum success probabilities of probabilistic SEP/LOCC transformations.

Covers reaching a seed state (minimum-eigenvalue formula), the joint
two-state probability through the symmetrized operator, the restricted
separability computation over a finite unitary stabilizer, and the
three-operator protocol that attains the joint optimum.

Separability membership is implemented only for residuals of the form
1 x ... x 1 x D with diagonal D, where separability coincides with
positivity. The general separable-cone test is out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError, UnsupportedFormError
from .protocol import LoccProtocol, Round
from .qstate import LocalOperator, PureState, make_five_qubit, merge_copies, apply_local

Rational = Fraction | int


@dataclass(frozen=True)
class HermitianDiag:
    """Positive diagonal of a full-rank operator H = h^dag h, exact entries."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Sequence):
        vals = tuple(Fraction(e) for e in entries)
        if not vals:
            raise InvalidArgumentError("empty diagonal")
        if any(v <= 0 for v in vals):
            raise InvalidArgumentError("entries must be positive (full rank)")
        object.__setattr__(self, "entries", vals)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def kron(self, other: "HermitianDiag") -> "HermitianDiag":
        return HermitianDiag([a * b for a in self.entries for b in other.entries])

    def sqrt_matrix(self) -> np.ndarray:
        return np.diag([math.sqrt(float(e)) for e in self.entries])

    def matrix(self) -> np.ndarray:
        return np.diag([float(e) for e in self.entries])


def _lambda_min(G) -> Fraction | float:
    if isinstance(G, HermitianDiag):
        return min(G.entries)
    mat = np.asarray(G, dtype=complex)
    if np.max(np.abs(mat - mat.conj().T)) > 1e-10:
        raise InvalidArgumentError("operator is not Hermitian")
    eig = np.linalg.eigvalsh(mat)
    return float(eig[0])


def pmax_to_seed(G, norm_sq) -> Fraction | float:
    """lambda_min[G / norm_sq]: optimal probability of reaching the seed state."""
    if isinstance(norm_sq, float):
        norm_val: Fraction | float = norm_sq
    else:
        norm_val = Fraction(norm_sq)
    if norm_val <= 0:
        raise InvalidArgumentError("norm_sq must be positive")
    lam = _lambda_min(G)
    if (isinstance(lam, Fraction) and lam <= 0) or (isinstance(lam, float) and lam <= 1e-12):
        raise InvalidArgumentError("G must be positive definite")
    if isinstance(lam, Fraction) and isinstance(norm_val, Fraction):
        return lam / norm_val
    return float(lam) / float(norm_val)


def pmax_joint_two_state(H1: HermitianDiag, H2: HermitianDiag, n1_sq, n2_sq) -> Fraction | float:
    """Reciprocal largest eigenvalue of (H1 x H2 + H2 x H1) / (2 (n1 n2)^2)."""
    if H1.dim != H2.dim:
        raise InvalidArgumentError("H1 and H2 must act on the same space")
    n1, n2 = Fraction(n1_sq), Fraction(n2_sq)
    if n1 <= 0 or n2 <= 0:
        raise InvalidArgumentError("norms must be positive")
    # The symmetrized operator is diagonal with entries H1_i H2_j + H2_i H1_j.
    lam_max = max(
        H1.entries[i] * H2.entries[j] + H2.entries[i] * H1.entries[j]
        for i in range(H1.dim)
        for j in range(H2.dim)
    )
    return 2 * n1 * n2 / lam_max


def pmax_sep_unitary_stabilizer(
    G, H, stabilizer: Sequence[LocalOperator], r: Rational = 1
) -> Fraction | float:
    """Largest p with r G - (p/|S|) sum_S S^dag H S >= 0, restricted form.

    G and H are diagonals on the single nontrivial site (the last party);
    every stabilizer element must have unitary factors, so conjugation only
    involves its last factor. The residual must remain diagonal, otherwise
    the input falls outside the supported form.
    """
    if not stabilizer:
        raise InvalidArgumentError("stabilizer must contain at least the identity")
    G = G if isinstance(G, HermitianDiag) else HermitianDiag(G)
    H = H if isinstance(H, HermitianDiag) else HermitianDiag(H)
    if G.dim != H.dim:
        raise InvalidArgumentError("G and H dimensions differ")
    d = G.dim
    r = Fraction(r)
    acc = np.zeros((d, d))
    h_mat = H.matrix()
    for op in stabilizer:
        for f in op.factors:
            if f.shape[0] != f.shape[1]:
                raise UnsupportedFormError("stabilizer factors must be square")
            if np.max(np.abs(f.conj().T @ f - np.eye(f.shape[0]))) > 1e-10:
                raise UnsupportedFormError("stabilizer elements must be unitary")
        last = op.factors[-1]
        if last.shape[0] != d:
            raise UnsupportedFormError("last factor must act on the nontrivial site")
        acc = acc + (last.conj().T @ h_mat @ last).real
    off = acc - np.diag(np.diag(acc))
    if np.max(np.abs(off)) > 1e-12:
        raise UnsupportedFormError("residual is not of the form 1 x ... x 1 x D")
    # Conjugating a diagonal by a (signed) permutation permutes the diagonal,
    # so the average is exact: recompute it rationally from the permutations.
    avg = []
    for i in range(d):
        total = Fraction(0)
        for op in stabilizer:
            last = op.factors[-1]
            col = np.nonzero(np.abs(last[:, i]) > 1e-12)[0]
            if len(col) != 1 or not math.isclose(abs(last[col[0], i]) , 1.0, abs_tol=1e-12):
                raise UnsupportedFormError(
                    "stabilizer last factors must be (phased) permutation matrices "
                    "for an exact diagonal computation"
                )
            total += H.entries[int(col[0])]
        avg.append(total / len(stabilizer))
    # r G_i - p * avg_i >= 0 for all i.
    return min(r * g / a for g, a in zip(G.entries, avg))


def joint_measurement_coefficient(H1: HermitianDiag, H2: HermitianDiag) -> Fraction:
    """1 / lambda_max[H1 x H2 + H2 x H1], the p-scale of the optimal protocol."""
    lam_max = max(
        H1.entries[i] * H2.entries[j] + H2.entries[i] * H1.entries[j]
        for i in range(H1.dim)
        for j in range(H2.dim)
    )
    return 1 / lam_max


def build_three_branch_protocol(
    H1: HermitianDiag,
    H2: HermitianDiag,
    eps: Rational,
    seed: PureState | None = None,
) -> LoccProtocol:
    """Three-operator protocol attaining the joint two-state optimum.

    M1 = sqrt(1/(1+eps^2)) h1 x h2, M2 likewise with the roles swapped, and
    M3 the square root of the completeness residual (a diagonal, necessarily
    PSD here). Outcome two is corrected by a local SWAP on every party;
    outcome three fails. The residual for M3 vanishes at eps = 1 and the
    protocol becomes deterministic.
    """
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise InvalidArgumentError("eps must lie in (0, 1]")
    if H1.dim != 2 or H2.dim != 2:
        raise InvalidArgumentError("the displayed protocol acts on qubit diagonals")
    coeff = Fraction(1, 1 + eps * eps)
    sym = [
        H1.entries[i] * H2.entries[j] + H2.entries[i] * H1.entries[j]
        for i in range(2)
        for j in range(2)
    ]
    residual = [1 - coeff * s for s in sym]
    if any(x < 0 for x in residual):
        raise InvalidArgumentError(
            "completeness residual is not PSD; H1, H2 do not match the supported pattern"
        )
    seed = seed if seed is not None else make_five_qubit()
    n = seed.num_parties
    h1h2 = np.kron(H1.sqrt_matrix(), H2.sqrt_matrix())
    h2h1 = np.kron(H2.sqrt_matrix(), H1.sqrt_matrix())
    c = math.sqrt(float(coeff))
    swap_local = np.zeros((4, 4))
    for q1 in range(2):
        for q2 in range(2):
            swap_local[2 * q2 + q1, 2 * q1 + q2] = 1.0
    ops = [c * h1h2, c * h2h1]
    corrections: dict[int, LocalOperator | None] = {
        1: LocalOperator([swap_local.copy() for _ in range(n)])
    }
    fail = []
    m3 = np.diag([math.sqrt(float(x)) for x in residual])
    if any(x > 0 for x in residual):
        ops.append(m3)
        fail = [2]
    psi1 = apply_local(LocalOperator.on_party(n - 1, H1.sqrt_matrix(), seed.dims), seed)
    psi2 = apply_local(LocalOperator.on_party(n - 1, H2.sqrt_matrix(), seed.dims), seed)
    target = merge_copies([psi1, psi2]).normalized()
    return LoccProtocol([Round(n - 1, ops, corrections, fail)], target=target)


def eq_mats_pair(eps: Rational) -> tuple[HermitianDiag, HermitianDiag]:
    """H1 = diag(1, eps), H2 = diag(eps, 1)."""
    eps = Fraction(eps)
    return HermitianDiag([1, eps]), HermitianDiag([eps, 1])


def five_qubit_norm_sq(eps: Rational) -> Fraction:
    """(1 + eps)/2, the squared norm of h_i applied to the 5-qubit state."""
    return (1 + Fraction(eps)) / 2
