"""LOCC protocol representation and exhaustive branch-tree simulation.

A protocol is an ordered list of rounds. In each round one party measures
with a list of operators on its local space; depending on the outcome, a
correction (a local unitary, possibly with a factor on the measuring party
itself) is applied, or the branch is marked failed. Branch trees are fully
expanded; no sampling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError
from .qstate import LocalOperator, PureState, apply_local, fidelity, is_critical, merge_copies

PROB_TOL = 1e-12


@dataclass(frozen=True)
class Round:
    """One measurement round.

    corrections maps an outcome index to a LocalOperator over all parties
    (identity factors where nothing happens) or None. Outcomes listed in
    fail_outcomes terminate their branch as failed.
    """

    party: int
    ops: tuple[np.ndarray, ...]
    corrections: dict[int, LocalOperator | None] = field(default_factory=dict)
    fail_outcomes: frozenset[int] = frozenset()

    def __init__(self, party, ops, corrections=None, fail_outcomes=()):
        object.__setattr__(self, "party", int(party))
        mats = tuple(np.asarray(m, dtype=complex) for m in ops)
        object.__setattr__(self, "ops", mats)
        object.__setattr__(self, "corrections", dict(corrections or {}))
        object.__setattr__(self, "fail_outcomes", frozenset(fail_outcomes))


@dataclass(frozen=True)
class LoccProtocol:
    rounds: tuple[Round, ...]
    target: PureState | None = None

    def __init__(self, rounds: Sequence[Round], target: PureState | None = None):
        object.__setattr__(self, "rounds", tuple(rounds))
        object.__setattr__(self, "target", target)

    def to_json(self) -> dict:
        def mat_json(m):
            return [[[float(x.real), float(x.imag)] for x in row] for row in m]

        return {
            "rounds": [
                {
                    "party": r.party,
                    "ops": [mat_json(m) for m in r.ops],
                    "corrections": {
                        str(k): (v.to_json() if v is not None else None)
                        for k, v in r.corrections.items()
                    },
                    "fail_outcomes": sorted(r.fail_outcomes),
                }
                for r in self.rounds
            ],
            "target": self.target.to_json() if self.target is not None else None,
        }

    @staticmethod
    def from_json(data: dict) -> "LoccProtocol":
        rounds = []
        for r in data["rounds"]:
            ops = [
                np.array([[complex(re, im) for re, im in row] for row in m]) for m in r["ops"]
            ]
            corrections = {
                int(k): (LocalOperator.from_json(v) if v is not None else None)
                for k, v in r.get("corrections", {}).items()
            }
            rounds.append(Round(r["party"], ops, corrections, r.get("fail_outcomes", ())))
        target = data.get("target")
        return LoccProtocol(rounds, PureState.from_json(target) if target else None)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, float], ...]

    @property
    def clean(self) -> bool:
        return not self.violations


def validate(protocol: LoccProtocol, tol: float = 1e-10) -> ValidationReport:
    """Check per-round completeness and unitarity of corrections."""
    violations = []
    for r_idx, rnd in enumerate(protocol.rounds):
        if not rnd.ops:
            violations.append((f"round {r_idx}: no measurement operators", 1.0))
            continue
        dim = rnd.ops[0].shape[1]
        total = sum(m.conj().T @ m for m in rnd.ops)
        dev = float(np.max(np.abs(total - np.eye(dim))))
        if dev > tol:
            violations.append((f"round {r_idx}: completeness violation", dev))
        for out, corr in rnd.corrections.items():
            if corr is None:
                continue
            for p_idx, f in enumerate(corr.factors):
                if f.shape[0] != f.shape[1]:
                    violations.append(
                        (f"round {r_idx} outcome {out}: non-square correction factor", 1.0)
                    )
                    continue
                u_dev = float(np.max(np.abs(f.conj().T @ f - np.eye(f.shape[0]))))
                if u_dev > tol:
                    violations.append(
                        (f"round {r_idx} outcome {out} party {p_idx}: non-unitary correction", u_dev)
                    )
    return ValidationReport(tuple(violations))


@dataclass(frozen=True)
class Leaf:
    probability: float
    state: PureState | None
    outcomes: tuple[int, ...]
    failed: bool

    def target_fidelity(self, target: PureState) -> float:
        if self.state is None:
            return 0.0
        return fidelity(self.state, target)


def simulate(protocol: LoccProtocol, input_state: PureState) -> list[Leaf]:
    """Expand every branch; leaf probabilities sum to 1 within 1e-12."""
    state = input_state if input_state.is_normalized() else input_state.normalized()
    branches: list[tuple[float, PureState, tuple[int, ...], bool]] = [(1.0, state, (), False)]
    for rnd in protocol.rounds:
        nxt = []
        for prob, st, path, failed in branches:
            if failed:
                nxt.append((prob, st, path, True))
                continue
            if rnd.ops and rnd.ops[0].shape[1] != st.dims[rnd.party]:
                raise InvalidArgumentError(
                    f"round operator dim {rnd.ops[0].shape[1]} does not match party "
                    f"{rnd.party} local dim {st.dims[rnd.party]}"
                )
            for out, m in enumerate(rnd.ops):
                post = apply_local(LocalOperator.on_party(rnd.party, m, st.dims), st)
                p_out = post.norm_sq()
                if p_out <= PROB_TOL:
                    continue
                post = post.normalized()
                if out in rnd.fail_outcomes:
                    nxt.append((prob * p_out, post, path + (out,), True))
                    continue
                corr = rnd.corrections.get(out)
                if corr is not None:
                    post = apply_local(corr, post).normalized()
                nxt.append((prob * p_out, post, path + (out,), False))
        branches = nxt
    total = sum(p for p, *_ in branches)
    if abs(total - 1.0) > 1e-9:
        raise InvalidArgumentError(f"branch probabilities sum to {total}, not 1")
    return [Leaf(p, st, path, failed) for p, st, path, failed in branches]


def success_probability(leaves: Sequence[Leaf], target: PureState, tol: float = 1e-9) -> float:
    """Total probability mass of non-failed leaves reaching the target."""
    return sum(
        leaf.probability
        for leaf in leaves
        if not leaf.failed and leaf.target_fidelity(target) >= 1 - tol
    )


def _digit_group_permutation(dims_per_slot: Sequence[int], slot_perm: Sequence[int]) -> np.ndarray:
    """Permutation matrix reordering mixed-radix digit groups of a local index."""
    total = math.prod(dims_per_slot)
    k = len(dims_per_slot)
    mat = np.zeros((total, total))
    for idx in range(total):
        digits = []
        rem = idx
        for d in reversed(dims_per_slot):
            digits.append(rem % d)
            rem //= d
        digits.reverse()
        new_digits = [digits[slot_perm[s]] for s in range(k)]
        new_dims = [dims_per_slot[slot_perm[s]] for s in range(k)]
        new_idx = 0
        for dig, d in zip(new_digits, new_dims):
            new_idx = new_idx * d + dig
        mat[new_idx, idx] = 1.0
    return mat


def verify_subswap(
    state1_factors: Sequence[PureState],
    state2_factors: Sequence[PureState],
    swap_pairs: Sequence[tuple[int, int]],
) -> dict:
    """Check a local-unitary sub-SWAP between two multi-factor states.

    Each state is a tensor product of factor states over the same parties.
    swap_pairs lists (i, j): factor i of state 1 is exchanged with factor j
    of state 2 by basis-permutation local unitaries. Returns a report with
    the fidelity verdict and the criticality of each state before/after.
    """
    f1 = list(state1_factors)
    f2 = list(state2_factors)
    if not f1 or not f2:
        raise InvalidArgumentError("need factors for both states")
    n = f1[0].num_parties
    if any(s.num_parties != n for s in f1 + f2):
        raise InvalidArgumentError("all factors must share the party count")
    for i, j in swap_pairs:
        if not (0 <= i < len(f1) and 0 <= j < len(f2)):
            raise InvalidArgumentError(f"swap pair ({i}, {j}) out of range")
        if f1[i].dims != f2[j].dims:
            raise InvalidArgumentError(f"swap pair ({i}, {j}) has incompatible dimensions")

    joint_before = merge_copies(f1 + f2)
    slots = len(f1) + len(f2)
    slot_perm = list(range(slots))
    for i, j in swap_pairs:
        a, b = i, len(f1) + j
        slot_perm[a], slot_perm[b] = slot_perm[b], slot_perm[a]

    factors = []
    for party in range(n):
        dims_per_slot = [s.dims[party] for s in f1 + f2]
        factors.append(_digit_group_permutation(dims_per_slot, slot_perm))
    swapped = apply_local(LocalOperator(factors), joint_before)

    out1 = list(f1)
    out2 = list(f2)
    for i, j in swap_pairs:
        out1[i], out2[j] = f2[j], f1[i]
    expected = merge_copies(out1 + out2)
    swap_fid = fidelity(swapped, expected)

    def crit(facs):
        merged = merge_copies(list(facs)) if len(facs) > 1 else facs[0]
        homogeneous = len(set(merged.dims)) == 1
        return is_critical(merged) if homogeneous else None

    return {
        "swapped_ok": bool(swap_fid >= 1 - 1e-10),
        "fidelity": float(swap_fid),
        "critical_before": [crit(f1), crit(f2)],
        "critical_after": [crit(out1), crit(out2)],
    }
