"""Dense pure states over n qudits and local-operator application.

Basis ordering is row-major over parties with party 1 most significant:
amplitude index of |i_1 ... i_n> is i_1 * (d_2 ... d_n) + ... + i_n.
`merge_copies` groups party i of every input into one local index in
mixed radix, copy 1 most significant, so merging k copies of GHZ(n, d)
reproduces GHZ(n, d^k) bit-exactly.

All values are immutable after construction and every operation is a pure
function returning fresh arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import caps
from .errors import InvalidArgumentError, ResourceLimitError

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class PureState:
    """State vector over n parties with local dimensions `dims`."""

    dims: tuple[int, ...]
    amps: np.ndarray

    def __init__(self, dims: Sequence[int], amps):
        dims = tuple(int(d) for d in dims)
        if not dims or any(d < 1 for d in dims):
            raise InvalidArgumentError(f"bad local dimensions {dims}")
        total = math.prod(dims)
        if total > caps.max_amplitudes():
            raise ResourceLimitError(
                f"{total} amplitudes exceed the cap of {caps.max_amplitudes()}"
            )
        vec = np.asarray(amps, dtype=complex).reshape(-1)
        if vec.size != total:
            raise InvalidArgumentError(
                f"amplitude vector length {vec.size} does not match prod(dims)={total}"
            )
        vec = vec.copy()
        vec.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amps", vec)

    @property
    def num_parties(self) -> int:
        return len(self.dims)

    def norm_sq(self) -> float:
        return float(np.vdot(self.amps, self.amps).real)

    def is_normalized(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.norm_sq() - 1.0) <= tol

    def normalized(self) -> "PureState":
        n = math.sqrt(self.norm_sq())
        if n == 0:
            raise InvalidArgumentError("cannot normalize the zero vector")
        return PureState(self.dims, self.amps / n)

    def as_tensor(self) -> np.ndarray:
        return self.amps.reshape(self.dims)

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "amps": [[float(a.real), float(a.imag)] for a in self.amps],
        }

    @staticmethod
    def from_json(data: dict) -> "PureState":
        amps = [complex(re, im) for re, im in data["amps"]]
        return PureState(data["dims"], amps)


@dataclass(frozen=True)
class LocalOperator:
    """One matrix per party; factor i has shape (d_out_i, d_in_i)."""

    factors: tuple[np.ndarray, ...]

    def __init__(self, factors: Sequence):
        mats = []
        for f in factors:
            m = np.asarray(f, dtype=complex)
            if m.ndim != 2:
                raise InvalidArgumentError("operator factors must be matrices")
            m = m.copy()
            m.setflags(write=False)
            mats.append(m)
        if not mats:
            raise InvalidArgumentError("empty operator")
        object.__setattr__(self, "factors", tuple(mats))

    @property
    def num_parties(self) -> int:
        return len(self.factors)

    @staticmethod
    def identity(dims: Sequence[int]) -> "LocalOperator":
        return LocalOperator([np.eye(d) for d in dims])

    @staticmethod
    def on_party(party: int, matrix, dims: Sequence[int]) -> "LocalOperator":
        """Identity everywhere except `party`."""
        facs = [np.eye(d, dtype=complex) for d in dims]
        facs[party] = np.asarray(matrix, dtype=complex)
        return LocalOperator(facs)

    def to_json(self) -> dict:
        return {
            "factors": [
                [[[float(x.real), float(x.imag)] for x in row] for row in f]
                for f in self.factors
            ]
        }

    @staticmethod
    def from_json(data: dict) -> "LocalOperator":
        return LocalOperator(
            [np.array([[complex(re, im) for re, im in row] for row in f]) for f in data["factors"]]
        )


def apply_local(op: LocalOperator, state: PureState) -> PureState:
    """Return (tensor of factors) applied to state, unnormalized."""
    if op.num_parties != state.num_parties:
        raise InvalidArgumentError(
            f"operator has {op.num_parties} factors, state has {state.num_parties} parties"
        )
    tensor = state.as_tensor()
    out_dims = []
    for i, f in enumerate(op.factors):
        if f.shape[1] != state.dims[i]:
            raise InvalidArgumentError(
                f"factor {i} expects local dim {f.shape[1]}, state has {state.dims[i]}"
            )
        tensor = np.moveaxis(np.tensordot(f, tensor, axes=([1], [i])), 0, i)
        out_dims.append(f.shape[0])
    return PureState(out_dims, tensor.reshape(-1))


def overlap(a: PureState, b: PureState) -> complex:
    if a.dims != b.dims:
        raise InvalidArgumentError("overlap needs matching dimensions")
    return complex(np.vdot(a.amps, b.amps))


def fidelity(a: PureState, b: PureState) -> float:
    """|<a|b>|^2 / (|a|^2 |b|^2); global phase never matters."""
    na, nb = a.norm_sq(), b.norm_sq()
    if na == 0 or nb == 0:
        raise InvalidArgumentError("fidelity with the zero vector is undefined")
    return abs(overlap(a, b)) ** 2 / (na * nb)


def make_ghz(n: int, d: int) -> PureState:
    """(1/sqrt(d)) sum_i |i...i> on n parties."""
    if n < 2 or d < 2:
        raise InvalidArgumentError("GHZ needs n >= 2 parties and local dimension d >= 2")
    dims = (d,) * n
    amps = np.zeros(d**n, dtype=complex)
    step = (d**n - 1) // (d - 1)  # index stride of |i...i>
    amps[::step] = 1 / math.sqrt(d)
    return PureState(dims, amps)


def make_w() -> PureState:
    """(|001> + |010> + |100>) / sqrt(3)."""
    amps = np.zeros(8, dtype=complex)
    for idx in (0b001, 0b010, 0b100):
        amps[idx] = 1 / math.sqrt(3)
    return PureState((2, 2, 2), amps)


def make_chi() -> PureState:
    """(|0000> + |1111> + |0110> + |0011>) / 2, normalized."""
    amps = np.zeros(16, dtype=complex)
    for idx in (0b0000, 0b1111, 0b0110, 0b0011):
        amps[idx] = 0.5
    return PureState((2, 2, 2, 2), amps)


def make_five_qubit() -> PureState:
    """The 5-qubit state with two-copy stabilizer {identity, SWAP}.

    (1/sqrt(22)) (sqrt(7)|00000> + sqrt(5)|11111> + sum of all weight-3
    basis states).
    """
    amps = np.zeros(32, dtype=complex)
    amps[0] = math.sqrt(7)
    amps[31] = math.sqrt(5)
    for idx in range(32):
        if bin(idx).count("1") == 3:
            amps[idx] = 1.0
    return PureState((2,) * 5, amps / math.sqrt(22))


def reduced_density(state: PureState, party: int) -> np.ndarray:
    """Single-party reduced density matrix of a normalized state."""
    n = state.num_parties
    if not 0 <= party < n:
        raise InvalidArgumentError(f"party {party} out of range for {n} parties")
    if not state.is_normalized(tol=1e-8):
        raise InvalidArgumentError("reduced_density expects a normalized state")
    t = np.moveaxis(state.as_tensor(), party, 0).reshape(state.dims[party], -1)
    return t @ t.conj().T


def is_critical(state: PureState, tol: float = DEFAULT_TOL) -> bool:
    """True iff every single-party reduced density matrix is maximally mixed."""
    d = state.dims[0]
    if any(di != d for di in state.dims):
        raise InvalidArgumentError("criticality check needs homogeneous local dimensions")
    target = np.eye(d) / d
    return all(
        np.max(np.abs(reduced_density(state, i) - target)) <= tol
        for i in range(state.num_parties)
    )


def merge_copies(states: Sequence[PureState]) -> PureState:
    """Merge states sharing a party count into one state on product dims.

    Party i of the result carries the mixed-radix index (i_1, ..., i_k)
    over the copies, copy 1 most significant. Amplitudes are products.
    """
    if not states:
        raise InvalidArgumentError("nothing to merge")
    n = states[0].num_parties
    if any(s.num_parties != n for s in states):
        raise InvalidArgumentError("merge_copies needs equal party counts")
    k = len(states)
    if k == 1:
        return states[0]
    total = math.prod(math.prod(s.dims) for s in states)
    if total > caps.max_amplitudes():
        raise ResourceLimitError(f"merged state would have {total} amplitudes")
    tensor = states[0].as_tensor()
    for s in states[1:]:
        tensor = np.tensordot(tensor, s.as_tensor(), axes=0)
    # Axis k*n ordering (copy-major) -> party-major interleaving.
    perm = [c * n + i for i in range(n) for c in range(k)]
    tensor = tensor.transpose(perm)
    dims = tuple(math.prod(s.dims[i] for s in states) for i in range(n))
    return PureState(dims, tensor.reshape(-1))


def null_limit_check(
    state: PureState,
    sequence: Callable[[float], LocalOperator],
    alphas: Sequence[float],
    det_tol: float = 1e-8,
) -> list[float]:
    """Norms of S_alpha |state> along a unit-determinant operator sequence.

    Only samples finite alpha; decay toward 0 is null-cone evidence,
    convergence of the normalized state to a critical state is semistable
    evidence. The caller inspects the returned norms (and states).
    """
    norms = []
    for alpha in alphas:
        op = sequence(alpha)
        for i, f in enumerate(op.factors):
            det = np.linalg.det(f)
            if abs(det - 1.0) > det_tol:
                raise InvalidArgumentError(
                    f"factor {i} at alpha={alpha} has determinant {det}, not 1"
                )
        norms.append(math.sqrt(apply_local(op, state).norm_sq()))
    return norms


def scaling_null_sequence(n: int) -> Callable[[float], LocalOperator]:
    """diag(e^-a, e^a) on every one of n qubit parties (det 1 each)."""

    def seq(alpha: float) -> LocalOperator:
        m = np.diag([math.exp(-alpha), math.exp(alpha)])
        return LocalOperator([m] * n)

    return seq


def chi_limit_sequence() -> Callable[[float], LocalOperator]:
    """The 4-qubit sequence driving chi to a GHZ state in the limit."""

    def seq(alpha: float) -> LocalOperator:
        a = np.diag([math.exp(-alpha), math.exp(alpha)])
        c = np.diag([math.exp(alpha), math.exp(-alpha)])
        eye = np.eye(2)
        return LocalOperator([a, eye, c, eye])

    return seq


_NAMED_STATES: dict[str, Callable[[], PureState]] = {
    "w": make_w,
    "chi": make_chi,
    "psi5": make_five_qubit,
}


def named_state(token: str) -> PureState:
    """Resolve CLI tokens: ghz:n:d, w, chi, psi5."""
    if token in _NAMED_STATES:
        return _NAMED_STATES[token]()
    if token.startswith("ghz:"):
        parts = token.split(":")
        if len(parts) != 3:
            raise InvalidArgumentError(f"bad GHZ token {token!r}; expected ghz:n:d")
        try:
            return make_ghz(int(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise InvalidArgumentError(f"bad GHZ token {token!r}") from exc
    raise InvalidArgumentError(f"unknown state token {token!r}")
