"""Exhaustive enumeration of bipartite two-state LU transformation families.

The search walks every pair of linear extensions of the d_mu x d_lam grid
(input and output sorted orders) in one synchronized backtracking pass,
equating position-wise exponent sums mu_i + lam_j = mu_bar_k + lam_bar_l.
That yields a homogeneous rational linear system per pair; its exact null
space is extracted incrementally (integer row echelon with LIFO pops), so
shared tableau prefixes share elimination work.

One-dimensional null spaces give single-parameter exponent families;
higher-dimensional spaces are reported with a rational basis and
classified through a witness point inside the monotonicity cone. Records
are deduplicated by canonical solution space, collecting every realizing
tableau pair, and output order is deterministic (lexicographic canonical
key).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .. import caps
from ..errors import InvalidArgumentError, ResourceLimitError
from .families import (
    ExponentFamily,
    LuSolution,
    classify_family,
    coupling_graph_connected,
    msub,
    msum,
)
from .rational_linalg import (
    IncrementalEchelon,
    cone_witness,
    in_row_span,
    int_rref_canonical,
    integerize,
    nullspace_from_echelon,
)
from .tableaux import TableauPair, cells_to_matrix, hook_content_count

NUMERIC_BASES = (Fraction(1, 2), Fraction(1, 3), Fraction(9, 10))


def _split_vector(vec, d_mu: int, d_lam: int):
    """Nullspace vector -> four exponent tuples with anchors prepended."""
    zero = Fraction(0)
    mu = (zero,) + tuple(Fraction(x) for x in vec[: d_mu - 1])
    lam = (zero,) + tuple(Fraction(x) for x in vec[d_mu - 1 : d_mu - 1 + d_lam - 1])
    off = d_mu - 1 + d_lam - 1
    mub = (zero,) + tuple(Fraction(x) for x in vec[off : off + d_mu - 1])
    lamb = (zero,) + tuple(Fraction(x) for x in vec[off + d_mu - 1 :])
    return mu, lam, mub, lamb


def _family_from_vector(vec, d_mu: int, d_lam: int) -> ExponentFamily | None:
    mu, lam, mub, lamb = _split_vector(vec, d_mu, d_lam)
    for t in (mu, lam, mub, lamb):
        if any(t[i] > t[i + 1] for i in range(len(t) - 1)):
            return None
    fam = ExponentFamily(mu, lam, mub, lamb)
    return fam if fam.is_valid() else None


def _numeric_check(family: ExponentFamily) -> bool:
    fam = family.canonical_integer()
    for a in NUMERIC_BASES:
        mu, lam, mub, lamb = fam.realize(a)
        left = sorted(x * y for x in mu for y in lam)
        right = sorted(x * y for x in mub for y in lamb)
        if left != right:
            return False
    return True


def _space_key(basis, d_mu: int, d_lam: int):
    """Canonical key of a solution space, direction-symmetric."""
    m = d_mu - 1
    n = d_lam - 1

    def swap_direction(v):
        return tuple(v[m + n : 2 * m + n]) + tuple(v[2 * m + n :]) + tuple(v[:m]) + tuple(
            v[m : m + n]
        )

    k1 = int_rref_canonical(basis)
    k2 = int_rref_canonical([swap_direction(v) for v in basis])
    return min(k1, k2)


class _Record:
    __slots__ = ("dim", "family", "basis", "pairs", "any_disconnected", "d_mu", "d_lam", "forced")

    def __init__(self, dim, family, basis, d_mu, d_lam, forced=None):
        self.dim = dim
        self.family = family
        self.basis = basis
        self.pairs = []
        self.any_disconnected = False
        self.d_mu = d_mu
        self.d_lam = d_lam
        self.forced = forced


def enumerate_solutions(d_mu: int, d_lam: int) -> list[LuSolution]:
    """All solution families of the (d_mu, d_lam) two-state LU problem."""
    if not 2 <= d_mu <= d_lam:
        raise InvalidArgumentError("need 2 <= d_mu <= d_lam")
    if d_mu * d_lam > 16:
        raise ResourceLimitError("d_mu * d_lam capped at 16")
    est_pairs = hook_content_count(d_mu, d_lam) ** 2
    if est_pairs > caps.max_tableau_pairs():
        raise ResourceLimitError(
            f"{est_pairs} tableau pairs exceed the cap of {caps.max_tableau_pairs()}"
        )

    n_cells = d_mu * d_lam
    nv = 2 * (d_mu + d_lam - 2)
    off_lam = d_mu - 1
    off_mub = d_mu - 1 + d_lam - 1
    off_lamb = off_mub + d_mu - 1

    ech = IncrementalEchelon(nv)
    fill_in = [0] * d_mu
    fill_out = [0] * d_mu
    cells_in: list[tuple[int, int]] = []
    cells_out: list[tuple[int, int]] = []
    registry: dict = {}

    def cell_value(vec, cell):
        i, j = cell
        v = vec[i - 1] if i else 0
        if j:
            v += vec[off_lam + j - 1]
        return v

    def sum_row(cell):
        row = [0] * nv
        i, j = cell
        if i:
            row[i - 1] += 1
        if j:
            row[off_lam + j - 1] += 1
        return row

    def harvest():
        dim = nv - ech.rank
        if dim < 1:
            return
        basis = nullspace_from_echelon(ech.rows(), nv)
        assert len(basis) == dim

        if dim == 1:
            ray = basis[0]
            prev = 0
            sign_ok, sign_flip = True, True
            for r in range(n_cells):
                v = cell_value(ray, cells_in[r])
                if v < prev:
                    sign_ok = False
                elif v > prev:
                    sign_flip = False
                if not (sign_ok or sign_flip):
                    return
                prev = v
            if not sign_ok:
                ray = tuple(-x for x in ray)
            fam = _family_from_vector(ray, d_mu, d_lam)
            if fam is None:
                return
            _register(fam, basis, dim)
            return

        # Monotonicity constraints: input-side rank sums weakly increase.
        deltas = []
        for r in range(n_cells - 1):
            row_a = sum_row(cells_in[r])
            row_b = sum_row(cells_in[r + 1])
            deltas.append(tuple(b - a for a, b in zip(row_a, row_b)))

        # Multi-parameter space: identity and swap are linear properties.
        is_identity = all(v[:off_mub] == v[off_mub:] for v in basis)
        is_swap = d_mu == d_lam and all(
            b[:off_lam] == b[off_lamb:] and b[off_lam:off_mub] == b[off_mub:off_lamb]
            for b in basis
        )
        witness_fam = None
        if not (is_identity or is_swap):
            yrows = [
                tuple(
                    Fraction(sum(d[c] * b[c] for c in range(nv)))
                    for b in basis
                )
                for d in deltas
            ]
            y = cone_witness(yrows, dim)
            if y is None:
                return
            witness = [sum(y[k] * basis[k][c] for k in range(dim)) for c in range(nv)]
            if all(x == 0 for x in witness):
                return
            witness_fam = _family_from_vector(integerize(witness), d_mu, d_lam)
            if witness_fam is None:
                return
        _register(witness_fam, basis, dim, forced=(
            "identity" if is_identity else "swap" if is_swap else None
        ))

    def _register(fam, basis, dim, forced=None):
        pair = TableauPair(
            cells_to_matrix(cells_in, d_mu, d_lam), cells_to_matrix(cells_out, d_mu, d_lam)
        )
        rev_pair = TableauPair(pair.t_out, pair.t_in)
        connected = coupling_graph_connected(cells_in, cells_out, d_mu, d_lam)
        if dim == 1:
            rev = fam.reversed_direction()
            if rev.key() < fam.key():
                fam, pair = rev, rev_pair
            key = ("ray", fam.key())
        else:
            key = ("space", _space_key(basis, d_mu, d_lam))
        rec = registry.get(key)
        if rec is None:
            rec = _Record(
                dim,
                None if forced is not None else fam,
                tuple(tuple(b) for b in basis),
                d_mu,
                d_lam,
                forced=forced,
            )
            registry[key] = rec
        rec.pairs.append(pair)
        if pair.t_in != pair.t_out:
            rec.pairs.append(rev_pair)
        if not connected:
            rec.any_disconnected = True

    def dfs(depth: int, tied: bool):
        if depth == n_cells:
            harvest()
            return
        for i_in in range(d_mu):
            c_in = fill_in[i_in]
            if c_in >= d_lam or (i_in > 0 and fill_in[i_in - 1] <= c_in):
                continue
            for i_out in range(d_mu):
                if tied and i_out < i_in:
                    continue
                c_out = fill_out[i_out]
                if c_out >= d_lam or (i_out > 0 and fill_out[i_out - 1] <= c_out):
                    continue
                row = [0] * nv
                if i_in:
                    row[i_in - 1] += 1
                if c_in:
                    row[off_lam + c_in - 1] += 1
                if i_out:
                    row[off_mub + i_out - 1] -= 1
                if c_out:
                    row[off_lamb + c_out - 1] -= 1
                fill_in[i_in] += 1
                fill_out[i_out] += 1
                cells_in.append((i_in, c_in))
                cells_out.append((i_out, c_out))
                ech.push(row)
                dfs(depth + 1, tied and i_in == i_out)
                ech.pop()
                cells_out.pop()
                cells_in.pop()
                fill_out[i_out] -= 1
                fill_in[i_in] -= 1

    dfs(0, True)

    ordered = [registry[key] for key in sorted(registry, key=_key_sort)]

    # Fold records whose solution space sits strictly inside another reported
    # space: they are specializations (tie coincidences) of the larger family,
    # and their realizing tableau pairs move onto the parent record.
    canonical = [int_rref_canonical(rec.basis) for rec in ordered]
    folded = [False] * len(ordered)
    by_dim = sorted(range(len(ordered)), key=lambda i: ordered[i].dim)
    for i in by_dim:
        rec = ordered[i]
        parent = None
        for j in by_dim:
            other = ordered[j]
            if other.dim <= rec.dim or folded[j]:
                continue
            if all(in_row_span(v, canonical[j]) for v in rec.basis):
                if parent is None or other.dim < ordered[parent].dim:
                    parent = j
        if parent is not None:
            folded[i] = True
            ordered[parent].pairs.extend(rec.pairs)

    solutions = []
    for i, rec in enumerate(ordered):
        if folded[i]:
            continue
        forced = rec.forced
        if forced is not None:
            classification = forced
            family = None
            ratio = None
        else:
            fam = rec.family
            classification = classify_family(fam, rec.any_disconnected)
            if not _numeric_check(fam):
                raise AssertionError(f"numeric validation failed for {fam}")
            family = fam.canonical_integer()
            ratio = _space_ratio(rec) if rec.dim > 1 else family.a_bar_ratio()
        basis_split = tuple(tuple(_split_vector(b, d_mu, d_lam)) for b in rec.basis)
        pairs = tuple(dict.fromkeys(rec.pairs))
        solutions.append(
            LuSolution(
                family=family,
                basis=basis_split,
                nullspace_dim=rec.dim,
                classification=classification,
                tableau_pairs=pairs,
                a_bar_ratio=ratio,
            )
        )
    return solutions


def _space_ratio(rec) -> Fraction | None:
    """a_bar ratio of a multi-parameter space when it is a space invariant."""
    if rec.d_mu != 2:
        return None
    # mu_1 is column 0; mub_1 is column (d_mu-1)+(d_lam-1) = d_lam.
    mu1 = [b[0] for b in rec.basis]
    mub1 = [b[rec.d_lam] for b in rec.basis]
    ratio = None
    for a, b in zip(mu1, mub1):
        if a == 0:
            if b != 0:
                return None
            continue
        r = Fraction(b) / Fraction(a)
        if ratio is None:
            ratio = r
        elif ratio != r:
            return None
    return ratio


def _key_sort(key):
    kind, payload = key
    return (0 if kind == "ray" else 1, payload)
