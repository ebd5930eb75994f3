"""Exact-rational Schmidt tuples, majorization, and mixing certificates.

Everything here works on squared Schmidt coefficients held as
`fractions.Fraction`, so every verdict is exact. A `RadoCertificate`
expresses one diagonal tuple as a probability mixture of permutations of
another; it exists iff the source tuple majorizes the target, and it is
produced constructively (T-transform chain, then a Birkhoff decomposition
of the resulting doubly stochastic matrix).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .errors import InvalidArgumentError, NoCertificateError

RationalLike = Fraction | int | str


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise InvalidArgumentError(
            f"refusing inexact float {value!r}; pass a Fraction, int or string"
        )
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgumentError(f"cannot parse {value!r} as a rational") from exc


@dataclass(frozen=True)
class SchmidtTuple:
    """Sorted tuple of exact non-negative rational squared Schmidt coefficients."""

    coeffs: tuple[Fraction, ...]
    normalized: bool

    def __init__(self, values: Iterable[RationalLike]):
        coeffs = tuple(sorted((_to_fraction(v) for v in values), reverse=True))
        if not coeffs:
            raise InvalidArgumentError("empty Schmidt tuple")
        if coeffs[-1] < 0:
            raise InvalidArgumentError("negative Schmidt coefficient")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "normalized", sum(coeffs) == 1)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    @property
    def total(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    @property
    def fully_entangled(self) -> bool:
        return self.coeffs[-1] > 0

    def to_floats(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict) -> "SchmidtTuple":
        return SchmidtTuple(data["coeffs"])


def from_decimals(values: Sequence[str]) -> SchmidtTuple:
    """Parse decimal (or p/q) strings into an exact tuple."""
    return SchmidtTuple(values)


def majorizes(a: SchmidtTuple, b: SchmidtTuple) -> bool:
    """True iff every prefix sum of `a` dominates that of `b`, equal totals."""
    if len(a) != len(b):
        raise InvalidArgumentError(f"length mismatch: {len(a)} vs {len(b)}")
    if a.total != b.total:
        raise InvalidArgumentError(
            f"totals differ exactly: {a.total} vs {b.total}; majorization undefined"
        )
    pa = Fraction(0)
    pb = Fraction(0)
    for xa, xb in zip(a.coeffs, b.coeffs):
        pa += xa
        pb += xb
        if pa < pb:
            return False
    return True


def tensor(a: SchmidtTuple, b: SchmidtTuple) -> SchmidtTuple:
    """All pairwise products, re-sorted descending."""
    return SchmidtTuple(x * y for x in a.coeffs for y in b.coeffs)


def tensor_power(a: SchmidtTuple, k: int) -> SchmidtTuple:
    if k < 1:
        raise InvalidArgumentError("tensor power needs k >= 1")
    out = a
    for _ in range(k - 1):
        out = tensor(out, a)
    return out


def multiset_equal(a: SchmidtTuple, b: SchmidtTuple) -> bool:
    return a.coeffs == b.coeffs if len(a) == len(b) else False


@dataclass(frozen=True)
class RadoCertificate:
    """Probability-weighted permutation list with sum p_k * perm_k(source) = target.

    A term's permutation `perm` acts by `permuted[i] = source[perm[i]]`.
    """

    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def __post_init__(self):
        total = sum((p for p, _ in self.terms), Fraction(0))
        if total != 1:
            raise InvalidArgumentError(f"certificate weights sum to {total}, not 1")
        if any(p <= 0 for p, _ in self.terms):
            raise InvalidArgumentError("certificate weights must be positive")

    def __len__(self) -> int:
        return len(self.terms)

    def apply(self, source: SchmidtTuple) -> tuple[Fraction, ...]:
        d = len(source)
        out = [Fraction(0)] * d
        for p, perm in self.terms:
            for i in range(d):
                out[i] += p * source.coeffs[perm[i]]
        return tuple(out)

    def verify(self, source: SchmidtTuple, target: SchmidtTuple) -> bool:
        return self.apply(source) == target.coeffs

    def to_json(self) -> dict:
        return {
            "terms": [
                {"p": f"{p.numerator}/{p.denominator}", "perm": list(perm)}
                for p, perm in self.terms
            ]
        }


def _t_transform_chain(source: list[Fraction], target: list[Fraction]) -> list[list[Fraction]]:
    """Doubly stochastic matrix D with D @ source = target, as a dense list.

    Hardy-Littlewood-Polya construction: repeatedly fix the largest index j
    with cur[j] > target[j] against the next index k > j with cur[k] < target[k]
    by a T-transform. At most d-1 transforms are needed; their product is
    doubly stochastic.
    """
    d = len(source)
    cur = list(source)
    rows = [[Fraction(1) if i == j else Fraction(0) for j in range(d)] for i in range(d)]

    def apply_t(j: int, k: int, t: Fraction):
        # T = (1-t) I + t Q_jk applied on the left of the accumulated matrix.
        for col in range(d):
            rj, rk = rows[j][col], rows[k][col]
            rows[j][col] = (1 - t) * rj + t * rk
            rows[k][col] = (1 - t) * rk + t * rj

    for _ in range(d):
        if cur == target:
            break
        j = max(i for i in range(d) if cur[i] > target[i])
        k = next(i for i in range(j + 1, d) if cur[i] < target[i])
        delta = min(cur[j] - target[j], target[k] - cur[k])
        t = delta / (cur[j] - cur[k])
        apply_t(j, k, t)
        cur[j] -= delta
        cur[k] += delta
    assert cur == target, "T-transform chain failed to reach target"
    return rows


def _perfect_matching(support: list[list[bool]]) -> list[int] | None:
    """Row -> column perfect matching on the support graph (augmenting paths)."""
    d = len(support)
    match_col = [-1] * d

    def try_row(r: int, seen: list[bool]) -> bool:
        for c in range(d):
            if support[r][c] and not seen[c]:
                seen[c] = True
                if match_col[c] < 0 or try_row(match_col[c], seen):
                    match_col[c] = r
                    return True
        return False

    for r in range(d):
        if not try_row(r, [False] * d):
            return None
    out = [-1] * d
    for c, r in enumerate(match_col):
        out[r] = c
    return out


def birkhoff_decompose(matrix: list[list[Fraction]]) -> list[tuple[Fraction, tuple[int, ...]]]:
    """Write an exact doubly stochastic matrix as a convex sum of permutations.

    Greedy bottleneck peeling: find a perfect matching on the support, peel
    off its minimum weight, repeat. Terminates in at most (d-1)^2 + 1 steps.
    """
    d = len(matrix)
    work = [row[:] for row in matrix]
    terms: list[tuple[Fraction, tuple[int, ...]]] = []
    while True:
        if all(x == 0 for row in work for x in row):
            break
        support = [[x > 0 for x in row] for row in work]
        rowperm = _perfect_matching(support)
        if rowperm is None:
            raise AssertionError("no perfect matching on a doubly stochastic support")
        weight = min(work[r][rowperm[r]] for r in range(d))
        # Store as target-index -> source-index so that permuted[i] = src[perm[i]].
        perm = [-1] * d
        for r in range(d):
            perm[r] = rowperm[r]
            work[r][rowperm[r]] -= weight
        terms.append((weight, tuple(perm)))
    return terms


def rado_decompose(target: SchmidtTuple, source: SchmidtTuple) -> RadoCertificate:
    """Certificate with sum p_k perm_k(source) = target, exact.

    Requires source to majorize target; raises `NoCertificateError` carrying
    the violated prefix index otherwise. The certificate has at most
    d^2 - 2d + 2 terms.
    """
    if len(target) != len(source):
        raise InvalidArgumentError("length mismatch")
    if source.total != target.total:
        raise InvalidArgumentError("totals differ; no certificate possible")
    pa = Fraction(0)
    pb = Fraction(0)
    for i, (xs, xt) in enumerate(zip(source.coeffs, target.coeffs)):
        pa += xs
        pb += xt
        if pa < pb:
            raise NoCertificateError(i + 1)
    rows = _t_transform_chain(list(source.coeffs), list(target.coeffs))
    terms = birkhoff_decompose(rows)
    cert = RadoCertificate(tuple(terms))
    assert cert.verify(source, target)
    return cert


def permutohedron_member(target: SchmidtTuple, source: SchmidtTuple) -> bool:
    """Exact hull-membership oracle for d <= 3, independent of majorization.

    Enumerates the permutohedron vertices of `source` and decides membership
    of `target` in their convex hull by exhaustive barycentric solves over
    all vertex subsets of size <= d (Caratheodory in the fixed-sum plane).
    """
    d = len(source)
    if d > 3:
        raise InvalidArgumentError("oracle only implemented for d <= 3")
    if len(target) != d or source.total != target.total:
        return False
    verts = sorted({tuple(source.coeffs[p] for p in perm) for perm in permutations(range(d))})
    tgt = target.coeffs
    if d == 1:
        return verts[0][0] == tgt[0]
    for size in range(1, d + 1):
        from itertools import combinations

        for subset in combinations(verts, size):
            weights = _barycentric_solve(subset, tgt)
            if weights is not None and all(w >= 0 for w in weights):
                return True
    return False


def _barycentric_solve(points, tgt):
    """Solve sum w_i p_i = tgt with sum w_i = 1 exactly; None if inconsistent."""
    m = len(points)
    dim = len(tgt)
    # Rows: one per coordinate plus the normalization row.
    aug = [[Fraction(points[j][i]) for j in range(m)] + [Fraction(tgt[i])] for i in range(dim)]
    aug.append([Fraction(1)] * m + [Fraction(1)])
    pivots = []
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    for i in range(r, len(aug)):
        if aug[i][-1] != 0:
            return None
    sol = [Fraction(0)] * m
    for row, c in zip(aug, pivots):
        sol[c] = row[-1]
    # Free columns stay 0; verify.
    for i in range(dim):
        if sum(sol[j] * points[j][i] for j in range(m)) != tgt[i]:
            return None
    if sum(sol) != 1:
        return None
    return sol
