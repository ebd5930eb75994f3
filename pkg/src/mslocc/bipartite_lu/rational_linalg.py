"""Exact linear algebra over the rationals for small dense systems.

Provides an incremental integer row-echelon accumulator (used while
backtracking over tableau pairs), an exact nullspace extractor, and a
Fourier-Motzkin feasibility solver used to pick a witness inside the
monotonicity cone of a multi-parameter solution space.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd


def normalize_int_row(row: list[int]) -> tuple[int, ...] | None:
    """Divide by the gcd and make the leading coefficient positive."""
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    if g == 0:
        return None
    lead = next(x for x in row if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in row)


class IncrementalEchelon:
    """Integer row echelon supporting LIFO push/pop of equations.

    New rows are fully reduced against existing pivots; existing pivots are
    never modified, so popping the most recently added pivot is sound.
    """

    def __init__(self, num_vars: int):
        self.nv = num_vars
        self.pivots: list[tuple[int, ...] | None] = [None] * num_vars
        self._stack: list[int | None] = []

    @property
    def rank(self) -> int:
        return sum(1 for p in self.pivots if p is not None)

    def push(self, row: list[int]) -> None:
        reduced = self._reduce(row)
        if reduced is None:
            self._stack.append(None)
            return
        lead = next(i for i, x in enumerate(reduced) if x != 0)
        self.pivots[lead] = reduced
        self._stack.append(lead)

    def pop(self) -> None:
        lead = self._stack.pop()
        if lead is not None:
            self.pivots[lead] = None

    def _reduce(self, row: list[int]) -> tuple[int, ...] | None:
        cur = list(row)
        for c in range(self.nv):
            x = cur[c]
            if x == 0:
                continue
            p = self.pivots[c]
            if p is None:
                continue
            a = p[c]
            cur = [a * u - x * v for u, v in zip(cur, p)]
        return normalize_int_row(cur)

    def rows(self) -> list[tuple[int, ...]]:
        return [p for p in self.pivots if p is not None]


def int_gauss_jordan(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Fully reduced integer echelon (each pivot column isolated), rows primitive."""
    work = [list(r) for r in sorted(rows, key=_lead_index)]
    for i in range(len(work) - 1, -1, -1):
        lead = _lead_index(work[i])
        p = work[i][lead]
        for j in range(i):
            x = work[j][lead]
            if x != 0:
                work[j] = [p * u - x * v for u, v in zip(work[j], work[i])]
                norm = normalize_int_row(work[j])
                assert norm is not None
                work[j] = list(norm)
    return [tuple(r) for r in work]


def nullspace_from_echelon(rows: list[tuple[int, ...]], num_vars: int) -> list[tuple[int, ...]]:
    """Integer nullspace basis (primitive vectors) from echelon rows."""
    if not rows:
        return [
            tuple(1 if i == j else 0 for i in range(num_vars)) for j in range(num_vars)
        ]
    rref = int_gauss_jordan(rows)
    pivot_col = {_lead_index(r): r for r in rref}
    free_cols = [c for c in range(num_vars) if c not in pivot_col]
    basis = []
    for fc in free_cols:
        lcm = 1
        for row in rref:
            p = row[_lead_index(row)]
            lcm = lcm // gcd(lcm, p) * p
        vec = [0] * num_vars
        vec[fc] = lcm
        for col, row in pivot_col.items():
            vec[col] = -row[fc] * (lcm // row[col])
        norm = normalize_int_row(vec)
        assert norm is not None
        # Keep the free coordinate positive for a deterministic orientation.
        if norm[fc] < 0:
            norm = tuple(-x for x in norm)
        basis.append(norm)
    return basis


def _lead_index(row) -> int:
    return next(i for i, x in enumerate(row) if x != 0)


def int_rref_canonical(vectors) -> tuple[tuple[int, ...], ...]:
    """Canonical reduced echelon form of an integer row span.

    Rows are primitive with positive leading coefficient and isolated pivot
    columns, sorted by pivot column; this is a unique representation of the
    row space, usable as a dictionary key.
    """
    work = [list(v) for v in vectors if any(x != 0 for x in v)]
    if not work:
        return ()
    nv = len(work[0])
    r = 0
    for c in range(nv):
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                a, x = work[r][c], work[i][c]
                work[i] = [a * u - x * v for u, v in zip(work[i], work[r])]
                norm = normalize_int_row(work[i])
                work[i] = list(norm) if norm is not None else [0] * nv
        norm = normalize_int_row(work[r])
        work[r] = list(norm)
        r += 1
        if r == len(work):
            break
    rows = [tuple(w) for w in work[:r] if any(x != 0 for x in w)]
    return tuple(sorted(rows, key=_lead_index))


def in_row_span(vec, canonical_rows) -> bool:
    """Exact membership of an integer vector in a canonical row space."""
    cur = list(vec)
    for row in canonical_rows:
        lead = _lead_index(row)
        if cur[lead] != 0:
            a, x = row[lead], cur[lead]
            cur = [a * u - x * v for u, v in zip(cur, row)]
    return all(x == 0 for x in cur)


def integerize(vec) -> tuple[int, ...]:
    """Scale a rational vector to integers with collective gcd 1."""
    den = 1
    for x in vec:
        f = Fraction(x)
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def _fm_eliminate(rows: list[tuple[tuple[Fraction, ...], Fraction]], var: int):
    """One Fourier-Motzkin step on constraints a.y >= b."""
    pos, neg, rest = [], [], []
    for a, b in rows:
        if a[var] > 0:
            pos.append((a, b))
        elif a[var] < 0:
            neg.append((a, b))
        else:
            rest.append((a, b))
    out = list(rest)
    for ap, bp in pos:
        for an, bn in neg:
            # ap[var] * (an-row) - an[var] * (ap-row) removes the variable
            # with a positive multiplier on each side.
            coef_p, coef_n = ap[var], -an[var]
            a_new = tuple(coef_n * x + coef_p * y for x, y in zip(ap, an))
            b_new = coef_n * bp + coef_p * bn
            out.append((a_new, b_new))
    seen = set()
    dedup = []
    for a, b in out:
        key = (a, b)
        if key not in seen:
            seen.add(key)
            dedup.append((a, b))
    return dedup


def _fm_solve(rows, num_vars) -> list[Fraction] | None:
    """Witness for {y : a.y >= b for all rows}, or None."""
    systems = [rows]
    for var in range(num_vars):
        systems.append(_fm_eliminate(systems[-1], var))
    for a, b in systems[-1]:
        if b > 0:
            return None
    sol = [Fraction(0)] * num_vars
    for var in range(num_vars - 1, -1, -1):
        lows, highs = [], []
        for a, b in systems[var]:
            if a[var] == 0:
                continue
            bound = (b - sum(a[j] * sol[j] for j in range(num_vars) if j != var)) / a[var]
            (lows if a[var] > 0 else highs).append(bound)
        lo = max(lows) if lows else None
        hi = min(highs) if highs else None
        if lo is not None and hi is not None:
            if lo > hi:
                return None
            sol[var] = (lo + hi) / 2
        elif lo is not None:
            sol[var] = lo + 1
        elif hi is not None:
            sol[var] = hi - 1
        else:
            sol[var] = Fraction(0)
    for a, b in rows:
        if sum(x * y for x, y in zip(a, sol)) < b:
            return None
    return sol


def cone_witness(constraint_rows: list[tuple[Fraction, ...]], dim: int) -> tuple[Fraction, ...] | None:
    """Nonzero y with A y >= 0 (every row), or None if the cone is {0}.

    Tries small integer combinations first, then pins each coordinate to
    +-1 in turn and runs exact Fourier-Motzkin.
    """
    rows = [tuple(r) for r in constraint_rows if any(x != 0 for x in r)]

    def ok(y):
        return any(v != 0 for v in y) and all(
            sum(a * v for a, v in zip(row, y)) >= 0 for row in rows
        )

    if not rows:
        return tuple([Fraction(1)] + [Fraction(0)] * (dim - 1))
    if dim <= 3:
        candidates = product((1, 0, -1, 2, -2), repeat=dim)
    else:
        units = [tuple(Fraction(int(i == j)) for i in range(dim)) for j in range(dim)]
        mixed = [tuple(Fraction(1) for _ in range(dim)), tuple(Fraction(2**i) for i in range(dim))]
        candidates = []
        for v in units + mixed:
            candidates.append(v)
            candidates.append(tuple(-x for x in v))
    for weights in candidates:
        y = [Fraction(w) for w in weights]
        if ok(y):
            return tuple(y)
    for var in range(dim):
        for target in (1, -1):
            fixed_rows = [
                (tuple(r[j] for j in range(dim) if j != var), -r[var] * target) for r in rows
            ]
            sol = _fm_solve(fixed_rows, dim - 1)
            if sol is not None:
                full = list(sol)
                full.insert(var, Fraction(target))
                if ok(full):
                    return tuple(full)
    return None
