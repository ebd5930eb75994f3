"""Elementary symmetric polynomials, power sums and Newton's identities.

Equal ESP vectors characterize equality of multisets, which is the working
criterion for bipartite two-state LU transformations; the tuple-of-tuples
conditions detect when a transformation is merely the identity or a swap
of the two states.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import InvalidArgumentError
from ..schmidt import SchmidtTuple


def _coeffs(x) -> tuple[Fraction, ...]:
    if isinstance(x, SchmidtTuple):
        return x.coeffs
    return tuple(Fraction(v) for v in x)


def esp(x: Sequence, k: int) -> Fraction:
    """Elementary symmetric polynomial e_k; e_0 = 1 and e_k = 0 for k > len."""
    if k < 0:
        raise InvalidArgumentError("esp degree must be non-negative")
    vals = _coeffs(x)
    n = len(vals)
    if k == 0:
        return Fraction(1)
    if k > n:
        return Fraction(0)
    # Rolling expansion of prod(1 + x_i t) up to degree k.
    coeffs = [Fraction(1)] + [Fraction(0)] * k
    for v in vals:
        for j in range(k, 0, -1):
            coeffs[j] += v * coeffs[j - 1]
    return coeffs[k]


def all_esps(x: Sequence) -> tuple[Fraction, ...]:
    """(e_1, ..., e_n) in one pass."""
    vals = _coeffs(x)
    n = len(vals)
    coeffs = [Fraction(1)] + [Fraction(0)] * n
    for v in vals:
        for j in range(n, 0, -1):
            coeffs[j] += v * coeffs[j - 1]
    return tuple(coeffs[1:])


def power_sum(x: Sequence, k: int) -> Fraction:
    """psi_k = sum x_i^k."""
    if k < 0:
        raise InvalidArgumentError("power sum degree must be non-negative")
    vals = _coeffs(x)
    return sum((v**k for v in vals), Fraction(0))


def esps_from_power_sums(psums: Sequence) -> tuple[Fraction, ...]:
    """Invert Newton's identities: k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} psi_i."""
    ps = [Fraction(p) for p in psums]
    n = len(ps)
    e = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * ps[i - 1]
            acc += term if i % 2 == 1 else -term
        e[k] = acc / k
    return tuple(e[1:])


def _tensor_coeffs(a, b) -> tuple[Fraction, ...]:
    av, bv = _coeffs(a), _coeffs(b)
    return tuple(sorted((x * y for x in av for y in bv), reverse=True))


def lu_equivalent(mu, lam, mu_bar, lam_bar) -> bool:
    """True iff the tensored tuples are equal up to reordering.

    Decided along two independent routes (sorted multisets and full ESP
    vectors) which are cross-checked against each other.
    """
    left = _tensor_coeffs(mu, lam)
    right = _tensor_coeffs(mu_bar, lam_bar)
    if len(left) != len(right):
        raise InvalidArgumentError("tensored dimensions differ")
    by_multiset = left == right
    by_esp = all_esps(left) == all_esps(right)
    if by_multiset != by_esp:
        raise AssertionError("ESP route disagrees with the multiset route")
    return by_multiset


def tuple_pair_trivial(mu, lam, mu_bar, lam_bar) -> bool:
    """True iff the pair (mu, lam) equals (mu_bar, lam_bar) up to exchange.

    Conditions: e_i(s) + e_i(t) and the convolution sum_{i+j=k} e_i(s) e_j(t)
    agree with their barred counterparts for all degrees. Equivalent to the
    transformation being the identity or a SWAP.
    """
    s, t = _coeffs(mu), _coeffs(lam)
    sb, tb = _coeffs(mu_bar), _coeffs(lam_bar)
    d = max(len(s), len(t), len(sb), len(tb))

    def e_vec(v):
        es = all_esps(v)
        return [Fraction(1)] + list(es) + [Fraction(0)] * (d - len(es))

    es, et = e_vec(s), e_vec(t)
    esb, etb = e_vec(sb), e_vec(tb)
    for i in range(1, d + 1):
        if es[i] + et[i] != esb[i] + etb[i]:
            return False
    for k in range(1, 2 * d + 1):
        lhs = sum(es[i] * et[k - i] for i in range(max(0, k - d), min(k, d) + 1))
        rhs = sum(esb[i] * etb[k - i] for i in range(max(0, k - d), min(k, d) + 1))
        if lhs != rhs:
            return False
    return True
