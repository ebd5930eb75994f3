"""Closed-form constructions of two-state LU transformation families.

Covers the constructive qubit-target solutions (odd auxiliary dimension,
with the direct-sum embedding for non-maximal d1), the geometric-progression
solution available whenever the two dimensions differ, and the homogeneous
constructions: factor sub-swap for composite d, the explicit d = 5 family,
and the block-mixing construction for odd d >= 7 with free parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidArgumentError
from ..schmidt import SchmidtTuple
from .families import ExponentFamily


def construct_qubit_solution(d: int, d1: int, d2: int) -> ExponentFamily:
    """Family turning the qubit ratio a into a^(d1/d2) with a d-dim auxiliary.

    Requires odd d >= d1 > d2 >= 1 with d1, d2 odd. For d1 = d the family is
    built from the gap parameter b = a^(d/d2 - 1); for d1 < d the (d1, d1, d2)
    solution is embedded as a block, padded with (d - d1)/2 copies of the
    final two-qubit tuple (block offsets fixed at exponent 0).
    """
    if d % 2 == 0 or d1 % 2 == 0 or d2 % 2 == 0:
        raise InvalidArgumentError("d, d1, d2 must all be odd")
    if not d >= d1 > d2 >= 1:
        raise InvalidArgumentError("need d >= d1 > d2 >= 1")
    if d1 < d:
        inner = construct_qubit_solution(d1, d1, d2)
        k = (d - d1) // 2
        lam = sorted(list(inner.lam_exps) + k * list(inner.mu_bar_exps))
        lam_bar = sorted(list(inner.lam_bar_exps) + k * list(inner.mu_exps))
        fam = ExponentFamily(inner.mu_exps, lam, inner.mu_bar_exps, lam_bar)
        assert fam.is_valid()
        return fam
    # d1 = d. Exponent of b relative to a: beta = d/d2 - 1.
    beta = Fraction(d, d2) - 1
    lam = (
        [Fraction(i) for i in range(0, d - d2 - 1, 2)]
        + [Fraction(i) + beta for i in range(2, d - d2 - 1, 2)]
        + [i * beta for i in range(1, d2 + 2)]
    )
    lam_bar = [Fraction(i) for i in range(0, d - d2)] + [i * beta for i in range(1, d2 + 1)]
    fam = ExponentFamily(
        (Fraction(0), Fraction(1)),
        sorted(lam),
        (Fraction(0), Fraction(d, d2)),
        sorted(lam_bar),
    )
    assert fam.is_valid()
    return fam


def nonhomogeneous_solution(d_mu: int, d_lam: int) -> ExponentFamily:
    """Geometric-progression family for any d_mu < d_lam."""
    if not 2 <= d_mu < d_lam:
        raise InvalidArgumentError("need 2 <= d_mu < d_lam")
    fam = ExponentFamily(
        [i * d_lam for i in range(d_mu)],
        list(range(d_lam)),
        list(range(d_mu)),
        [i * d_mu for i in range(d_lam)],
    )
    assert fam.is_valid()
    return fam


@dataclass(frozen=True)
class BlockMixConstruction:
    """Block-mixing construction for homogeneous odd d >= 7.

    Splits each d-dimensional tuple as a weighted direct sum of a 2 x (d-3)/2
    tensor block and a 3-dimensional block, and runs the 2x3 exchange
    (1,a)(1,a^2,a^4) <-> (1,a^3)(1,a,a^2) through the blocks. Free parameters
    a, b, c, b_prime, c_prime in (0, 1) stay symbolic until realized.
    """

    d: int

    def __post_init__(self):
        if self.d < 7 or self.d % 2 == 0:
            raise InvalidArgumentError("block-mixing construction needs odd d >= 7")

    def realize(self, a, b, c, b_prime, c_prime):
        """Four normalized d-dimensional tuples (mu, lam, mu_bar, lam_bar)."""
        a, b, c, bp, cp = (Fraction(x) for x in (a, b, c, b_prime, c_prime))
        for name, v in (("a", a), ("b", b), ("c", c), ("b_prime", bp), ("c_prime", cp)):
            if not 0 < v < 1:
                raise InvalidArgumentError(f"{name} must lie in (0, 1)")
        m = (self.d - 3) // 2

        def normalized(vals):
            total = sum(vals)
            return [v / total for v in vals]

        def geometric(base, size):
            return normalized([base**i for i in range(size)])

        q_a = geometric(a, 2)
        q_a3 = geometric(a**3, 2)
        t_a = geometric(a, 3)
        t_a2 = geometric(a**2, 3)
        w_b = geometric(b, m)
        w_bp = geometric(bp, m)

        def mix(weight, pair, rest):
            block = [weight * x * y for x in pair[0] for y in pair[1]]
            tail = [(1 - weight) * x for x in rest]
            return SchmidtTuple(block + tail)

        mu = mix(c, (q_a, w_b), t_a)
        lam = mix(cp, (q_a3, w_bp), t_a2)
        mu_bar = mix(c, (q_a3, w_b), t_a2)
        lam_bar = mix(cp, (q_a, w_bp), t_a)
        return mu, lam, mu_bar, lam_bar


def homogeneous_solution(d: int) -> ExponentFamily | BlockMixConstruction:
    """A non-trivial transformation for every homogeneous system d >= 4.

    Composite d: a factor sub-swap family with distinct exponent scales.
    d = 5: the explicit one-parameter family with third-integer exponents.
    Odd d >= 7: the block-mixing construction (returned as a parameterized
    object; no single exponent family covers its mixing weights).
    """
    if d < 4:
        raise InvalidArgumentError("homogeneous systems with d < 4 admit only trivial moves")
    if d % 2 == 0 or any(d % p == 0 for p in range(3, d) if p * p <= d):
        # Composite: exchange the first factors of mu = A x B and lam = C x D.
        p = next(p for p in range(2, d + 1) if d % p == 0)
        q = d // p
        a_f = [i for i in range(p)]              # A = (0, 1, ..., p-1)
        b_f = [i * p for i in range(q)]          # B, scale p
        c_f = [i * p * q for i in range(p)]      # C, scale pq
        d_f = [i * p * q * p for i in range(q)]  # D, scale p^2 q
        fam = ExponentFamily(
            sorted(x + y for x in a_f for y in b_f),
            sorted(x + y for x in c_f for y in d_f),
            sorted(x + y for x in c_f for y in b_f),
            sorted(x + y for x in a_f for y in d_f),
        )
        assert fam.is_valid()
        return fam
    if d == 5:
        third = Fraction(1, 3)
        fam = ExponentFamily(
            [0, 1, 4 * third, 2, 8 * third],
            [0, third, 2 * third, 1, 4 * third],
            [0, third, 4 * third, 5 * third, 2],
            [0, 2 * third, 1, 4 * third, 2],
        )
        assert fam.is_valid()
        return fam
    return BlockMixConstruction(d)
