"""Gap-cycle decomposition of qubit-target families with d1 = d.

Each auxiliary index of lam_bar appears exactly once as a numerator and once
as a denominator in the chain relations, so the relations close into cycles
whose edges carry one of three gaps: g_plus_plus = a^(d/d2 + 1), g_plus = a
and g_minus = a^(1 - d/d2). Exponent sums around every cycle vanish.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidArgumentError
from .families import ExponentFamily, GapCycle


def gap_cycles(family: ExponentFamily) -> list[GapCycle]:
    """Decompose the lam_bar relations of a d_mu = 2, d1 = d family.

    The matching between input and output product cells must be unambiguous
    by value (true for tie-free families such as the d1 = d constructions).
    """
    fam = family.mu_normalized()
    if fam.d_mu != 2:
        raise InvalidArgumentError("gap cycles are defined for qubit-target families")
    ratio = fam.a_bar_ratio()
    if ratio is None or ratio <= 1:
        raise InvalidArgumentError("family does not decrease the target entanglement")
    d = fam.d_lam
    mu, lam = fam.mu_exps, fam.lam_exps
    mub, lamb = fam.mu_bar_exps, fam.lam_bar_exps

    out_cells: dict[Fraction, tuple[int, int]] = {}
    for k in range(2):
        for l in range(d):
            v = mub[k] + lamb[l]
            if v in out_cells:
                raise InvalidArgumentError("ambiguous value matching; ties present")
            out_cells[v] = (k, l)

    # For each lam index i, the cells (mu_0, lam_i) and (mu_1, lam_i) land on
    # output cells (r, x_i) and (s, y_i); their ratio gives one chain relation
    # a = (lam_bar_{x} / lam_bar_{y}) * a_bar^(s - r) in coefficient form.
    edges: dict[int, tuple[int, str]] = {}
    labels = {-1: "g_plus_plus", 0: "g_plus", 1: "g_minus"}
    for i in range(d):
        v0 = mu[0] + lam[i]
        v1 = mu[1] + lam[i]
        if v0 not in out_cells or v1 not in out_cells:
            raise InvalidArgumentError("family is not position-matched by value")
        r, x = out_cells[v0]
        s, y = out_cells[v1]
        k_i = s - r
        if k_i not in labels:
            raise InvalidArgumentError("chain relation outside the three-gap form")
        # The relation fixes lam_bar exponent of y against x by 1 - k * ratio;
        # store it as an edge leaving x.
        if x in edges:
            raise InvalidArgumentError("an index appears twice as a cycle source")
        edges[x] = (y, labels[k_i])

    gap_exponent = {
        "g_plus_plus": ratio + 1,
        "g_plus": Fraction(1),
        "g_minus": 1 - ratio,
    }
    cycles = []
    seen: set[int] = set()
    for start in range(d):
        if start in seen:
            continue
        nodes = []
        edge_labels = []
        total = Fraction(0)
        node = start
        while node not in seen:
            seen.add(node)
            nodes.append(node)
            nxt, label = edges[node]
            edge_labels.append(label)
            total += gap_exponent[label]
            node = nxt
        if node != start:
            raise InvalidArgumentError("relations do not close into disjoint cycles")
        if total != 0:
            raise AssertionError("cycle gap exponents do not sum to zero")
        cycles.append(GapCycle(tuple(nodes), tuple(edge_labels)))
    return cycles
