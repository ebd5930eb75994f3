"""Regression checks pinned to published values and worked examples.

Each check returns True on success; the suite reports one line per check.
One check (the 3x4 family count) is expected to fail: the enumeration
provably finds ten maximal nontrivial non-direct-sum families where the
source text claims four, and the artifact reports the verified result.
"""

from __future__ import annotations

import math
from fractions import Fraction as F

import numpy as np

from . import catalysis, ghz, prob_max, protocol, qstate, schmidt, source_ent
from .bipartite_lu import (
    ExponentFamily,
    construct_qubit_solution,
    enumerate_solutions,
    esp,
    gap_cycles,
    homogeneous_solution,
    lu_equivalent,
    nonhomogeneous_solution,
    power_sum,
)

RATIO_OPTIMAL_EPS = F(math.sqrt(2) - 1).limit_denominator(10**12)


def _ghz_amplitudes():
    g = qstate.make_ghz(3, 2)
    r = 1 / math.sqrt(2)
    return abs(g.amps[0] - r) < 1e-14 and abs(g.amps[7] - r) < 1e-14 and abs(
        np.sum(np.abs(g.amps)) - 2 * r
    ) < 1e-12


def _named_states():
    w = qstate.make_w()
    chi = qstate.make_chi()
    ok = abs(w.amps[0b001] - 1 / math.sqrt(3)) < 1e-14
    ok &= abs(chi.amps[0b0110] - 0.5) < 1e-14
    ok &= abs(w.norm_sq() - 1) < 1e-12 and abs(chi.norm_sq() - 1) < 1e-12
    return ok


def _criticality():
    g = qstate.make_ghz(3, 2)
    merged = qstate.merge_copies([g, g])
    return qstate.is_critical(g) and qstate.is_critical(merged) and not qstate.is_critical(
        qstate.make_w()
    )


def _chi_limit():
    chi = qstate.make_chi()
    seq = qstate.chi_limit_sequence()
    out = qstate.apply_local(seq(8.0), chi)
    norms = qstate.null_limit_check(qstate.make_w(), qstate.scaling_null_sequence(3), [1, 2, 4, 8])
    decreasing = all(b < a for a, b in zip(norms, norms[1:]))
    return qstate.fidelity(out, qstate.make_ghz(4, 2)) > 1 - 1e-6 and decreasing


def _catalysis_tuples():
    src = schmidt.from_decimals(["0.45", "0.35", "0.12", "0.08"])
    dst = schmidt.from_decimals(["0.56", "0.21", "0.17", "0.06"])
    cat = schmidt.from_decimals(["0.63", "0.27", "0.07", "0.03"])
    return src, dst, cat


def _incomparability():
    src, dst, _ = _catalysis_tuples()
    return not schmidt.majorizes(src, dst) and not schmidt.majorizes(dst, src)


def _catalysis_holds():
    src, dst, cat = _catalysis_tuples()
    return catalysis.catalyzes(src, dst, cat)


def _catalyst_search():
    src, dst, _ = _catalysis_tuples()
    found = catalysis.find_catalyst(src, dst, 4, 100)
    return found is not None and catalysis.catalyzes(src, dst, found)


def _rado_certificate():
    src, dst, cat = _catalysis_tuples()
    merged_src = schmidt.tensor(src, cat)
    merged_dst = schmidt.tensor(dst, cat)
    cert = schmidt.rado_decompose(target=merged_src, source=merged_dst)
    return cert.verify(merged_dst, merged_src) and len(cert) <= 16 * 16 - 2 * 16 + 2


def _multiset_examples():
    a = schmidt.SchmidtTuple([1, 2, 2, 3])
    b = schmidt.SchmidtTuple([2, 3, 1, 2])
    base = F(1, 2)
    left = schmidt.tensor(
        schmidt.SchmidtTuple([1, base]),
        schmidt.SchmidtTuple([1, base**2, base**4, base**6, base**8]),
    )
    right = schmidt.tensor(
        schmidt.SchmidtTuple([1, base**5]),
        schmidt.SchmidtTuple([1, base, base**2, base**3, base**4]),
    )
    return schmidt.multiset_equal(a, b) and schmidt.multiset_equal(left, right)


def _ghz_symmetry_invariance():
    g = qstate.make_ghz(3, 2)
    x = np.array([[0, 1], [1, 0]])
    flip = qstate.apply_local(qstate.LocalOperator([x, x, x]), g)
    rng = np.random.default_rng(11)
    ok = qstate.fidelity(flip, g) > 1 - 1e-12
    for _ in range(25):
        s = ghz.random_ghz_symmetry(3, 2, rng)
        out = qstate.apply_local(ghz.symmetry_as_operator(s), g)
        ok &= qstate.fidelity(out, g) > 1 - 1e-12
    return ok


def _majorization_grid():
    grid = [F(i, 10) for i in range(5)]
    for delta in grid:
        for a1 in grid:
            for a2 in grid:
                src = ghz.GhzLikeState(3, 4, schmidt.SchmidtTuple(ghz.two_copy_diag(delta)))
                dst = ghz.GhzLikeState(3, 4, schmidt.SchmidtTuple(ghz.two_copy_diag(a1, a2)))
                if ghz.decide_ghz_transform(src, dst) != ghz.two_copy_condition(delta, a1, a2):
                    return False
    return True


def _reach_ghz_boundary():
    a2 = F(3, 10)
    boundary_sq = a2 / 2 + F(1, 4)
    inside = F(13, 100)
    outside = F(14, 100)
    ok = (inside + F(1, 2)) ** 2 <= boundary_sq < (outside + F(1, 2)) ** 2
    ok &= ghz.two_copy_condition(inside, 0, a2) and not ghz.two_copy_condition(outside, 0, a2)
    return ok


def _trivial_subgroup_grid():
    grid = [F(i, 10) for i in range(5)]
    for delta in grid:
        for a1 in grid:
            for a2 in grid:
                feasible = ghz.subgroup_feasible(
                    ghz.two_copy_diag(delta),
                    ghz.two_copy_diag(a1, a2),
                    ghz.TRIVIAL_SUBGROUP_PERMS,
                )
                if feasible != (delta * delta <= a1 * a2):
                    return False
    bound = ghz.trivial_subgroup_bound(F(0), F(3, 10))
    return bound.exact == 0


def _two_round_protocol():
    a1, a2 = F(1, 16), F(1, 4)
    prot = ghz.two_round_protocol(a1, a2)
    if not protocol.validate(prot).clean:
        return False
    leaves = protocol.simulate(prot, ghz.two_round_input_state(a1, a2))
    return all(leaf.target_fidelity(prot.target) > 1 - 1e-10 for leaf in leaves)


def _appendix_c_factorization():
    rng = np.random.default_rng(23)
    for _ in range(100):
        g1 = prob_max.HermitianDiag([F(int(rng.integers(1, 9)), int(rng.integers(1, 9))) for _ in range(2)])
        g2 = prob_max.HermitianDiag([F(int(rng.integers(1, 9)), int(rng.integers(1, 9))) for _ in range(2)])
        n1, n2 = F(int(rng.integers(1, 5))), F(int(rng.integers(1, 5)))
        lhs = prob_max.pmax_to_seed(g1.kron(g2), n1 * n2)
        rhs = prob_max.pmax_to_seed(g1, n1) * prob_max.pmax_to_seed(g2, n2)
        if lhs != rhs:
            return False
    return True


def _joint_probability_values():
    eps = RATIO_OPTIMAL_EPS
    h1, h2 = prob_max.eq_mats_pair(eps)
    n_sq = prob_max.five_qubit_norm_sq(eps)
    joint = float(prob_max.pmax_joint_two_state(h1, h2, n_sq, n_sq))
    single = float(n_sq)
    return (
        abs(joint - 0.854) < 5e-4
        and abs(single - 0.707) < 5e-4
        and abs(single * single - 0.500) < 5e-4
    )


def _stabilizer_route():
    eps = RATIO_OPTIMAL_EPS
    h1, h2 = prob_max.eq_mats_pair(eps)
    n_sq = prob_max.five_qubit_norm_sq(eps)
    swap_local = np.zeros((4, 4))
    for q1 in range(2):
        for q2 in range(2):
            swap_local[2 * q2 + q1, 2 * q1 + q2] = 1.0
    stab = [
        qstate.LocalOperator([np.eye(4)] * 5),
        qstate.LocalOperator([swap_local] * 5),
    ]
    via_stab = prob_max.pmax_sep_unitary_stabilizer(
        prob_max.HermitianDiag([1, 1, 1, 1]), h1.kron(h2), stab, r=n_sq * n_sq
    )
    return via_stab == prob_max.pmax_joint_two_state(h1, h2, n_sq, n_sq)


def _five_qubit_norm():
    psi = qstate.make_five_qubit()
    for eps in (0.1, 0.414, 0.9):
        h = np.diag([1, math.sqrt(eps)])
        out = qstate.apply_local(qstate.LocalOperator.on_party(4, h, psi.dims), psi)
        if abs(out.norm_sq() - (1 + eps) / 2) > 1e-12:
            return False
    return True


def _three_branch_protocol():
    psi = qstate.make_five_qubit()
    merged = qstate.merge_copies([psi, psi])
    eps = RATIO_OPTIMAL_EPS
    h1, h2 = prob_max.eq_mats_pair(eps)
    prot = prob_max.build_three_branch_protocol(h1, h2, eps)
    leaves = protocol.simulate(prot, merged)
    success = protocol.success_probability(leaves, prot.target)
    n_sq = prob_max.five_qubit_norm_sq(eps)
    closed = float(prob_max.pmax_joint_two_state(h1, h2, n_sq, n_sq))
    ok = abs(success - closed) < 1e-10 and abs(success - 0.854) < 5e-4
    det = prob_max.build_three_branch_protocol(*prob_max.eq_mats_pair(1), 1)
    det_leaves = protocol.simulate(det, merged)
    ok &= len(det_leaves) == 2
    ok &= abs(protocol.success_probability(det_leaves, det.target) - 1) < 1e-10
    return ok


def _subswap_observation():
    g = qstate.make_ghz(3, 2)
    w = qstate.make_w()
    report = protocol.verify_subswap([g, g], [w, w], [(1, 0)])
    ok = report["swapped_ok"]
    ok &= report["critical_before"][0] is True and report["critical_after"][0] is False
    chi = qstate.make_chi()
    g4 = qstate.make_ghz(4, 2)
    report2 = protocol.verify_subswap([g4, g4], [chi, chi], [(1, 0)])
    return ok and report2["swapped_ok"]


def _esp_conventions():
    ok = esp((1, 2, 3), 0) == 1 and esp((1, 1, 1), 4) == 0 and esp((1, 2, 3), 2) == 11
    rng = np.random.default_rng(7)
    for _ in range(50):
        x = [F(int(rng.integers(1, 9)), int(rng.integers(1, 9))) for _ in range(3)]
        y = [F(int(rng.integers(1, 9)), int(rng.integers(1, 9))) for _ in range(2)]
        prod = [a * b for a in x for b in y]
        for k in (1, 2, 3):
            if power_sum(prod, k) != power_sum(x, k) * power_sum(y, k):
                return False
    return ok


def _lu_2x3_instance():
    a = F(1, 3)
    return lu_equivalent(
        (1, a), (1, a**2, a**4), (1, a**3), (1, a, a**2)
    )


def _enumeration_small():
    s22 = enumerate_solutions(2, 2)
    s33 = enumerate_solutions(3, 3)
    s24 = enumerate_solutions(2, 4)
    s23 = enumerate_solutions(2, 3)
    ok = not any(s.classification == "nontrivial" for s in s22 + s33)
    ok &= all(s.classification in ("identity", "sub_swap") for s in s24)
    ok &= any(s.classification == "sub_swap" for s in s24)
    nontrivial23 = [s for s in s23 if s.classification == "nontrivial"]
    ok &= len(nontrivial23) == 1
    ok &= nontrivial23[0].a_bar_ratio == 3
    return ok


def _enumeration_2x5():
    sols = enumerate_solutions(2, 5)
    keys = {
        s.family.direction_canonical_key() for s in sols if s.family is not None
    }
    k_a = construct_qubit_solution(5, 5, 1)
    k_b = ExponentFamily((0, 1), (0, 4, 6, 8, 12), (0, 5), (0, 1, 4, 7, 8))
    nontrivial = {
        s.family.direction_canonical_key()
        for s in sols
        if s.classification == "nontrivial" and s.family is not None
    }
    return (
        k_a.direction_canonical_key() in nontrivial
        and k_b.direction_canonical_key() in nontrivial
    )


_VC_LIST = (
    ExponentFamily((0, 1, 2), (0, 3, 6, 9), (0, 4, 8), (0, 1, 2, 3)),
    ExponentFamily((0, 2, 4), (0, 3, 5, 6), (0, 4, 5), (0, 2, 3, 5)),
    ExponentFamily((0, 1, 5), (0, 3, 5, 6), (0, 4, 5), (0, 1, 3, 6)),
    ExponentFamily((0, 1, 5), (0, 2, 3, 5), (0, 2, 4), (0, 1, 3, 6)),
)


def _enumeration_3x4_membership():
    sols = enumerate_solutions(3, 4)
    found = {
        s.family.direction_canonical_key()
        for s in sols
        if s.classification == "nontrivial" and s.family is not None
    }
    return all(f.direction_canonical_key() in found for f in _VC_LIST)


def _enumeration_3x4_count():
    # The source text claims exactly four; the enumeration provably finds ten
    # maximal nontrivial non-direct-sum families (each validated exactly), so
    # this pinned check records the discrepancy.
    sols = enumerate_solutions(3, 4)
    count = sum(1 for s in sols if s.classification == "nontrivial")
    return count == 4


def _constructions():
    f551 = construct_qubit_solution(5, 5, 1)
    ok = f551.lam_exps == (0, 2, 4, 6, 8) and f551.lam_bar_exps == (0, 1, 2, 3, 4)
    f773 = construct_qubit_solution(7, 7, 3)
    ok &= f773.lam_bar_exps == (0, 1, F(4, 3), 2, F(8, 3), 3, 4)
    ok &= f773.mu_bar_exps == (0, F(7, 3))
    f331 = construct_qubit_solution(3, 3, 1)
    ok &= f331.lam_exps == (0, 2, 4) and f331.lam_bar_exps == (0, 1, 2)
    ok &= (
        nonhomogeneous_solution(2, 5).direction_canonical_key()
        == f551.direction_canonical_key()
    )
    h5 = homogeneous_solution(5)
    ok &= h5.mu_exps == (0, 1, F(4, 3), 2, F(8, 3))
    h4 = homogeneous_solution(4)
    ok &= h4.is_valid()
    h7 = homogeneous_solution(7)
    mu, lam, mub, lamb = h7.realize(F(1, 2), F(1, 3), F(1, 4), F(1, 5), F(1, 6))
    ok &= lu_equivalent(mu, lam, mub, lamb)
    return ok


def _gap_cycle_figures():
    k_a = gap_cycles(construct_qubit_solution(5, 5, 1))
    ok = len(k_a) == 1 and k_a[0].edges == ("g_plus",) * 4 + ("g_minus",)
    k_b = gap_cycles(ExponentFamily((0, 1), (0, 4, 6, 8, 12), (0, 5), (0, 1, 4, 7, 8)))
    ok &= len(k_b) == 1 and sorted(k_b[0].edges) == sorted(
        ("g_plus", "g_plus_plus", "g_plus", "g_minus", "g_minus")
    )
    c773 = gap_cycles(construct_qubit_solution(7, 7, 3))
    ok &= len(c773) == 1 and c773[0].edges.count("g_plus") == 4
    ok &= c773[0].edges.count("g_minus") == 3
    return ok


def _source_entanglement_values():
    res = source_ent.nonadditivity_experiment(F(3, 10), F(1, 100), F(1, 100), F(3, 10), F(8, 10))
    ok = abs(float(res.gap) - 0.56) < 0.01
    ok &= abs(float(res.e_mu) - 0.005) < 0.01
    ok &= abs(float(res.e_lam) - 0.11) < 0.01
    ok &= abs(float(res.e_lam_bar) - 0.68) < 0.01
    ok &= source_ent.source_entanglement(schmidt.SchmidtTuple([F(1, 2), F(1, 2)])) == 1
    ok &= source_ent.source_entanglement(schmidt.SchmidtTuple([1, 0])) == 0
    return ok


CHECKS = (
    ("ghz_state_amplitudes", _ghz_amplitudes),
    ("named_states_w_chi", _named_states),
    ("criticality_ghz_and_merged", _criticality),
    ("orbit_type_limits", _chi_limit),
    ("catalysis_pair_incomparable", _incomparability),
    ("catalysis_majorization_holds", _catalysis_holds),
    ("catalyst_grid_search", _catalyst_search),
    ("rado_certificate_merged", _rado_certificate),
    ("multiset_reordering_examples", _multiset_examples),
    ("ghz_symmetry_invariance", _ghz_symmetry_invariance),
    ("two_copy_majorization_grid", _majorization_grid),
    ("reach_ghz_boundary", _reach_ghz_boundary),
    ("trivial_subgroup_bound_grid", _trivial_subgroup_grid),
    ("two_round_protocol_deterministic", _two_round_protocol),
    ("seed_probability_factorizes", _appendix_c_factorization),
    ("joint_probability_values", _joint_probability_values),
    ("stabilizer_route_matches_joint", _stabilizer_route),
    ("five_qubit_norm", _five_qubit_norm),
    ("three_branch_protocol", _three_branch_protocol),
    ("subswap_changes_orbit_type", _subswap_observation),
    ("esp_conventions_and_power_sums", _esp_conventions),
    ("lu_equivalence_2x3", _lu_2x3_instance),
    ("enumeration_small_systems", _enumeration_small),
    ("enumeration_2x5_families", _enumeration_2x5),
    ("enumeration_3x4_vc_membership", _enumeration_3x4_membership),
    ("enumeration_3x4_count_matches_source", _enumeration_3x4_count),
    ("qubit_target_constructions", _constructions),
    ("gap_cycle_figures", _gap_cycle_figures),
    ("source_entanglement_values", _source_entanglement_values),
)

# Checks that pin a verified disagreement with the source text; they are
# expected to fail and are reported as such.
KNOWN_DISCREPANCIES = frozenset({"enumeration_3x4_count_matches_source"})


def run_suite() -> dict:
    results = []
    for name, fn in CHECKS:
        try:
            ok = bool(fn())
        except Exception as exc:  # a crashed check is a failed check
            results.append({"name": name, "ok": False, "error": repr(exc)})
            continue
        results.append({"name": name, "ok": ok})
    failed = [r["name"] for r in results if not r["ok"]]
    return {
        "checks": results,
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "failed_names": failed,
        "known_discrepancies": sorted(KNOWN_DISCREPANCIES),
    }
