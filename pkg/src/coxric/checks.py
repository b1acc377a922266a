"""Composite invariant suite behind the ``check`` command.

Runs every verifiable property of one group in a fixed order with a
seeded generator, so the same invocation always produces the same
report.  Each entry carries a verdict: PASS, FAIL, or SKIP (a size
guard declined the computation, never a failure).
"""

from __future__ import annotations

import numpy as np

from . import curvature, dihedral, isoperimetry, spectral
from .groups import Group

RIC_TOL = 1e-8
ORACLE_TOL = 1e-10
SLACK_TOL = 1e-9
SPOT_VERTICES = 20


def _uniform(rng: isoperimetry.Xorshift64Star, n: int) -> np.ndarray:
    """n deterministic floats in [-1, 1)."""
    return np.array([rng.next_word() / 2.0 ** 63 - 1.0 for _ in range(n)])


def run_check(grp: Group, label: str, seed: int = 0,
              iso_samples: int = 1000, num_functions: int = 25) -> dict:
    rng = isoperimetry.Xorshift64Star(seed)
    graph = grp.bruhat_graph()
    results: list[dict] = []

    def record(name: str, verdict: str, **details):
        results.append({"name": name, "verdict": verdict, **details})

    def judge(name: str, passed: bool, **details):
        record(name, "PASS" if passed else "FAIL", **details)

    num_t = len(grp.reflections)
    judge("reflection_count", num_t == grp.rs.num_positive,
          reflections=num_t, positive_roots=grp.rs.num_positive)

    involutions = all(grp.mult(t, t) == grp.identity for t in grp.reflections)
    judge("reflection_involutions", involutions)
    judge("reflection_lengths_odd",
          all(grp.length(t) % 2 == 1 for t in grp.reflections))

    degrees = set(graph.degrees())
    parity_ok = all((grp.length(u) - grp.length(v)) % 2 == 1
                    for u, v in graph.edges)
    judge("bruhat_regular", degrees == {num_t}, degrees=sorted(degrees))
    judge("bruhat_triangle_free", graph.is_triangle_free())
    judge("bruhat_bipartite_by_length", parity_ok)
    judge("bruhat_connected", graph.is_connected())

    ric_e = curvature.local_ricci(graph, grp.identity).ric
    judge("ricci_identity", abs(ric_e - 2.0) <= RIC_TOL, ric=ric_e)

    spots = sorted({rng.below(grp.order) for _ in range(SPOT_VERTICES)})
    spot_rics = [curvature.local_ricci(graph, x).ric for x in spots]
    judge("ricci_spot_vertices",
          all(abs(r - 2.0) <= RIC_TOL for r in spot_rics),
          vertices=spots, max_deviation=max(abs(r - 2.0) for r in spot_rics))

    judge("ricci_upper_bound_triangle_free", ric_e <= 2.0 + RIC_TOL, ric=ric_e)

    worst = 0.0
    for _ in range(num_functions):
        f = _uniform(rng, graph.n)
        x = rng.below(graph.n)
        f[x] = 0.0
        a = curvature.gamma2_formula(graph, f, x)
        b = curvature.gamma2_def(graph, f, x)
        worst = max(worst, abs(a - b) / max(1.0, abs(b)))
    judge("gamma2_formula_vs_def", worst <= ORACLE_TOL, max_relative=worst)

    f = _uniform(rng, graph.n)
    shift = curvature.gamma2_def(graph, f + 0.7351, 0)
    base = curvature.gamma2_def(graph, f, 0)
    judge("gamma2_shift_invariance",
          abs(shift - base) <= ORACLE_TOL * max(1.0, abs(base)))

    worst_sphere = 0.0
    worst_pair = 0.0
    for _ in range(num_functions):
        f = _uniform(rng, graph.n)
        f[grp.identity] = 0.0
        slacks = curvature.proof_inequalities(graph, f, grp.identity)
        worst_sphere = min(worst_sphere, slacks["per_sphere"])
        worst_pair = min(worst_pair, slacks["pair"])
    judge("proof_inequalities",
          worst_sphere >= -SLACK_TOL and worst_pair >= -SLACK_TOL,
          per_sphere_min=worst_sphere, pair_min=worst_pair)

    measured_gap = None
    if graph.n <= spectral.SIZE_GUARD:
        sp = spectral.spectral_gap(graph)
        measured_gap = sp.gap
        comparison = spectral.check_gap_vs_ricci(sp, ric_e)
        judge("spectral_gap_at_least_2", sp.gap >= 2.0 - RIC_TOL, gap=sp.gap)
        judge("spectral_zero_multiplicity", sp.zero_multiplicity == 1)
        judge("spectral_gap_vs_ricci", comparison["passed"],
              gap=comparison["gap"], ric=comparison["ric"],
              vacuous=comparison["vacuous"])
    else:
        record("spectral_gap_at_least_2", "SKIP",
               reason=f"{graph.n} vertices exceeds {spectral.SIZE_GUARD}")

    mode = "exhaustive" if graph.n <= 12 else "sampled"
    iso = isoperimetry.verify_isoperimetry(
        graph, mode=mode, seed=seed, samples=iso_samples,
        lam=measured_gap, ric=ric_e)
    summary = isoperimetry.summarize(iso)
    del summary["passed"]
    judge("isoperimetry", iso.failures == 0, **summary)

    structure = dihedral.verify_structure(grp)
    judge("sphere2_structure", structure["passed"],
          num_classes=structure["num_classes"],
          sphere2_size=structure["sphere2_size"])

    lemma = dihedral.verify_lemma_dyer(grp, seed=seed)
    judge("reflection_quadruples_dihedral", lemma["passed"],
          checked=lemma["checked"], exhaustive=lemma["exhaustive"])

    translations = [rng.below(grp.order) for _ in range(3)]
    edge_set = set(graph.edges)
    ok = True
    for g in translations:
        for u, v in graph.edges:
            a, b = grp.mult(u, g), grp.mult(v, g)
            if (min(a, b), max(a, b)) not in edge_set:
                ok = False
                break
    judge("translation_invariance", ok, translations=translations)

    return {
        "spec": label,
        "order": grp.order,
        "rank": grp.rank,
        "num_reflections": num_t,
        "seed": seed,
        "checks": results,
        "passed": all(c["verdict"] != "FAIL" for c in results),
    }
