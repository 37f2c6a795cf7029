"""Acceptance criteria 1-10, one test each.

Every test records a single ``PASS``/``FAIL`` line (criterion, measured
values, wall time against its limit). The lines are printed together at the
end of the pytest run, or directly when this file is run as a script:

    python3 tests/test_acceptance.py
"""
from __future__ import annotations

import time

import pytest

from cga.comgraph.graph import CommutingGraph
from cga.comgraph.components import analyze_vertex_set
from cga.comgraph.solvers import clique_cover_number, complement, independence_number, max_clique
from cga.groups import GroupSpec, class_labels, class_representative, centralizer_gens, close
from cga.verify import PASS, run_task

RESULTS: list = []  # (criterion number, ok, line)


def record(num: int, title: str, ok: bool, detail: str, elapsed: float, limit: float) -> None:
    within = elapsed <= limit
    verdict = "PASS" if ok and within else "FAIL"
    timing = f"{elapsed:.1f}s / limit {limit:g}s" + ("" if within else " EXCEEDED")
    RESULTS.append((num, ok and within, f"[{verdict}] criterion {num:>2}: {title} -- {detail} ({timing})"))
    assert ok, detail
    assert within, f"took {elapsed:.1f}s, limit {limit:g}s"


def _sub(reports, name):
    return next(r for r in reports if r.claim_id.endswith("." + name))


def test_criterion_01_slice_count():
    reports = run_task("prop-alt-even", {"n": 16}, pattern="prop-alt-even.count-1120")
    r = reports[0]
    ok = r.result == PASS and r.evidence["materialized"] == 1120 and r.evidence["formula"] == 1120
    record(1, "|Cl_gamma| = 1120 at n = 16", ok, f"materialized {r.evidence['materialized']}",
           r.wall_time, 1)


def test_criterion_02_max_commuting_subset():
    r = run_task("prop-alt-even", {"n": 16}, pattern="prop-alt-even.max-commuting-4")[0]
    ok = r.result == PASS and r.evidence["max_commuting"] == 4 and not r.evidence["problems"]
    record(2, "largest commuting subset of Cl_gamma at n = 16 is 4", ok,
           f"exact maximum clique {r.evidence['max_commuting']}", r.wall_time, 60)


def test_criterion_03_structural_cover():
    reports = run_task("prop-alt-even", {"n": 16})
    cover, meets = _sub(reports, "cover-280"), _sub(reports, "cover-meets-4")
    ok = (cover.result == PASS and meets.result == PASS and cover.evidence["members"] == 280
          and meets.evidence["intersection_sizes"] == [4])
    record(3, "structural cover has 280 members, each meeting the slice in 4", ok,
           f"{cover.evidence['members']} members, intersections {meets.evidence['intersection_sizes']}",
           cover.wall_time + meets.wall_time, 10)


@pytest.mark.parametrize("claim,n", [("prop-alt-even", 12), ("prop-alt-even", 16), ("prop-alt-odd", 21)])
def test_criterion_04_reps_search_reduced(claim, n):
    r = run_task(claim, {"n": n}, pattern=f"{claim}.reps-infeasible")[0]
    ok = r.result == PASS and r.evidence["feasible"] is False and r.evidence["first_eight_chain"]
    record(4, f"nine-group search infeasible ({claim.split('-')[-1]}, n = {n}, reduced)", ok,
           f"{r.evidence['dead_ends']} dead ends, {r.evidence['nodes']} nodes", r.wall_time, 30)


def test_criterion_04_reps_search_full_n12():
    r = run_task("prop-alt-even", {"n": 12}, pattern="prop-alt-even.reps-infeasible",
                 symmetry_reduction=False)[0]
    ok = r.result == PASS and r.evidence["feasible"] is False
    record(4, "full search (reduction off) infeasible at n = 12", ok,
           f"{r.evidence['groups']} groups, {r.evidence['dead_ends']} dead ends", r.wall_time, 600)


def test_criterion_05_witness_tables():
    t0 = time.perf_counter()
    reports = [run_task("witness-table.even", {"n": n})[0] for n in (12, 16, 18, 20)]
    reports += [run_task("witness-table.odd", {"n": n})[0] for n in (21, 23)]
    elapsed = time.perf_counter() - t0
    ok = all(r.result == PASS for r in reports)
    checked = sum(r.evidence["instances_checked"] for r in reports)
    record(5, "witness rows pass at n = 12, 16, 18, 20 and 21, 23", ok,
           f"{checked} (h,f) instances, verdicts {[r.result for r in reports]}", elapsed, 60)


def test_criterion_06_powers():
    t0 = time.perf_counter()
    reports = run_task("powers.even", {"n": 16}) + run_task("powers.odd", {"n": 21})
    elapsed = time.perf_counter() - t0
    ok = bool(reports) and all(r.result == PASS and not r.evidence["problems"] for r in reports)
    record(6, "C(f) contained in C(h) for every parameter choice at n = 16 and 21", ok,
           f"{len(reports)} parameter choices", elapsed, 60)


EXPECTED_YB = {n: [] for n in (1, 2, 3, 4, 5, 6, 7, 10)}
EXPECTED_YB.update({8: ["4-4"], 9: ["4-4"], 11: ["4-4-3"],
                    15: ["6-3-3-2", "6-4-2-2", "6-6-3", "7-4-4"]})


@pytest.mark.parametrize("n", sorted(EXPECTED_YB))
def test_criterion_07_classification(n):
    r = run_task("lemma-abelian-centralizer", {"n": n})[0]
    ok = r.result == PASS and r.evidence["yb"] == EXPECTED_YB[n]
    record(7, f"Y_b(A_{n})", ok, "{" + ", ".join(r.evidence["yb"]) + "}", r.wall_time, 300)


def test_criterion_07_cross_class():
    r = run_task("lemma-alt15.cross-class", {})[0]
    ok = r.result == PASS
    record(7, "no commuting pairs across the four leftover classes of A_15", ok, r.summary,
           r.wall_time, 300)


COMPONENTS = {  # case -> (size, delta, Delta, time limit)
    "a8-4-4": (12, 3, 3, 120), "a9-4-4": (12, 3, 3, 120), "a11-4-4-3": (24, 3, 3, 120),
    "a15-7-4-4": (72, 3, 3, 120), "a15-6-6-3": (432, 36, 36, 600),
    "a15-6-4-2-2": (72, 6, 6, 120), "a15-6-3-3-2": (96, 12, 12, 120),
}


@pytest.mark.parametrize("case", list(COMPONENTS))
def test_criterion_08_components(case):
    size, delta, Delta, limit = COMPONENTS[case]
    r = run_task("component", {"case": case})[0]
    ev = r.evidence
    ok = (r.result == PASS and ev["status"] == "certified" and ev["component_size"] == size
          and ev["delta"] == delta and ev["Delta"] == Delta and not ev["revalidation_problems"])
    record(8, f"component {case}", ok,
           f"size {ev['component_size']}, delta {ev['delta']}, Delta {ev['Delta']}, {ev['status']}",
           r.wall_time, limit)


def test_criterion_09_small_degree_theorem():
    t0 = time.perf_counter()
    reports = [run_task("theorem-small", {"n": n})[0] for n in list(range(1, 12)) + [15]]
    elapsed = time.perf_counter() - t0
    failed = [r.parameters["n"] for r in reports if r.result != PASS]
    record(9, "delta = Delta reduction holds for n <= 11 and n = 15", not failed,
           f"{len(reports)} degrees, failing: {failed or 'none'}", elapsed, 1800)


def test_criterion_10_oracles():
    import oracles
    from test_solvers import _random_class_slices

    t0 = time.perf_counter()
    cent_checked = 0
    cent_bad = []
    for n in range(1, 10):
        for family in ("sym", "alt"):
            spec = GroupSpec(family, n)
            for label in class_labels(spec):
                g = class_representative(label)
                got = {x.images for x in close(centralizer_gens(g, spec))}
                cent_checked += 1
                if got != oracles.centralizer_scan(g.images, family):
                    cent_bad.append(f"{label} in {spec}")
    graph_bad = []
    analyses = 0
    for idx, (spec, vs) in enumerate(_random_class_slices(100)):
        adj = CommutingGraph.build(vs).adj
        alpha = oracles.independence_number(adj)
        theta = oracles.clique_cover_number(adj)
        a = analyze_vertex_set(vs, spec)  # the constructor itself asserts delta <= Delta
        analyses += 1
        if (independence_number(adj).value, clique_cover_number(adj).value, a.delta, a.Delta) != \
                (alpha, theta, alpha, theta) or a.delta > a.Delta:
            graph_bad.append(idx)
        if max_clique(adj).value != oracles.independence_number(complement(adj)):
            graph_bad.append(idx)
    elapsed = time.perf_counter() - t0
    ok = not cent_bad and not graph_bad
    record(10, "oracle suites (centralizers n <= 9; delta/Delta on 100 class slices)", ok,
           f"{cent_checked} centralizers, {analyses} graphs; mismatches {cent_bad + graph_bad or 'none'}",
           elapsed, 600)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
