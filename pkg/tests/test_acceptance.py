"""Acceptance criteria; each test prints one PASS/FAIL line with its timing."""

import time
from itertools import combinations

import numpy as np
import pytest

import properties as P
from sgfrust import all_min_signatures, frustration, generate, is_critical, signature_to_switch_set
from sgfrust.families import projective_cube_disjoint_signatures
from sgfrust.structure import (
    cyclic_edge_connectivity,
    in_s_star,
    subdivide_multiedge,
    switch_isomorphic,
    two_edge_disjoint_negative_circuits,
)
from sgfrust.verify import check_critical_report, check_disjoint_circuits


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def test_criterion_1_anti_k4(acceptance_line):
    with Clock() as clock:
        G, sig, _ = generate("anti_complete", 4)
        res = frustration(G, sig, collect_all=True)
        report = is_critical(G, sig)
        matchings = {frozenset(m) for m in combinations(G.edge_ids, 2)
                     if len({x for e in m for x in (G.edge(e).u, G.edge(e).v)}) == 4}
    ok = res.index == 2 and report.critical and set(res.all_min_signatures) == matchings and clock.seconds < 1
    acceptance_line("1 anti-K4", ok, f"l={res.index} critical={report.critical} "
                    f"min_sigs={len(res.all_min_signatures)} (perfect matchings) t={clock.seconds:.2f}s<1s")
    assert ok


def test_criterion_2_anti_complete(acceptance_line):
    got = {}
    with Clock() as clock:
        for n in (4, 5, 6, 7):
            G, sig, _ = generate("anti_complete", n)
            report = is_critical(G, sig)
            got[n] = (report.index, report.critical)
    ok = all(got[n] == ((n - 1) ** 2 // 4, True) for n in got) and clock.seconds < 10
    detail = " ".join(f"n={n}:l={l},crit={c}" for n, (l, c) in got.items())
    acceptance_line("2 anti-Kn", ok, f"{detail} t={clock.seconds:.2f}s<10s")
    assert ok


def test_criterion_3_odd_wheels(acceptance_line):
    got = {}
    with Clock() as clock:
        for k in (1, 2, 3, 4):
            G, sig, _ = generate("anti_wheel", k)
            report = is_critical(G, sig)
            got[k] = (report.index, report.critical)
    ok = all(got[k] == (k + 1, True) for k in got) and clock.seconds < 10
    detail = " ".join(f"k={k}:l={l},crit={c}" for k, (l, c) in got.items())
    acceptance_line("3 anti-W(2k+1)", ok, f"{detail} t={clock.seconds:.2f}s<10s")
    assert ok


def test_criterion_4_projective_cubes(acceptance_line):
    rows = []
    ok = True
    with Clock() as clock:
        for k in (2, 3, 4):
            G, sig, _ = generate("projective_cube", k)
            l = frustration(G, sig, method="enum").index
            sigs = projective_cube_disjoint_signatures(k)
            disjoint = all(not (a & b) for a, b in combinations(sigs, 2))
            minimum = all(len(s) == l and frustration(G, s, method="enum").index == l for s in sigs)
            # every B_i must be a signature of (G, Σ): switching equivalence
            equivalent = all(signature_to_switch_set(G, sig, s) is not None for s in sigs)
            ok &= l == 2 ** (k - 1) and len(sigs) == k + 1 and disjoint and minimum and equivalent
            rows.append(f"k={k}:l={l},{len(sigs)} disjoint min sigs")
    ok &= clock.seconds < 30
    acceptance_line("4 projective cubes", ok, f"{' '.join(rows)} t={clock.seconds:.2f}s<30s")
    assert ok


def test_criterion_5_petersen(acceptance_line):
    with Clock() as clock:
        P1, s1, _ = generate("petersen_sigma1")
        P2, s2, _ = generate("petersen_sigma2")
        r1, r2 = is_critical(P1, s1), is_critical(P2, s2)
        check_critical_report(P1, s1, r1)
        check_critical_report(P2, s2, r2)
        star1, star2 = in_s_star(P1, s1, report=r1), in_s_star(P2, s2, report=r2)
        w = two_edge_disjoint_negative_circuits(P1, s1)
        check_disjoint_circuits(P1, s1, w)
    ok = (r1.index, r1.critical, r2.index, r2.critical) == (3, True, 3, True)
    ok &= star2 and not star1 and w is not None and clock.seconds < 5
    acceptance_line("5 Petersen", ok, f"l1={r1.index} l2={r2.index} critical={r1.critical},{r2.critical} "
                    f"S*(Σ2)={star2} S*(Σ1)={star1} witness={sorted(w.first)}|{sorted(w.second)} "
                    f"t={clock.seconds:.2f}s<5s")
    assert ok


def test_criterion_6_octahedron(acceptance_line):
    with Clock() as clock:
        G, sig, _ = generate("octahedron_anti")
        report = is_critical(G, sig)
        sigs = all_min_signatures(G, sig)
        triple = next((t for t in combinations(sigs, 3)
                       if all(not (a & b) for a, b in combinations(t, 2))), None)
    ok = report.index == 4 and report.critical and triple is not None and clock.seconds < 5
    acceptance_line("6 octahedron", ok, f"l={report.index} critical={report.critical} min_sigs={len(sigs)} "
                    f"disjoint_triple={triple is not None} t={clock.seconds:.2f}s<5s")
    assert ok


@pytest.mark.parametrize("k,solver", [(3, "enum"), (4, "bnb")])
def test_criterion_7_escher_walls(acceptance_line, k, solver):
    with Clock() as clock:
        G, sig, _ = generate("escher_wall", k)
        res = frustration(G, sig, method=solver)
        if solver == "enum":
            report = is_critical(G, sig, method="union")
        else:
            report = is_critical(G, sig, method="per-edge", solver="bnb")
        cubic = all(G.degree(x) == 3 for x in G.vertices)
        cyclic = cyclic_edge_connectivity(G)
        disjoint = two_edge_disjoint_negative_circuits(G, sig)
    ok = res.index == k and res.certified and report.critical and report.certified and report.index == k
    ok &= cubic and cyclic >= 4 and disjoint is None and clock.seconds < 60
    acceptance_line(f"7 E{k} ({solver})", ok, f"l={res.index} certified={res.certified} critical={report.critical} "
                    f"cubic={cubic} cyclic_ec={cyclic} disjoint_neg_circuits={disjoint is not None} "
                    f"t={clock.seconds:.2f}s<60s")
    assert ok


def test_criterion_7_prime_wall_is_petersen(acceptance_line):
    with Clock() as clock:
        W, ws, _ = generate("escher_wall_prime", 3)
        E, es, _ = generate("escher_wall", 3)
        Pg, ps, _ = generate("petersen_sigma2")
        prime = switch_isomorphic(W, ws, Pg, ps)
        plain = switch_isomorphic(E, es, Pg, ps)
    ok = prime and not plain and clock.seconds < 60
    acceptance_line("7 E3' vs Petersen", ok, f"E3'~Σ2={prime} E3~Σ2={plain} t={clock.seconds:.2f}s<60s")
    assert ok


# criterion 8: seeded random instances, |V| <= 8

INSTANCES = 100
SEED = 20261018


def _run_suite(check, needs_critical=False, attempts=5000, seed_offset=0, **kw):
    rng = np.random.default_rng(SEED + seed_offset)
    done = tried = 0
    while done < INSTANCES and tried < attempts:
        tried += 1
        G = P.random_signed_graph(rng, **kw)
        if needs_critical:
            part = P.critical_part(G, rng)
            if part is None:
                continue
            exercised = check(*part, rng)
        else:
            exercised = check(G, rng)
        done += bool(exercised)
    return done, tried


def _subdivision_case(G, rng):
    # alternate between arbitrary graphs and extracted critical ones
    if rng.random() < 0.5:
        return P.check_subdivision(G, G.signature, rng)
    part = P.critical_part(G, rng)
    return part is not None and P.check_subdivision(*part, rng)


def _classification_case(G, rng):
    part = P.critical_part(G, rng, int(rng.integers(1, 3)))
    if part is None:
        return False
    H, hsig = part
    for _ in range(int(rng.integers(0, 3))):
        pairs = P.uniform_multiedges(H, hsig)
        if not pairs:
            break
        x, y = pairs[int(rng.integers(len(pairs)))]
        H, hsig = subdivide_multiedge(H, hsig, x, y)
    return P.check_classification(H, hsig)


SUITES = {
    "8a solvers agree": (lambda G, rng: P.check_solvers_agree(G), {}),
    "8b switching invariance": (P.check_switching_invariance, {}),
    "8c l(G-e) in {l-1, l}": (lambda G, rng: P.check_edge_deletion(G), {}),
    "8d cut inequality": (lambda G, rng: P.check_cut_inequality(G), {}),
    "8e criticality characterisations (random)":
        (lambda G, rng: P.check_criticality_characterisations(G) or True, {}),
    "8e criticality characterisations (critical)":
        (lambda H, hsig, rng: P.check_criticality_characterisations(H, hsig), {"needs_critical": True}),
    "8f subdivision": (_subdivision_case, {}),
    "8g critical subgraph extraction": (lambda G, rng: P.check_extraction(G), {}),
    "8h low-index classification": (_classification_case, {}),
}


@pytest.mark.parametrize("name", list(SUITES))
def test_criterion_8_property_suites(acceptance_line, name):
    check, kw = SUITES[name]
    with Clock() as clock:
        done, tried = _run_suite(check, seed_offset=list(SUITES).index(name), **kw)
    ok = done >= INSTANCES
    acceptance_line(name, ok, f"{done} instances passed ({tried} drawn, |V|<=8) t={clock.seconds:.2f}s")
    assert ok
