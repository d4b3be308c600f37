"""
Acceptance suite.

Each test checks one acceptance criterion at its stated tolerance and records
a line in ``conftest.ACCEPTANCE``; the terminal summary prints one PASS/FAIL
line per criterion.
"""

import time
from contextlib import contextmanager
from math import gcd

import numpy as np
import pytest

import conftest
from groverwalk.graphs import CirculantSpec, cayley, named_graph, unitary_cayley
from groverwalk.numtheory import ramanujan_closed, ramanujan_direct
from groverwalk.periodicity import (
    ClassificationLabel,
    classify_integral_regular_periodic,
    is_periodic_integral_regular,
    period_bruteforce,
    period_spectral,
)
from groverwalk.pst import chebyshev_of_matrix, pst_bruteforce, transfer_block
from groverwalk.spectra import (
    circulant_spectrum,
    eigenprojectors,
    evolution_angles,
    hoffman_check,
    is_walk_regular,
    numeric_spectrum,
    spectral_map,
    uc_spectrum,
)
from groverwalk.verify import random_circulant, sweep_circulant_criterion
from groverwalk.walk import build_operators, evolve

TITLES = {
    1: "UC(n) periodic iff n = 2^a 3^b (brute force n <= 30, spectral 31..60)",
    2: "UC(n) periods: 4 for n in {2,4,8,16}, 12 for n in {9,12,18,24,27}",
    3: "UC(n) PST exactly for n in {2,4,6,12} (n <= 24); UC(12) at (u, u+6, 6)",
    4: "circulant PST criterion equals brute force on 200 random circulants, tau <= 50",
    5: "d U^tau d^T = T_tau(P) within 1e-8 for tau <= 20 on the corpus",
    6: "spectral map equals numeric evolution spectrum (1e-7, exact multiplicities)",
    7: "Ramanujan sums: direct = closed form (n <= 300); uc_spectrum = numeric (n <= 60)",
    8: "Hoffman, H(3,3) spectrum, classification labels, walk-regularity",
    9: "unitarity, projector axioms, norm preservation, circulant symmetry",
}


def record(number, passed, detail=""):
    conftest.ACCEPTANCE.setdefault(number, []).append((TITLES[number], bool(passed), detail))
    print(f"criterion {number} {'PASS' if passed else 'FAIL'}: {TITLES[number]}" + (f" [{detail}]" if detail else ""))


@contextmanager
def criterion(number):
    """Record a FAIL for ``number`` if the body raises before recording."""
    before = len(conftest.ACCEPTANCE.get(number, []))
    try:
        yield
    except BaseException as exc:
        if len(conftest.ACCEPTANCE.get(number, [])) == before:
            record(number, False, f"{type(exc).__name__}: {exc}")
        raise


def smooth_23(n):
    # independent of the library predicate
    while n % 2 == 0:
        n //= 2
    while n % 3 == 0:
        n //= 3
    return n == 1


def uc_disc_spectrum(n):
    phi = sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)
    return uc_spectrum(n).scaled(1.0 / phi, "discriminant")


def test_criterion_1_uc_periodicity_sweep():
    with criterion(1):
        start = time.perf_counter()
        bad = []
        for n in range(2, 31):
            bf = period_bruteforce(build_operators(unitary_cayley(n)), tau_max=144, tol=1e-9)
            if bf.periodic != smooth_23(n):
                bad.append(f"brute force UC({n})={bf.periodic}")
        for n in range(31, 61):
            g = unitary_cayley(n)
            sp = period_spectral(uc_disc_spectrum(n), g.m, g.n, g.is_bipartite)
            if sp.periodic != smooth_23(n):
                bad.append(f"spectral UC({n})={sp.periodic}")
        elapsed = time.perf_counter() - start
        ok = not bad and elapsed < 120
        record(1, ok, f"{elapsed:.1f}s" + (f"; {', '.join(bad)}" if bad else ""))
        assert not bad, bad
        assert elapsed < 120


@pytest.mark.parametrize("n, expected", [(2, 4), (4, 4), (8, 4), (16, 4), (9, 12), (12, 12), (18, 12), (24, 12), (27, 12)])
def test_criterion_2_uc_periods(n, expected):
    with criterion(2):
        bf = period_bruteforce(build_operators(unitary_cayley(n)), tau_max=144, tol=1e-9)
        ok = bf.period == expected
        record(2, ok, f"UC({n}) brute-force period {bf.period}, expected {expected}")
        assert ok, f"UC({n}) has brute-force period {bf.period}, expected {expected}"


@pytest.mark.parametrize("n", [3, 6])
def test_criterion_2_reported_periods(n):
    # reported and flagged against the blanket value 12; not asserted either way
    with criterion(2):
        bf = period_bruteforce(build_operators(unitary_cayley(n)), tau_max=144, tol=1e-9)
        g = unitary_cayley(n)
        sp = period_spectral(uc_disc_spectrum(n), g.m, g.n, g.is_bipartite)
        assert bf.periodic and sp.period == bf.period
        flag = " (differs from the blanket 12)" if bf.period != 12 else ""
        record(2, True, f"UC({n}) brute-force period {bf.period}{flag}")


def test_criterion_3_uc_pst():
    with criterion(3):
        with_pst = []
        uc12 = []
        for n in range(2, 25):
            g = unitary_cayley(n)
            ops = build_operators(g)
            sp = period_spectral(uc_disc_spectrum(n), g.m, g.n, g.is_bipartite)
            certs = pst_bruteforce(ops, tau_max=sp.period if sp.periodic else 100, tol=1e-7)
            if certs:
                with_pst.append(n)
            if n == 12:
                uc12 = certs
                y = np.linalg.matrix_power(ops.evolution, 6) @ ops.boundary.T
                amp = np.abs(ops.boundary @ y)
                moduli = [amp[(u + 6) % 12, u] for u in range(12)]
        keys = sorted((c.source, c.target, c.time) for c in uc12)
        ok_set = with_pst == [2, 4, 6, 12]
        ok_12 = keys == [(u, (u + 6) % 12, 6) for u in range(12)]
        ok_amp = max(abs(m - 1) for m in moduli) < 1e-7
        record(3, ok_set and ok_12 and ok_amp, f"PST at {with_pst}")
        assert ok_set and ok_12 and ok_amp


def test_criterion_4_criterion_equivalence():
    with criterion(4):
        rows = sweep_circulant_criterion(trials=200, n_max=20, seed=0, tau_max=50)
        specs_ok = len(rows) >= 200 and all(4 <= r["n"] <= 20 for r in rows)
        cells = sum(r["cells"] for r in rows)
        mismatches = sum(r["mismatches"] for r in rows)
        hits = sum(r["pst_cells"] for r in rows)
        ok = specs_ok and mismatches == 0
        record(4, ok, f"{len(rows)} circulants, {cells} cells, {hits} PST cells, {mismatches} mismatches")
        assert ok


def test_criterion_5_chebyshev_identity(corpus):
    with criterion(5):
        names = set(corpus)
        assert {"P3", "P5", "tree9", "barbell"} <= names
        worst = 0.0
        for g in corpus.values():
            ops = build_operators(g)
            d, u = ops.boundary, ops.evolution
            y = d.T.copy()
            for tau in range(21):
                err = np.max(np.abs(d @ y - chebyshev_of_matrix(tau, ops.discriminant)))
                worst = max(worst, float(err))
                y = u @ y
            transfer_block(ops, 20)  # the library's own sentinel
        record(5, worst < 1e-8, f"max error {worst:.2e} over {len(corpus)} graphs")
        assert worst < 1e-8


def circular(a, b):
    d = abs(a - b) % (2 * np.pi)
    return min(d, 2 * np.pi - d)


def test_criterion_6_spectral_map(corpus):
    with criterion(6):
        bad = []
        for name, g in corpus.items():
            ops = build_operators(g)
            mu = np.linalg.eigvalsh(ops.discriminant)
            predicted = spectral_map(list(mu), g.m, g.n, g.is_bipartite)
            angles = evolution_angles(ops.evolution)
            if predicted.dimension != len(angles):
                bad.append(f"{name}: size")
                continue
            for theta, k in predicted.eigenvalues:
                hits = sum(circular(theta, a) < 1e-7 for a in angles)
                if hits != k:
                    bad.append(f"{name}: angle {theta:.6f} mult {k} vs {hits}")
            # the +1 and -1 counts against the cycle-rank formula
            b1 = g.m - g.n + 1
            n_plus = sum(abs(x - 1) < 1e-9 for x in mu)
            n_minus = sum(abs(x + 1) < 1e-9 for x in mu)
            want_plus = n_plus + b1
            want_minus = n_minus + b1 - 1 + int(g.is_bipartite)
            if predicted.multiplicity(0.0, 1e-7) != want_plus or predicted.multiplicity(np.pi, 1e-7) != want_minus:
                bad.append(f"{name}: +-1 counts")
        record(6, not bad, "; ".join(bad) or f"{len(corpus)} graphs")
        assert not bad


def test_criterion_7_ramanujan():
    with criterion(7):
        bad = [(j, n) for n in range(1, 301) for j in range(n) if ramanujan_direct(j, n) != ramanujan_closed(j, n)]
        worst = 0.0
        for n in range(2, 61):
            exact = uc_spectrum(n).multiset()
            num = numeric_spectrum(unitary_cayley(n).adjacency).multiset()
            worst = max(worst, float(np.max(np.abs(exact - num))))
        ok = not bad and worst < 1e-8
        record(7, ok, f"{len(bad)} dual-formula mismatches, spectrum error {worst:.2e}")
        assert ok


def test_criterion_8_integral_regular_fixtures(corpus):
    with criterion(8):
        problems = []
        hoffman = {
            "UC12": unitary_cayley(12),
            "K33": named_graph("complete_bipartite", [3]),
            "K222": named_graph("complete_tripartite", [2]),
            "H33": named_graph("hamming", [3, 3]),
        }
        for name, g in hoffman.items():
            _, resid = hoffman_check(g, numeric_spectrum(g.adjacency))
            if not resid < 1e-8:
                problems.append(f"Hoffman {name} {resid:.2e}")

        h33 = numeric_spectrum(hoffman["H33"].adjacency)
        if sorted(round(v) for v in h33.values) != [-3, 0, 3, 6]:
            problems.append(f"H(3,3) spectrum {h33.values}")

        labels = {
            "C6": (named_graph("cycle", [6]), ClassificationLabel.C6),
            "K33": (hoffman["K33"], ClassificationLabel.COMPLETE_BIPARTITE),
            "K222": (hoffman["K222"], ClassificationLabel.COMPLETE_TRIPARTITE),
            "H33": (hoffman["H33"], ClassificationLabel.SPECTRUM_K_HALF_ZERO),
            "UC12": (hoffman["UC12"], ClassificationLabel.SPECTRUM_PM_K_HALF_ZERO),
        }
        for name, (g, want) in labels.items():
            got = classify_integral_regular_periodic(numeric_spectrum(g.adjacency), g.regular_degree(), g.n, g.is_bipartite)
            if got is not want:
                problems.append(f"label {name} {got.value}")

        # walk-regularity for every periodic regular integral graph in the corpus
        checked = []
        for name, g in corpus.items():
            k = g.regular_degree()
            if k is None:
                continue
            spec = numeric_spectrum(g.adjacency)
            if not all(abs(v - round(v)) < 1e-6 for v in spec.values):
                continue
            if not is_periodic_integral_regular(spec, k):
                continue
            if not period_bruteforce(build_operators(g)).periodic:
                problems.append(f"{name} predicted periodic but brute force disagrees")
            checked.append(name)
            if not is_walk_regular(g, r_max=8):
                problems.append(f"{name} not walk-regular")
        if is_walk_regular(corpus["P3"], r_max=8):
            problems.append("P3 walk-regular")
        record(8, not problems, "; ".join(problems) or f"walk-regular: {', '.join(checked)}")
        assert not problems


def test_criterion_9_properties(corpus):
    with criterion(9):
        problems = []
        rng = np.random.default_rng(2024)
        for name, g in corpus.items():
            ops = build_operators(g)
            u = ops.evolution
            if np.max(np.abs(u @ u.T - np.eye(len(u)))) >= 1e-9:
                problems.append(f"{name} unitarity")
            projs = eigenprojectors(ops.discriminant)
            eye = np.eye(g.n)
            if np.max(np.abs(sum(e.projector for e in projs) - eye)) >= 1e-8:
                problems.append(f"{name} resolution of identity")
            for i, e in enumerate(projs):
                if np.max(np.abs(e.projector @ e.projector - e.projector)) >= 1e-8:
                    problems.append(f"{name} idempotence")
                for f in projs[i + 1 :]:
                    if np.max(np.abs(e.projector @ f.projector)) >= 1e-8:
                        problems.append(f"{name} orthogonality")
            for _ in range(3):
                psi = rng.normal(size=ops.n_arcs) + 1j * rng.normal(size=ops.n_arcs)
                psi /= np.linalg.norm(psi)
                tau = int(rng.integers(1, 60))
                if abs(np.linalg.norm(evolve(ops, psi, tau)) - 1) >= 1e-9:
                    problems.append(f"{name} norm at tau={tau}")
        circulants = [CirculantSpec(n, frozenset(a for a in range(1, n) if gcd(a, n) == 1)) for n in (9, 10, 12)]
        circulants += [CirculantSpec(n, frozenset({1, n - 1})) for n in (4, 5, 6, 8)]
        circulants += [random_circulant(rng, 4, 40) for _ in range(200)]
        for spec in circulants:
            cayley(spec)
            lam = circulant_spectrum(spec).indexed
            if any(lam[j] != lam[spec.n - j] for j in range(1, spec.n)):
                problems.append(f"symmetry n={spec.n}")
        record(9, not problems, "; ".join(sorted(set(problems))) or f"{len(corpus)} graphs, {len(circulants)} circulants")
        assert not problems
