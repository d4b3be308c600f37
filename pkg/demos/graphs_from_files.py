"""
Walks on graphs read from edge lists
====================================

Edge-list files start with a line "n m" followed by m edges. Vertex names may
be integers in range or arbitrary tokens. Irregular graphs get numeric spectra
and the identity d U**tau d^T = T_tau(P) still holds.
"""
from pathlib import Path

import numpy as np

from groverwalk import build_operators, read_edge_list, transfer_block
from groverwalk.periodicity import period_bruteforce
from groverwalk.pst import chebyshev_of_matrix
from groverwalk.spectra import numeric_spectrum

data = Path(__file__).parent / "data"

for name in ("path5.txt", "barbell.txt", "hexagon_named.txt"):
    g = read_edge_list(data / name)
    ops = build_operators(g)
    adj = numeric_spectrum(g.adjacency)
    worst = max(
        np.max(np.abs(transfer_block(ops, tau) - chebyshev_of_matrix(tau, ops.discriminant))) for tau in range(21)
    )
    bf = period_bruteforce(ops, tau_max=60)
    print(f"{name}: n={g.n} m={g.m} regular={g.regular_degree()} labels={g.labels is not None}")
    print(f"  adjacency: {[(round(v, 4) + 0.0, k) for v, k in adj.eigenvalues]}")
    print(f"  Chebyshev identity, tau <= 20: max error {worst:.1e}")
    print(f"  period within 60 steps: {bf.period}")
