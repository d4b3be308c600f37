"""
Spectra of unitary Cayley graphs
================================

UC(n) joins two residues mod n when their difference is a unit. Its adjacency
eigenvalues are Ramanujan sums, so they are integers, and the Grover walk
spectrum follows from them by the spectral mapping rule.
"""
import numpy as np

from groverwalk import build_operators, uc_spectrum, unitary_cayley
from groverwalk.spectra import evolution_angles, match_angles, numeric_spectrum, spectral_map

###############################################################################
# Exact adjacency spectra
# -----------------------
# Each entry is (eigenvalue, multiplicity), read off from R(j, n) for j = 0..n-1.

for n in (6, 8, 9, 12):
    print(f"UC({n:2d}):", uc_spectrum(n).eigenvalues)

###############################################################################
# Agreement with a dense eigensolver
# ----------------------------------

n = 30
exact = uc_spectrum(n).multiset()
dense = numeric_spectrum(unitary_cayley(n).adjacency).multiset()
print(f"\nUC({n}) exact vs eigvalsh, max gap: {np.max(np.abs(exact - dense)):.1e}")

###############################################################################
# From the discriminant to the evolution matrix
# ---------------------------------------------
# On a k-regular graph P = A/k. Every mu in (-1, 1) gives a pair exp(+-i arccos mu);
# the cycle rank adds extra copies of +1 and -1.

g = unitary_cayley(12)
ops = build_operators(g)
mu = uc_spectrum(12).scaled(1 / 4, "discriminant")
mapped = spectral_map(list(mu.multiset()), g.m, g.n, g.is_bipartite)
print("\nUC(12) evolution angles / pi and multiplicities:")
for theta, k in mapped.eigenvalues:
    print(f"  {theta / np.pi:6.3f}  x{k}")
print("mismatch against numpy.linalg.eigvals:", f"{match_angles(mapped.multiset(), evolution_angles(ops.evolution)):.1e}")
