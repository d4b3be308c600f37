"""
Which unitary Cayley graphs are periodic?
=========================================

A Grover walk is periodic when U**tau is the identity for some tau. For UC(n)
this happens exactly when n has no prime factor other than 2 and 3. Here the
prediction, the spectral period and a brute-force search are printed side by
side.
"""
from groverwalk import build_operators, period_bruteforce, period_spectral, uc_spectrum, unitary_cayley
from groverwalk.periodicity import uc_periodicity_predicted

print(f"{'n':>3} {'predicted':>9} {'spectral':>8} {'brute':>6}")
for n in range(2, 29):
    g = unitary_cayley(n)
    disc = uc_spectrum(n).scaled(1 / g.regular_degree(), "discriminant")
    sp = period_spectral(disc, g.m, g.n, g.is_bipartite)
    bf = period_bruteforce(build_operators(g), tau_max=144)
    print(f"{n:3d} {str(uc_periodicity_predicted(n)):>9} {str(sp.period):>8} {str(bf.period):>6}")

###############################################################################
# Orders behind a period
# ----------------------
# The period is the lcm of the multiplicative orders of the eigenvalues of U.

g = unitary_cayley(12)
rep = period_spectral(uc_spectrum(12).scaled(1 / 4, "discriminant"), g.m, g.n, g.is_bipartite)
print("\nUC(12) (angle, order):", [(round(t, 4), q) for t, q in rep.evidence], "-> period", rep.period)
