"""
Perfect state transfer on circulants
====================================

A vertex state is the uniform superposition over the arcs entering a vertex.
Perfect state transfer from u to v at time tau means U**tau maps the state of
u onto the state of v up to a phase. On circulants a three-part test on the
Chebyshev values T_tau(mu_j) decides it without forming U.
"""
import numpy as np

from groverwalk import (
    CirculantSpec,
    build_operators,
    cayley,
    pst_bruteforce,
    pst_criterion_circulant,
    uc_pst_classification,
    unitary_cayley_spec,
)

###############################################################################
# The criterion, condition by condition
# -------------------------------------

c6 = CirculantSpec(6, frozenset({1, 5}))
for u, v, tau in [(0, 3, 3), (0, 2, 3), (0, 3, 2)]:
    r = pst_criterion_circulant(c6, u, v, tau)
    print(f"C6 {u}->{v} tau={tau}: antipodal={r.antipodal} unimodular={r.all_unimodular} "
          f"alternating={r.alternating} => {r.holds}")

###############################################################################
# Brute force on the evolution matrix
# -----------------------------------

spec = unitary_cayley_spec(12)
certs = pst_bruteforce(build_operators(cayley(spec)), tau_max=12)
print("\nUC(12) certificates:", [(c.source, c.target, c.time) for c in certs])
print("phases:", sorted({complex(np.round(c.phase, 12)) for c in certs}, key=abs))

###############################################################################
# Sweep over UC(n)
# ----------------

hits = [r.n for r in uc_pst_classification(24) if r.verdict]
print("\nUC(n) with perfect state transfer, n <= 24:", hits)
