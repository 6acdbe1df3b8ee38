"""
Who maximises rho_alpha among F-free graphs?
============================================

For small n the spectral maximiser is often a clique on sum(k_i) - 1
vertices, not the predicted family; the prediction is about large n. The
scan reports, for every n, the observed maximum and whether the predicted
graph is the unique maximiser.
"""

from alphaforest.forests import make_spec
from alphaforest.harness import empirical_threshold, scan_spectral

for text, alpha in [("4", 0.0), ("5", 0.5), ("3,3", 0.5)]:
    reports = scan_spectral(make_spec(text), alpha, range(5, 9))
    for r in reports:
        print(f"{text:>4} alpha={alpha} n={r.n}: scanned {r.graphs_scanned:>4}, "
              f"max {r.observed_max:.6f} at {r.observed_extremal}, "
              f"predicted {r.predicted_value:.6f} -> {r.verdict}")
    print("   holds from n =", empirical_threshold(reports))
