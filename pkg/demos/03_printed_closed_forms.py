"""
Checking printed closed forms against the quotient oracle
=========================================================

Every printed formula is evaluated exactly as written and compared with the
quotient-matrix eigenvalue. Mismatches are reported, never patched.
"""

from collections import Counter

from alphaforest.closed_forms import check_formula, make_poly, largest_real_root, theorem_value
from alphaforest.harness import run_verify

# the cubic for S+ at n=4, p=1, alpha=1/2 and its largest root
f = make_poly("f", 4, 1, 0.5)
print("f coefficients:", f.coeffs, "largest root:", largest_real_root(f))

for rep in [check_formula("S_closed", 6, 2, 0.5),
            theorem_value("iii", 5, 1, 0.5),
            check_formula("q_S_closed", 10, 1, 0.5),
            check_formula("SPlus_f_root", 7, 1, 0.4),
            check_formula("SPlus_f_root", 7, 2, 0.4)]:
    print(f"{rep.formula:>20} n={rep.n} p={rep.p} alpha={rep.alpha}: "
          f"printed {rep.printed_value:.6f} oracle {rep.oracle_value:.6f} -> {rep.verdict}")

# the whole grid, no full-graph eigensolves (quick)
result = run_verify(n_max=40, p_max=4, numeric=False)
total = Counter(r.report.formula for r in result.rows)
for name, bad in sorted(result.discrepancies().items()):
    print(f"{name:>22}: {bad}/{total[name]} grid points disagree")
