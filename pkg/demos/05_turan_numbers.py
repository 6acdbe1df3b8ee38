"""
Turán numbers of small linear forests by brute force
====================================================

ex(n, F) is the largest edge count of an n-vertex graph without F. The
brute force walks every F-free isomorphism class (generated with F-freeness
as a hereditary filter) and keeps the densest ones.
"""

import time

from alphaforest.forests import make_spec
from alphaforest.turan import applicable_bound, brute_force_ex

for text, ns in [("3,3", range(5, 10)), ("4", range(4, 9)), ("4,2", range(6, 9))]:
    spec = make_spec(text)
    for n in ns:
        t0 = time.perf_counter()
        best, forms = brute_force_ex(n, spec)
        bound = applicable_bound(n, spec)
        print(f"{text:>4} n={n}: ex={best:>2} bound={bound.value:>2} ({bound.regime}) "
              f"classes={[f.decode() for f in forms]}  {time.perf_counter() - t0:.2f}s")
