"""
The three extremal families and their quotient matrices
=======================================================

S_{n,p} is a clique K_p joined to an independent set, S+_{n,p} adds one edge
to the independent side, and F_{n,p} joins K_p to a near-perfect matching.
Each has an equitable partition with two or three cells, so its A_alpha
spectral radius is the top eigenvalue of a tiny quotient matrix.
"""

from alphaforest.families import FamilyParams, build_family, quotient_matrix
from alphaforest.graph import encode_graph6
from alphaforest.spectral import spectral_radius

alpha = 0.5
for family, n, p in [("S", 6, 2), ("SPlus", 4, 1), ("F", 5, 1), ("F", 8, 2)]:
    params = FamilyParams(family, n, p)
    g = build_family(params)
    quo = quotient_matrix(params, alpha)
    print(params.label, encode_graph6(g), f"{g.num_edges} edges")
    for (name, size), row in zip(quo.partition, quo.entries):
        print(f"   {name:>16} x{size}: {row}")
    # the quotient eigenvalue and the full 'n x n' eigensolve agree
    print(f"   rho quotient {quo.largest_eigenvalue():.12f}")
    print(f"   rho full     {spectral_radius(g, alpha).rho:.12f}")

# the bowtie F_{5,1} at alpha = 1/2 has rho = (7 + sqrt 17) / 4
print((7 + 17 ** 0.5) / 4)
