"""
Free resolutions attached to a determinantal family
===================================================

The coordinate ring of a scheme cut out by the maximal minors of a
t x (t+c-1) matrix has an explicit minimal free resolution.  This
script builds it for two families and prints the Betti tables.
"""

from detloci import (DegreeData, degree_matrix, eagon_northcott,
                     symmetric_power_resolution)

# the twisted cubic: 2x3 matrix of linear forms in P^3
cubic = DegreeData(b=(0, 0), a=(1, 1, 1), n=1)
res = eagon_northcott(cubic)
print("twisted cubic, entry degrees", degree_matrix(cubic).u)
print("betti table (twists per homological degree):")
for i, twists in enumerate(res.betti()):
    print(f"  F_{i}: {list(twists)}")

# a codimension-4 family with mixed entry degrees
mixed = DegreeData(b=(0, 0), a=(1, 1, 2, 2, 3), n=1)
res = eagon_northcott(mixed)
print()
print("mixed-degree codim 4 family:")
for i, twists in enumerate(res.betti()):
    print(f"  F_{i}: rank {len(twists)}, twists {list(twists)}")

# the resolutions of the symmetric powers of the cokernel module are
# what the dimension corrections K_i are read from
print()
print("symmetric power resolutions for the mixed family:")
for i in (1, 2):
    sym = symmetric_power_resolution(mixed, i)
    ranks = [len(t) for t in sym.betti()]
    print(f"  Sym^{i}: ranks {ranks}")
