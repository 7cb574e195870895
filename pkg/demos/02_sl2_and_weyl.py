"""SL2 over F1: the spectrum, the rank space, and the Weyl group.

The coordinate blueprint F1[T1..T4] with T1*T4 = T2*T3 + 1 has exactly seven
primes; its two closed points are the diagonal and antidiagonal tori, and the
Weyl extension (the minimum-rank points) recovers the Weyl group of SL2.
"""

from blueforge import catalog, rank_of_point, residue_field, spec, weyl_extension
from blueforge.core import torus_certificate, quotient_by_ideal

sl2 = catalog.sl2_f1()
X = spec(sl2)
print("SL2 primes:")
for i, label in enumerate(X.labels()):
    print(f"  {label:<12} rank {rank_of_point(X, i)}")
print("closed points:", [X.points[i].label() for i in X.closed_points()])

# The closure of each closed point is a rank-1 torus; the diagonal one lives
# over F1 and the antidiagonal one needs the sign (it is a torus over F1^2,
# the second branch of Hypothesis (H)).
for i in X.closed_points():
    closure = quotient_by_ideal(sl2, X.points[i].ideal)
    print(X.points[i].label(), "closure lattice:", closure.backend.lattice,
          "torus certificate:", torus_certificate(closure))

W = weyl_extension(X)
print("Weyl extension size:", len(W), "= |Weyl group of SL2|")
print("Hypothesis (H) holds:", W.hypothesis_h)

# Residue fields along the way are blue fields.
for i in (0, X.closed_points()[0]):
    kappa = residue_field(sl2, X.points[i])
    print("residue field at", X.points[i].label(), "->", kappa.name)
