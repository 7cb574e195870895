"""The compactified arithmetic curve over Q as a locally blueprinted space.

Regular functions on an open set are the rationals of norm at most one at
every remaining place; the archimedean stalk has ball ideals, and the
self-product of the curve is two-dimensional.
"""

from fractions import Fraction

from blueforge import arithcurve as ac
from blueforge import catalog
from blueforge.core import finite_blueprints_isomorphic

whole = ac.CurveOpen.whole()
away2 = ac.CurveOpen.without(ac.finite_place(2))
away_inf = ac.CurveOpen.without(ac.ARCH)
print("1/2 regular away from 2:", ac.sheaf_membership(Fraction(1, 2), away2))
print("1/2 regular globally:  ", ac.sheaf_membership(Fraction(1, 2), whole))
print("2 regular away from oo:", ac.sheaf_membership(2, away_inf))

G = ac.global_sections()
print("global sections carrier:", G.carrier(), "isomorphic to F1^2:",
      finite_blueprints_isomorphic(G, catalog.f1n(2)) is not None)

ideal = ac.arch_ideal_classify([Fraction(2, 3), Fraction(1, 2)])
print("ideal generated by {2/3, 1/2} at infinity:",
      ideal.boundary, "ball of radius", ideal.radius)
print("archimedean stalk primes:",
      [(str(p.radius), p.boundary) for p in ac.arch_stalk_primes()])
print("I^c_r = I^o_r for irrational r:",
      ac.balls_coincide(ac.IrrationalRadius("sqrt(2)/2")),
      "| for r = 1/2:", ac.balls_coincide(Fraction(1, 2)))

print("stalk at p=3 has primes:", ac.finite_stalk_primes(3))

dim, chain = ac.surface_dimension(3)
print(f"the self-product has dimension {dim}; witness chain:",
      " < ".join("(%s,%s)" % pair for pair in chain))
