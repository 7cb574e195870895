"""Blueprints and their prime spectra.

A blueprint is a commutative monoid with zero plus a set of additive
relations between formal sums (a generated pre-addition). This walk-through
builds the basic examples and computes their spectra.
"""

from blueforge import catalog, derive, spec
from blueforge.core import additive_closure, is_prime_ideal

# The field with one element and its idempotent sibling B1 = {0,1 | 1+1=1}.
f1 = catalog.f1()
b1 = catalog.b1()
print("F1 carrier:", f1.carrier())
print("B1 derives 1+1+1 = 1:", derive(b1, ["1"] * 3, ["1"]))
print("B1 derives 1 = 0:", derive(b1, ["1"], ["0"]), "(and never will)")

# Affine n-space is the free blueprint on n variables; its primes are the
# 2^n variable-generated ideals ordered like the Boolean lattice.
for n in (1, 2, 3):
    X = spec(catalog.affine_space(n))
    print(f"A^{n} has {len(X)} primes:", ", ".join(X.labels()))

# The split torus only keeps the zero ideal: every variable is a unit.
print("Gm spectrum:", spec(catalog.torus(1)).labels())

# Ideal arithmetic: the additive closure saturates under the rule
#   sum a_i + c = sum b_j with all a_i, b_j in I  forces  c in I.
sl2 = catalog.sl2_f1()
t = {n: sl2.backend.gen_element(n) for n in sl2.backend.gens}
improper = additive_closure(sl2, [t["T1"], t["T2"]])
print("closure of {T1,T2} in the SL2 blueprint is improper:",
      not improper.is_proper())
good = additive_closure(sl2, [t["T2"], t["T3"]])
print("closure of {T2,T3} =", repr(good), "prime:",
      is_prime_ideal(sl2, good))
