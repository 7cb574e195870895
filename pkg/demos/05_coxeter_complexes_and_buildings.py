"""Order complexes, Coxeter complexes, the oriflamme trick, and buildings.

The punctured projective plane IS the A2 Coxeter complex; Weyl orbits of
coordinate flags inside P^{m-1} reproduce the classical Coxeter complexes,
with type D needing the oriflamme pair-of-flags seed to stay thin.
"""

import math

from blueforge import catalog, proj
from blueforge import complexes as cx

# P^2 minus its generic point is a hexagon = the Coxeter complex of type A2.
P2 = proj(catalog.proj_cone(2))
po = cx.poset_of_space(P2)
hexagon = cx.tilde_complex(po.restricted([e for e in po.elements
                                          if e != "(0)"]))
a2, _ = cx.coxeter_complex("A", 2)
print("tilde(P^2 - generic):", hexagon.f_vector(), "isomorphic to A2:",
      cx.is_isomorphic_typed(hexagon, a2) is not None)

# Abstract Coxeter complexes via parabolic cosets: thin, with |W| chambers.
for family, n in (("A", 3), ("B", 3), ("D", 4)):
    c, action = cx.coxeter_complex(family, n)
    print(f"{family}{n}: {len(c.chambers())} chambers, thin: {c.is_thin()}")

# Weyl orbits of isotropic coordinate flags in P^{m-1}.
for family, n in (("A", 2), ("B", 2), ("C", 3), ("D", 3)):
    oc, _ = cx.weyl_orbit_complex(family, n)
    ab, _ = cx.coxeter_complex(family, n)
    ok = cx.is_isomorphic_typed(oc, ab) is not None
    print(f"orbit {family}{n} matches the abstract complex: {ok}")

# Without the oriflamme the D3 orbit has boundary panels in a single chamber.
plain = [frozenset({1}), frozenset({1, 2}), frozenset({1, 2, 3})]
bad, _ = cx.weyl_orbit_complex("D", 3, plain)
print("plain-flag D3 orbit panel counts:",
      sorted(set(bad.panel_chamber_counts().values())), "(not thin)")

# Buildings of type A over F_q: thick, with q-factorial many chambers, and
# the coordinate apartment is the Coxeter complex again.
for n, q in ((1, 3), (2, 2)):
    b = cx.building_type_a(n, q)
    ap = cx.coordinate_apartment(b, n, q)
    an, _ = cx.coxeter_complex("A", n)
    print(f"building A{n}(F_{q}): {len(b.chambers())} chambers, "
          f"panels in {sorted(set(b.panel_chamber_counts().values()))} "
          f"chambers, apartment ok: "
          f"{cx.is_isomorphic_typed(ap, an) is not None}")
